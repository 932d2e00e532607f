#include "extlab/surfaces.hpp"

#include <boost/rational.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace extlab
{
    namespace
    {
        std::int64_t floor_div(std::int64_t a, std::int64_t b)
        {
            std::int64_t q = a / b;
            return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
        }

        std::int64_t ceil_div(std::int64_t a, std::int64_t b)
        {
            return -floor_div(-a, b);
        }

        void require_valid(const Surface &s)
        {
            if (s.genus < 0 || (! s.orientable && s.genus < 1))
                throw std::invalid_argument("invalid surface " + std::string(s.orientable ? "S" : "N") + std::to_string(s.genus));
        }

        void require_chi(int chi)
        {
            if (chi > 2)
                throw std::invalid_argument("Euler characteristic of a closed surface is at most 2");
        }

        /// floor((7 + sqrt(49 - 24 chi)) / 4) with an offset on the constant term
        int sqrt_formula(int constant, int chi)
        {
            // floor((a + sqrt(D)) / 4) = floor((a + floor(sqrt(D))) / 4) for integer a
            return static_cast<int>(floor_div(constant + isqrt(49 - 24LL * chi), 4));
        }
    }

    Surface parse_surface(const std::string &text)
    {
        std::string t;
        for (char c : text)
            if (c != '_' && c != ' ')
                t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (t == "sphere")
            return Surface::sphere();
        if (t == "torus")
            return Surface::orientable_genus(1);
        if (t == "projective" || t == "projectiveplane")
            return Surface::crosscaps(1);
        if (t == "klein" || t == "kleinbottle")
            return Surface::crosscaps(2);
        if (t.size() >= 2 && (t[0] == 's' || t[0] == 'n') && std::all_of(t.begin() + 1, t.end(), ::isdigit)) {
            Surface s{t[0] == 's', std::stoi(t.substr(1))};
            require_valid(s);
            return s;
        }
        throw std::invalid_argument("unknown surface '" + text + "'");
    }

    std::string to_string(const Surface &s)
    {
        return (s.orientable ? "S" : "N") + std::to_string(s.genus);
    }

    int euler_characteristic(const Surface &s)
    {
        require_valid(s);
        return s.orientable ? 2 - 2 * s.genus : 2 - s.genus;
    }

    std::int64_t isqrt(std::int64_t x)
    {
        if (x < 0)
            throw std::invalid_argument("isqrt of a negative number");
        std::int64_t r = 0, bit = std::int64_t{1} << 62;
        while (bit > x)
            bit >>= 2;
        while (bit) {
            if (x >= r + bit) {
                x -= r + bit;
                r = (r >> 1) + bit;
            }
            else
                r >>= 1;
            bit >>= 2;
        }
        return r;
    }

    int mu_for_chi(int chi)
    {
        require_chi(chi);
        if (chi == 2)
            return 3;
        return 2 + static_cast<int>(isqrt(4 - 2LL * chi));
    }

    int mu(const Surface &s)
    {
        return mu_for_chi(euler_characteristic(s));
    }

    MuPrimeValue mu_prime_for_chi(int chi)
    {
        require_chi(chi);
        MuPrimeValue out;
        out.literal = (chi == 0 || chi == -1) ? 4 : sqrt_formula(7, chi);
        // the closed formula gives 2 on the sphere; the case analysis proves 3 there
        out.value = chi == 2 ? 3 : out.literal;
        if (out.value != out.literal)
            out.warning = "closed formula gives " + std::to_string(out.literal) + " at chi=" + std::to_string(chi) + "; using the proven value " +
                          std::to_string(out.value);
        return out;
    }

    MuPrimeValue mu_prime_detail(const Surface &s)
    {
        return mu_prime_for_chi(euler_characteristic(s));
    }

    int mu_prime(const Surface &s)
    {
        return mu_prime_detail(s).value;
    }

    int mu_nk_for_chi(int n, int chi)
    {
        require_chi(chi);
        if (n < 1)
            throw std::invalid_argument("mu_nk needs n >= 1");
        if (chi == 2)
            return std::max(0, 3 - static_cast<int>(ceil_div(n, 2)));
        return std::max(0, sqrt_formula(7 - 2 * n, chi));
    }

    int mu_nk(int n, const Surface &s)
    {
        return mu_nk_for_chi(n, euler_characteristic(s));
    }

    int genus_complete(int n)
    {
        if (n < 5)
            throw std::invalid_argument("genus formula stated for n >= 5");
        return static_cast<int>(ceil_div(std::int64_t{n - 3} * (n - 4), 12));
    }

    int nonorientable_genus_complete(int n)
    {
        if (n < 5)
            throw std::invalid_argument("genus formula stated for n >= 5");
        if (n == 7)
            return 3;
        return static_cast<int>(ceil_div(std::int64_t{n - 3} * (n - 4), 6));
    }

    bool complete_graph_embeddable(int n, const Surface &s)
    {
        require_valid(s);
        return s.orientable ? genus_complete(n) <= s.genus : nonorientable_genus_complete(n) <= s.genus;
    }

    bool control_bound_holds(int degree, int triangles, int chi, int order)
    {
        if (order < 3)
            throw std::invalid_argument("control bound needs order >= 3");
        if (triangles < 0 || triangles > degree)
            throw std::invalid_argument("triangle count must lie in [0, degree]");
        using Q = boost::rational<std::int64_t>;
        return Q(degree, 4) - Q(triangles, 12) <= Q(1) - Q(chi, order);
    }

    int degree_lower_bound(int k, int triangles)
    {
        if (k < 1)
            throw std::invalid_argument("degree bound needs k >= 1");
        if (triangles < 0)
            throw std::invalid_argument("triangle count must be non-negative");
        if (triangles <= 2 * k - 2)
            return k + 1 + static_cast<int>(ceil_div(triangles, 2));
        return 2 * k + 1;
    }
}
