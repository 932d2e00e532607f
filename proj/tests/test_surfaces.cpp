#include "extlab/surfaces.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace extlab;

namespace
{
    // greatest t with 4t - a <= sqrt(d), by scanning
    int floor_quarter_sqrt(int a, long d)
    {
        int t = -100;
        while (true) {
            long lhs = 4L * (t + 1) - a;
            if (lhs > 0 && lhs * lhs > d)
                return t;
            ++t;
        }
    }

    int ceil_ratio(int num, int den)
    {
        int q = 0;
        while (q * den < num)
            ++q;
        return q;
    }
}

TEST_CASE("surfaces and Euler characteristic")
{
    CHECK(euler_characteristic(Surface::sphere()) == 2);
    CHECK(euler_characteristic(parse_surface("torus")) == 0);
    CHECK(euler_characteristic(parse_surface("N2")) == 0);
    CHECK(euler_characteristic(parse_surface("S_3")) == -4);
    CHECK(euler_characteristic(parse_surface("projective")) == 1);
    CHECK(parse_surface("klein") == Surface::crosscaps(2));
    CHECK(to_string(Surface::crosscaps(4)) == "N4");
    CHECK_THROWS_AS(euler_characteristic(Surface{false, 0}), std::invalid_argument);
    CHECK_THROWS_AS(parse_surface("N0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_surface("donut"), std::invalid_argument);
}

TEST_CASE("integer square root")
{
    for (std::int64_t x = 0; x < 5000; ++x) {
        auto r = isqrt(x);
        CHECK((r * r <= x && (r + 1) * (r + 1) > x));
    }
    CHECK(isqrt(std::int64_t{1} << 62) == std::int64_t{1} << 31);
    CHECK(isqrt(9'223'372'036'854'775'807LL) == 3'037'000'499LL);
    CHECK_THROWS_AS(isqrt(-1), std::invalid_argument);
}

TEST_CASE("mu values")
{
    CHECK(mu(Surface::sphere()) == 3);
    CHECK(mu(Surface::orientable_genus(1)) == 4);
    CHECK(mu(Surface::crosscaps(1)) == 3);

    CHECK(mu_prime(Surface::sphere()) == 3);
    CHECK(mu_prime(Surface::crosscaps(1)) == 3);
    CHECK(mu_prime(Surface::orientable_genus(1)) == 4);
    CHECK(mu_prime(Surface::crosscaps(2)) == 4);
    CHECK(mu_prime(Surface::crosscaps(3)) == 4);
    CHECK(mu_prime(Surface::crosscaps(4)) == 4);
    CHECK(mu_prime(Surface::orientable_genus(2)) == 4);

    auto sphere = mu_prime_detail(Surface::sphere());
    CHECK(sphere.literal == 2);
    CHECK(sphere.warning.has_value());
    CHECK_FALSE(mu_prime_detail(Surface::crosscaps(5)).warning.has_value());
}

TEST_CASE("mu invariants over a range of surfaces")
{
    int previous_mu = 0, previous_prime = 0;
    for (int chi = 2; chi >= -50; --chi) {
        int m = mu_for_chi(chi), p = mu_prime_for_chi(chi).value;
        CHECK(p <= m);
        if (chi <= 0) {
            CHECK(m >= previous_mu);
            CHECK(p >= previous_prime);
        }
        previous_mu = m;
        previous_prime = p;
        if (chi <= -2)
            CHECK(p == floor_quarter_sqrt(7, 49 - 24L * chi));
        if (chi < 2)
            CHECK(m == 2 + floor_quarter_sqrt(0, 16 * (4 - 2L * chi)));
    }
    CHECK_THROWS_AS(mu_for_chi(3), std::invalid_argument);
}

TEST_CASE("mu for (n,k)-graphs")
{
    CHECK(mu_nk(1, Surface::sphere()) == 2);
    CHECK(mu_nk(2, Surface::orientable_genus(1)) == 2);
    CHECK(mu_nk(6, Surface::sphere()) == 0);
    CHECK_THROWS_AS(mu_nk(0, Surface::sphere()), std::invalid_argument);
    for (int n = 1; n <= 10; ++n)
        for (int chi = 1; chi >= -30; --chi)
            CHECK(mu_nk_for_chi(n, chi) == std::max(0, floor_quarter_sqrt(7 - 2 * n, 49 - 24L * chi)));
}

TEST_CASE("genus of complete graphs")
{
    CHECK(genus_complete(7) == 1);
    CHECK(nonorientable_genus_complete(7) == 3);
    CHECK(nonorientable_genus_complete(8) == 4);
    for (int n = 5; n <= 50; ++n) {
        CHECK(genus_complete(n) == ceil_ratio((n - 3) * (n - 4), 12));
        if (n != 7)
            CHECK(nonorientable_genus_complete(n) == ceil_ratio((n - 3) * (n - 4), 6));
    }
    CHECK(complete_graph_embeddable(7, Surface::orientable_genus(1)));
    CHECK_FALSE(complete_graph_embeddable(7, Surface::crosscaps(2)));
    CHECK(complete_graph_embeddable(8, Surface::orientable_genus(2)));
    CHECK_THROWS_AS(genus_complete(4), std::invalid_argument);
}

TEST_CASE("degree and control-point bounds")
{
    CHECK_FALSE(control_bound_holds(6, 0, 2, 12));
    CHECK(control_bound_holds(4, 0, 0, 30));
    // chi = -2, n = 4, order 2n + 4: the bound fails both with x = 2n - 2 and with x = d
    CHECK_FALSE(control_bound_holds(8, 6, -2, 12));
    CHECK_FALSE(control_bound_holds(9, 9, -2, 12));
    CHECK_THROWS_AS(control_bound_holds(4, 0, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(control_bound_holds(4, 5, 0, 10), std::invalid_argument);

    CHECK(degree_lower_bound(3, 0) == 4);
    CHECK(degree_lower_bound(3, 4) == 6);
    CHECK(degree_lower_bound(3, 5) == 7);
    CHECK_THROWS_AS(degree_lower_bound(0, 0), std::invalid_argument);
}
