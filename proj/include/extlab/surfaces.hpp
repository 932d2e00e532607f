#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace extlab
{
    /// S_g (orientable, genus g >= 0) or N_k (non-orientable, k >= 1 crosscaps).
    struct Surface
    {
        bool orientable = true;
        int genus = 0;

        static Surface sphere() { return {true, 0}; }
        static Surface orientable_genus(int g) { return {true, g}; }
        static Surface crosscaps(int k) { return {false, k}; }

        bool operator==(const Surface &) const = default;
    };

    /// "S0", "S_1", "N2", "sphere", "torus", "projective", "klein".
    Surface parse_surface(const std::string &text);
    std::string to_string(const Surface &s);

    /// Throws std::invalid_argument for negative genus or N_0.
    int euler_characteristic(const Surface &s);

    /// Largest t with t * t <= x; x >= 0.
    std::int64_t isqrt(std::int64_t x);

    /// Minimum k such that no graph embeddable in the surface is k-extendable.
    int mu(const Surface &s);
    int mu_for_chi(int chi);

    struct MuPrimeValue
    {
        int value = 0;
        /// The closed formula read literally (it differs from value on the sphere only).
        int literal = 0;
        std::optional<std::string> warning;
    };

    /// Minimum k such that no non-bipartite graph embeddable in the surface is k-extendable.
    int mu_prime(const Surface &s);
    MuPrimeValue mu_prime_detail(const Surface &s);
    MuPrimeValue mu_prime_for_chi(int chi);

    /// Minimum k with no (n,k)-graph embeddable in the surface; n >= 1.
    int mu_nk(int n, const Surface &s);
    int mu_nk_for_chi(int n, int chi);

    /// Orientable and non-orientable genus of K_n, n >= 5.
    int genus_complete(int n);
    int nonorientable_genus_complete(int n);
    bool complete_graph_embeddable(int n, const Surface &s);

    /// d/4 - x/12 <= 1 - chi/order in exact arithmetic. order >= 3, 0 <= x <= d.
    bool control_bound_holds(int degree, int triangles, int chi, int order);

    /// Lower bound on d(v) for a k-extendable graph when v lies on x triangular faces.
    int degree_lower_bound(int k, int triangles);
}
