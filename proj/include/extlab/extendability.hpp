#pragma once

#include "extlab/matching.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace extlab
{
    struct ExtendabilityOptions
    {
        /// Worker threads; values below 1 mean 1.
        int jobs = 1;
        /// Stop after this many oracle calls and report an incomplete run.
        std::optional<std::uint64_t> max_checks;
    };

    struct ExtendabilityReport
    {
        int k = 0;
        bool verdict = false;
        /// False only when the check budget ran out before a verdict was reached.
        bool completed = true;
        /// extendable | no_perfect_matching | non_extendable_matching | order_below_2k_plus_2 | budget_exhausted
        std::string reason;
        /// A k-matching with no perfect extension.
        std::optional<Matching> witness;
        /// Tutte set of g - V(witness), in the vertex ids of g.
        std::optional<TutteViolator> witness_certificate;
        std::uint64_t matchings_checked = 0;
        std::chrono::duration<double> elapsed{0};
    };

    /// Exhaustive decision over all k-matchings in lexicographic edge-id order. With
    /// several jobs the stream is split by first edge; the reported witness is always
    /// the lexicographically first one, so output does not depend on the job count.
    /// For k > order/2 - 1 the verdict is false (reason order_below_2k_plus_2).
    ExtendabilityReport is_k_extendable(const Graph &g, int k, const ExtendabilityOptions &options = {});

    /// Number of k-matchings, counting stops once `cap` is exceeded.
    std::uint64_t count_k_matchings(const Graph &g, int k, std::optional<std::uint64_t> cap = std::nullopt);

    /// Calls visit on each k-matching in lexicographic edge-id order until it returns false.
    void for_each_k_matching(const Graph &g, int k, const std::function<bool(std::span<const Edge>)> &visit);

    /// Largest k with g k-extendable, or -1 when g has no perfect matching.
    int extendability_number(const Graph &g, const ExtendabilityOptions &options = {});

    /// Ties the witness and its certificate back to g: the witness is a k-matching,
    /// it does not extend, and the certificate counts correctly on g - V(witness).
    bool verify_report(const Graph &g, const ExtendabilityReport &report);

    struct NkResult
    {
        bool holds = false;
        /// First n-subset (lexicographic) whose deletion breaks k-extendability.
        std::optional<VertexSet> failing_set;
    };

    /// Throws std::invalid_argument unless n, k >= 0 and order - n is even.
    NkResult is_nk_graph(const Graph &g, int n, int k, const ExtendabilityOptions &options = {});

    /// Isomorphism-invariant code of the upper adjacency triangle; order <= 11.
    std::uint64_t canonical_code(const Graph &g);
    /// The graph relabelled into the permutation that attains canonical_code.
    Graph canonical_form(const Graph &g);
    bool isomorphic(const Graph &a, const Graph &b);

    /// Every graph of the given order up to isomorphism, in canonical form. order <= 8.
    std::vector<Graph> all_graphs(int order);

    /// Connected k-extendable graphs of the given order, up to isomorphism, sorted by
    /// canonical code. Throws std::invalid_argument for order > 8.
    std::vector<Graph> classify_extendable_graphs(int order, int k);
}
