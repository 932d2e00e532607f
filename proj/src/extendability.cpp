#include "extlab/extendability.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace extlab
{
    namespace
    {
        using Clock = std::chrono::steady_clock;

        /// Depth-first walk over the k-matchings whose first edge is `first`.
        class MatchingWalker
        {
        public:
            MatchingWalker(const Graph &g, int k) :
                g_(g), k_(k), used_(static_cast<std::size_t>(g.order()), 0)
            {
                chosen_.reserve(static_cast<std::size_t>(k));
            }

            template <typename Visit>
            bool walk_from(int first, Visit &&visit)
            {
                chosen_.clear();
                return step(first, visit);
            }

        private:
            template <typename Visit>
            bool step(int id, Visit &visit)
            {
                const Edge &e = g_.edge(id);
                used_[e.u] = used_[e.v] = 1;
                chosen_.push_back(e);
                bool go_on = true;
                if (static_cast<int>(chosen_.size()) == k_)
                    go_on = visit(std::span<const Edge>(chosen_));
                else
                    for (int next = id + 1; go_on && next < static_cast<int>(g_.size()); ++next) {
                        const Edge &f = g_.edge(next);
                        if (! used_[f.u] && ! used_[f.v])
                            go_on = step(next, visit);
                    }
                chosen_.pop_back();
                used_[e.u] = used_[e.v] = 0;
                return go_on;
            }

            const Graph &g_;
            int k_;
            std::vector<char> used_;
            std::vector<Edge> chosen_;
        };

        std::optional<TutteViolator> certificate_for(const Graph &g, std::span<const Edge> m)
        {
            std::vector<char> drop(static_cast<std::size_t>(g.order()), 0);
            for (auto &e : m)
                drop[e.u] = drop[e.v] = 1;
            VertexSet keep;
            for (Vertex v = 0; v < g.order(); ++v)
                if (! drop[v])
                    keep.push_back(v);
            auto sub = induced_subgraph(g, keep);
            auto t = tutte_violator(sub.graph);
            if (! t)
                return std::nullopt;
            VertexSet lifted;
            for (Vertex v : t->witness_set)
                lifted.push_back(sub.to_parent[v]);
            return TutteViolator{make_vertex_set(std::move(lifted)), t->odd_component_count};
        }
    }

    void for_each_k_matching(const Graph &g, int k, const std::function<bool(std::span<const Edge>)> &visit)
    {
        if (k < 0)
            throw std::invalid_argument("k must be non-negative");
        if (k == 0) {
            visit({});
            return;
        }
        MatchingWalker walker(g, k);
        for (int first = 0; first < static_cast<int>(g.size()); ++first)
            if (! walker.walk_from(first, visit))
                return;
    }

    std::uint64_t count_k_matchings(const Graph &g, int k, std::optional<std::uint64_t> cap)
    {
        std::uint64_t count = 0;
        for_each_k_matching(g, k, [&](std::span<const Edge>) {
            ++count;
            return ! cap || count <= *cap;
        });
        return count;
    }

    ExtendabilityReport is_k_extendable(const Graph &g, int k, const ExtendabilityOptions &options)
    {
        if (k < 0)
            throw std::invalid_argument("k must be non-negative");
        auto start = Clock::now();
        ExtendabilityReport report;
        report.k = k;

        auto finish = [&]() -> ExtendabilityReport {
            report.elapsed = Clock::now() - start;
            return report;
        };

        ExtensionOracle probe(g);
        if (! probe.host_has_perfect_matching()) {
            report.verdict = false;
            report.reason = "no_perfect_matching";
            std::vector<Edge> first;
            for_each_k_matching(g, k, [&](std::span<const Edge> m) {
                first.assign(m.begin(), m.end());
                return false;
            });
            report.witness = make_matching(g, first);
            report.witness_certificate = certificate_for(g, first);
            report.matchings_checked = 0;
            return finish();
        }
        if (2 * k + 2 > g.order()) {
            report.verdict = false;
            report.reason = "order_below_2k_plus_2";
            return finish();
        }
        if (k == 0) {
            report.verdict = true;
            report.reason = "extendable";
            report.matchings_checked = 1;
            return finish();
        }

        const int edge_count = static_cast<int>(g.size());
        const int jobs = std::clamp(options.jobs, 1, std::max(1, edge_count));
        const auto budget = options.max_checks.value_or(std::numeric_limits<std::uint64_t>::max());

        std::vector<std::uint64_t> counts(static_cast<std::size_t>(edge_count), 0);
        std::vector<std::vector<Edge>> witnesses(static_cast<std::size_t>(edge_count));
        std::atomic<int> next_first{0};
        std::atomic<int> best_first{edge_count};
        std::atomic<std::uint64_t> total{0};
        std::atomic<bool> exhausted{false};

        auto worker = [&] {
            ExtensionOracle oracle(g);
            MatchingWalker walker(g, k);
            while (true) {
                int first = next_first.fetch_add(1);
                if (first >= edge_count || first > best_first.load() || exhausted.load())
                    return;
                std::uint64_t local = 0;
                walker.walk_from(first, [&](std::span<const Edge> m) {
                    if (first > best_first.load(std::memory_order_relaxed) || exhausted.load(std::memory_order_relaxed))
                        return false;
                    if (total.fetch_add(1) >= budget) {
                        exhausted = true;
                        return false;
                    }
                    ++local;
                    if (oracle.extends(m))
                        return true;
                    witnesses[first].assign(m.begin(), m.end());
                    int seen = best_first.load();
                    while (first < seen && ! best_first.compare_exchange_weak(seen, first)) {}
                    return false;
                });
                counts[first] = local;
            }
        };

        if (jobs == 1)
            worker();
        else {
            std::vector<std::thread> pool;
            for (int i = 0; i < jobs; ++i)
                pool.emplace_back(worker);
            for (auto &t : pool)
                t.join();
        }

        int best = best_first.load();
        if (best < edge_count) {
            report.verdict = false;
            report.reason = "non_extendable_matching";
            report.matchings_checked = std::accumulate(counts.begin(), counts.begin() + best + 1, std::uint64_t{0});
            report.witness = make_matching(g, witnesses[best]);
            report.witness_certificate = certificate_for(g, witnesses[best]);
            return finish();
        }
        report.matchings_checked = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
        if (exhausted) {
            report.verdict = false;
            report.completed = false;
            report.reason = "budget_exhausted";
            return finish();
        }
        report.verdict = true;
        report.reason = "extendable";
        return finish();
    }

    bool verify_report(const Graph &g, const ExtendabilityReport &report)
    {
        if (report.verdict)
            return ! report.witness && report.reason == "extendable";
        if (report.reason == "order_below_2k_plus_2" || report.reason == "budget_exhausted")
            return true;
        if (! report.witness || ! report.witness_certificate)
            return false;
        auto &w = *report.witness;
        if (! verify_matching(g, w, MatchingKind::partial))
            return false;
        if (report.reason == "non_extendable_matching" && static_cast<int>(w.size()) != report.k)
            return false;
        if (extend_to_perfect(g, w))
            return false;

        // recount the odd components of g - V(w) - S from scratch
        VertexSet removed = w.vertices();
        for (Vertex v : report.witness_certificate->witness_set) {
            if (v < 0 || v >= g.order() || w.covers(v))
                return false;
            removed.push_back(v);
        }
        int odd = odd_components_after_removal(g, make_vertex_set(removed));
        return odd == report.witness_certificate->odd_component_count &&
               odd > static_cast<int>(report.witness_certificate->witness_set.size());
    }

    int extendability_number(const Graph &g, const ExtendabilityOptions &options)
    {
        if (! has_perfect_matching(g))
            return -1;
        int k = 0;
        while (2 * (k + 1) + 2 <= g.order() && is_k_extendable(g, k + 1, options).verdict)
            ++k;
        return k;
    }

    NkResult is_nk_graph(const Graph &g, int n, int k, const ExtendabilityOptions &options)
    {
        if (n < 0 || k < 0)
            throw std::invalid_argument("n and k must be non-negative");
        if (n > g.order() || (g.order() - n) % 2 != 0)
            throw std::invalid_argument("order - n must be even and non-negative");

        std::vector<Vertex> pick(static_cast<std::size_t>(n));
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            auto rest = complement_of(g, pick);
            auto sub = induced_subgraph(g, rest);
            if (! is_k_extendable(sub.graph, k, options).verdict)
                return {false, VertexSet(pick.begin(), pick.end())};

            // next n-subset in lexicographic order
            int i = n - 1;
            while (i >= 0 && pick[i] == g.order() - n + i)
                --i;
            if (i < 0)
                break;
            ++pick[i];
            for (int j = i + 1; j < n; ++j)
                pick[j] = pick[j - 1] + 1;
        }
        return {true, std::nullopt};
    }

    namespace
    {
        constexpr int max_canonical_order = 11;

        /// Colour refinement with colours named by their sorted signatures, so the final
        /// ordered partition is an isomorphism invariant.
        std::vector<int> refined_colours(const Graph &g)
        {
            const int n = g.order();
            std::vector<int> colour(static_cast<std::size_t>(n), 0);
            int classes = 1;
            while (true) {
                std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
                for (Vertex v = 0; v < n; ++v) {
                    sig[v].first = colour[v];
                    for (Vertex w : g.adjacent(v))
                        sig[v].second.push_back(colour[w]);
                    std::sort(sig[v].second.begin(), sig[v].second.end());
                }
                std::map<std::pair<int, std::vector<int>>, int> names;
                for (auto &s : sig)
                    names.emplace(s, 0);
                int next = 0;
                for (auto &entry : names)
                    entry.second = next++;
                for (Vertex v = 0; v < n; ++v)
                    colour[v] = names[sig[v]];
                if (next == classes)
                    return colour;
                classes = next;
            }
        }

        std::uint64_t code_of(const Graph &g, const std::vector<Vertex> &at)
        {
            std::uint64_t code = 0;
            const int n = g.order();
            for (int p = 0; p < n; ++p)
                for (int q = p + 1; q < n; ++q)
                    code = code << 1 | (g.has_edge(at[p], at[q]) ? 1u : 0u);
            return code;
        }

        /// Best position->vertex assignment over all orders that respect the refined cells.
        std::vector<Vertex> canonical_order(const Graph &g)
        {
            const int n = g.order();
            if (n > max_canonical_order)
                throw std::invalid_argument("canonical form is limited to order " + std::to_string(max_canonical_order));
            auto colour = refined_colours(g);
            std::vector<Vertex> at(static_cast<std::size_t>(n));
            std::iota(at.begin(), at.end(), 0);
            std::stable_sort(at.begin(), at.end(), [&](Vertex a, Vertex b) { return colour[a] < colour[b]; });

            std::vector<std::pair<int, int>> cells;
            for (int p = 0; p < n;) {
                int q = p;
                while (q < n && colour[at[q]] == colour[at[p]])
                    ++q;
                cells.emplace_back(p, q);
                p = q;
            }

            std::vector<Vertex> best = at;
            std::uint64_t best_code = code_of(g, at);
            // odometer over the permutations of each cell
            while (true) {
                std::size_t c = 0;
                for (; c < cells.size(); ++c)
                    if (std::next_permutation(at.begin() + cells[c].first, at.begin() + cells[c].second))
                        break;
                if (c == cells.size())
                    break;
                auto code = code_of(g, at);
                if (code > best_code) {
                    best_code = code;
                    best = at;
                }
            }
            return best;
        }

        Graph relabel(const Graph &g, const std::vector<Vertex> &at)
        {
            std::vector<Vertex> pos(at.size());
            for (std::size_t p = 0; p < at.size(); ++p)
                pos[at[p]] = static_cast<Vertex>(p);
            std::vector<Edge> edges;
            for (auto &e : g.edges())
                edges.emplace_back(pos[e.u], pos[e.v]);
            return Graph(g.order(), std::move(edges));
        }
    }

    std::uint64_t canonical_code(const Graph &g)
    {
        return code_of(g, canonical_order(g));
    }

    Graph canonical_form(const Graph &g)
    {
        return relabel(g, canonical_order(g));
    }

    bool isomorphic(const Graph &a, const Graph &b)
    {
        return a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b);
    }

    std::vector<Graph> all_graphs(int order)
    {
        if (order < 0 || order > 8)
            throw std::invalid_argument("graph enumeration is limited to order 8");
        std::vector<Graph> level{Graph(0)};
        // every graph of order n arises from one of order n-1 by adding a vertex
        for (int n = 1; n <= order; ++n) {
            std::map<std::uint64_t, Graph> seen;
            for (auto &base : level)
                for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
                    std::vector<Edge> edges = base.edges();
                    for (int v = 0; v < n - 1; ++v)
                        if (mask >> v & 1u)
                            edges.emplace_back(v, n - 1);
                    Graph grown(n, std::move(edges));
                    auto at = canonical_order(grown);
                    auto code = code_of(grown, at);
                    if (! seen.count(code))
                        seen.emplace(code, relabel(grown, at));
                }
            level.clear();
            for (auto &entry : seen)
                level.push_back(std::move(entry.second));
        }
        return level;
    }

    std::vector<Graph> classify_extendable_graphs(int order, int k)
    {
        if (order > 8)
            throw std::invalid_argument("classification is limited to order 8");
        if (order < 1 || k < 0)
            throw std::invalid_argument("classification needs order >= 1 and k >= 0");
        std::vector<Graph> result;
        for (auto &g : all_graphs(order))
            if (is_connected(g) && is_k_extendable(g, k).verdict)
                result.push_back(g);
        return result;
    }
}
