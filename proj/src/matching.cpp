#include "extlab/matching.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace extlab
{
    std::string to_string(MatchingKind kind)
    {
        switch (kind) {
            case MatchingKind::partial: return "partial";
            case MatchingKind::near_perfect: return "near_perfect";
            case MatchingKind::perfect: return "perfect";
        }
        return "partial";
    }

    MatchingKind parse_matching_kind(const std::string &s)
    {
        if (s == "partial")
            return MatchingKind::partial;
        if (s == "near_perfect")
            return MatchingKind::near_perfect;
        if (s == "perfect")
            return MatchingKind::perfect;
        throw std::invalid_argument("unknown matching kind '" + s + "'");
    }

    bool Matching::contains(const Edge &e) const
    {
        return std::find(edges.begin(), edges.end(), e) != edges.end();
    }

    bool Matching::covers(Vertex v) const
    {
        return std::any_of(edges.begin(), edges.end(), [v](const Edge &e) { return e.touches(v); });
    }

    bool Matching::contains_all(std::span<const Edge> others) const
    {
        return std::all_of(others.begin(), others.end(), [this](const Edge &e) { return contains(Edge(e.u, e.v)); });
    }

    VertexSet Matching::vertices() const
    {
        VertexSet result;
        for (auto &e : edges) {
            result.push_back(e.u);
            result.push_back(e.v);
        }
        return make_vertex_set(std::move(result));
    }

    Matching make_matching(const Graph &g, std::vector<Edge> edges)
    {
        for (auto &e : edges)
            e = Edge(e.u, e.v);
        std::sort(edges.begin(), edges.end());
        Matching m;
        m.host_order = g.order();
        auto covered = 2 * static_cast<int>(edges.size());
        if (covered == g.order())
            m.kind = MatchingKind::perfect;
        else if (covered + 1 == g.order())
            m.kind = MatchingKind::near_perfect;
        m.edges = std::move(edges);
        return m;
    }

    BlossomSolver::BlossomSolver(const Graph &g) :
        g_(g)
    {
        auto n = static_cast<std::size_t>(g.order());
        mate_.assign(n, -1);
        parent_.assign(n, -1);
        base_.assign(n, 0);
        used_.assign(n, 0);
        blossom_.assign(n, 0);
        lca_seen_.assign(n, 0);
        queue_.reserve(n);
    }

    Vertex BlossomSolver::lowest_common_base(Vertex a, Vertex b, const std::vector<Vertex> &mate)
    {
        std::fill(lca_seen_.begin(), lca_seen_.end(), 0);
        while (true) {
            a = base_[a];
            lca_seen_[a] = 1;
            if (mate[a] == -1)
                break;
            a = parent_[mate[a]];
        }
        while (true) {
            b = base_[b];
            if (lca_seen_[b])
                return b;
            b = parent_[mate[b]];
        }
    }

    void BlossomSolver::mark_path(Vertex v, Vertex b, Vertex child, const std::vector<Vertex> &mate)
    {
        while (base_[v] != b) {
            blossom_[base_[v]] = blossom_[base_[mate[v]]] = 1;
            parent_[v] = child;
            child = mate[v];
            v = parent_[mate[v]];
        }
    }

    bool BlossomSolver::augment_from(Vertex root, std::vector<Vertex> &mate, std::span<const char> removed)
    {
        const int n = g_.order();
        auto dead = [&](Vertex v) { return ! removed.empty() && removed[v]; };

        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n; ++i)
            base_[i] = i;

        queue_.clear();
        used_[root] = 1;
        queue_.push_back(root);

        for (std::size_t head = 0; head < queue_.size(); ++head) {
            Vertex v = queue_[head];
            for (Vertex to : g_.adjacent(v)) {
                if (dead(to) || base_[v] == base_[to] || mate[v] == to)
                    continue;
                if (to == root || (mate[to] != -1 && parent_[mate[to]] != -1)) {
                    Vertex cur = lowest_common_base(v, to, mate);
                    std::fill(blossom_.begin(), blossom_.end(), 0);
                    mark_path(v, cur, to, mate);
                    mark_path(to, cur, v, mate);
                    for (int i = 0; i < n; ++i)
                        if (blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (! used_[i]) {
                                used_[i] = 1;
                                queue_.push_back(i);
                            }
                        }
                }
                else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (mate[to] == -1) {
                        for (Vertex x = to; x != -1;) {
                            Vertex px = parent_[x], next = mate[px];
                            mate[x] = px;
                            mate[px] = x;
                            x = next;
                        }
                        return true;
                    }
                    used_[mate[to]] = 1;
                    queue_.push_back(mate[to]);
                }
            }
        }
        return false;
    }

    void BlossomSolver::augment_all(std::vector<Vertex> &mate, std::span<const char> removed)
    {
        for (Vertex v = 0; v < g_.order(); ++v)
            if (mate[v] == -1 && (removed.empty() || ! removed[v]))
                augment_from(v, mate, removed);
    }

    const std::vector<Vertex> &BlossomSolver::solve(std::span<const char> removed)
    {
        auto dead = [&](Vertex v) { return ! removed.empty() && removed[v]; };
        std::fill(mate_.begin(), mate_.end(), -1);
        // greedy start, lowest ids first
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (dead(v) || mate_[v] != -1)
                continue;
            for (Vertex w : g_.adjacent(v))
                if (! dead(w) && mate_[w] == -1) {
                    mate_[v] = w;
                    mate_[w] = v;
                    break;
                }
        }
        augment_all(mate_, removed);
        return mate_;
    }

    namespace
    {
        std::vector<Edge> edges_of(const std::vector<Vertex> &mate)
        {
            std::vector<Edge> result;
            for (Vertex v = 0; v < static_cast<Vertex>(mate.size()); ++v)
                if (mate[v] > v)
                    result.emplace_back(v, mate[v]);
            return result;
        }
    }

    Matching maximum_matching(const Graph &g)
    {
        BlossomSolver solver(g);
        return make_matching(g, edges_of(solver.solve()));
    }

    bool has_perfect_matching(const Graph &g)
    {
        if (g.order() % 2 != 0)
            return false;
        return maximum_matching(g).kind == MatchingKind::perfect;
    }

    void require_valid_matching(const Graph &g, std::span<const Edge> m)
    {
        std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
        for (auto &e : m) {
            if (! g.has_edge(e.u, e.v))
                throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} is not an edge of the graph");
            if (used[e.u] || used[e.v])
                throw std::invalid_argument("matching edges overlap at a vertex");
            used[e.u] = used[e.v] = 1;
        }
    }

    std::optional<Matching> extend_to_perfect(const Graph &g, const Matching &m)
    {
        require_valid_matching(g, m.edges);
        if (g.order() % 2 != 0)
            return std::nullopt;

        std::vector<char> removed(static_cast<std::size_t>(g.order()), 0);
        for (auto &e : m.edges)
            removed[e.u] = removed[e.v] = 1;

        BlossomSolver solver(g);
        auto &mate = solver.solve(removed);
        for (Vertex v = 0; v < g.order(); ++v)
            if (! removed[v] && mate[v] == -1)
                return std::nullopt;

        auto edges = edges_of(mate);
        edges.insert(edges.end(), m.edges.begin(), m.edges.end());
        return make_matching(g, std::move(edges));
    }

    ExtensionOracle::ExtensionOracle(const Graph &g) :
        g_(g),
        solver_(g),
        removed_(static_cast<std::size_t>(g.order()), 0)
    {
        base_mate_ = solver_.solve();
        perfect_ = g.order() % 2 == 0 && std::none_of(base_mate_.begin(), base_mate_.end(), [](Vertex w) { return w == -1; });
    }

    bool ExtensionOracle::repair(std::span<const Edge> m)
    {
        if (! perfect_)
            return false;
        work_mate_ = base_mate_;
        for (auto &e : m)
            removed_[e.u] = removed_[e.v] = 1;
        for (auto &e : m)
            for (Vertex v : {e.u, e.v}) {
                Vertex w = work_mate_[v];
                if (w != -1 && ! removed_[w])
                    work_mate_[w] = -1;
                work_mate_[v] = -1;
            }

        bool ok = true;
        for (auto &e : m)
            for (Vertex v : {e.u, e.v}) {
                Vertex w = base_mate_[v];
                if (! ok || removed_[w] || work_mate_[w] != -1)
                    continue;
                // an exposed vertex with no augmenting path stays exposed in every maximum matching
                if (! solver_.augment_from(w, work_mate_, removed_))
                    ok = false;
            }

        for (auto &e : m)
            removed_[e.u] = removed_[e.v] = 0;
        return ok;
    }

    bool ExtensionOracle::extends(std::span<const Edge> m)
    {
        return repair(m);
    }

    std::optional<std::vector<Edge>> ExtensionOracle::extension(std::span<const Edge> m)
    {
        if (! repair(m))
            return std::nullopt;
        std::vector<char> in_m(static_cast<std::size_t>(g_.order()), 0);
        for (auto &e : m)
            in_m[e.u] = in_m[e.v] = 1;
        std::vector<Edge> result(m.begin(), m.end());
        for (Vertex v = 0; v < g_.order(); ++v)
            if (! in_m[v] && work_mate_[v] > v)
                result.emplace_back(v, work_mate_[v]);
        std::sort(result.begin(), result.end());
        return result;
    }

    int odd_components_after_removal(const Graph &g, const VertexSet &s)
    {
        std::vector<char> removed(static_cast<std::size_t>(g.order()), 0);
        for (Vertex v : s)
            removed.at(static_cast<std::size_t>(v)) = 1;
        int odd = 0;
        for (auto &c : components(g, removed))
            if (c.size() % 2 == 1)
                ++odd;
        return odd;
    }

    bool verify_tutte_violator(const Graph &g, const TutteViolator &t)
    {
        auto s = make_vertex_set(t.witness_set);
        if (s.size() != t.witness_set.size())
            return false;
        for (Vertex v : s)
            if (v < 0 || v >= g.order())
                return false;
        int odd = odd_components_after_removal(g, s);
        return odd == t.odd_component_count && odd > static_cast<int>(s.size());
    }

    namespace
    {
        std::optional<TutteViolator> exhaustive_violator(const Graph &g)
        {
            const int n = g.order();
            for (int size = 0; size <= n; ++size)
                for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                    if (std::popcount(mask) != size)
                        continue;
                    VertexSet s;
                    for (int v = 0; v < n; ++v)
                        if (mask >> v & 1u)
                            s.push_back(v);
                    int odd = odd_components_after_removal(g, s);
                    if (odd > size)
                        return TutteViolator{s, odd};
                }
            return std::nullopt;
        }
    }

    std::optional<TutteViolator> tutte_violator(const Graph &g)
    {
        if (g.order() % 2 != 0)
            return TutteViolator{{}, odd_components_after_removal(g, {})};

        BlossomSolver solver(g);
        std::vector<Vertex> mate = solver.solve();
        if (std::none_of(mate.begin(), mate.end(), [](Vertex w) { return w == -1; }))
            return std::nullopt;

        // Gallai-Edmonds: D = vertices missed by some maximum matching, A = N(D) \ D.
        // A matched v is in D iff its partner can be re-matched in g - v.
        std::vector<char> in_d(static_cast<std::size_t>(g.order()), 0);
        std::vector<char> removed(static_cast<std::size_t>(g.order()), 0);
        for (Vertex v = 0; v < g.order(); ++v) {
            if (mate[v] == -1) {
                in_d[v] = 1;
                continue;
            }
            std::vector<Vertex> trial = mate;
            Vertex partner = trial[v];
            trial[v] = -1;
            trial[partner] = -1;
            removed[v] = 1;
            in_d[v] = solver.augment_from(partner, trial, removed);
            removed[v] = 0;
        }

        VertexSet a;
        for (Vertex v = 0; v < g.order(); ++v)
            if (! in_d[v] && std::any_of(g.adjacent(v).begin(), g.adjacent(v).end(), [&](Vertex w) { return in_d[w]; }))
                a.push_back(v);

        TutteViolator result{a, odd_components_after_removal(g, a)};
        if (verify_tutte_violator(g, result))
            return result;
        if (g.order() <= 14)
            if (auto fallback = exhaustive_violator(g))
                return fallback;
        throw std::runtime_error("internal error: Tutte certificate failed re-verification");
    }

    bool verify_matching(const Graph &g, const Matching &m, MatchingKind expected)
    {
        std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
        for (auto &e : m.edges) {
            if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order() || e.u == e.v)
                return false;
            if (! g.has_edge(e.u, e.v))
                return false;
            if (used[e.u] || used[e.v])
                return false;
            used[e.u] = used[e.v] = 1;
        }
        auto covered = 2 * static_cast<long>(m.edges.size());
        switch (expected) {
            case MatchingKind::perfect: return covered == g.order();
            case MatchingKind::near_perfect: return covered + 1 == g.order();
            case MatchingKind::partial: return true;
        }
        return false;
    }
}
