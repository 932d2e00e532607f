#pragma once

// Slow, independent reference implementations used only by the tests.

#include "extlab/graph.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

namespace oracle
{
    using extlab::Edge;
    using extlab::Graph;
    using extlab::Vertex;

    inline bool adjacent(const Graph &g, Vertex a, Vertex b)
    {
        for (auto &e : g.edges())
            if ((e.u == a && e.v == b) || (e.u == b && e.v == a))
                return true;
        return false;
    }

    /// Maximum matching size by branching on the lowest undecided vertex.
    inline int max_matching_size(const Graph &g, std::vector<char> gone = {})
    {
        if (gone.empty())
            gone.assign(static_cast<std::size_t>(g.order()), 0);
        Vertex v = 0;
        while (v < g.order() && gone[v])
            ++v;
        if (v == g.order())
            return 0;
        gone[v] = 1;
        int best = max_matching_size(g, gone);
        for (Vertex w = v + 1; w < g.order(); ++w)
            if (! gone[w] && adjacent(g, v, w)) {
                gone[w] = 1;
                best = std::max(best, 1 + max_matching_size(g, gone));
                gone[w] = 0;
            }
        return best;
    }

    /// Perfect matching of the vertices not in `gone`, by the same branching.
    inline bool has_perfect_matching(const Graph &g, std::vector<char> gone = {})
    {
        if (gone.empty())
            gone.assign(static_cast<std::size_t>(g.order()), 0);
        Vertex v = 0;
        while (v < g.order() && gone[v])
            ++v;
        if (v == g.order())
            return true;
        gone[v] = 1;
        for (Vertex w = v + 1; w < g.order(); ++w)
            if (! gone[w] && adjacent(g, v, w)) {
                gone[w] = 1;
                if (has_perfect_matching(g, gone))
                    return true;
                gone[w] = 0;
            }
        return false;
    }

    inline int count_perfect_matchings(const Graph &g, std::vector<char> gone = {})
    {
        if (gone.empty())
            gone.assign(static_cast<std::size_t>(g.order()), 0);
        Vertex v = 0;
        while (v < g.order() && gone[v])
            ++v;
        if (v == g.order())
            return 1;
        gone[v] = 1;
        int total = 0;
        for (Vertex w = v + 1; w < g.order(); ++w)
            if (! gone[w] && adjacent(g, v, w)) {
                gone[w] = 1;
                total += count_perfect_matchings(g, gone);
                gone[w] = 0;
            }
        return total;
    }

    /// All k-subsets of pairwise disjoint edges, by plain subset recursion.
    inline void k_matchings(const Graph &g, int k, const std::function<void(const std::vector<Edge> &)> &visit)
    {
        std::vector<Edge> chosen;
        std::function<void(std::size_t)> rec = [&](std::size_t from) {
            if (static_cast<int>(chosen.size()) == k) {
                visit(chosen);
                return;
            }
            for (std::size_t i = from; i < g.edges().size(); ++i) {
                auto &e = g.edges()[i];
                bool clash = std::any_of(chosen.begin(), chosen.end(), [&](const Edge &f) {
                    return f.u == e.u || f.u == e.v || f.v == e.u || f.v == e.v;
                });
                if (clash)
                    continue;
                chosen.push_back(e);
                rec(i + 1);
                chosen.pop_back();
            }
        };
        rec(0);
    }

    inline bool extends(const Graph &g, const std::vector<Edge> &m)
    {
        std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
        for (auto &e : m)
            gone[e.u] = gone[e.v] = 1;
        return has_perfect_matching(g, gone);
    }

    inline bool is_k_extendable(const Graph &g, int k)
    {
        if (! has_perfect_matching(g) || 2 * k + 2 > g.order())
            return false;
        bool ok = true;
        k_matchings(g, k, [&](const std::vector<Edge> &m) { ok = ok && extends(g, m); });
        return ok;
    }

    inline int count_components(const Graph &g, const std::vector<char> &gone, bool odd_only)
    {
        std::vector<char> seen(gone);
        int count = 0;
        for (Vertex s = 0; s < g.order(); ++s) {
            if (seen[s])
                continue;
            int size = 0;
            std::vector<Vertex> stack{s};
            seen[s] = 1;
            while (! stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                ++size;
                for (Vertex w = 0; w < g.order(); ++w)
                    if (! seen[w] && adjacent(g, v, w)) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            if (! odd_only || size % 2 == 1)
                ++count;
        }
        return count;
    }

    /// Smallest vertex cut by trying every subset; complete graphs give order - 1.
    inline int connectivity(const Graph &g)
    {
        const int n = g.order();
        int best = n - 1;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            int size = __builtin_popcount(mask);
            if (size >= best || n - size < 2)
                continue;
            std::vector<char> gone(static_cast<std::size_t>(n), 0);
            for (int v = 0; v < n; ++v)
                gone[v] = mask >> v & 1u;
            if (count_components(g, gone, false) > 1)
                best = size;
        }
        return best;
    }

    /// Odd cycle search by DFS parity, independent of the library's BFS colouring.
    inline bool bipartite(const Graph &g)
    {
        std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
        std::function<bool(Vertex, int)> dfs = [&](Vertex v, int s) {
            side[v] = s;
            for (auto &e : g.edges()) {
                if (! e.touches(v))
                    continue;
                Vertex w = e.other(v);
                if (side[w] == s)
                    return false;
                if (side[w] < 0 && ! dfs(w, 1 - s))
                    return false;
            }
            return true;
        };
        for (Vertex v = 0; v < g.order(); ++v)
            if (side[v] < 0 && ! dfs(v, 0))
                return false;
        return true;
    }

    inline Graph random_graph(std::mt19937 &rng, int order, double p)
    {
        std::bernoulli_distribution coin(p);
        std::vector<Edge> edges;
        for (Vertex u = 0; u < order; ++u)
            for (Vertex v = u + 1; v < order; ++v)
                if (coin(rng))
                    edges.emplace_back(u, v);
        return Graph(order, std::move(edges));
    }
}
