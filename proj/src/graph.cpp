#include "extlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <stdexcept>

namespace extlab
{
    VertexSet make_vertex_set(std::vector<Vertex> vs)
    {
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    }

    int wrap_index(int x, int modulus)
    {
        int r = ((x - 1) % modulus + modulus) % modulus;
        return r + 1;
    }

    GridVertex canonical(GridVertex g)
    {
        if (g.m)
            g.i = wrap_index(g.i, *g.m);
        if (g.n)
            g.j = wrap_index(g.j, *g.n);
        return g;
    }

    BowtieVertex canonical(BowtieVertex b, int n)
    {
        bool is_h = b.kind == BowtieKind::h || b.kind == BowtieKind::h_prime;
        b.index = wrap_index(b.index, is_h ? n : 2 * n);
        return b;
    }

    std::string to_string(const BowtieVertex &b)
    {
        switch (b.kind) {
            case BowtieKind::h: return "h" + std::to_string(b.index);
            case BowtieKind::q: return "q" + std::to_string(b.index);
            case BowtieKind::h_prime: return "h'" + std::to_string(b.index);
            case BowtieKind::q_prime: return "q'" + std::to_string(b.index);
        }
        return "?";
    }

    std::string to_string(const Label &label)
    {
        if (auto g = std::get_if<GridVertex>(&label))
            return "v_" + std::to_string(g->i) + "," + std::to_string(g->j);
        if (auto b = std::get_if<BowtieVertex>(&label))
            return to_string(*b);
        return std::get<PlainLabel>(label).text;
    }

    Graph::Graph(int order, std::vector<Edge> edges, std::vector<std::optional<Label>> labels) :
        order_(order),
        words_((order + 63) / 64),
        edges_(std::move(edges)),
        labels_(std::move(labels))
    {
        if (order < 0)
            throw std::invalid_argument("graph order must be nonnegative");
        if (! labels_.empty() && labels_.size() != static_cast<std::size_t>(order))
            throw std::invalid_argument("label table size does not match graph order");

        for (auto &e : edges_) {
            if (e.u == e.v)
                throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
            if (e.u < 0 || e.v >= order)
                throw std::invalid_argument("edge endpoint out of range");
            e = Edge(e.u, e.v);
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw std::invalid_argument("parallel edges are not allowed");

        for (auto &l : labels_)
            if (l)
                if (auto g = std::get_if<GridVertex>(&*l))
                    *g = canonical(*g);

        std::vector<int> degree(static_cast<std::size_t>(order), 0);
        for (auto &e : edges_) {
            ++degree[e.u];
            ++degree[e.v];
        }
        offsets_.assign(static_cast<std::size_t>(order) + 1, 0);
        for (int v = 0; v < order; ++v)
            offsets_[v + 1] = offsets_[v] + degree[v];

        adjacency_.assign(2 * edges_.size(), 0);
        adjacency_edge_.assign(2 * edges_.size(), 0);
        std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
        for (std::size_t id = 0; id < edges_.size(); ++id) {
            auto &e = edges_[id];
            adjacency_[fill[e.u]] = e.v;
            adjacency_edge_[fill[e.u]++] = static_cast<int>(id);
            adjacency_[fill[e.v]] = e.u;
            adjacency_edge_[fill[e.v]++] = static_cast<int>(id);
        }
        // rows sorted by neighbour id
        for (int v = 0; v < order; ++v) {
            std::vector<std::pair<Vertex, int>> tmp;
            for (int p = offsets_[v]; p < offsets_[v + 1]; ++p)
                tmp.emplace_back(adjacency_[p], adjacency_edge_[p]);
            std::sort(tmp.begin(), tmp.end());
            for (int p = offsets_[v], t = 0; p < offsets_[v + 1]; ++p, ++t) {
                adjacency_[p] = tmp[t].first;
                adjacency_edge_[p] = tmp[t].second;
            }
        }

        matrix_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(words_), 0);
        for (auto &e : edges_) {
            matrix_[static_cast<std::size_t>(e.u) * words_ + e.v / 64] |= std::uint64_t{1} << (e.v % 64);
            matrix_[static_cast<std::size_t>(e.v) * words_ + e.u / 64] |= std::uint64_t{1} << (e.u % 64);
        }
    }

    void Graph::check_vertex(Vertex v) const
    {
        if (v < 0 || v >= order_)
            throw std::out_of_range("vertex id " + std::to_string(v) + " out of range for graph of order " + std::to_string(order_));
    }

    std::span<const Vertex> Graph::adjacent(Vertex v) const
    {
        check_vertex(v);
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }

    bool Graph::has_edge(Vertex u, Vertex v) const
    {
        if (u < 0 || v < 0 || u >= order_ || v >= order_)
            return false;
        return (matrix_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
    }

    std::optional<int> Graph::edge_id(Vertex u, Vertex v) const
    {
        if (! has_edge(u, v))
            return std::nullopt;
        auto row = adjacent(u);
        auto it = std::lower_bound(row.begin(), row.end(), v);
        return adjacency_edge_[offsets_[u] + (it - row.begin())];
    }

    const std::optional<Label> &Graph::label(Vertex v) const
    {
        static const std::optional<Label> none;
        check_vertex(v);
        return labels_.empty() ? none : labels_[v];
    }

    bool Graph::operator==(const Graph &other) const
    {
        return order_ == other.order_ && edges_ == other.edges_ && labels_ == other.labels_;
    }

    VertexSet neighbors(const Graph &g, Vertex v)
    {
        auto adj = g.adjacent(v);
        return {adj.begin(), adj.end()};
    }

    int min_degree(const Graph &g)
    {
        if (g.order() < 1)
            throw std::invalid_argument("min_degree of the empty graph");
        int best = std::numeric_limits<int>::max();
        for (Vertex v = 0; v < g.order(); ++v)
            best = std::min(best, g.degree(v));
        return best;
    }

    int max_degree(const Graph &g)
    {
        int best = 0;
        for (Vertex v = 0; v < g.order(); ++v)
            best = std::max(best, g.degree(v));
        return best;
    }

    std::optional<Bipartition> is_bipartite(const Graph &g)
    {
        std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
        for (Vertex s = 0; s < g.order(); ++s) {
            if (colour[s] != -1)
                continue;
            colour[s] = 0;
            std::queue<Vertex> todo;
            todo.push(s);
            while (! todo.empty()) {
                Vertex v = todo.front();
                todo.pop();
                for (Vertex w : g.adjacent(v)) {
                    if (colour[w] == -1) {
                        colour[w] = 1 - colour[v];
                        todo.push(w);
                    }
                    else if (colour[w] == colour[v])
                        return std::nullopt;
                }
            }
        }
        Bipartition result;
        for (Vertex v = 0; v < g.order(); ++v)
            (colour[v] == 0 ? result.left : result.right).push_back(v);
        return result;
    }

    std::vector<VertexSet> components(const Graph &g, std::span<const char> removed)
    {
        std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
        if (! removed.empty())
            for (Vertex v = 0; v < g.order(); ++v)
                seen[v] = removed[v];

        std::vector<VertexSet> result;
        for (Vertex s = 0; s < g.order(); ++s) {
            if (seen[s])
                continue;
            VertexSet comp{s};
            seen[s] = 1;
            for (std::size_t head = 0; head < comp.size(); ++head)
                for (Vertex w : g.adjacent(comp[head]))
                    if (! seen[w]) {
                        seen[w] = 1;
                        comp.push_back(w);
                    }
            std::sort(comp.begin(), comp.end());
            result.push_back(std::move(comp));
        }
        return result;
    }

    bool is_connected(const Graph &g)
    {
        return g.order() <= 1 || components(g).size() == 1;
    }

    namespace
    {
        bool is_complete(const Graph &g)
        {
            auto n = static_cast<std::size_t>(g.order());
            return g.size() == n * (n - 1) / 2;
        }

        void require_order_two(const Graph &g)
        {
            if (g.order() < 2)
                throw std::invalid_argument("connectivity needs at least two vertices");
        }

        /// Unit vertex capacity max-flow between two non-adjacent vertices.
        class VertexFlow
        {
        public:
            explicit VertexFlow(const Graph &g) : n_(g.order())
            {
                // node 2v = v_in, 2v+1 = v_out
                head_.assign(2 * static_cast<std::size_t>(n_), -1);
                for (Vertex v = 0; v < n_; ++v)
                    add_arc(2 * v, 2 * v + 1, 1);
                for (auto &e : g.edges()) {
                    add_arc(2 * e.u + 1, 2 * e.v, n_);
                    add_arc(2 * e.v + 1, 2 * e.u, n_);
                }
                base_capacity_ = capacity_;
            }

            int local(Vertex s, Vertex t, int limit)
            {
                capacity_ = base_capacity_;
                int source = 2 * s + 1, sink = 2 * t;
                int flow = 0;
                std::vector<int> via(2 * static_cast<std::size_t>(n_));
                while (flow < limit) {
                    std::fill(via.begin(), via.end(), -1);
                    std::queue<int> todo;
                    todo.push(source);
                    via[source] = -2;
                    while (! todo.empty() && via[sink] == -1) {
                        int x = todo.front();
                        todo.pop();
                        for (int a = head_[x]; a != -1; a = next_[a])
                            if (capacity_[a] > 0 && via[to_[a]] == -1) {
                                via[to_[a]] = a;
                                todo.push(to_[a]);
                            }
                    }
                    if (via[sink] == -1)
                        break;
                    for (int x = sink; x != source; x = to_[via[x] ^ 1]) {
                        --capacity_[via[x]];
                        ++capacity_[via[x] ^ 1];
                    }
                    ++flow;
                }
                return flow;
            }

        private:
            void add_arc(int a, int b, int cap)
            {
                to_.push_back(b);
                capacity_.push_back(cap);
                next_.push_back(head_[a]);
                head_[a] = static_cast<int>(to_.size()) - 1;
                to_.push_back(a);
                capacity_.push_back(0);
                next_.push_back(head_[b]);
                head_[b] = static_cast<int>(to_.size()) - 1;
            }

            int n_;
            std::vector<int> head_, next_, to_, capacity_, base_capacity_;
        };
    }

    int connectivity_exhaustive(const Graph &g)
    {
        require_order_two(g);
        if (g.order() > 16)
            throw std::invalid_argument("exhaustive connectivity is limited to order 16");
        if (is_complete(g))
            return g.order() - 1;

        const int n = g.order();
        std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
        for (auto &e : g.edges()) {
            adj[e.u] |= 1u << e.v;
            adj[e.v] |= 1u << e.u;
        }
        const std::uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);

        auto connected_without = [&](std::uint32_t cut) {
            std::uint32_t alive = all & ~cut;
            std::uint32_t start = alive & (~alive + 1);
            std::uint32_t reached = start, frontier = start;
            while (frontier) {
                std::uint32_t next = 0;
                for (std::uint32_t f = frontier; f; f &= f - 1)
                    next |= adj[std::countr_zero(f)];
                next &= alive & ~reached;
                reached |= next;
                frontier = next;
            }
            return reached == alive;
        };

        for (int s = 0; s <= n - 2; ++s)
            for (std::uint32_t cut = 0; cut <= all; ++cut) {
                if (std::popcount(cut) != s)
                    continue;
                if (! connected_without(cut))
                    return s;
                if (cut == all)
                    break;
            }
        return n - 1;
    }

    int connectivity_max_flow(const Graph &g)
    {
        require_order_two(g);
        if (is_complete(g))
            return g.order() - 1;
        if (! is_connected(g))
            return 0;

        VertexFlow flow(g);
        int best = min_degree(g);
        // some vertex among the first best+1 lies outside any minimum cut
        for (Vertex v = 0; v <= best && v < g.order(); ++v)
            for (Vertex w = 0; w < g.order(); ++w)
                if (w != v && ! g.has_edge(v, w))
                    best = std::min(best, flow.local(v, w, best));
        return best;
    }

    int connectivity(const Graph &g)
    {
        require_order_two(g);
        return g.order() <= 16 ? connectivity_exhaustive(g) : connectivity_max_flow(g);
    }

    std::vector<Edge> InducedSubgraph::lift(std::span<const Edge> edges) const
    {
        std::vector<Edge> result;
        result.reserve(edges.size());
        for (auto &e : edges)
            result.push_back(lift(e));
        std::sort(result.begin(), result.end());
        return result;
    }

    InducedSubgraph induced_subgraph(const Graph &g, const VertexSet &keep)
    {
        std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
        InducedSubgraph result;
        for (Vertex v : keep) {
            if (v < 0 || v >= g.order())
                throw std::out_of_range("induced_subgraph: vertex out of range");
            if (local[v] != -1)
                throw std::invalid_argument("induced_subgraph: duplicate vertex");
            local[v] = static_cast<int>(result.to_parent.size());
            result.to_parent.push_back(v);
        }

        std::vector<Edge> edges;
        for (auto &e : g.edges())
            if (local[e.u] != -1 && local[e.v] != -1)
                edges.emplace_back(local[e.u], local[e.v]);

        std::vector<std::optional<Label>> labels;
        if (g.has_labels())
            for (Vertex v : result.to_parent)
                labels.push_back(g.label(v));

        result.graph = Graph(static_cast<int>(keep.size()), std::move(edges), std::move(labels));
        return result;
    }

    VertexSet complement_of(const Graph &g, const VertexSet &removed)
    {
        std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
        for (Vertex v : removed)
            gone.at(static_cast<std::size_t>(v)) = 1;
        VertexSet result;
        for (Vertex v = 0; v < g.order(); ++v)
            if (! gone[v])
                result.push_back(v);
        return result;
    }
}
