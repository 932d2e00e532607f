#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace extlab
{
    using Vertex = int;

    /// Unordered vertex pair, stored with u < v.
    struct Edge
    {
        Vertex u = 0;
        Vertex v = 0;

        Edge() = default;
        Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

        auto operator<=>(const Edge &) const = default;

        bool touches(Vertex w) const { return u == w || v == w; }
        Vertex other(Vertex w) const { return w == u ? v : u; }
    };

    /// Sorted, duplicate-free list of vertex ids.
    using VertexSet = std::vector<Vertex>;

    VertexSet make_vertex_set(std::vector<Vertex> vs);

    /// Grid coordinate v_{ij}. Indices are 1-based; a present modulus means
    /// the coordinate wraps (v_{i+km, j+hn} = v_{ij}) and is stored reduced to [1, m].
    struct GridVertex
    {
        int i = 1;
        int j = 1;
        std::optional<int> m;
        std::optional<int> n;

        bool operator==(const GridVertex &) const = default;
    };

    enum class BowtieKind
    {
        h,
        q,
        h_prime,
        q_prime
    };

    /// Symbolic name of a vertex of C_6 bowtie P_n. h indices are reduced
    /// to [1, n], q indices to [1, 2n].
    struct BowtieVertex
    {
        BowtieKind kind = BowtieKind::h;
        int index = 1;

        bool operator==(const BowtieVertex &) const = default;
    };

    struct PlainLabel
    {
        std::string text;

        bool operator==(const PlainLabel &) const = default;
    };

    using Label = std::variant<GridVertex, BowtieVertex, PlainLabel>;

    /// Reduces x into [1, modulus].
    int wrap_index(int x, int modulus);

    GridVertex canonical(GridVertex g);
    BowtieVertex canonical(BowtieVertex b, int n);

    std::string to_string(const BowtieVertex &b);
    std::string to_string(const Label &label);

    /// Simple undirected graph on vertices 0..order-1. Immutable once built.
    class Graph
    {
    public:
        Graph() = default;

        /// Throws std::invalid_argument on loops, repeated edges, or endpoints >= order.
        explicit Graph(int order, std::vector<Edge> edges = {}, std::vector<std::optional<Label>> labels = {});

        int order() const { return order_; }
        std::size_t size() const { return edges_.size(); }

        /// Edges sorted lexicographically; an edge's position is its id.
        const std::vector<Edge> &edges() const { return edges_; }
        const Edge &edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

        std::span<const Vertex> adjacent(Vertex v) const;
        int degree(Vertex v) const { return static_cast<int>(adjacent(v).size()); }

        bool has_edge(Vertex u, Vertex v) const;
        std::optional<int> edge_id(Vertex u, Vertex v) const;

        bool has_labels() const { return ! labels_.empty(); }
        const std::optional<Label> &label(Vertex v) const;
        const std::vector<std::optional<Label>> &labels() const { return labels_; }

        bool operator==(const Graph &other) const;

    private:
        void check_vertex(Vertex v) const;

        int order_ = 0;
        int words_ = 0;
        std::vector<Edge> edges_;
        std::vector<int> offsets_;
        std::vector<Vertex> adjacency_;
        std::vector<int> adjacency_edge_;
        std::vector<std::uint64_t> matrix_;
        std::vector<std::optional<Label>> labels_;
    };

    VertexSet neighbors(const Graph &g, Vertex v);

    int min_degree(const Graph &g);
    int max_degree(const Graph &g);

    struct Bipartition
    {
        VertexSet left;
        VertexSet right;
    };

    /// BFS 2-colouring; vertices of each component start on the left side.
    std::optional<Bipartition> is_bipartite(const Graph &g);

    bool is_connected(const Graph &g);

    /// Connected components of g minus the vertices flagged in `removed`.
    std::vector<VertexSet> components(const Graph &g, std::span<const char> removed = {});

    /// Vertex connectivity. Complete graphs give order-1. Throws for order < 2.
    int connectivity(const Graph &g);

    /// Smallest separating set by subset enumeration. Throws above order 16.
    int connectivity_exhaustive(const Graph &g);

    /// Even's algorithm over unit-capacity vertex-split flow networks.
    int connectivity_max_flow(const Graph &g);

    struct InducedSubgraph
    {
        Graph graph;
        /// to_parent[local id] = id in the parent graph.
        std::vector<Vertex> to_parent;

        Edge lift(const Edge &e) const { return Edge(to_parent[e.u], to_parent[e.v]); }
        std::vector<Edge> lift(std::span<const Edge> edges) const;
    };

    /// Subgraph induced on `keep`. Labels are carried over.
    InducedSubgraph induced_subgraph(const Graph &g, const VertexSet &keep);

    /// Vertices of g not in `removed`.
    VertexSet complement_of(const Graph &g, const VertexSet &removed);
}
