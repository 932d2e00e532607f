#pragma once

#include "extlab/graph.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace extlab
{
    enum class MatchingKind
    {
        partial,
        near_perfect,
        perfect
    };

    std::string to_string(MatchingKind kind);
    MatchingKind parse_matching_kind(const std::string &s);

    /// A set of edges of some host graph together with its kind tag. The tag is
    /// derived from the edge count at construction; verify_matching never trusts it.
    struct Matching
    {
        std::vector<Edge> edges;
        MatchingKind kind = MatchingKind::partial;
        int host_order = 0;

        std::size_t size() const { return edges.size(); }
        bool contains(const Edge &e) const;
        bool covers(Vertex v) const;
        bool contains_all(std::span<const Edge> others) const;
        VertexSet vertices() const;
    };

    /// Normalises and sorts the edges and tags the kind from the host order.
    Matching make_matching(const Graph &g, std::vector<Edge> edges);

    struct TutteViolator
    {
        VertexSet witness_set;
        int odd_component_count = 0;
    };

    /// Reusable Edmonds blossom solver. Deterministic: vertices are scanned by id and
    /// neighbour lists are sorted, so ties always resolve to the lowest id.
    class BlossomSolver
    {
    public:
        explicit BlossomSolver(const Graph &g);

        /// Maximum matching of g minus `removed`, starting from an empty matching.
        /// Returns mate[] with -1 for exposed (or removed) vertices.
        const std::vector<Vertex> &solve(std::span<const char> removed = {});

        /// Grows `mate` by augmenting from every exposed live vertex.
        void augment_all(std::vector<Vertex> &mate, std::span<const char> removed);

        /// One augmenting search from `root`; true if mate was augmented.
        bool augment_from(Vertex root, std::vector<Vertex> &mate, std::span<const char> removed);

    private:
        Vertex lowest_common_base(Vertex a, Vertex b, const std::vector<Vertex> &mate);
        void mark_path(Vertex v, Vertex b, Vertex child, const std::vector<Vertex> &mate);

        const Graph &g_;
        std::vector<Vertex> mate_, parent_, base_;
        std::vector<char> used_, blossom_, lca_seen_;
        std::vector<Vertex> queue_;
    };

    Matching maximum_matching(const Graph &g);
    bool has_perfect_matching(const Graph &g);

    /// Throws std::invalid_argument if `m` is not a matching of g.
    void require_valid_matching(const Graph &g, std::span<const Edge> m);

    /// A perfect matching of g containing every edge of m, if one exists.
    std::optional<Matching> extend_to_perfect(const Graph &g, const Matching &m);

    /// Fast repeated extension checks against one host graph. Holds a perfect matching of
    /// the host and repairs it after deleting V(M), so each query costs a few augmentations.
    /// Not thread-safe; use one per worker.
    class ExtensionOracle
    {
    public:
        explicit ExtensionOracle(const Graph &g);

        bool host_has_perfect_matching() const { return perfect_; }

        /// Does g - V(m) have a perfect matching? m must be a matching of g.
        bool extends(std::span<const Edge> m);

        /// Perfect matching of g containing m, or nothing.
        std::optional<std::vector<Edge>> extension(std::span<const Edge> m);

    private:
        bool repair(std::span<const Edge> m);

        const Graph &g_;
        BlossomSolver solver_;
        std::vector<Vertex> base_mate_, work_mate_;
        std::vector<char> removed_;
        bool perfect_ = false;
    };

    /// A Tutte set certifying that g has no perfect matching, independently re-verified.
    std::optional<TutteViolator> tutte_violator(const Graph &g);

    /// Recounts the odd components of g - S from scratch.
    int odd_components_after_removal(const Graph &g, const VertexSet &s);
    bool verify_tutte_violator(const Graph &g, const TutteViolator &t);

    /// Full structural check from the raw edge list. `partial` accepts any matching.
    bool verify_matching(const Graph &g, const Matching &m, MatchingKind expected);
}
