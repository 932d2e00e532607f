#pragma once

#include "extlab/graph.hpp"

namespace extlab
{
    Graph path(int n);
    Graph cycle(int n);
    Graph complete(int n);
    Graph complete_bipartite(int a, int b);
    Graph petersen();

    /// Cartesian product with vertex id (i-1)*|g2| + (j-1) for v_{ij}. Grid labels
    /// carry a modulus on each axis whose factor is the standard cycle 0-1-...-(n-1)-0.
    Graph cartesian_product(const Graph &g1, const Graph &g2);

    /// C_m x P_n plus the twisted edges v_{i1} v_{m+2-i,n}. For m = 6 the vertices
    /// are labelled h_i, q_j, h'_i, q'_j; other m keep grid labels.
    Graph bowtie(int m, int n);

    /// Row/column addressing over grid-labelled graphs (products and bowties with m != 6).
    class GridIndex
    {
    public:
        /// Throws std::invalid_argument if some vertex lacks a grid label.
        explicit GridIndex(const Graph &g);

        int rows() const { return rows_; }
        int cols() const { return cols_; }
        bool rows_cyclic() const { return rows_cyclic_; }
        bool cols_cyclic() const { return cols_cyclic_; }

        /// v_{ij}, reducing cyclic indices; throws std::out_of_range otherwise.
        Vertex at(int i, int j) const;
        int row_of(Vertex v) const { return row_[v]; }
        int col_of(Vertex v) const { return col_[v]; }

        int reduce_row(int i) const;
        int reduce_col(int j) const;

    private:
        int rows_ = 0, cols_ = 0;
        bool rows_cyclic_ = false, cols_cyclic_ = false;
        std::vector<int> row_, col_;
        std::vector<Vertex> at_;
    };

    /// R_i, the vertices of row i (index reduced modulo a cyclic row count).
    VertexSet row_set(const Graph &g, int i);
    /// T_j, the vertices of column j.
    VertexSet col_set(const Graph &g, int j);

    /// Vertex ids of C_6 bowtie P_n addressed by their h/q names.
    struct BowtieLayout
    {
        int n = 0;

        explicit BowtieLayout(int n_) : n(n_) {}

        int order() const { return 6 * n; }
        Vertex grid(int row, int col) const { return (wrap_index(row, 6) - 1) * n + (col - 1); }

        Vertex h(int i) const { return grid(1, wrap_index(i, n)); }
        Vertex h_prime(int i) const { return grid(4, wrap_index(i, n)); }
        Vertex q(int j) const;
        Vertex q_prime(int j) const;
        Vertex at(const BowtieVertex &b) const;

        BowtieVertex name(Vertex v) const;

        /// The up-down symmetry h_i <-> h'_i, q_j <-> q'_j.
        Vertex mirror(Vertex v) const;
        Edge mirror(const Edge &e) const { return Edge(mirror(e.u), mirror(e.v)); }

        bool in_j(Vertex v) const;
    };
}
