#include "extlab/generators.hpp"

#include <stdexcept>

namespace extlab
{
    namespace
    {
        std::vector<std::optional<Label>> plain_labels(int n, const std::string &prefix = "")
        {
            std::vector<std::optional<Label>> labels;
            for (int v = 0; v < n; ++v)
                labels.emplace_back(PlainLabel{prefix + std::to_string(v + 1)});
            return labels;
        }

        bool is_standard_cycle(const Graph &g)
        {
            int n = g.order();
            if (n < 3 || g.size() != static_cast<std::size_t>(n))
                return false;
            for (int v = 0; v < n; ++v)
                if (! g.has_edge(v, (v + 1) % n))
                    return false;
            return true;
        }
    }

    Graph path(int n)
    {
        if (n < 1)
            throw std::invalid_argument("path needs n >= 1");
        std::vector<Edge> edges;
        for (int v = 0; v + 1 < n; ++v)
            edges.emplace_back(v, v + 1);
        return Graph(n, std::move(edges), plain_labels(n));
    }

    Graph cycle(int n)
    {
        if (n < 3)
            throw std::invalid_argument("cycle needs n >= 3");
        std::vector<Edge> edges;
        for (int v = 0; v < n; ++v)
            edges.emplace_back(v, (v + 1) % n);
        return Graph(n, std::move(edges), plain_labels(n));
    }

    Graph complete(int n)
    {
        if (n < 1)
            throw std::invalid_argument("complete graph needs n >= 1");
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return Graph(n, std::move(edges), plain_labels(n));
    }

    Graph complete_bipartite(int a, int b)
    {
        if (a < 1 || b < 1)
            throw std::invalid_argument("complete bipartite graph needs a, b >= 1");
        std::vector<Edge> edges;
        for (int u = 0; u < a; ++u)
            for (int v = 0; v < b; ++v)
                edges.emplace_back(u, a + v);
        std::vector<std::optional<Label>> labels;
        for (int u = 0; u < a; ++u)
            labels.emplace_back(PlainLabel{"a" + std::to_string(u + 1)});
        for (int v = 0; v < b; ++v)
            labels.emplace_back(PlainLabel{"b" + std::to_string(v + 1)});
        return Graph(a + b, std::move(edges), std::move(labels));
    }

    Graph petersen()
    {
        std::vector<Edge> edges;
        for (int i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);
            edges.emplace_back(i, i + 5);
            edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        }
        return Graph(10, std::move(edges), plain_labels(10));
    }

    Graph cartesian_product(const Graph &g1, const Graph &g2)
    {
        if (g1.order() < 1 || g2.order() < 1)
            throw std::invalid_argument("cartesian product of an empty graph");
        const int m = g1.order(), n = g2.order();
        auto id = [n](int a, int b) { return a * n + b; };

        std::vector<Edge> edges;
        for (auto &e : g1.edges())
            for (int b = 0; b < n; ++b)
                edges.emplace_back(id(e.u, b), id(e.v, b));
        for (int a = 0; a < m; ++a)
            for (auto &e : g2.edges())
                edges.emplace_back(id(a, e.u), id(a, e.v));

        std::optional<int> row_mod, col_mod;
        if (is_standard_cycle(g1))
            row_mod = m;
        if (is_standard_cycle(g2))
            col_mod = n;

        std::vector<std::optional<Label>> labels;
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < n; ++b)
                labels.emplace_back(GridVertex{a + 1, b + 1, row_mod, col_mod});
        return Graph(m * n, std::move(edges), std::move(labels));
    }

    Graph bowtie(int m, int n)
    {
        // n = 2 would turn the twisted edge at i = 1 into a parallel copy of v_11 v_12
        if (m < 3 || n < 3)
            throw std::invalid_argument("bowtie needs m >= 3 and n >= 3");
        auto id = [n](int i, int j) { return (i - 1) * n + (j - 1); };

        std::vector<Edge> edges;
        for (int i = 1; i <= m; ++i) {
            for (int j = 1; j < n; ++j)
                edges.emplace_back(id(i, j), id(i, j + 1));
            for (int j = 1; j <= n; ++j)
                edges.emplace_back(id(i, j), id(wrap_index(i + 1, m), j));
            edges.emplace_back(id(i, 1), id(wrap_index(m + 2 - i, m), n));
        }

        std::vector<std::optional<Label>> labels;
        if (m == 6) {
            BowtieLayout layout(n);
            for (Vertex v = 0; v < 6 * n; ++v)
                labels.emplace_back(layout.name(v));
        }
        else
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= n; ++j)
                    labels.emplace_back(GridVertex{i, j, m, std::nullopt});
        return Graph(m * n, std::move(edges), std::move(labels));
    }

    GridIndex::GridIndex(const Graph &g)
    {
        row_.resize(static_cast<std::size_t>(g.order()));
        col_.resize(static_cast<std::size_t>(g.order()));
        for (Vertex v = 0; v < g.order(); ++v) {
            auto &l = g.label(v);
            auto gv = l ? std::get_if<GridVertex>(&*l) : nullptr;
            if (! gv)
                throw std::invalid_argument("graph lacks grid labels");
            row_[v] = gv->i;
            col_[v] = gv->j;
            rows_ = std::max(rows_, gv->m.value_or(gv->i));
            cols_ = std::max(cols_, gv->n.value_or(gv->j));
            rows_cyclic_ = gv->m.has_value();
            cols_cyclic_ = gv->n.has_value();
        }
        at_.assign(static_cast<std::size_t>(rows_) * cols_, -1);
        for (Vertex v = 0; v < g.order(); ++v)
            at_[(row_[v] - 1) * cols_ + (col_[v] - 1)] = v;
    }

    int GridIndex::reduce_row(int i) const
    {
        if (rows_cyclic_)
            return wrap_index(i, rows_);
        if (i < 1 || i > rows_)
            throw std::out_of_range("row index " + std::to_string(i) + " outside [1, " + std::to_string(rows_) + "]");
        return i;
    }

    int GridIndex::reduce_col(int j) const
    {
        if (cols_cyclic_)
            return wrap_index(j, cols_);
        if (j < 1 || j > cols_)
            throw std::out_of_range("column index " + std::to_string(j) + " outside [1, " + std::to_string(cols_) + "]");
        return j;
    }

    Vertex GridIndex::at(int i, int j) const
    {
        Vertex v = at_[(reduce_row(i) - 1) * cols_ + (reduce_col(j) - 1)];
        if (v < 0)
            throw std::out_of_range("no vertex at grid position");
        return v;
    }

    VertexSet row_set(const Graph &g, int i)
    {
        GridIndex grid(g);
        VertexSet result;
        for (int j = 1; j <= grid.cols(); ++j)
            result.push_back(grid.at(i, j));
        return make_vertex_set(std::move(result));
    }

    VertexSet col_set(const Graph &g, int j)
    {
        GridIndex grid(g);
        VertexSet result;
        for (int i = 1; i <= grid.rows(); ++i)
            result.push_back(grid.at(i, j));
        return make_vertex_set(std::move(result));
    }

    Vertex BowtieLayout::q(int j) const
    {
        int jj = wrap_index(j, 2 * n);
        return jj <= n ? grid(6, jj) : grid(2, jj - n);
    }

    Vertex BowtieLayout::q_prime(int j) const
    {
        int jj = wrap_index(j, 2 * n);
        return jj <= n ? grid(5, jj) : grid(3, jj - n);
    }

    Vertex BowtieLayout::at(const BowtieVertex &b) const
    {
        switch (b.kind) {
            case BowtieKind::h: return h(b.index);
            case BowtieKind::q: return q(b.index);
            case BowtieKind::h_prime: return h_prime(b.index);
            case BowtieKind::q_prime: return q_prime(b.index);
        }
        throw std::logic_error("unknown bowtie vertex kind");
    }

    BowtieVertex BowtieLayout::name(Vertex v) const
    {
        if (v < 0 || v >= order())
            throw std::out_of_range("vertex outside the bowtie graph");
        int row = v / n + 1, col = v % n + 1;
        switch (row) {
            case 1: return {BowtieKind::h, col};
            case 2: return {BowtieKind::q, col + n};
            case 3: return {BowtieKind::q_prime, col + n};
            case 4: return {BowtieKind::h_prime, col};
            case 5: return {BowtieKind::q_prime, col};
            default: return {BowtieKind::q, col};
        }
    }

    Vertex BowtieLayout::mirror(Vertex v) const
    {
        auto b = name(v);
        switch (b.kind) {
            case BowtieKind::h: b.kind = BowtieKind::h_prime; break;
            case BowtieKind::q: b.kind = BowtieKind::q_prime; break;
            case BowtieKind::h_prime: b.kind = BowtieKind::h; break;
            case BowtieKind::q_prime: b.kind = BowtieKind::q; break;
        }
        return at(b);
    }

    bool BowtieLayout::in_j(Vertex v) const
    {
        auto k = name(v).kind;
        return k == BowtieKind::h || k == BowtieKind::q;
    }
}
