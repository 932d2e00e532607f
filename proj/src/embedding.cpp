#include "extlab/embedding.hpp"

#include "extlab/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace extlab
{
    void validate_rotation(const RotationSystem &rs)
    {
        const Graph &g = rs.graph;
        if (static_cast<int>(rs.rotations.size()) != g.order())
            throw std::invalid_argument("rotation system needs one rotation per vertex");
        if (rs.signs.size() != g.size())
            throw std::invalid_argument("rotation system needs one sign per edge");
        for (int s : rs.signs)
            if (s != 1 && s != -1)
                throw std::invalid_argument("edge signs must be +1 or -1");
        for (Vertex v = 0; v < g.order(); ++v) {
            std::vector<int> listed = rs.rotations[v], expected;
            for (Vertex w : g.adjacent(v))
                expected.push_back(*g.edge_id(v, w));
            std::sort(listed.begin(), listed.end());
            std::sort(expected.begin(), expected.end());
            if (listed != expected)
                throw std::invalid_argument("rotation at vertex " + std::to_string(v) + " does not list its edges exactly once");
        }
    }

    RotationSystem make_rotation(const Graph &g, std::vector<std::vector<int>> rotations)
    {
        RotationSystem rs{g, std::move(rotations), std::vector<int>(g.size(), 1)};
        validate_rotation(rs);
        return rs;
    }

    namespace
    {
        /// position[v][edge] lookups for successor / predecessor in the rotation
        struct RotationIndex
        {
            explicit RotationIndex(const RotationSystem &rs) : rs(rs), pos(rs.graph.order())
            {
                for (Vertex v = 0; v < rs.graph.order(); ++v)
                    for (std::size_t i = 0; i < rs.rotations[v].size(); ++i)
                        pos[v].emplace_back(rs.rotations[v][i], static_cast<int>(i));
                for (auto &p : pos)
                    std::sort(p.begin(), p.end());
            }

            int index_of(Vertex v, int edge) const
            {
                auto it = std::lower_bound(pos[v].begin(), pos[v].end(), std::pair{edge, -1});
                return it->second;
            }

            int step(Vertex v, int edge, int orientation) const
            {
                auto &rot = rs.rotations[v];
                int d = static_cast<int>(rot.size());
                int i = index_of(v, edge);
                return rot[(i + (orientation > 0 ? 1 : d - 1)) % d];
            }

            const RotationSystem &rs;
            std::vector<std::vector<std::pair<int, int>>> pos;
        };

        Vertex other_end(const Graph &g, int edge, Vertex v)
        {
            return g.edge(edge).other(v);
        }
    }

    FaceStructure trace_faces(const RotationSystem &rs)
    {
        validate_rotation(rs);
        const Graph &g = rs.graph;
        RotationIndex index(rs);
        // state (edge, from-end, orientation) -> flat id
        auto state_id = [&](int edge, Vertex from, int orientation) {
            int end = g.edge(edge).u == from ? 0 : 1;
            return (edge * 2 + end) * 2 + (orientation > 0 ? 0 : 1);
        };
        std::vector<char> used(g.size() * 4, 0);
        FaceStructure out;
        for (int e0 = 0; e0 < static_cast<int>(g.size()); ++e0)
            for (Vertex v0 : {g.edge(e0).u, g.edge(e0).v})
                for (int o0 : {1, -1}) {
                    if (used[state_id(e0, v0, o0)])
                        continue;
                    std::vector<Dart> walk;
                    int e = e0, o = o0;
                    Vertex v = v0;
                    do {
                        used[state_id(e, v, o)] = 1;
                        walk.push_back({e, v});
                        Vertex w = other_end(g, e, v);
                        int arriving = o * rs.signs[e];
                        // the same face walked backwards
                        used[state_id(e, w, -arriving)] = 1;
                        e = index.step(w, e, arriving);
                        v = w;
                        o = arriving;
                    } while (! (e == e0 && v == v0 && o == o0));
                    out.face_sizes.push_back(static_cast<int>(walk.size()));
                    out.faces.push_back(std::move(walk));
                }
        std::sort(out.face_sizes.begin(), out.face_sizes.end());
        if (std::accumulate(out.face_sizes.begin(), out.face_sizes.end(), std::size_t{0}) != 2 * g.size())
            throw std::logic_error("face tracing did not use every dart exactly once");
        return out;
    }

    int euler_characteristic(const RotationSystem &rs)
    {
        auto faces = trace_faces(rs);
        return rs.graph.order() - static_cast<int>(rs.graph.size()) + static_cast<int>(faces.faces.size());
    }

    bool is_orientable(const RotationSystem &rs)
    {
        validate_rotation(rs);
        const Graph &g = rs.graph;
        // flip[v] is the product of signs along the spanning-tree path to the root
        std::vector<int> flip(static_cast<std::size_t>(g.order()), 0);
        for (Vertex root = 0; root < g.order(); ++root) {
            if (flip[root])
                continue;
            flip[root] = 1;
            std::vector<Vertex> stack{root};
            while (! stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (Vertex w : g.adjacent(v))
                    if (! flip[w]) {
                        flip[w] = flip[v] * rs.signs[*g.edge_id(v, w)];
                        stack.push_back(w);
                    }
            }
        }
        for (std::size_t i = 0; i < g.size(); ++i) {
            auto &e = g.edges()[i];
            if (flip[e.u] * flip[e.v] * rs.signs[i] != 1)
                return false;
        }
        return true;
    }

    bool verify_embedding(const RotationSystem &rs, const Surface &s)
    {
        if (! is_connected(rs.graph))
            throw std::invalid_argument("embedding verification needs a connected graph");
        return euler_characteristic(rs) == euler_characteristic(s) && is_orientable(rs) == s.orientable;
    }

    RotationSystem local_switch(const RotationSystem &rs, Vertex v)
    {
        validate_rotation(rs);
        if (v < 0 || v >= rs.graph.order())
            throw std::invalid_argument("vertex out of range");
        RotationSystem out = rs;
        std::reverse(out.rotations[v].begin(), out.rotations[v].end());
        for (int e : out.rotations[v])
            out.signs[e] = -out.signs[e];
        return out;
    }

    ContributionReport euler_contributions(const RotationSystem &rs)
    {
        const Graph &g = rs.graph;
        auto faces = trace_faces(rs);
        ContributionReport out;
        out.phi.assign(static_cast<std::size_t>(g.order()), Rational(0));
        out.triangles_at.assign(static_cast<std::size_t>(g.order()), 0);
        for (Vertex v = 0; v < g.order(); ++v)
            out.phi[v] = Rational(1) - Rational(g.degree(v), 2);
        for (auto &face : faces.faces) {
            auto size = static_cast<std::int64_t>(face.size());
            // each dart starts at one corner of the face
            for (auto &d : face) {
                out.phi[d.from] += Rational(1, size);
                if (size == 3)
                    ++out.triangles_at[d.from];
            }
        }
        out.total = std::accumulate(out.phi.begin(), out.phi.end(), Rational(0));
        out.control_point = 0;
        for (Vertex v = 1; v < g.order(); ++v)
            if (out.phi[v] > out.phi[out.control_point])
                out.control_point = v;
        return out;
    }

    std::pair<Vertex, Rational> control_point(const RotationSystem &rs)
    {
        auto report = euler_contributions(rs);
        return {report.control_point, report.phi[report.control_point]};
    }

    RotationSystem bowtie_rotation_N2(int n)
    {
        if (n < 5 || n % 2 == 0)
            throw std::invalid_argument("bowtie_rotation_N2 needs odd n >= 5");
        Graph g = bowtie(6, n);
        BowtieLayout b(n);
        auto id = [&](Vertex a, Vertex c) { return *g.edge_id(a, c); };
        RotationSystem rs{g, std::vector<std::vector<int>>(static_cast<std::size_t>(g.order())), std::vector<int>(g.size(), 1)};
        for (int i = 1; i <= 6; ++i)
            for (int j = 1; j <= n; ++j) {
                Vertex v = b.grid(i, j);
                // crossing the right boundary reads the rows in reverse: v_{i,n} meets v_{8-i,1}
                Vertex right = j < n ? b.grid(i, j + 1) : b.grid(8 - i, 1);
                Vertex left = j > 1 ? b.grid(i, j - 1) : b.grid(8 - i, n);
                rs.rotations[v] = {id(v, b.grid(i - 1, j)), id(v, right), id(v, b.grid(i + 1, j)), id(v, left)};
            }
        for (int i = 1; i <= 6; ++i)
            rs.signs[id(b.grid(i, n), b.grid(8 - i, 1))] = -1;
        validate_rotation(rs);
        return rs;
    }
}
