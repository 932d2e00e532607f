#pragma once

// Rotation-system fixtures shared by the embedding and acceptance tests.

#include "extlab/embedding.hpp"
#include "extlab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>
#include <vector>

namespace fixture
{
    using namespace extlab;

    /// Rotations read off a straight-line drawing: neighbours sorted by angle.
    inline RotationSystem from_drawing(const Graph &g, const std::vector<std::pair<double, double>> &at)
    {
        std::vector<std::vector<int>> rot(static_cast<std::size_t>(g.order()));
        for (Vertex v = 0; v < g.order(); ++v) {
            std::vector<std::pair<double, int>> around;
            for (Vertex w : g.adjacent(v))
                around.emplace_back(std::atan2(at[w].second - at[v].second, at[w].first - at[v].first), *g.edge_id(v, w));
            std::sort(around.begin(), around.end());
            for (auto &[angle, e] : around)
                rot[v].push_back(e);
        }
        return make_rotation(g, rot);
    }

    inline RotationSystem planar_triangle()
    {
        return from_drawing(cycle(3), {{0, 0}, {1, 0}, {0, 1}});
    }

    inline RotationSystem planar_k4()
    {
        return from_drawing(complete(4), {{0, 0}, {0, 10}, {-9, -5}, {9, -5}});
    }

    inline bool face_revisits_vertex(const FaceStructure &f)
    {
        for (auto &face : f.faces) {
            std::set<Vertex> seen;
            for (auto &d : face)
                if (! seen.insert(d.from).second)
                    return true;
        }
        return false;
    }

    /// First all-plus rotation system of K_5 (odometer over the cyclic orders at each
    /// vertex) with Euler characteristic 0 and a face meeting some vertex twice.
    inline RotationSystem k5_torus()
    {
        Graph g = complete(5);
        std::vector<std::vector<std::vector<int>>> choices(5);
        for (Vertex v = 0; v < 5; ++v) {
            std::vector<int> es;
            for (Vertex w : g.adjacent(v))
                es.push_back(*g.edge_id(v, w));
            std::sort(es.begin() + 1, es.end());
            do
                choices[v].push_back(es);
            while (std::next_permutation(es.begin() + 1, es.end()));
        }
        std::vector<std::size_t> pick(5, 0);
        while (true) {
            std::vector<std::vector<int>> rot;
            for (Vertex v = 0; v < 5; ++v)
                rot.push_back(choices[v][pick[v]]);
            auto rs = make_rotation(g, rot);
            if (euler_characteristic(rs) == 0 && face_revisits_vertex(trace_faces(rs)))
                return rs;
            std::size_t i = 0;
            while (i < 5 && ++pick[i] == choices[i].size())
                pick[i++] = 0;
            if (i == 5)
                throw std::logic_error("no torus rotation found for K_5");
        }
    }
}
