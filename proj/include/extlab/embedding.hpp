#pragma once

#include "extlab/graph.hpp"
#include "extlab/surfaces.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace extlab
{
    using Rational = boost::rational<std::int64_t>;

    /// Signed rotation system: a cyclic order of incident edge ids at each vertex and a
    /// sign per edge. A -1 edge reverses the local orientation when crossed.
    struct RotationSystem
    {
        Graph graph;
        std::vector<std::vector<int>> rotations;
        std::vector<int> signs;
    };

    /// Throws std::invalid_argument unless every vertex lists each incident edge once
    /// and every sign is +1 or -1.
    void validate_rotation(const RotationSystem &rs);

    /// All signs +1.
    RotationSystem make_rotation(const Graph &g, std::vector<std::vector<int>> rotations);

    struct Dart
    {
        int edge = 0;
        Vertex from = 0;

        bool operator==(const Dart &) const = default;
    };

    struct FaceStructure
    {
        /// Closed boundary walks; consecutive darts meet at a corner.
        std::vector<std::vector<Dart>> faces;
        /// Sorted face lengths.
        std::vector<int> face_sizes;
    };

    FaceStructure trace_faces(const RotationSystem &rs);

    /// |V| - |E| + |F|.
    int euler_characteristic(const RotationSystem &rs);
    bool is_orientable(const RotationSystem &rs);

    /// Throws std::invalid_argument for a disconnected graph.
    bool verify_embedding(const RotationSystem &rs, const Surface &s);

    /// Reverses the rotation at v and flips the signs of its edges; the embedding is unchanged.
    RotationSystem local_switch(const RotationSystem &rs, Vertex v);

    struct ContributionReport
    {
        std::vector<Rational> phi;
        /// Angles at v lying in triangular faces.
        std::vector<int> triangles_at;
        Rational total;
        /// Lowest-id vertex of maximum contribution.
        Vertex control_point = 0;
    };

    /// phi(v) = 1 - d(v)/2 + sum over angles at v of 1/|face|.
    ContributionReport euler_contributions(const RotationSystem &rs);
    std::pair<Vertex, Rational> control_point(const RotationSystem &rs);

    /// The Klein bottle quadrangulation of bowtie(6, n): grid rotations (up, right,
    /// down, left) with the twisted edges signed -1. n odd >= 5.
    RotationSystem bowtie_rotation_N2(int n);
}
