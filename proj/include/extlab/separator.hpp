#pragma once

#include "extlab/alarm.hpp"
#include "extlab/matching.hpp"

#include <optional>
#include <string>

namespace extlab
{
    enum class StripAxis
    {
        row,
        column
    };

    std::string to_string(StripAxis a);

    /// Consecutive rows i*, ..., i*+width-1 or columns j*, ... of a grid-labelled product.
    struct SeparatorChoice
    {
        StripAxis axis = StripAxis::row;
        int index = 1;
        int width = 2;

        bool operator==(const SeparatorChoice &) const = default;
    };

    /// Either a strip to split along, or (for the P_4 x C_n base cases) a complete
    /// perfect matching built from the explicit constructions.
    struct SeparatorResult
    {
        std::optional<SeparatorChoice> choice;
        std::optional<Matching> explicit_matching;
        /// Branch of the case analysis, e.g. "cc/h=2/j=2/row".
        std::string trace;
    };

    /// Vertices of the strip, indices reduced along cyclic axes.
    VertexSet strip_vertices(const Graph &g, const SeparatorChoice &c);

    /// At least one edge of m inside the strip and none with exactly one end in it.
    bool is_separable(const Graph &g, const Matching &m, const SeparatorChoice &c);

    /// g must be P_m x C_n with |m| = 2 (m even, n odd >= 5) or C_m x C_n with |m| = 3
    /// (m even >= 6, n odd >= 5), built by cartesian_product. Throws std::invalid_argument
    /// otherwise and TheoremRefutationAlarm if no branch applies.
    SeparatorResult find_separator(const Graph &g, const Matching &m);

    /// Union of perfect extensions inside the strip and inside its complement.
    /// Throws std::invalid_argument if the strip does not separate m, and
    /// TheoremRefutationAlarm if either side fails to extend.
    Matching extend_via_separator(const Graph &g, const Matching &m, const SeparatorChoice &c);

    /// find_separator followed by extend_via_separator (or the explicit matching),
    /// re-verified against g.
    Matching separator_extend(const Graph &g, const Matching &m, std::string *trace = nullptr);

    struct C4CnWitness
    {
        Graph graph;
        Matching m;
        VertexSet u;
        /// Vertices of G - V(M) - U; all of them are isolated.
        int isolated = 0;
    };

    /// The non-extendable 3-matching of C_4 x C_n and its Tutte set U, checked on
    /// construction. n odd >= 5.
    C4CnWitness c4cn_witness(int n);
}
