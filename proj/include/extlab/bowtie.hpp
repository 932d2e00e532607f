#pragma once

#include "extlab/alarm.hpp"
#include "extlab/generators.hpp"
#include "extlab/matching.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace extlab
{
    enum class EdgeClass
    {
        faithful,
        unfaithful,
        co_faithful
    };

    std::string to_string(EdgeClass c);

    struct BowtieClassification
    {
        int x = 0; // faithful, inside G[J]
        int y = 0; // unfaithful, rungs q_j q'_j
        int z = 0; // co-faithful, inside G[J']
        std::vector<EdgeClass> tags;
    };

    /// Throws std::invalid_argument if some edge is not an edge of bowtie(6, n)
    /// or the edges do not form a matching.
    BowtieClassification classify_bowtie_edges(int n, const std::vector<Edge> &m0);

    /// Edges plus the proof branch that produced them.
    struct LemmaOutput
    {
        std::vector<Edge> edges;
        std::string branch;
    };

    /// Extends a matching of G[J] to one covering H. Tries a direct construction
    /// (pair even H paths, hang one spoke off each odd path) and falls back to a
    /// bounded search; exhaustion raises TheoremRefutationAlarm.
    LemmaOutput lemma1_cover_h(int n, const std::vector<Edge> &m);

    /// For a 3-matching without co-faithful edges: a matching of G[J] containing the
    /// faithful edges, covering H and missing every unfaithful vertex.
    LemmaOutput lemma2_matching(int n, const std::vector<Edge> &m0);

    /// Perfect matching of G[J] - V(e) - q_k (edges of e excluded).
    LemmaOutput lemma3_pm(int n, const Edge &e, Vertex q_k);

    /// Near-perfect matching of G[J] containing m2 and covering H and V(e0). The
    /// uncovered vertex lies in Q.
    LemmaOutput lemma4_near_pm(int n, const Edge &e0, const std::vector<Edge> &m2);

    struct BowtieMatchingPlan
    {
        std::string case_tag;
        std::vector<Edge> j_matching;
        std::vector<Edge> jp_matching;
        std::vector<Edge> rung_edges;
        Matching perfect_matching;
    };

    /// Perfect matching of C_6 bowtie P_n containing the 3-matching m0, built along
    /// the case split of the 3-extendability proof. The result is re-verified.
    BowtieMatchingPlan bowtie_extend(int n, const std::vector<Edge> &m0);
}
