#pragma once

#include "extlab/bowtie.hpp"
#include "extlab/embedding.hpp"
#include "extlab/extendability.hpp"
#include "extlab/separator.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace extlab
{
    /// Keys keep insertion order so serialised bytes are stable.
    using Json = nlohmann::ordered_json;

    /// {"order": N, "edges": [[u,v],...], "labels": {"v": {...}}}
    Json graph_to_json(const Graph &g);
    Graph graph_from_json(const Json &j);
    std::string to_dot(const Graph &g, const Matching *highlight = nullptr);

    /// {"kind": "...", "edges": [[u,v],...]}
    Json matching_to_json(const Matching &m);
    Matching matching_from_json(const Graph &g, const Json &j);
    /// {"set": [...], "odd_components": k}
    Json tutte_to_json(const TutteViolator &t);
    Json report_to_json(const ExtendabilityReport &r);
    Json plan_to_json(const Graph &g, const BowtieMatchingPlan &p);
    Json separator_to_json(const SeparatorResult &r);
    Json c4cn_to_json(const C4CnWitness &w);
    /// {"rotations": {v: [edge ids]}, "signs": {edge id: +-1}}
    Json rotation_to_json(const RotationSystem &rs);
    RotationSystem rotation_from_json(const Graph &g, const Json &j);
    Json faces_to_json(const FaceStructure &f);
    Json contributions_to_json(const ContributionReport &c);
    std::string to_string(const Rational &q);

    /// Family specs: path:5, cycle:6, complete:7, complete_bipartite:3:3, petersen,
    /// bowtie:6:5, product:cycle4:cycle5 (factors as name+number or name:number).
    Graph family_graph(const std::string &spec);
    /// A readable JSON file, otherwise a family spec.
    Graph load_graph(const std::string &source);

    /// "h1", "q'3", ... as used in bow-tie labels.
    BowtieVertex parse_bowtie_vertex(const std::string &text);
    /// "0-1,2-3" with endpoints given as ids, bow-tie names, or grid positions "i.j".
    std::vector<Edge> parse_edge_list(const Graph &g, const std::string &text);

    /// Indented JSON with flat arrays (edge lists, rotations, tables) kept on one line.
    std::string to_text(const Json &j);

    std::string read_file(const std::string &path);
    void write_file(const std::string &path, std::string_view content);

    /// 64-bit FNV-1a, as 16 hex digits.
    std::string fnv1a_hex(std::string_view bytes);
}
