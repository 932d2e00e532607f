#include "extlab/io.hpp"

#include "extlab/generators.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace extlab
{
    namespace
    {
        Json edges_json(std::span<const Edge> edges)
        {
            Json out = Json::array();
            for (auto &e : edges)
                out.push_back({e.u, e.v});
            return out;
        }

        std::vector<Edge> edges_from(const Json &j)
        {
            std::vector<Edge> out;
            for (auto &e : j.at("edges")) {
                if (! e.is_array() || e.size() != 2)
                    throw std::invalid_argument("edges must be [u, v] pairs");
                out.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
            }
            return out;
        }

        Json label_json(const Label &label)
        {
            Json out;
            if (auto g = std::get_if<GridVertex>(&label)) {
                out["i"] = g->i;
                out["j"] = g->j;
                if (g->m)
                    out["m"] = *g->m;
                if (g->n)
                    out["n"] = *g->n;
            }
            else if (auto b = std::get_if<BowtieVertex>(&label))
                out["bowtie"] = to_string(*b);
            else
                out["text"] = std::get<PlainLabel>(label).text;
            return out;
        }

        Label label_from(const Json &j)
        {
            if (j.contains("bowtie"))
                return parse_bowtie_vertex(j.at("bowtie").get<std::string>());
            if (j.contains("text"))
                return PlainLabel{j.at("text").get<std::string>()};
            GridVertex g{j.at("i").get<int>(), j.at("j").get<int>(), std::nullopt, std::nullopt};
            if (j.contains("m"))
                g.m = j.at("m").get<int>();
            if (j.contains("n"))
                g.n = j.at("n").get<int>();
            return g;
        }

        int to_int(const std::string &s, const std::string &what)
        {
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(s, &used);
            }
            catch (const std::exception &) {
                used = 0;
            }
            if (used == 0 || used != s.size())
                throw std::invalid_argument("expected an integer for " + what + ", got '" + s + "'");
            return value;
        }

        std::vector<std::string> split(const std::string &s, char sep)
        {
            std::vector<std::string> out;
            std::stringstream in(s);
            std::string part;
            while (std::getline(in, part, sep))
                out.push_back(part);
            return out;
        }

        int arity(const std::string &family)
        {
            if (family == "path" || family == "cycle" || family == "complete")
                return 1;
            if (family == "complete_bipartite" || family == "bowtie")
                return 2;
            if (family == "petersen")
                return 0;
            throw std::invalid_argument("unknown graph family '" + family + "'");
        }

        Graph build(const std::string &family, const std::vector<int> &p)
        {
            if (family == "path")
                return path(p[0]);
            if (family == "cycle")
                return cycle(p[0]);
            if (family == "complete")
                return complete(p[0]);
            if (family == "complete_bipartite")
                return complete_bipartite(p[0], p[1]);
            if (family == "bowtie")
                return bowtie(p[0], p[1]);
            return petersen();
        }

        /// One family starting at tokens[pos]; "cycle4" and "cycle", "4" both work.
        Graph parse_family(const std::vector<std::string> &tokens, std::size_t &pos)
        {
            if (pos >= tokens.size())
                throw std::invalid_argument("family spec ended early");
            std::string token = tokens[pos++];
            std::size_t cut = token.size();
            while (cut > 0 && std::isdigit(static_cast<unsigned char>(token[cut - 1])))
                --cut;
            std::string name = token.substr(0, cut);
            std::vector<int> params;
            if (cut < token.size())
                params.push_back(to_int(token.substr(cut), name));
            int need = arity(name);
            while (static_cast<int>(params.size()) < need) {
                if (pos >= tokens.size())
                    throw std::invalid_argument("family '" + name + "' needs " + std::to_string(need) + " parameter(s)");
                params.push_back(to_int(tokens[pos++], name));
            }
            if (static_cast<int>(params.size()) != need)
                throw std::invalid_argument("family '" + name + "' takes " + std::to_string(need) + " parameter(s)");
            return build(name, params);
        }
    }

    Json graph_to_json(const Graph &g)
    {
        Json out;
        out["order"] = g.order();
        out["edges"] = edges_json(g.edges());
        Json labels = Json::object();
        for (Vertex v = 0; v < g.order() && g.has_labels(); ++v)
            if (auto &l = g.label(v))
                labels[std::to_string(v)] = label_json(*l);
        out["labels"] = labels;
        return out;
    }

    Graph graph_from_json(const Json &j)
    {
        try {
            int order = j.at("order").get<int>();
            auto edges = edges_from(j);
            std::vector<std::optional<Label>> labels;
            if (j.contains("labels") && ! j.at("labels").empty()) {
                labels.resize(static_cast<std::size_t>(order));
                for (auto &[key, value] : j.at("labels").items()) {
                    int v = to_int(key, "label key");
                    if (v < 0 || v >= order)
                        throw std::invalid_argument("label for a vertex outside the graph");
                    labels[v] = label_from(value);
                }
            }
            return Graph(order, std::move(edges), std::move(labels));
        }
        catch (const nlohmann::json::exception &e) {
            throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
        }
    }

    std::string to_dot(const Graph &g, const Matching *highlight)
    {
        std::ostringstream out;
        out << "graph G {\n";
        for (Vertex v = 0; v < g.order(); ++v) {
            out << "  " << v;
            if (g.has_labels() && g.label(v))
                out << " [label=\"" << to_string(*g.label(v)) << "\"]";
            out << ";\n";
        }
        for (auto &e : g.edges()) {
            out << "  " << e.u << " -- " << e.v;
            if (highlight && highlight->contains(e))
                out << " [penwidth=3, color=red]";
            out << ";\n";
        }
        out << "}\n";
        return out.str();
    }

    Json matching_to_json(const Matching &m)
    {
        Json out;
        out["kind"] = to_string(m.kind);
        out["edges"] = edges_json(m.edges);
        return out;
    }

    Matching matching_from_json(const Graph &g, const Json &j)
    {
        try {
            auto edges = edges_from(j);
            require_valid_matching(g, edges);
            return make_matching(g, edges);
        }
        catch (const nlohmann::json::exception &e) {
            throw std::invalid_argument(std::string("malformed matching JSON: ") + e.what());
        }
    }

    Json tutte_to_json(const TutteViolator &t)
    {
        Json out;
        out["set"] = t.witness_set;
        out["odd_components"] = t.odd_component_count;
        return out;
    }

    Json report_to_json(const ExtendabilityReport &r)
    {
        Json out;
        out["k"] = r.k;
        out["verdict"] = r.verdict;
        out["completed"] = r.completed;
        out["reason"] = r.reason;
        out["witness"] = r.witness ? matching_to_json(*r.witness) : Json(nullptr);
        out["certificate"] = r.witness_certificate ? tutte_to_json(*r.witness_certificate) : Json(nullptr);
        out["count"] = r.matchings_checked;
        out["elapsed"] = r.elapsed.count();
        return out;
    }

    Json plan_to_json(const Graph &g, const BowtieMatchingPlan &p)
    {
        auto named = [&](std::span<const Edge> edges) {
            Json out = Json::array();
            for (auto &e : edges)
                out.push_back({to_string(*g.label(e.u)), to_string(*g.label(e.v))});
            return out;
        };
        Json out;
        out["case_tag"] = p.case_tag;
        out["j_matching"] = named(p.j_matching);
        out["jp_matching"] = named(p.jp_matching);
        out["rung_edges"] = named(p.rung_edges);
        out["perfect_matching"] = matching_to_json(p.perfect_matching);
        return out;
    }

    Json separator_to_json(const SeparatorResult &r)
    {
        Json out;
        out["trace"] = r.trace;
        if (r.choice) {
            out["choice"] = {{"axis", to_string(r.choice->axis)}, {"index", r.choice->index}, {"width", r.choice->width}};
        }
        else
            out["choice"] = nullptr;
        out["explicit_matching"] = r.explicit_matching ? matching_to_json(*r.explicit_matching) : Json(nullptr);
        return out;
    }

    Json c4cn_to_json(const C4CnWitness &w)
    {
        Json out;
        out["n"] = w.graph.order() / 4;
        out["matching"] = matching_to_json(w.m);
        out["u"] = w.u;
        out["u_size"] = w.u.size();
        out["isolated"] = w.isolated;
        return out;
    }

    Json rotation_to_json(const RotationSystem &rs)
    {
        Json out;
        Json rot = Json::object(), signs = Json::object();
        for (Vertex v = 0; v < rs.graph.order(); ++v)
            rot[std::to_string(v)] = rs.rotations[v];
        for (std::size_t e = 0; e < rs.signs.size(); ++e)
            signs[std::to_string(e)] = rs.signs[e];
        out["rotations"] = rot;
        out["signs"] = signs;
        return out;
    }

    RotationSystem rotation_from_json(const Graph &g, const Json &j)
    {
        try {
            RotationSystem rs{g, std::vector<std::vector<int>>(static_cast<std::size_t>(g.order())), std::vector<int>(g.size(), 1)};
            for (auto &[key, value] : j.at("rotations").items()) {
                int v = to_int(key, "rotation key");
                if (v < 0 || v >= g.order())
                    throw std::invalid_argument("rotation for a vertex outside the graph");
                rs.rotations[v] = value.get<std::vector<int>>();
            }
            if (j.contains("signs"))
                for (auto &[key, value] : j.at("signs").items()) {
                    int e = to_int(key, "sign key");
                    if (e < 0 || e >= static_cast<int>(g.size()))
                        throw std::invalid_argument("sign for an edge outside the graph");
                    rs.signs[e] = value.get<int>();
                }
            validate_rotation(rs);
            return rs;
        }
        catch (const nlohmann::json::exception &e) {
            throw std::invalid_argument(std::string("malformed rotation JSON: ") + e.what());
        }
    }

    Json faces_to_json(const FaceStructure &f)
    {
        Json faces = Json::array();
        for (auto &face : f.faces) {
            Json walk = Json::array();
            for (auto &d : face)
                walk.push_back({{"edge", d.edge}, {"from", d.from}});
            faces.push_back(walk);
        }
        Json out;
        out["face_count"] = f.faces.size();
        out["face_sizes"] = f.face_sizes;
        out["faces"] = faces;
        return out;
    }

    std::string to_string(const Rational &q)
    {
        if (q.denominator() == 1)
            return std::to_string(q.numerator());
        return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
    }

    Json contributions_to_json(const ContributionReport &c)
    {
        Json phi = Json::array();
        for (auto &p : c.phi)
            phi.push_back(to_string(p));
        Json out;
        out["phi"] = phi;
        out["triangles_at"] = c.triangles_at;
        out["total"] = to_string(c.total);
        out["control_point"] = c.control_point;
        out["control_value"] = to_string(c.phi.at(static_cast<std::size_t>(c.control_point)));
        return out;
    }

    Graph family_graph(const std::string &spec)
    {
        auto tokens = split(spec, ':');
        if (tokens.empty())
            throw std::invalid_argument("empty family spec");
        std::size_t pos = 0;
        Graph g;
        if (tokens[0] == "product") {
            ++pos;
            Graph a = parse_family(tokens, pos);
            Graph b = parse_family(tokens, pos);
            g = cartesian_product(a, b);
        }
        else
            g = parse_family(tokens, pos);
        if (pos != tokens.size())
            throw std::invalid_argument("trailing parameters in family spec '" + spec + "'");
        return g;
    }

    Graph load_graph(const std::string &source)
    {
        std::error_code ec;
        if (std::filesystem::is_regular_file(source, ec)) {
            try {
                return graph_from_json(Json::parse(read_file(source)));
            }
            catch (const nlohmann::json::exception &e) {
                throw std::invalid_argument("cannot parse graph file '" + source + "': " + e.what());
            }
        }
        return family_graph(source);
    }

    BowtieVertex parse_bowtie_vertex(const std::string &text)
    {
        if (text.size() < 2 || (text[0] != 'h' && text[0] != 'q'))
            throw std::invalid_argument("not a bow-tie vertex name: '" + text + "'");
        bool prime = text[1] == '\'';
        std::string digits = text.substr(prime ? 2 : 1);
        BowtieVertex b;
        b.index = to_int(digits, "bow-tie index");
        if (text[0] == 'h')
            b.kind = prime ? BowtieKind::h_prime : BowtieKind::h;
        else
            b.kind = prime ? BowtieKind::q_prime : BowtieKind::q;
        return b;
    }

    std::vector<Edge> parse_edge_list(const Graph &g, const std::string &text)
    {
        auto vertex = [&](const std::string &token) -> Vertex {
            if (! token.empty() && std::all_of(token.begin(), token.end(), ::isdigit))
                return to_int(token, "vertex id");
            std::optional<Label> want;
            if (token[0] == 'h' || token[0] == 'q')
                want = parse_bowtie_vertex(token);
            else if (auto dot = token.find('.'); dot != std::string::npos)
                want = GridVertex{to_int(token.substr(0, dot), "row"), to_int(token.substr(dot + 1), "column"), std::nullopt, std::nullopt};
            else
                throw std::invalid_argument("cannot read vertex '" + token + "'");
            for (Vertex v = 0; v < g.order() && g.has_labels(); ++v) {
                auto &l = g.label(v);
                if (! l)
                    continue;
                if (auto b = std::get_if<BowtieVertex>(&*l); b && std::holds_alternative<BowtieVertex>(*want)) {
                    auto w = std::get<BowtieVertex>(*want);
                    if (b->kind == w.kind && b->index == w.index)
                        return v;
                }
                if (auto gv = std::get_if<GridVertex>(&*l); gv && std::holds_alternative<GridVertex>(*want)) {
                    auto w = std::get<GridVertex>(*want);
                    if (gv->i == w.i && gv->j == w.j)
                        return v;
                }
            }
            throw std::invalid_argument("no vertex named '" + token + "'");
        };
        std::vector<Edge> out;
        for (auto &item : split(text, ',')) {
            auto dash = item.find('-');
            if (dash == std::string::npos)
                throw std::invalid_argument("edge '" + item + "' is not of the form a-b");
            Vertex a = vertex(item.substr(0, dash)), b = vertex(item.substr(dash + 1));
            if (a < 0 || b < 0 || a >= g.order() || b >= g.order() || a == b || ! g.has_edge(a, b))
                throw std::invalid_argument("'" + item + "' is not an edge of the graph");
            out.emplace_back(a, b);
        }
        return out;
    }

    namespace
    {
        bool flat(const Json &j)
        {
            if (j.is_primitive())
                return true;
            if (j.is_object())
                return j.size() <= 4 && std::all_of(j.begin(), j.end(), [](const Json &x) { return x.is_primitive(); });
            if (! j.is_array())
                return false;
            return std::all_of(j.begin(), j.end(), [](const Json &x) {
                return x.is_primitive() || (x.is_array() && std::all_of(x.begin(), x.end(), [](const Json &y) { return y.is_primitive(); }));
            });
        }

        void write_text(const Json &j, int depth, std::string &out)
        {
            if (flat(j) || j.empty()) {
                out += j.dump();
                return;
            }
            const std::string pad(static_cast<std::size_t>(2 * depth + 2), ' ');
            bool object = j.is_object();
            out += object ? "{\n" : "[\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                out += first ? "" : ",\n";
                first = false;
                out += pad;
                if (object)
                    out += Json(it.key()).dump() + ": ";
                write_text(*it, depth + 1, out);
            }
            out += "\n" + std::string(static_cast<std::size_t>(2 * depth), ' ') + (object ? "}" : "]");
        }
    }

    std::string to_text(const Json &j)
    {
        std::string out;
        write_text(j, 0, out);
        return out + "\n";
    }

    std::string read_file(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw std::invalid_argument("cannot open '" + path + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    void write_file(const std::string &path, std::string_view content)
    {
        std::ofstream out(path, std::ios::binary);
        if (! out)
            throw std::runtime_error("cannot write '" + path + "'");
        out << content;
    }

    std::string fnv1a_hex(std::string_view bytes)
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : bytes) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        return buf;
    }
}
