#include "extlab/battery.hpp"
#include "extlab/generators.hpp"
#include "extlab/io.hpp"
#include "extlab/surfaces.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>

using namespace extlab;

namespace
{
    // Exit codes are part of the interface.
    constexpr int affirm = 0;
    constexpr int refute = 1;
    constexpr int usage = 2;
    constexpr int budget = 3;

    constexpr std::uint64_t default_budget = 10'000'000;

    struct EnumerationFlags
    {
        int jobs = 1;
        bool force = false;
        std::uint64_t budget = default_budget;
    };

    void add_enumeration_flags(CLI::App *cmd, EnumerationFlags &f)
    {
        cmd->add_option("-j,--jobs", f.jobs, "worker threads (default EXTLAB_JOBS or 1)")->check(CLI::PositiveNumber);
        cmd->add_flag("--force", f.force, "ignore the enumeration budget");
        cmd->add_option("--budget", f.budget, "largest number of matchings to enumerate without --force")->capture_default_str();
    }

    /// Refuses runs that would visit more than the budget of k-matchings.
    bool within_budget(const Graph &g, int k, const EnumerationFlags &f)
    {
        if (f.force)
            return true;
        auto count = count_k_matchings(g, k, f.budget);
        if (count <= f.budget)
            return true;
        std::cerr << "extlab: more than " << f.budget << " " << k << "-matchings to check; rerun with --force or a larger --budget\n";
        return false;
    }

    void emit(const Json &j, const std::string &path = {})
    {
        std::string text = to_text(j);
        if (path.empty())
            std::cout << text;
        else
            write_file(path, text);
    }

    std::string join_spec(const std::vector<std::string> &parts)
    {
        std::string out;
        for (auto &p : parts)
            out += (out.empty() ? "" : ":") + p;
        return out;
    }

    /// A rotation file ({"graph", "rotations", "signs"}) or bowtie:6:n for the built-in quadrangulation.
    RotationSystem load_rotation(const std::string &source)
    {
        if (source.rfind("bowtie:6:", 0) == 0)
            return bowtie_rotation_N2(std::stoi(source.substr(9)));
        Json j = Json::parse(read_file(source));
        Graph g = graph_from_json(j.at("graph"));
        return rotation_from_json(g, j);
    }
}

int main(int argc, char **argv)
{
    int default_jobs = 1;
    if (const char *env = std::getenv("EXTLAB_JOBS")) {
        try {
            std::size_t used = 0;
            default_jobs = std::stoi(env, &used);
            if (used != std::string(env).size() || default_jobs < 1)
                throw std::invalid_argument(env);
        }
        catch (const std::exception &) {
            std::cerr << "extlab: EXTLAB_JOBS must be a positive integer\n";
            return usage;
        }
    }

    CLI::App app{"extlab: matching extendability laboratory"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);

    std::vector<std::string> gen_spec;
    std::string gen_format = "json", gen_out;
    auto gen = app.add_subcommand("gen", "build a graph family and write it as JSON or DOT");
    gen->add_option("family", gen_spec, "family and parameters, e.g. bowtie 6 5 or product cycle:6 cycle:5")->required();
    gen->add_option("--format", gen_format)->check(CLI::IsMember({"json", "dot"}));
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    std::string source, witness_path;
    int k = 0;
    EnumerationFlags ext_flags{default_jobs};
    auto ext = app.add_subcommand("extendable", "decide k-extendability by exhaustive search");
    ext->add_option("graph", source, "graph JSON file or family spec")->required();
    ext->add_option("k", k)->required()->check(CLI::NonNegativeNumber);
    auto witness_opt = ext->add_option("--witness", witness_path, "write the witness and its Tutte set here (default witness.json)")->expected(0, 1);
    add_enumeration_flags(ext, ext_flags);

    EnumerationFlags num_flags{default_jobs};
    auto num = app.add_subcommand("ext-number", "largest k for which the graph is k-extendable");
    num->add_option("graph", source)->required();
    add_enumeration_flags(num, num_flags);

    int nk_n = 0;
    EnumerationFlags nk_flags{default_jobs};
    auto nk = app.add_subcommand("nk", "is the graph an (n,k)-graph");
    nk->add_option("graph", source)->required();
    nk->add_option("n", nk_n)->required()->check(CLI::NonNegativeNumber);
    nk->add_option("k", k)->required()->check(CLI::NonNegativeNumber);
    add_enumeration_flags(nk, nk_flags);

    int order = 0;
    auto cls = app.add_subcommand("classify", "connected k-extendable graphs of a given order");
    cls->add_option("order", order)->required()->check(CLI::Range(1, 8));
    cls->add_option("k", k)->required()->check(CLI::NonNegativeNumber);

    int chi_from = 2, chi_to = -12;
    std::vector<int> mu_ns{1, 2};
    auto mu_cmd = app.add_subcommand("mu", "TSV table of mu, mu' and mu(n,.) over a range of Euler characteristics");
    mu_cmd->add_option("--from", chi_from, "largest chi")->capture_default_str()->check(CLI::Range(-100000, 2));
    mu_cmd->add_option("--to", chi_to, "smallest chi")->capture_default_str()->check(CLI::Range(-100000, 2));
    mu_cmd->add_option("--n", mu_ns, "deleted-vertex counts for mu(n,.)")->check(CLI::PositiveNumber);

    int witness_n = 5;
    std::string witness_format = "json";
    auto wit = app.add_subcommand("witness-c4cn", "the non-extendable 3-matching of C4 x Cn with its Tutte set");
    wit->add_option("n", witness_n)->required();
    wit->add_option("--format", witness_format)->check(CLI::IsMember({"json", "dot"}));

    int bow_n = 5;
    std::string bow_edges;
    auto bow = app.add_subcommand("bowtie-extend", "perfect matching of bowtie(6,n) containing a 3-matching");
    bow->add_option("n", bow_n)->required();
    bow->add_option("edges", bow_edges, "three edges, e.g. h1-h2,q3-q'3,h'4-h'5")->required();

    std::string surface_text;
    auto emb = app.add_subcommand("embed-verify", "check that a rotation system embeds cellularly in a surface");
    emb->add_option("rotation", source, "rotation JSON file or bowtie:6:n")->required();
    emb->add_option("surface", surface_text, "S0, S1, N2, torus, klein, ...")->required();

    auto con = app.add_subcommand("contributions", "Euler contributions and the control point");
    con->add_option("rotation", source, "rotation JSON file or bowtie:6:n")->required();

    std::string suite = "all", manifest_path = "manifest.json";
    BatteryOptions battery{default_jobs};
    auto ver = app.add_subcommand("verify-paper", "run the desk-scale verification battery");
    ver->add_option("--suite", suite)->check(CLI::IsMember({"theorems", "lemmas", "formulas", "embeddings", "all"}))->capture_default_str();
    ver->add_option("--manifest", manifest_path, "where to write the run manifest")->capture_default_str();
    ver->add_option("-j,--jobs", battery.jobs, "worker threads (default EXTLAB_JOBS or 1)")->check(CLI::PositiveNumber);

    int cm = 0, cn = 0;
    EnumerationFlags conj_flags{default_jobs};
    auto conj = app.add_subcommand("conjecture", "brute-force 3-extendability of bowtie(m,n), reported as evidence");
    conj->add_option("m", cm)->required();
    conj->add_option("n", cn)->required();
    add_enumeration_flags(conj, conj_flags);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? affirm : usage;
    }

    try {
        if (gen->parsed()) {
            Graph g = family_graph(join_spec(gen_spec));
            if (gen_format == "dot") {
                if (gen_out.empty())
                    std::cout << to_dot(g);
                else
                    write_file(gen_out, to_dot(g));
            }
            else
                emit(graph_to_json(g), gen_out);
            return affirm;
        }
        if (ext->parsed()) {
            Graph g = load_graph(source);
            if (! within_budget(g, k, ext_flags))
                return budget;
            auto r = is_k_extendable(g, k, {ext_flags.jobs, std::nullopt});
            emit(report_to_json(r));
            if (witness_opt->count() > 0 && r.witness) {
                Json w;
                w["graph"] = graph_to_json(g);
                w["k"] = k;
                w["matching"] = matching_to_json(*r.witness);
                w["certificate"] = r.witness_certificate ? tutte_to_json(*r.witness_certificate) : Json(nullptr);
                emit(w, witness_path.empty() ? "witness.json" : witness_path);
            }
            return r.verdict ? affirm : refute;
        }
        if (num->parsed()) {
            Graph g = load_graph(source);
            // step k up by hand so each level passes the budget guard before it runs
            int e = has_perfect_matching(g) ? 0 : -1;
            for (int level = 1; e == level - 1 && 2 * level + 2 <= g.order(); ++level) {
                if (! within_budget(g, level, num_flags))
                    return budget;
                if (is_k_extendable(g, level, {num_flags.jobs, std::nullopt}).verdict)
                    e = level;
            }
            emit(Json{{"extendability_number", e}});
            return affirm;
        }
        if (nk->parsed()) {
            Graph g = load_graph(source);
            auto r = is_nk_graph(g, nk_n, k, {nk_flags.jobs, std::nullopt});
            emit(Json{{"n", nk_n}, {"k", k}, {"holds", r.holds}, {"failing_set", r.failing_set ? Json(*r.failing_set) : Json(nullptr)}});
            return r.holds ? affirm : refute;
        }
        if (cls->parsed()) {
            Json out = Json::array();
            for (auto &g : classify_extendable_graphs(order, k))
                out.push_back(graph_to_json(g));
            emit(Json{{"order", order}, {"k", k}, {"count", out.size()}, {"graphs", out}});
            return affirm;
        }
        if (mu_cmd->parsed()) {
            if (chi_to > chi_from)
                throw std::invalid_argument("--to must not exceed --from");
            std::cout << "chi\tmu\tmu_prime";
            for (int n : mu_ns)
                std::cout << "\tmu_nk(" << n << ")";
            std::cout << "\n";
            for (int chi = chi_from; chi >= chi_to; --chi) {
                auto mp = mu_prime_for_chi(chi);
                if (mp.warning)
                    std::cerr << "warning: chi = " << chi << ": " << *mp.warning << "\n";
                std::cout << chi << "\t" << mu_for_chi(chi) << "\t" << mp.value;
                for (int n : mu_ns)
                    std::cout << "\t" << mu_nk_for_chi(n, chi);
                std::cout << "\n";
            }
            return affirm;
        }
        if (wit->parsed()) {
            auto w = c4cn_witness(witness_n);
            if (witness_format == "dot")
                std::cout << to_dot(w.graph, &w.m);
            else
                emit(c4cn_to_json(w));
            return affirm;
        }
        if (bow->parsed()) {
            Graph g = bowtie(6, bow_n);
            auto plan = bowtie_extend(bow_n, parse_edge_list(g, bow_edges));
            emit(plan_to_json(g, plan));
            return affirm;
        }
        if (emb->parsed()) {
            auto rs = load_rotation(source);
            Surface s = parse_surface(surface_text);
            auto f = trace_faces(rs);
            bool ok = verify_embedding(rs, s);
            emit(Json{{"surface", to_string(s)},
                      {"embeds", ok},
                      {"euler_characteristic", euler_characteristic(rs)},
                      {"orientable", is_orientable(rs)},
                      {"face_count", f.faces.size()},
                      {"face_sizes", f.face_sizes}});
            return ok ? affirm : refute;
        }
        if (con->parsed()) {
            auto rs = load_rotation(source);
            emit(contributions_to_json(euler_contributions(rs)));
            return affirm;
        }
        if (ver->parsed()) {
            auto start = std::chrono::steady_clock::now();
            RunManifest m;
            m.command = "verify-paper";
            m.parameters = {{"suite", suite}};
            m.checks = run_suite(suite, battery);
            m.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            bool all = true;
            for (auto &c : m.checks) {
                std::cout << (c.passed ? "PASS " : "FAIL ") << c.suite << ": " << c.name << " (" << c.detail << ")\n";
                if (! c.passed)
                    std::cout << "  certificate: " << c.certificate.dump() << "\n";
                all = all && c.passed;
            }
            write_file(manifest_path, to_text(manifest_to_json(m)));
            return all ? affirm : refute;
        }
        if (conj->parsed()) {
            if (cm < 6 || cm % 2 != 0 || cn < 5 || cn % 2 == 0) {
                std::cerr << "extlab: conjecture needs m even >= 6 and n odd >= 5\n";
                return usage;
            }
            Graph g = bowtie(cm, cn);
            if (! within_budget(g, 3, conj_flags))
                return budget;
            auto r = is_k_extendable(g, 3, {conj_flags.jobs, std::nullopt});
            Json out = report_to_json(r);
            out["label"] = "EVIDENCE";
            out["note"] = "exhaustive check of one instance; a true verdict supports the conjecture for this (m, n) only";
            out["m"] = cm;
            out["n"] = cn;
            emit(out);
            if (! r.completed)
                return budget;
            return r.verdict ? affirm : refute;
        }
    }
    catch (const TheoremRefutationAlarm &e) {
        std::cerr << "extlab: " << e.what() << "\n";
        return refute;
    }
    catch (const std::exception &e) {
        std::cerr << "extlab: " << e.what() << "\n";
        return usage;
    }
    return usage;
}
