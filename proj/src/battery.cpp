#include "extlab/battery.hpp"

#include "extlab/generators.hpp"
#include "extlab/surfaces.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <stdexcept>

namespace extlab
{
    namespace
    {
        using Clock = std::chrono::steady_clock;

        struct Outcome
        {
            bool passed = false;
            std::string detail;
            Json certificate;
        };

        using Check = std::function<Outcome(const BatteryOptions &)>;

        struct NamedCheck
        {
            std::string name;
            Check run;
        };

        Outcome expect_extendable(const Graph &g, int k, bool expected, const BatteryOptions &o)
        {
            auto r = is_k_extendable(g, k, {o.jobs, std::nullopt});
            Json cert = report_to_json(r);
            cert.erase("elapsed");
            bool ok = r.completed && r.verdict == expected && verify_report(g, r);
            return {ok, r.reason + ", " + std::to_string(r.matchings_checked) + " matchings", cert};
        }

        Graph product(const Graph &a, const Graph &b) { return cartesian_product(a, b); }

        /// Runs extend on every k-matching and checks the result is a perfect matching containing it.
        Outcome every_matching_extends(const Graph &g, int k, const std::function<Matching(std::span<const Edge>, std::map<std::string, int> &)> &extend)
        {
            std::uint64_t total = 0, failures = 0;
            std::map<std::string, int> tags;
            std::string first_failure;
            for_each_k_matching(g, k, [&](std::span<const Edge> m) {
                ++total;
                try {
                    auto pm = extend(m, tags);
                    if (! verify_matching(g, pm, MatchingKind::perfect) || ! pm.contains_all(m))
                        throw std::runtime_error("result is not a perfect extension");
                }
                catch (const std::exception &e) {
                    if (failures++ == 0)
                        first_failure = e.what();
                }
                return true;
            });
            Json cert;
            cert["matchings"] = total;
            cert["failures"] = failures;
            cert["branches"] = tags;
            std::string detail = std::to_string(total) + " matchings, " + std::to_string(failures) + " failures";
            if (failures)
                detail += " (first: " + first_failure + ")";
            return {failures == 0 && total > 0, detail, cert};
        }

        Outcome c4cn_check(int n)
        {
            auto w = c4cn_witness(n);
            VertexSet gone = w.m.vertices();
            auto rest = induced_subgraph(w.graph, complement_of(w.graph, gone));
            // U in the ids of the remaining graph
            VertexSet u_local;
            for (Vertex v = 0; v < rest.graph.order(); ++v)
                if (std::binary_search(w.u.begin(), w.u.end(), rest.to_parent[v]))
                    u_local.push_back(v);
            TutteViolator t{u_local, odd_components_after_removal(rest.graph, u_local)};
            bool ok = static_cast<int>(w.u.size()) == 2 * n - 4 && w.isolated == 2 * n - 2 &&
                      verify_tutte_violator(rest.graph, t) && ! has_perfect_matching(rest.graph) && tutte_violator(rest.graph).has_value();
            std::string detail = "|U| = " + std::to_string(w.u.size()) + ", isolated = " + std::to_string(w.isolated) +
                                 ", odd components = " + std::to_string(t.odd_component_count);
            return {ok, detail, c4cn_to_json(w)};
        }

        std::vector<NamedCheck> theorem_checks()
        {
            std::vector<NamedCheck> out;
            for (int n : {5, 7})
                out.push_back({"bowtie(6," + std::to_string(n) + ") is 3-extendable",
                               [n](const BatteryOptions &o) { return expect_extendable(bowtie(6, n), 3, true, o); }});
            out.push_back({"bowtie_extend on every 3-matching of bowtie(6,5)", [](const BatteryOptions &) {
                               auto g = bowtie(6, 5);
                               return every_matching_extends(g, 3, [](std::span<const Edge> m, std::map<std::string, int> &tags) {
                                   auto plan = bowtie_extend(5, {m.begin(), m.end()});
                                   ++tags[plan.case_tag.substr(0, plan.case_tag.find('/'))];
                                   return plan.perfect_matching;
                               });
                           }});
            for (int n : {5, 7})
                out.push_back({"C6 x C" + std::to_string(n) + " is 3-extendable",
                               [n](const BatteryOptions &o) { return expect_extendable(product(cycle(6), cycle(n)), 3, true, o); }});
            out.push_back({"separator pipeline on every 3-matching of C6 x C5", [](const BatteryOptions &) {
                               auto g = product(cycle(6), cycle(5));
                               return every_matching_extends(g, 3, [&g](std::span<const Edge> m, std::map<std::string, int> &tags) {
                                   std::string trace;
                                   auto pm = separator_extend(g, make_matching(g, {m.begin(), m.end()}), &trace);
                                   ++tags[trace];
                                   return pm;
                               });
                           }});
            struct Case
            {
                int m, n;
                bool expected;
            };
            for (auto c : {Case{4, 5, true}, Case{4, 7, true}, Case{6, 5, true}, Case{4, 6, true}, Case{5, 4, true}, Case{5, 5, false}})
                out.push_back({"P" + std::to_string(c.m) + " x C" + std::to_string(c.n) + (c.expected ? " is" : " is not") + " 2-extendable",
                               [c](const BatteryOptions &o) { return expect_extendable(product(path(c.m), cycle(c.n)), 2, c.expected, o); }});
            for (auto [m, n] : {std::pair{4, 5}, std::pair{6, 5}, std::pair{4, 7}})
                out.push_back({"separator pipeline on every 2-matching of P" + std::to_string(m) + " x C" + std::to_string(n),
                               [m, n](const BatteryOptions &) {
                                   auto g = product(path(m), cycle(n));
                                   return every_matching_extends(g, 2, [&g](std::span<const Edge> mm, std::map<std::string, int> &tags) {
                                       std::string trace;
                                       auto pm = separator_extend(g, make_matching(g, {mm.begin(), mm.end()}), &trace);
                                       ++tags[trace];
                                       return pm;
                                   });
                               }});
            out.push_back({"P4 x C5 base matchings", [](const BatteryOptions &) {
                               auto g = product(path(4), cycle(5));
                               GridIndex grid(g);
                               auto u = [&](int i, int j) { return grid.at(i, j); };
                               auto first = find_separator(g, make_matching(g, {{u(1, 1), u(1, 2)}, {u(2, 2), u(2, 3)}}));
                               std::vector<Edge> near{{u(1, 1), u(1, 2)}, {u(1, 3), u(1, 4)}, {u(2, 2), u(2, 3)}, {u(3, 2), u(3, 3)},
                                                      {u(4, 1), u(4, 2)}, {u(4, 3), u(4, 4)}, {u(2, 1), u(3, 1)}, {u(2, 4), u(3, 4)}};
                               bool ok2 = first.explicit_matching && first.explicit_matching->contains_all(near);
                               auto second = find_separator(g, make_matching(g, {{u(1, 1), u(1, 2)}, {u(4, 2), u(4, 3)}}));
                               std::vector<Edge> far{{u(1, 1), u(1, 2)}, {u(2, 1), u(2, 2)}, {u(1, 3), u(2, 3)},
                                                      {u(3, 1), u(4, 1)}, {u(3, 2), u(3, 3)}, {u(4, 2), u(4, 3)}};
                               std::sort(far.begin(), far.end());
                               std::vector<Edge> restricted;
                               if (second.explicit_matching)
                                   for (auto &e : second.explicit_matching->edges)
                                       if (grid.col_of(e.u) <= 3 && grid.col_of(e.v) <= 3)
                                           restricted.push_back(e);
                               bool ok3 = restricted == far;
                               Json cert;
                               cert["first"] = separator_to_json(first);
                               cert["second"] = separator_to_json(second);
                               return Outcome{ok2 && ok3, std::string("first ") + (ok2 ? "reproduced" : "differs") + ", second " + (ok3 ? "reproduced" : "differs"), cert};
                           }});
            for (int n : {5, 7})
                out.push_back({"C4 x C" + std::to_string(n) + " witness and Tutte set", [n](const BatteryOptions &) { return c4cn_check(n); }});
            out.push_back({"C4 x C5 is not 3-extendable",
                           [](const BatteryOptions &o) { return expect_extendable(product(cycle(4), cycle(5)), 3, false, o); }});
            return out;
        }

        bool same_up_to_isomorphism(std::vector<Graph> got, std::vector<Graph> want)
        {
            if (got.size() != want.size())
                return false;
            for (auto &w : want) {
                auto it = std::find_if(got.begin(), got.end(), [&](const Graph &g) { return isomorphic(g, w); });
                if (it == got.end())
                    return false;
                got.erase(it);
            }
            return true;
        }

        Outcome classification(int order, int k, std::vector<Graph> want, const std::string &names)
        {
            auto got = classify_extendable_graphs(order, k);
            Json cert = Json::array();
            for (auto &g : got)
                cert.push_back(graph_to_json(g));
            bool ok = same_up_to_isomorphism(got, std::move(want));
            return {ok, std::to_string(got.size()) + " graph(s), expected " + names, cert};
        }

        /// Graphs used for the Tutte duality check: named families up to 30 vertices
        /// and seeded random graphs of order at most 14.
        std::vector<Graph> duality_graphs()
        {
            std::vector<Graph> out;
            for (int n = 2; n <= 30; ++n) {
                out.push_back(path(n));
                out.push_back(complete(n));
                if (n >= 3)
                    out.push_back(cycle(n));
            }
            for (int a = 1; a <= 15; ++a)
                for (int b = a; a + b <= 30; ++b)
                    out.push_back(complete_bipartite(a, b));
            out.push_back(petersen());
            for (int n = 3; n <= 7; ++n)
                out.push_back(bowtie(4, n));
            out.push_back(bowtie(6, 4));
            out.push_back(bowtie(6, 5));
            for (int a = 2; a <= 6; ++a)
                for (int b = 2; a * b <= 30; ++b) {
                    out.push_back(product(path(a), path(b)));
                    if (b >= 3)
                        out.push_back(product(path(a), cycle(b)));
                    if (a >= 3 && b >= 3)
                        out.push_back(product(cycle(a), cycle(b)));
                }
            std::mt19937 rng(20240601);
            for (int i = 0; i < 500; ++i) {
                int order = 1 + static_cast<int>(rng() % 14);
                std::bernoulli_distribution coin(0.1 + 0.8 * (rng() % 100) / 100.0);
                std::vector<Edge> edges;
                for (Vertex u = 0; u < order; ++u)
                    for (Vertex v = u + 1; v < order; ++v)
                        if (coin(rng))
                            edges.emplace_back(u, v);
                out.emplace_back(order, std::move(edges));
            }
            return out;
        }

        Outcome tutte_duality()
        {
            int graphs = 0, bad = 0, perfect = 0;
            for (auto &g : duality_graphs()) {
                ++graphs;
                bool pm = has_perfect_matching(g);
                auto t = tutte_violator(g);
                auto mm = maximum_matching(g);
                bool ok = pm != t.has_value() && verify_matching(g, mm, MatchingKind::partial) &&
                          (2 * static_cast<int>(mm.size()) == g.order()) == pm && (! t || verify_tutte_violator(g, *t));
                bad += ! ok;
                perfect += pm;
            }
            Json cert{{"graphs", graphs}, {"with_perfect_matching", perfect}, {"violations", bad}};
            return {bad == 0, std::to_string(graphs) + " graphs, " + std::to_string(bad) + " violations", cert};
        }

        std::vector<Edge> bowtie_j_edges(int n)
        {
            BowtieLayout b(n);
            auto g = bowtie(6, n);
            std::vector<Edge> out;
            for (auto &e : g.edges())
                if (b.in_j(e.u) && b.in_j(e.v))
                    out.push_back(e);
            return out;
        }

        Outcome lemma1_sweep(int n)
        {
            BowtieLayout b(n);
            Graph gj(6 * n, bowtie_j_edges(n));
            std::uint64_t total = 0, bad = 0;
            std::map<std::string, int> branches;
            for_each_k_matching(gj, 3, [&](std::span<const Edge> m) {
                ++total;
                auto out = lemma1_cover_h(n, {m.begin(), m.end()});
                ++branches[out.branch];
                auto got = make_matching(gj, out.edges);
                bool ok = verify_matching(gj, got, MatchingKind::partial) && got.contains_all(m);
                for (int i = 1; i <= n; ++i)
                    ok = ok && got.covers(b.h(i));
                bad += ! ok;
                return true;
            });
            Json cert{{"matchings", total}, {"failures", bad}, {"branches", branches}};
            return {bad == 0, std::to_string(total) + " matchings, " + std::to_string(bad) + " failures", cert};
        }

        Outcome lemma3_sweep(int n)
        {
            BowtieLayout b(n);
            auto g = bowtie(6, n);
            int total = 0, bad = 0;
            std::map<std::string, int> branches;
            for (auto &e : bowtie_j_edges(n))
                for (int k = 1; k <= 2 * n; ++k) {
                    Vertex qk = b.q(k);
                    if (e.touches(qk))
                        continue;
                    ++total;
                    auto out = lemma3_pm(n, e, qk);
                    ++branches[out.branch];
                    auto got = make_matching(g, out.edges);
                    bool ok = verify_matching(g, got, MatchingKind::partial);
                    for (Vertex v = 0; v < g.order() && ok; ++v)
                        if (b.in_j(v))
                            ok = got.covers(v) != (e.touches(v) || v == qk);
                    bad += ! ok;
                }
            Json cert{{"inputs", total}, {"failures", bad}, {"branches", branches}};
            return {bad == 0, std::to_string(total) + " inputs, " + std::to_string(bad) + " failures", cert};
        }

        std::vector<NamedCheck> lemma_checks()
        {
            std::vector<NamedCheck> out;
            out.push_back({"connected 2-extendable graphs of order 6 are K6 and K3,3",
                           [](const BatteryOptions &) { return classification(6, 2, {complete(6), complete_bipartite(3, 3)}, "K6, K3,3"); }});
            out.push_back({"connected 1-extendable graphs of order 4 are K4 and C4",
                           [](const BatteryOptions &) { return classification(4, 1, {complete(4), cycle(4)}, "K4, C4"); }});
            out.push_back({"Tutte duality on families and random graphs", [](const BatteryOptions &) { return tutte_duality(); }});
            out.push_back({"bowtie: every 3-matching of G[J] extends to cover H", [](const BatteryOptions &) { return lemma1_sweep(5); }});
            out.push_back({"bowtie: G[J] - V(e) - q_k has a perfect matching", [](const BatteryOptions &) { return lemma3_sweep(5); }});
            out.push_back({"degree lower bounds for 3-extendable graphs", [](const BatteryOptions &) {
                               Json table = Json::array();
                               bool ok = true;
                               int previous = 4;
                               for (int x = 0; x <= 8; ++x) {
                                   int d = degree_lower_bound(3, x);
                                   table.push_back(d);
                                   // k + 1 with no triangles, never decreasing, capped at 2k + 1
                                   ok = ok && d >= previous && d <= 7;
                                   previous = d;
                               }
                               ok = ok && table[0] == 4 && table[4] == 6 && table[5] == 7;
                               return Outcome{ok, "d >= " + table.dump() + " for x = 0..8", table};
                           }});
            return out;
        }

        std::vector<NamedCheck> formula_checks()
        {
            std::vector<NamedCheck> out;
            out.push_back({"mu table", [](const BatteryOptions &) {
                               Json table = Json::object();
                               for (int chi = 2; chi >= -12; --chi)
                                   table[std::to_string(chi)] = {mu_for_chi(chi), mu_prime_for_chi(chi).value, mu_nk_for_chi(1, chi), mu_nk_for_chi(2, chi)};
                               bool ok = mu(Surface::sphere()) == 3 && mu(Surface::crosscaps(1)) == 3 && mu(Surface::orientable_genus(1)) == 4 &&
                                         mu(Surface::crosscaps(2)) == 4 && mu_prime(Surface::sphere()) == 3 && mu_prime(Surface::crosscaps(1)) == 3 &&
                                         mu_prime(Surface::orientable_genus(1)) == 4 && mu_prime(Surface::crosscaps(2)) == 4 &&
                                         mu_prime(Surface::crosscaps(3)) == 4 && mu_prime_for_chi(-2).value == 4;
                               auto sphere = mu_prime_detail(Surface::sphere());
                               ok = ok && sphere.literal == 2 && sphere.warning.has_value();
                               for (int chi = 2; chi >= -12; --chi)
                                   ok = ok && mu_prime_for_chi(chi).value <= mu_for_chi(chi);
                               return Outcome{ok, "mu, mu', mu(1,.), mu(2,.) over chi = 2..-12", table};
                           }});
            out.push_back({"genus of complete graphs", [](const BatteryOptions &) {
                               bool ok = genus_complete(7) == 1 && nonorientable_genus_complete(7) == 3;
                               Json table = Json::object();
                               for (int n = 5; n <= 50; ++n) {
                                   int g = genus_complete(n), ng = nonorientable_genus_complete(n);
                                   table[std::to_string(n)] = {g, ng};
                                   ok = ok && g == ((n - 3) * (n - 4) + 11) / 12;
                                   if (n != 7)
                                       ok = ok && ng == ((n - 3) * (n - 4) + 5) / 6;
                               }
                               return Outcome{ok, "g(K_n), nonorientable genus for n = 5..50", table};
                           }});
            out.push_back({"control-point bound instances", [](const BatteryOptions &) {
                               Json cert{{"(4,0,0,30)", control_bound_holds(4, 0, 0, 30)},
                                         {"(6,0,2,12)", control_bound_holds(6, 0, 2, 12)},
                                         {"(8,6,-2,12)", control_bound_holds(8, 6, -2, 12)},
                                         {"(9,9,-2,12)", control_bound_holds(9, 9, -2, 12)}};
                               bool ok = cert["(4,0,0,30)"] == true && cert["(6,0,2,12)"] == false;
                               return Outcome{ok, cert.dump(), cert};
                           }});
            return out;
        }

        std::vector<NamedCheck> embedding_checks()
        {
            std::vector<NamedCheck> out;
            for (int n : {5, 7, 9})
                out.push_back({"bowtie(6," + std::to_string(n) + ") quadrangulates the Klein bottle", [n](const BatteryOptions &) {
                                   auto rs = bowtie_rotation_N2(n);
                                   auto f = trace_faces(rs);
                                   auto c = euler_contributions(rs);
                                   Vertex p = c.control_point;
                                   bool ok = verify_embedding(rs, Surface::crosscaps(2)) && ! is_orientable(rs) &&
                                             f.face_sizes == std::vector<int>(static_cast<std::size_t>(6 * n), 4) && c.total == Rational(0) &&
                                             c.phi[p] >= Rational(0) && control_bound_holds(rs.graph.degree(p), c.triangles_at[p], 0, rs.graph.order());
                                   Json cert{{"euler_characteristic", euler_characteristic(rs)}, {"faces", f.faces.size()},
                                             {"orientable", is_orientable(rs)}, {"contributions", contributions_to_json(c)}};
                                   return Outcome{ok, std::to_string(f.faces.size()) + " faces, chi = " + std::to_string(euler_characteristic(rs)) + ", sum phi = " + to_string(c.total), cert};
                               }});
            out.push_back({"local switches preserve the embedding", [](const BatteryOptions &) {
                               auto rs = bowtie_rotation_N2(5);
                               auto sizes = trace_faces(rs).face_sizes;
                               int bad = 0;
                               for (Vertex v = 0; v < rs.graph.order(); ++v) {
                                   auto s = local_switch(rs, v);
                                   bad += trace_faces(s).face_sizes != sizes || is_orientable(s);
                               }
                               return Outcome{bad == 0, std::to_string(rs.graph.order()) + " switches, " + std::to_string(bad) + " changed", Json{{"changed", bad}}};
                           }});
            return out;
        }

        std::vector<NamedCheck> checks_for(const std::string &suite)
        {
            if (suite == "theorems")
                return theorem_checks();
            if (suite == "lemmas")
                return lemma_checks();
            if (suite == "formulas")
                return formula_checks();
            if (suite == "embeddings")
                return embedding_checks();
            throw std::invalid_argument("unknown suite '" + suite + "'");
        }
    }

    const std::vector<std::string> &suite_names()
    {
        static const std::vector<std::string> names{"theorems", "lemmas", "formulas", "embeddings"};
        return names;
    }

    std::vector<CheckResult> run_suite(const std::string &suite, const BatteryOptions &options)
    {
        if (suite == "all") {
            std::vector<CheckResult> out;
            for (auto &name : suite_names())
                for (auto &r : run_suite(name, options))
                    out.push_back(std::move(r));
            return out;
        }
        std::vector<CheckResult> out;
        for (auto &check : checks_for(suite)) {
            auto start = Clock::now();
            CheckResult r;
            r.suite = suite;
            r.name = check.name;
            try {
                auto o = check.run(options);
                r.passed = o.passed;
                r.detail = std::move(o.detail);
                r.certificate = std::move(o.certificate);
            }
            catch (const std::exception &e) {
                r.passed = false;
                r.detail = std::string("exception: ") + e.what();
                r.certificate = nullptr;
            }
            r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
            out.push_back(std::move(r));
        }
        return out;
    }

    Json manifest_to_json(const RunManifest &m)
    {
        Json checks = Json::array(), checksums = Json::object(), verdicts = Json::object(), times = Json::object();
        bool all = true;
        for (auto &c : m.checks) {
            std::string key = c.suite + "/" + c.name;
            checksums[key] = fnv1a_hex(c.certificate.dump());
            verdicts[key] = c.passed;
            times[key] = c.seconds;
            all = all && c.passed;
            checks.push_back({{"suite", c.suite}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"certificate", c.certificate}});
        }
        Json out;
        out["command"] = m.command;
        out["parameters"] = m.parameters;
        out["tool_version"] = tool_version;
        out["all_passed"] = all;
        out["verdicts"] = verdicts;
        out["checksums"] = checksums;
        out["times"] = times;
        out["total_seconds"] = m.seconds;
        out["checks"] = checks;
        return out;
    }
}
