#include "oracles.hpp"

#include "extlab/extendability.hpp"
#include "extlab/generators.hpp"

#include <doctest.h>

using namespace extlab;

TEST_CASE("k-matching enumeration")
{
    auto c6 = cycle(6);
    int oracle_count = 0;
    oracle::k_matchings(c6, 2, [&](const std::vector<Edge> &) { ++oracle_count; });
    CHECK(count_k_matchings(c6, 2) == static_cast<std::uint64_t>(oracle_count));
    CHECK(count_k_matchings(c6, 2) == 9);
    CHECK(count_k_matchings(c6, 0) == 1);
    CHECK(count_k_matchings(c6, 4) == 0);
    CHECK(count_k_matchings(complete(8), 3, 5) == 6);

    std::vector<std::vector<Edge>> seen;
    for_each_k_matching(c6, 2, [&](std::span<const Edge> m) {
        seen.emplace_back(m.begin(), m.end());
        return true;
    });
    CHECK(std::is_sorted(seen.begin(), seen.end()));
}

TEST_CASE("extendability verdicts on small graphs agree with brute force")
{
    std::vector<Graph> gs{cycle(4), cycle(6), cycle(8), complete(4), complete(6), complete_bipartite(3, 3),
                          complete_bipartite(4, 4), petersen(), cartesian_product(path(2), cycle(4)),
                          cartesian_product(path(2), cycle(5)), cartesian_product(cycle(4), path(3))};
    std::mt19937 rng(99);
    for (int i = 0; i < 30; ++i)
        gs.push_back(oracle::random_graph(rng, 6 + 2 * (i % 3), 0.5 + 0.01 * i));
    for (auto &g : gs)
        for (int k = 0; k <= 3; ++k) {
            auto r = is_k_extendable(g, k);
            CHECK(r.verdict == oracle::is_k_extendable(g, k));
            CHECK(verify_report(g, r));
            if (r.verdict)
                CHECK(r.matchings_checked == std::max<std::uint64_t>(1, count_k_matchings(g, k)));
        }
}

TEST_CASE("named families")
{
    auto pc = cartesian_product(path(4), cycle(5));
    CHECK(is_k_extendable(pc, 2).verdict);

    auto c4c5 = cartesian_product(cycle(4), cycle(5));
    auto r = is_k_extendable(c4c5, 3);
    CHECK_FALSE(r.verdict);
    CHECK(r.reason == "non_extendable_matching");
    REQUIRE(r.witness);
    CHECK(r.witness->size() == 3);
    CHECK(verify_report(c4c5, r));

    GridIndex grid(c4c5);
    auto witness_m = make_matching(c4c5, {{grid.at(1, 1), grid.at(1, 2)}, {grid.at(2, 2), grid.at(3, 2)}, {grid.at(3, 1), grid.at(4, 1)}});
    CHECK_FALSE(extend_to_perfect(c4c5, witness_m));
}

TEST_CASE("bowtie(6,5) is 3-extendable")
{
    auto g = bowtie(6, 5);
    auto r = is_k_extendable(g, 3);
    CHECK(r.verdict);
    CHECK(r.matchings_checked == count_k_matchings(g, 3));
}

TEST_CASE("job count does not change reports")
{
    auto g = cartesian_product(cycle(4), cycle(5));
    auto one = is_k_extendable(g, 3, {1, {}});
    auto many = is_k_extendable(g, 3, {4, {}});
    CHECK(one.verdict == many.verdict);
    CHECK(one.matchings_checked == many.matchings_checked);
    REQUIRE(one.witness);
    REQUIRE(many.witness);
    CHECK(one.witness->edges == many.witness->edges);
    CHECK(one.witness_certificate->witness_set == many.witness_certificate->witness_set);

    auto t1 = is_k_extendable(cartesian_product(cycle(4), cycle(4)), 2, {1, {}});
    auto t3 = is_k_extendable(cartesian_product(cycle(4), cycle(4)), 2, {3, {}});
    CHECK(t1.verdict == t3.verdict);
    CHECK(t1.matchings_checked == t3.matchings_checked);
}

TEST_CASE("budget")
{
    auto g = bowtie(6, 5);
    auto r = is_k_extendable(g, 3, {1, 100});
    CHECK_FALSE(r.completed);
    CHECK(r.reason == "budget_exhausted");
    CHECK(r.matchings_checked == 100);
}

TEST_CASE("no perfect matching and tiny orders")
{
    auto r = is_k_extendable(cycle(7), 1);
    CHECK_FALSE(r.verdict);
    CHECK(r.reason == "no_perfect_matching");
    CHECK(verify_report(cycle(7), r));

    auto star = is_k_extendable(complete_bipartite(1, 3), 0);
    CHECK(star.reason == "no_perfect_matching");
    CHECK(verify_report(complete_bipartite(1, 3), star));

    auto k6 = is_k_extendable(complete(6), 3);
    CHECK_FALSE(k6.verdict);
    CHECK(k6.reason == "order_below_2k_plus_2");
    CHECK_FALSE(k6.witness);
}

TEST_CASE("extendability number")
{
    // C_6: every edge lies in one of its two perfect matchings, but {01, 34} strands 2 and 5
    CHECK(extendability_number(cycle(6)) == 1);
    CHECK(extendability_number(cycle(7)) == -1);
    CHECK(extendability_number(complete(6)) == 2);
    CHECK(extendability_number(complete_bipartite(4, 4)) == 3);
    // Petersen: oracle says 1-extendable but not 2-extendable
    CHECK(oracle::is_k_extendable(petersen(), 1));
    CHECK_FALSE(oracle::is_k_extendable(petersen(), 2));
    CHECK(extendability_number(petersen()) == 1);
}

TEST_CASE("(n,k)-graphs")
{
    auto c6 = cycle(6);
    CHECK(is_nk_graph(c6, 0, 1).holds == is_k_extendable(c6, 1).verdict);
    CHECK(is_nk_graph(complete(6), 2, 1).holds);
    auto r = is_nk_graph(c6, 2, 1);
    CHECK_FALSE(r.holds);
    REQUIRE(r.failing_set);
    CHECK(*r.failing_set == VertexSet{0, 1}); // leaves P_4, whose middle edge strands both ends
    CHECK_THROWS_AS(is_nk_graph(c6, 1, 1), std::invalid_argument);
}

TEST_CASE("canonical forms")
{
    CHECK(isomorphic(cycle(6), complete_bipartite(1, 5)) == false);
    CHECK(isomorphic(complete_bipartite(2, 2), cycle(4)));
    CHECK(isomorphic(petersen(), petersen()));
    auto shuffled = Graph(6, {{0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 5}, {5, 0}});
    CHECK(isomorphic(shuffled, cycle(6)));
    CHECK(canonical_form(shuffled).edges() == canonical_form(cycle(6)).edges());

    // known counts of graphs up to isomorphism
    CHECK(all_graphs(4).size() == 11);
    CHECK(all_graphs(5).size() == 34);
    CHECK(all_graphs(6).size() == 156);
}

TEST_CASE("classification of small extendable graphs")
{
    auto four = classify_extendable_graphs(4, 1);
    REQUIRE(four.size() == 2);
    int hits = 0;
    for (auto &g : four)
        hits += isomorphic(g, complete(4)) + isomorphic(g, cycle(4));
    CHECK(hits == 2);

    auto six = classify_extendable_graphs(6, 2);
    REQUIRE(six.size() == 2);
    hits = 0;
    for (auto &g : six)
        hits += isomorphic(g, complete(6)) + isomorphic(g, complete_bipartite(3, 3));
    CHECK(hits == 2);

    CHECK(classify_extendable_graphs(6, 3).empty());
    CHECK_THROWS(classify_extendable_graphs(9, 1));
}
