#include "oracles.hpp"

#include "extlab/generators.hpp"
#include "extlab/graph.hpp"

#include <doctest.h>

#include <numeric>

using namespace extlab;

namespace
{
    std::vector<Graph> corpus()
    {
        return {path(1), path(4), cycle(5), cycle(6), complete(4), complete(6), complete_bipartite(2, 5),
                complete_bipartite(3, 3), petersen(), cartesian_product(cycle(4), cycle(4)),
                cartesian_product(path(3), cycle(5)), bowtie(6, 3), bowtie(3, 4)};
    }
}

TEST_CASE("construction rejects loops, repeats and stray endpoints")
{
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    Graph g(3, {{2, 0}});
    CHECK(g.edges().front() == Edge(0, 2));
    CHECK(g.has_edge(2, 0));
}

TEST_CASE("neighbors")
{
    CHECK(neighbors(cycle(5), 0) == VertexSet{1, 4});
    CHECK(neighbors(complete(4), 2) == VertexSet{0, 1, 3});
    CHECK_THROWS(neighbors(cycle(5), 5));

    BowtieLayout b(5);
    auto expected = make_vertex_set({b.h(2), b.h(5), b.q(1), b.q(6)});
    CHECK(neighbors(bowtie(6, 5), b.h(1)) == expected);
}

TEST_CASE("degree handshake and neighbour counts")
{
    for (auto &g : corpus()) {
        int total = 0;
        for (Vertex v = 0; v < g.order(); ++v) {
            int direct = 0;
            for (auto &e : g.edges())
                direct += e.touches(v);
            CHECK(g.degree(v) == direct);
            CHECK(static_cast<int>(neighbors(g, v).size()) == direct);
            total += g.degree(v);
        }
        CHECK(total == 2 * static_cast<int>(g.size()));
    }
}

TEST_CASE("bipartition")
{
    auto kb = is_bipartite(complete_bipartite(3, 3));
    REQUIRE(kb);
    CHECK(kb->left.size() == 3);
    CHECK(kb->right.size() == 3);
    CHECK_FALSE(is_bipartite(cycle(5)));

    auto grid = cartesian_product(cycle(6), path(5));
    CHECK(oracle::bipartite(grid));
    CHECK(is_bipartite(grid));

    for (auto &g : corpus()) {
        auto parts = is_bipartite(g);
        CHECK(parts.has_value() == oracle::bipartite(g));
        if (! parts)
            continue;
        std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
        for (Vertex v : parts->left)
            side[v] = 0;
        for (Vertex v : parts->right)
            side[v] = 1;
        for (auto &e : g.edges())
            CHECK(side[e.u] != side[e.v]);
    }
}

TEST_CASE("connectivity")
{
    CHECK(connectivity(complete(6)) == 5);
    CHECK(connectivity(cycle(7)) == 2);
    CHECK(connectivity(cartesian_product(cycle(6), cycle(5))) == 4);
    CHECK(connectivity(path(4)) == 1);
    CHECK_THROWS(connectivity(path(1)));

    for (auto &g : corpus()) {
        if (g.order() < 2)
            continue;
        int k = connectivity(g);
        if (g.order() <= 16) {
            CHECK(k == oracle::connectivity(g));
            CHECK(connectivity_max_flow(g) == connectivity_exhaustive(g));
        }
        if (g.size() * 2 != static_cast<std::size_t>(g.order()) * (g.order() - 1))
            CHECK(k <= min_degree(g));
    }
    // both algorithms on the overlap at the top of the exhaustive range
    auto torus = cartesian_product(cycle(4), cycle(4));
    CHECK(connectivity_exhaustive(torus) == 4);
    CHECK(connectivity_max_flow(torus) == 4);
    CHECK(connectivity_max_flow(bowtie(6, 5)) == 4);
}

TEST_CASE("min degree")
{
    CHECK(min_degree(path(4)) == 1);
    CHECK(min_degree(bowtie(6, 5)) == 4);
    CHECK(min_degree(complete_bipartite(2, 5)) == 2);
}

TEST_CASE("induced subgraphs")
{
    auto g = cartesian_product(path(4), cycle(5));
    auto keep = make_vertex_set([&] {
        auto a = col_set(g, 1), b = col_set(g, 2);
        a.insert(a.end(), b.begin(), b.end());
        return a;
    }());
    auto strip = induced_subgraph(g, keep);
    CHECK(strip.graph.order() == 8);
    CHECK(strip.graph.size() == 10); // P_4 x P_2: 2*3 + 4
    CHECK(min_degree(strip.graph) == 2);
    CHECK(max_degree(strip.graph) == 3);

    std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
    std::iota(all.begin(), all.end(), 0);
    CHECK(induced_subgraph(g, all).graph == g);

    BowtieLayout b(5);
    VertexSet j;
    for (Vertex v = 0; v < b.order(); ++v)
        if (b.in_j(v))
            j.push_back(v);
    auto gj = induced_subgraph(bowtie(6, 5), j);
    CHECK(gj.graph.order() == 15);
    // H is a 5-cycle, Q a 10-cycle, plus two spokes per h
    CHECK(gj.graph.size() == 5 + 10 + 10);

    // lifting a matching of the subgraph gives back the same pairs
    std::vector<Edge> local{strip.graph.edges()[0], strip.graph.edges().back()};
    auto lifted = strip.lift(local);
    for (auto &e : lifted)
        CHECK(g.has_edge(e.u, e.v));
    CHECK(lifted.size() == 2);
}
