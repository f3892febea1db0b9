#include <doctest.h>

#include "bullcol/errors.hpp"
#include "bullcol/graph.hpp"
#include "bullcol/oracle.hpp"
#include "support.hpp"

using namespace bullcol;

TEST_CASE("induced subgraph of a 5-cycle is a path") {
    Graph c5 = cycle_graph(5);
    std::vector<Vertex> s{0, 1, 2};
    Graph h = induced_subgraph(c5, s);
    CHECK(h.order() == 3);
    CHECK(h.size() == 2);
    CHECK(h.adjacent(0, 1));
    CHECK(h.adjacent(1, 2));
    CHECK_FALSE(h.adjacent(0, 2));
}

TEST_CASE("induced subgraph on everything is the graph") {
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    std::vector<Vertex> all{0, 1, 2, 3};
    CHECK(induced_subgraph(k4, all) == k4);
}

TEST_CASE("bull middle is a triangle") {
    Graph bull(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 3}});
    std::vector<Vertex> s{1, 2, 3};
    CHECK(induced_subgraph(bull, s).size() == 3);
}

TEST_CASE("induced subgraph rejects bad ids") {
    Graph c5 = cycle_graph(5);
    std::vector<Vertex> s{0, 7};
    CHECK_THROWS_AS(induced_subgraph(c5, s), InputError);
}

TEST_CASE("proper colouring checks") {
    Graph c5 = cycle_graph(5);
    CHECK(is_proper_colouring(c5, Colouring(std::vector<Colour>{0, 1, 0, 1, 2})));
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    for (Colour x = 0; x < 3; ++x)
        CHECK_FALSE(is_proper_colouring(k4, Colouring(std::vector<Colour>{0, 1, 2, x})));
    Graph edge(2, {{0, 1}});
    CHECK_FALSE(is_proper_colouring(edge, Colouring(std::vector<Colour>{0, 0})));
    CHECK_THROWS_AS(is_proper_colouring(edge, Colouring(std::vector<Colour>{0, kUncoloured})), InputError);
}

TEST_CASE("dimacs and edgelist parsing") {
    Graph p3 = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n", GraphFormat::dimacs);
    CHECK(p3.order() == 3);
    CHECK(p3.size() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 2));
    Graph tri = parse_graph("0 1\n1 2\n2 0\n", GraphFormat::edgelist);
    CHECK(tri.size() == 3);
    CHECK(parse_graph("c a comment\np edge 2 1\ne 1 2\n", GraphFormat::dimacs).size() == 1);
    CHECK(parse_graph("n 6\n0 1\n", GraphFormat::edgelist).order() == 6);
}

TEST_CASE("parse errors carry the line") {
    try {
        parse_graph("p edge 3 1\ne 1 1\n", GraphFormat::dimacs);
        FAIL("self-loop accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_graph("p edge 2 1\ne 1 5\n", GraphFormat::dimacs), ParseError);
    CHECK_THROWS_AS(parse_graph("e 1 2\n", GraphFormat::dimacs), ParseError);
    CHECK_THROWS_AS(parse_graph("0 x\n", GraphFormat::edgelist), ParseError);
}

TEST_CASE("dimacs output is sorted with the header first") {
    Graph g(3, {{2, 1}, {0, 2}});
    CHECK(serialize_graph(g, GraphFormat::dimacs) == "p edge 3 2\ne 1 3\ne 2 3\n");
}

TEST_CASE("round trip through both formats") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        Graph g = testing_support::random_graph(1 + t % 12, 0.4, rng);
        for (GraphFormat f : {GraphFormat::dimacs, GraphFormat::edgelist}) {
            Graph h = parse_graph(serialize_graph(g, f), f);
            CHECK(h == g);
        }
    }
}

TEST_CASE("inducing twice equals inducing once") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
        Graph g = testing_support::random_graph(10, 0.5, rng);
        std::vector<Vertex> s{1, 2, 4, 5, 7, 9};
        std::vector<Vertex> t_in_s{0, 2, 5}; // positions in s
        std::vector<Vertex> t_direct{1, 4, 9};
        Graph twice = induced_subgraph(induced_subgraph(g, s), t_in_s);
        CHECK(twice == induced_subgraph(g, t_direct));
    }
}

TEST_CASE("adjacency is symmetric and matches neighbour lists") {
    std::mt19937_64 rng(5);
    Graph g = testing_support::random_graph(15, 0.3, rng);
    int total = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
        CHECK_FALSE(g.adjacent(u, u));
        for (Vertex v = 0; v < g.order(); ++v)
            CHECK(g.adjacent(u, v) == g.adjacent(v, u));
        for (Vertex v : g.neighbours(u))
            CHECK(g.adjacent(u, v));
        total += g.degree(u);
    }
    CHECK(total == 2 * g.size());
}

TEST_CASE("dimacs labels are the 1-based file ids") {
    Graph g = parse_graph("p edge 3 1\ne 1 3\n", GraphFormat::dimacs);
    CHECK(g.label(0) == 1);
    CHECK(g.vertex_with_label(3) == std::optional<Vertex>(2));
    Graph h = parse_graph("0 4\n", GraphFormat::edgelist);
    CHECK(h.order() == 5);
    CHECK(h.label(4) == 4);
}
