#include <doctest.h>

#include "bullcol/errors.hpp"
#include "bullcol/oracle.hpp"
#include "bullcol/pattern.hpp"
#include "bullcol/reduction.hpp"
#include "support.hpp"

#include <algorithm>

using namespace bullcol;

namespace {

Graph join_at(const Graph& a, const Graph& b, Vertex va, Vertex vb) {
    // vertex vb of b is glued onto va of a
    std::vector<Edge> e = a.edges();
    int n = a.order();
    auto id = [&](Vertex v) {
        if (v == vb)
            return va;
        return n + (v < vb ? v : v - 1);
    };
    for (auto [u, v] : b.edges())
        e.emplace_back(id(u), id(v));
    return Graph(n + b.order() - 1, e);
}

} // namespace

TEST_CASE("a tree peels completely") {
    Graph tree(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
    Reduction r = reduce(tree);
    CHECK(r.blocks.empty());
    auto c = recombine(tree, r, {}, ClassMode::bull_e);
    REQUIRE(c.has_colouring());
    CHECK(is_proper_colouring(tree, c.colours()));
}

TEST_CASE("odd cycle peels completely") {
    Reduction r = reduce(cycle_graph(5));
    CHECK(r.blocks.empty());
}

TEST_CASE("two W5 sharing a cut vertex") {
    Graph w = wheel_graph(5);
    Graph g = join_at(w, w, 0, 0);
    Reduction r = reduce(g);
    REQUIRE(r.blocks.size() == 2);
    for (const auto& b : r.blocks) {
        CHECK(b.vertices.size() == 6);
        CHECK(induced_subgraph(g, b.vertices).size() == 10);
        CHECK(b.irreducible);
    }
}

TEST_CASE("blocks are 2-connected with minimum degree 3") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        Graph g = testing_support::random_graph(12, 0.3, rng);
        Reduction r = reduce(g);
        for (const auto& b : r.blocks) {
            Graph h = induced_subgraph(g, b.vertices);
            CHECK(h.min_degree() >= 3);
            CHECK(is_connected(h));
            CHECK(b.irreducible == (h.max_degree() >= 4));
            for (Vertex x = 0; x < h.order(); ++x) {
                std::vector<Vertex> rest;
                for (Vertex y = 0; y < h.order(); ++y)
                    if (y != x)
                        rest.push_back(y);
                CHECK(is_connected(induced_subgraph(h, rest)));
            }
        }
    }
}

TEST_CASE("low degree colouring") {
    auto c7 = solve_low_degree(cycle_graph(7));
    CHECK(is_proper_colouring(cycle_graph(7), c7));
    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    auto c3 = solve_low_degree(k3);
    std::vector<Colour> v = c3.values();
    std::sort(v.begin(), v.end());
    CHECK(v == std::vector<Colour>{0, 1, 2});
    Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                        {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    CHECK(oracle_3colourable(petersen).has_value());
    CHECK(is_proper_colouring(petersen, solve_low_degree(petersen)));
    CHECK_THROWS_AS(solve_low_degree(build_spindle(1)), ContractViolation);
    CHECK_THROWS_AS(solve_low_degree(wheel_graph(5)), ContractViolation);
}

TEST_CASE("cubic graphs colour constructively") {
    // prism, K3,3, cube, and the 3-prism chained through a cut vertex
    std::vector<Graph> gs{
        Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}),
        Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}),
        Graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}}),
    };
    for (const Graph& g : gs)
        CHECK(is_proper_colouring(g, solve_low_degree(g)));
}

TEST_CASE("perfect fallback") {
    Graph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    CHECK(is_proper_colouring(k33, perfect_fallback(k33)));
    Graph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(is_proper_colouring(diamond, perfect_fallback(diamond)));
    std::mt19937_64 rng(19);
    int tried = 0;
    for (int t = 0; t < 300 && tried < 40; ++t) {
        Graph g = testing_support::random_graph(9, 0.35, rng);
        if (find_k4(g) || smallest_odd_hole(g) || find_odd_antihole7(g))
            continue;
        ++tried;
        CHECK(oracle_3colourable(g).has_value());
        CHECK(is_proper_colouring(g, perfect_fallback(g)));
    }
    CHECK(tried > 10);
}

TEST_CASE("recombine aligns colours at a cut vertex") {
    Graph c5 = cycle_graph(5);
    Graph g = join_at(c5, c5, 0, 0);
    Reduction r = reduce(g);
    auto c = recombine(g, r, {}, ClassMode::bull_e);
    CHECK(is_proper_colouring(g, c.colours()));
}

TEST_CASE("recombine with block colourings that disagree at the cut") {
    // two octahedra: irreducible, 3-colourable, max degree 4
    Graph oct(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {5, 1}, {5, 2}, {5, 3}, {5, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}});
    Graph g = join_at(oct, oct, 0, 1);
    Reduction r = reduce(g);
    REQUIRE(r.blocks.size() == 2);
    std::vector<Certificate> res;
    for (std::size_t i = 0; i < r.blocks.size(); ++i) {
        Graph b = induced_subgraph(g, r.blocks[i].vertices);
        auto col = *oracle_3colourable(b);
        if (i == 1) // permute so the cut vertex colours differ
            for (Vertex v = 0; v < col.size(); ++v)
                col[v] = (col[v] + 1) % 3;
        res.push_back(Certificate::colouring(col, ClassMode::bull_e, ""));
    }
    auto c = recombine(g, r, res, ClassMode::bull_e);
    REQUIRE(c.has_colouring());
    CHECK(is_proper_colouring(g, c.colours()));
}

TEST_CASE("a K4 block witness is propagated with original ids") {
    Graph k5(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    Graph g = join_at(cycle_graph(6), k5, 3, 0);
    Reduction r = reduce(g);
    REQUIRE(r.blocks.size() == 1);
    Graph b = induced_subgraph(g, r.blocks[0].vertices);
    auto k = find_k4(b);
    REQUIRE(k);
    auto c = recombine(g, r, {Certificate::witness(K4Witness{*k}, ClassMode::bull_e, "")}, ClassMode::bull_e);
    CHECK(c.decision == Decision::not_three_colourable);
    CHECK(verify(g, c));
}

TEST_CASE("a path is 2-coloured by reinsertion") {
    Graph path(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    auto c = recombine(path, reduce(path), {}, ClassMode::bull_chair);
    CHECK(is_proper_colouring(path, c.colours()));
}

TEST_CASE("trace replays peel with at most two earlier neighbours") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 50; ++t) {
        Graph g = testing_support::random_graph(12, 0.25, rng);
        Reduction r = reduce(g);
        for (const auto& node : r.trace.nodes)
            for (const auto& step : node.peeled)
                CHECK(step.neighbours.size() <= 2);
    }
}
