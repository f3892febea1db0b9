#include <doctest.h>

#include "bullcol/oracle.hpp"
#include "bullcol/pattern.hpp"
#include "bullcol/pipeline.hpp"
#include "support.hpp"

using namespace bullcol;

namespace {

constexpr ClassMode kModes[] = {ClassMode::bull_chair, ClassMode::bull_e, ClassMode::bull_c5_s113,
                                ClassMode::bull_c5_s123};

void agrees(const Graph& g, ClassMode mode, bool validate) {
    SolveOptions opts;
    opts.validate_class = validate;
    Certificate c = solve(g, mode, opts);
    CHECK(verify(g, c));
    bool oracle = oracle_3colourable(g).has_value();
    if (c.decision == Decision::not_in_class) {
        CHECK(oracle_class_violation(g, mode).has_value());
        return;
    }
    CHECK((c.decision == Decision::three_colourable) == oracle);
}

} // namespace

TEST_CASE("summary examples") {
    Certificate c5 = solve(cycle_graph(5), ClassMode::bull_e);
    CHECK(c5.decision == Decision::three_colourable);
    CHECK(c5.payload_kind() == "colouring");

    Graph bull(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}});
    Certificate cb = solve(bull, ClassMode::bull_e);
    CHECK(cb.decision == Decision::not_in_class);
    CHECK(std::get<ForbiddenPatternWitness>(cb.payload).pattern == PatternKind::bull);

    Certificate k4 = solve(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}), ClassMode::bull_chair);
    CHECK(k4.payload_kind() == "k4");

    Certificate w5 = solve(wheel_graph(5), ClassMode::bull_e);
    CHECK(w5.payload_kind() == "odd_wheel");
    CHECK(std::get<OddWheelWitness>(w5.payload).hub == 5);
}

TEST_CASE("spindles are not colourable") {
    for (int p = 1; p <= 4; ++p) {
        Graph s = build_spindle(p);
        for (ClassMode mode : kModes) {
            Certificate c = solve(s, mode, {false, true});
            CHECK(verify(s, c));
            CHECK(c.decision != Decision::three_colourable);
        }
    }
}

TEST_CASE("odd cycles get colourings") {
    for (int p = 2; p <= 6; ++p) {
        Graph c = cycle_graph(2 * p + 1);
        Certificate cert = solve(c, ClassMode::bull_chair);
        REQUIRE(cert.has_colouring());
        CHECK(is_proper_colouring(c, cert.colours()));
    }
}

TEST_CASE("antihole") {
    Graph a = complement_graph(cycle_graph(7));
    Certificate c = solve(a, ClassMode::bull_e, {false, true});
    REQUIRE(std::holds_alternative<SpindleNecklace>(c.payload));
    CHECK(std::get<SpindleNecklace>(c.payload).diamonds() == 2);
    CHECK(verify(a, c));
}

TEST_CASE("cut vertices and pendant paths") {
    // two W5 sharing their hub region through a cut vertex, with a tail
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, 5);
        e.emplace_back(6 + i, 6 + (i + 1) % 5);
        e.emplace_back(6 + i, 5);
    }
    e.emplace_back(0, 11);
    Graph g(12, e);
    Certificate c = solve(g, ClassMode::bull_chair, {false, true});
    CHECK(c.payload_kind() == "odd_wheel");
    CHECK(verify(g, c));
}

TEST_CASE("agreement with the oracle on random graphs") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t) {
        int n = 5 + static_cast<int>(rng() % 7);
        Graph g = testing_support::random_graph(n, 0.25 + 0.05 * static_cast<double>(rng() % 6), rng);
        for (ClassMode mode : kModes) {
            agrees(g, mode, true);
            agrees(g, mode, false);
        }
    }
}

TEST_CASE("agreement with the oracle on grown class members") {
    for (ClassMode mode : kModes) {
        int done = 0;
        for (std::uint64_t seed = 1; seed <= 80 && done < 40; ++seed) {
            auto g = testing_support::try_grown(14, mode, seed, seed % 2 == 0);
            if (!g)
                continue;
            ++done;
            agrees(*g, mode, true);
            agrees(*g, mode, false);
        }
        CHECK(done >= 30);
    }
}

TEST_CASE("deterministic output") {
    Graph g = grown_class(14, ClassMode::bull_e, 9);
    Certificate a = solve(g, ClassMode::bull_e);
    Certificate b = solve(g, ClassMode::bull_e);
    CHECK(a.payload == b.payload);
    CHECK(a.provenance == b.provenance);
}
