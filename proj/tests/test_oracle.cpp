#include <doctest.h>

#include "bullcol/errors.hpp"
#include "bullcol/oracle.hpp"
#include "bullcol/pattern.hpp"
#include "support.hpp"

using namespace bullcol;

TEST_CASE("oracle examples") {
    CHECK_FALSE(oracle_3colourable(build_spindle(1)));
    CHECK_FALSE(oracle_3colourable(build_spindle(3)));
    auto c = oracle_3colourable(cycle_graph(5));
    REQUIRE(c);
    CHECK(is_proper_colouring(cycle_graph(5), *c));
}

TEST_CASE("oracle refuses graphs over the cap") {
    CHECK_THROWS_AS(oracle_3colourable(cycle_graph(30)), RefusalError);
    CHECK_THROWS_AS(oracle_find_pattern(cycle_graph(30), PatternKind::bull), RefusalError);
    CHECK(oracle_3colourable(cycle_graph(30), 40).has_value());
}

TEST_CASE("oracle colourings are proper and it handles n = 25") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
        Graph g = testing_support::random_graph(6 + t % 20, 0.15 + 0.01 * (t % 10), rng);
        if (auto c = oracle_3colourable(g))
            CHECK(is_proper_colouring(g, *c));
    }
}

TEST_CASE("oracle pattern search mirrors the examples") {
    CHECK(oracle_find_pattern(pattern_template(PatternKind::bull), PatternKind::bull).has_value());
    CHECK_FALSE(oracle_find_pattern(cycle_graph(7), PatternKind::bull).has_value());
    CHECK(oracle_find_pattern(cycle_graph(7), PatternKind::chair).has_value() == false);
    CHECK(oracle_find_pattern(cycle_graph(9), PatternKind::p6).has_value());
}

TEST_CASE("named generators") {
    CHECK(generate({"cycle", 5}).size() == 5);
    Graph w5 = generate({"wheel", 5});
    CHECK(w5.order() == 6);
    CHECK(find_odd_wheel(w5).has_value());
    CHECK(generate({"spindle", 3}).order() == 10);
    CHECK(generate({"complement_cycle", 7}).size() == 14);
    CHECK_THROWS_AS(generate({"nonsense", 3}), InputError);
}

TEST_CASE("random class members are in the class and reproducible") {
    Graph g = random_class(10, 0.3, ClassMode::bull_e, 7);
    CHECK(g.order() == 10);
    CHECK_FALSE(oracle_find_pattern(g, PatternKind::bull));
    CHECK_FALSE(oracle_find_pattern(g, PatternKind::e));
    CHECK(random_class(10, 0.3, ClassMode::bull_e, 7) == g);
    for (ClassMode mode : {ClassMode::bull_chair, ClassMode::bull_e, ClassMode::bull_c5_s113, ClassMode::bull_c5_s123})
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            Graph h = random_class(9, 0.4, mode, seed);
            CHECK_FALSE(oracle_class_violation(h, mode));
            Graph k = grown_class(12, mode, seed);
            CHECK_FALSE(oracle_class_violation(k, mode));
            CHECK(grown_class(12, mode, seed) == k);
        }
}

TEST_CASE("rejection budget") {
    // two samples are not enough for a dense class member on 11 vertices
    CHECK_THROWS_AS(random_class(11, 0.6, ClassMode::bull_c5_s113, 3, 2), RefusalError);
}
