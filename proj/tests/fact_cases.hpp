#pragma once

#include "bullcol/hole.hpp"
#include "support.hpp"

#include <string>
#include <vector>

namespace testing_support {

// A hole 0..p-1 plus attachments that violates one structural fact.
struct FactCase {
    int fact;
    int p;
    int n;
    std::vector<Edge> extra;
    ClassMode mode;
};

inline std::vector<FactCase> fact_cases() {
    using M = ClassMode;
    return {
        {1, 7, 8, {{4, 7}, {5, 7}}, M::bull_e},                          // q(w) = 2
        {1, 7, 8, {{0, 7}, {1, 7}, {2, 7}, {3, 7}}, M::bull_e},          // q(w) = 4
        {1, 5, 6, {{0, 5}, {1, 5}, {2, 5}, {3, 5}, {4, 5}}, M::bull_chair}, // q(w) = p
        {2, 7, 8, {{0, 7}, {1, 7}, {2, 7}, {5, 7}}, M::bull_e},
        {3, 7, 8, {{1, 7}, {4, 7}}, M::bull_c5_s113},
        {4, 7, 9, {{1, 8}, {3, 7}, {3, 8}, {5, 7}, {7, 8}}, M::bull_chair},
        {4, 5, 7, {{0, 5}, {1, 5}, {2, 5}, {2, 6}, {3, 6}, {4, 6}, {5, 6}}, M::bull_e}, // two C's: M7
        {5, 7, 9, {{3, 8}, {4, 7}, {4, 8}, {5, 7}, {5, 8}, {6, 7}}, M::bull_e},
        {6, 7, 10, {{0, 8}, {0, 9}, {4, 7}, {5, 7}, {5, 8}, {5, 9}, {6, 7}, {7, 8}, {8, 9}}, M::bull_e},
        {7, 7, 10, {{0, 7}, {2, 7}, {0, 8}, {2, 8}, {0, 9}, {2, 9}, {7, 8}, {8, 9}, {7, 9}}, M::bull_e},
        {8, 5, 8, {{0, 5}, {0, 6}, {0, 7}, {5, 6}, {6, 7}, {5, 7}}, M::bull_e},
        {9, 5, 7, {{0, 5}, {4, 6}}, M::bull_e},
        {10, 5, 7, {{2, 6}, {4, 5}, {5, 6}}, M::bull_e},
        {11, 5, 9, {{0, 5}, {0, 6}, {1, 7}, {1, 8}, {5, 6}, {7, 8}, {5, 7}, {5, 8}, {6, 7}, {6, 8}}, M::bull_e},
        {12, 5, 8, {{0, 6}, {1, 7}, {2, 5}, {3, 6}, {5, 6}, {5, 7}, {6, 7}}, M::bull_e},
        {13, 5, 7, {{1, 5}, {2, 5}, {2, 6}, {3, 5}}, M::bull_e},
        {14, 5, 7, {{0, 5}, {1, 5}, {2, 5}, {0, 6}, {5, 6}}, M::bull_e},
        {15, 5, 8, {{1, 6}, {2, 5}, {2, 7}, {4, 6}, {5, 7}, {6, 7}}, M::bull_e},
        {16, 5, 7, {{0, 5}, {1, 6}, {2, 6}, {3, 5}, {3, 6}, {4, 5}}, M::bull_e},
        {16, 5, 8, {{0, 6}, {1, 6}, {2, 5}, {2, 6}, {2, 7}, {4, 5}, {4, 7}, {5, 7}}, M::bull_e},
        {17, 5, 8, {{1, 6}, {2, 5}, {2, 7}, {4, 5}, {4, 7}, {5, 7}, {6, 7}}, M::bull_e},
        {18, 5, 7, {{0, 5}, {2, 5}, {3, 5}, {3, 6}, {4, 5}}, M::bull_e},
        {19, 5, 7, {{0, 5}, {0, 6}, {2, 6}, {3, 6}, {4, 6}}, M::bull_e},
        {19, 5, 7, {{0, 5}, {1, 5}, {2, 5}, {2, 6}, {3, 6}, {4, 6}, {5, 6}}, M::bull_e},
    };
}

inline Graph fact_graph(const FactCase& c) { return hole_plus(c.p, c.n, c.extra); }

inline HoleContext fact_hole(const FactCase& c) {
    VertexSet cyc;
    for (int i = 0; i < c.p; ++i)
        cyc.push_back(i);
    return HoleContext(cyc);
}

// Runs classification and validation on the case's own hole.
inline std::optional<Finding> fact_finding(const FactCase& c) {
    Graph g = fact_graph(c);
    auto res = classify(g, fact_hole(c), c.mode);
    if (auto* f = std::get_if<Finding>(&res))
        return *f;
    return validate_structure(g, std::get<Classification>(res), c.mode);
}

} // namespace testing_support
