#pragma once

#include "bullcol/errors.hpp"
#include "bullcol/graph.hpp"
#include "bullcol/oracle.hpp"

#include <optional>

#include <random>
#include <vector>

namespace testing_support {

using namespace bullcol;

// Hole 0..p-1 plus vertices p..n-1 and the given extra edges.
inline Graph hole_plus(int p, int n, std::vector<Edge> extra) {
    for (int i = 0; i < p; ++i)
        extra.emplace_back(i, (i + 1) % p);
    return Graph(n, extra);
}

// grown_class may give up on a seed; callers skip those.
inline std::optional<Graph> try_grown(int n, ClassMode mode, std::uint64_t seed, bool wheel_free) {
    try {
        return grown_class(n, mode, seed, 20000, wheel_free);
    } catch (const RefusalError&) {
        return std::nullopt;
    }
}

inline Graph random_graph(int n, double prob, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(prob);
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                e.emplace_back(u, v);
    return Graph(n, e);
}

// Brute force: is the vertex subset (bitmask) an induced cycle?
inline bool mask_is_induced_cycle(const Graph& g, unsigned mask) {
    std::vector<Vertex> vs;
    for (Vertex v = 0; v < g.order(); ++v)
        if (mask >> v & 1u)
            vs.push_back(v);
    if (vs.size() < 3)
        return false;
    for (Vertex v : vs) {
        int d = 0;
        for (Vertex u : vs)
            d += g.adjacent(u, v);
        if (d != 2)
            return false;
    }
    // 2-regular; connected means a single cycle
    std::vector<Vertex> stack{vs[0]};
    unsigned seen = 1u << vs[0];
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : vs)
            if (g.adjacent(u, v) && !(seen >> u & 1u)) {
                seen |= 1u << u;
                stack.push_back(u);
            }
    }
    return seen == mask;
}

// Length of the smallest induced odd cycle of length >= 5, or 0.
inline int brute_smallest_odd_hole(const Graph& g) {
    int best = 0;
    for (unsigned mask = 1; mask < (1u << g.order()); ++mask) {
        int k = __builtin_popcount(mask);
        if (k < 5 || k % 2 == 0 || (best && k >= best))
            continue;
        if (mask_is_induced_cycle(g, mask))
            best = k;
    }
    return best;
}

} // namespace testing_support
