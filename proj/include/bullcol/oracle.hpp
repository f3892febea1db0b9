#pragma once

#include "bullcol/graph.hpp"
#include "bullcol/kinds.hpp"
#include "bullcol/witness.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace bullcol {

inline constexpr int kDefaultOracleCap = 25;

/// Exact 3-colouring by backtracking; none if g is not 3-colourable.
/// Throws RefusalError when g has more than `cap` vertices.
std::optional<Colouring> oracle_3colourable(const Graph& g, int cap = kDefaultOracleCap);

/// Subset enumeration plus a permutation isomorphism test. vertices[i] of
/// the result plays template vertex i of pattern_template(kind).
std::optional<VertexSet> oracle_find_pattern(const Graph& g, PatternKind kind, int cap = kDefaultOracleCap);

/// First forbidden pattern of the class found in g, if any.
std::optional<ForbiddenPatternWitness> oracle_class_violation(const Graph& g, ClassMode mode,
                                                              int cap = kDefaultOracleCap);

/// Named constructions. Cycle and wheel vertices: rim 0..p-1, wheel hub p.
Graph cycle_graph(int p);
Graph wheel_graph(int p);
Graph complement_graph(const Graph& g);

/// Erdos-Renyi G(n, prob) samples, rejected until the oracle confirms class
/// membership. Deterministic in `seed`; RefusalError after `budget` rejects.
Graph random_class(int n, double prob, ClassMode mode, std::uint64_t seed, int budget = 200000);

/// Grows a graph from an odd hole one random vertex at a time, keeping a
/// vertex only if the graph stays in the class. Produces far denser
/// class members than plain rejection at the same n. With wheel_free set,
/// vertices creating a K4 or an odd wheel are rejected too.
Graph grown_class(int n, ClassMode mode, std::uint64_t seed, int budget = 20000, bool wheel_free = false);

/// Generator front end: kind is cycle, wheel, spindle, complement_cycle,
/// random_class or grown_class; unknown kinds raise InputError.
struct GenerateRequest {
    std::string kind;
    int size = 5;
    double prob = 0.3;
    ClassMode mode = ClassMode::bull_e;
    std::uint64_t seed = 1;
};

Graph generate(const GenerateRequest& req);

} // namespace bullcol
