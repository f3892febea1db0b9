#pragma once

#include "bullcol/hole.hpp"

#include <string>
#include <vector>

namespace bullcol::detail {

struct Candidate {
    PatternKind kind;
    VertexSet vertices;
};

/// Turns a violated fact into a witness: the listed candidates first, then a
/// search over Q plus `involved`, then over the whole graph.
Finding settle(const Graph& g, const HoleContext& q, ClassMode mode, const std::string& note,
               const std::vector<Candidate>& candidates, const VertexSet& involved);

/// Odd cycle inside G[s] with every vertex of s adjacent to hub: odd wheel or K4.
std::optional<Finding> odd_cycle_around(const Graph& g, const VertexSet& s, Vertex hub, const std::string& note);

/// Neighbour that makes v primed (inside A_i, or inside B_i and C_i), or -1.
Vertex partner(const Graph& g, const Classification& cls, Vertex v);

std::optional<Finding> validate_p5_facts(const Graph& g, const Classification& cls, ClassMode mode);

} // namespace bullcol::detail
