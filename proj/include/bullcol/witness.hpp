#pragma once

#include "bullcol/graph.hpp"
#include "bullcol/kinds.hpp"
#include "bullcol/pattern.hpp"

#include <array>
#include <string>
#include <variant>

namespace bullcol {

struct K4Witness {
    std::array<Vertex, 4> vertices{};
    friend bool operator==(const K4Witness&, const K4Witness&) = default;
};

/// An induced copy of a named pattern; vertices[i] plays template vertex i.
struct ForbiddenPatternWitness {
    PatternKind pattern = PatternKind::bull;
    VertexSet vertices;
    friend bool operator==(const ForbiddenPatternWitness&, const ForbiddenPatternWitness&) = default;
};

using Witness = std::variant<K4Witness, OddWheelWitness, SpindleNecklace, ForbiddenPatternWitness>;

/// Relabels every vertex v of the witness to to_parent[v].
Witness remap(const Witness& w, std::span<const Vertex> to_parent);

/// True for the witnesses that prove non-3-colourability.
bool proves_not_colourable(const Witness& w);

/// Short kind tag used in summaries: k4, odd_wheel, spindle_necklace, forbidden_pattern.
std::string_view witness_kind(const Witness& w);

std::string describe(const Witness& w);

} // namespace bullcol
