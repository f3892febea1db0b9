#pragma once

#include "bullcol/certificate.hpp"
#include "bullcol/hole.hpp"

#include <optional>
#include <variant>

namespace bullcol {

/// Gadget behind a forcing link at hole index i: a C_i apex, or an adjacent
/// pair inside B_i. Either one forces c(v_i) = c(v_i+2).
struct ForcingGadget {
    Vertex apex = -1;
    std::pair<Vertex, Vertex> pair{-1, -1};
};

struct ForcingGraph {
    std::vector<std::optional<ForcingGadget>> links; // indexed by hole position

    int length() const noexcept { return static_cast<int>(links.size()); }
    bool has(int i) const;
};

ForcingGraph build_forcing_graph(const Graph& g, const Classification& cls);

/// Colour per hole position, proper on the cycle and equal on every linked pair.
using CycleColouring = std::vector<Colour>;

/// Red from v_0, green from v_k-1, then a blue run and red for the rest.
/// Pre: odd length > 5. A chain of links closing on a hole edge gives a necklace.
std::variant<CycleColouring, SpindleNecklace> colour_cycle_with_forcing(const HoleContext& q, const ForcingGraph& fg);

/// Necklace from consecutive links s, s+2, .., s+2(k-1) whose end hubs
/// v_s and v_s+2k are joined by a hole edge. Throws ContractViolation otherwise.
SpindleNecklace extract_necklace_from_conflict(const HoleContext& q, const ForcingGraph& fg, const std::vector<int>& path);

/// (bull,E)-free block with hole length > 5 (also used for the C5-free classes).
Certificate solve_e_large_p(const Graph& g, const Classification& cls, ClassMode mode);
Certificate solve_c5free(const Graph& g, const Classification& cls, ClassMode mode);

/// (bull,E)-free block with a 5-hole.
Certificate solve_e_p5(const Graph& g, const Classification& cls);

} // namespace bullcol
