#pragma once

#include "bullcol/graph.hpp"
#include "bullcol/kinds.hpp"
#include "bullcol/pattern.hpp"
#include "bullcol/witness.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>

namespace bullcol {

/// Where a vertex sits relative to the hole. Indices are 0-based hole positions.
/// a: N_Q = {v_i}; b: {v_i, v_i+2}; c: {v_i, v_i+1, v_i+2}; d: {v_i, .., v_i+3}.
enum class Region : char { hole, a, b, c, d };

struct Membership {
    Region region = Region::hole;
    int anchor = 0;
};

/// Partition of V(G) around a smallest odd hole.
class Classification {
public:
    Classification() = default;
    Classification(const Graph& g, HoleContext hole, std::vector<Membership> members);

    const HoleContext& hole() const noexcept { return hole_; }
    int length() const noexcept { return hole_.length(); }
    const Membership& of(Vertex v) const { return members_[static_cast<std::size_t>(v)]; }
    bool in(Vertex v, Region r, int i) const;

    /// Vertices of the set with anchor i (taken modulo the hole length).
    const VertexSet& set(Region r, int i) const;
    /// All vertices of the region, over every anchor.
    VertexSet all(Region r) const;

    /// A'_i / B'_i membership; A*_i and B*_i are the rest of A_i and B_i.
    bool primed(Vertex v) const { return primed_[static_cast<std::size_t>(v)] != 0; }
    VertexSet primed_set(Region r, int i) const;
    VertexSet star_set(Region r, int i) const;

private:
    HoleContext hole_;
    std::vector<Membership> members_;
    std::vector<char> primed_;
    std::map<std::pair<Region, int>, VertexSet> sets_;
    VertexSet empty_;
};

/// Longest run of consecutive hole neighbours of w and the index where the
/// first such run starts. A run of length p means w sees the whole hole.
std::pair<int, int> q_value(const Graph& g, const HoleContext& q, Vertex w);

/// A certificate-worthy structure found while analysing a block, with a
/// short note on which argument produced it.
struct Finding {
    Witness witness;
    std::string note;
};

using ClassifyResult = std::variant<Classification, Finding>;

/// Classifies every vertex outside the hole or returns the witness that
/// prevents it. Pre: q is a smallest odd hole of g, g has no K4 and no odd wheel.
ClassifyResult classify(const Graph& g, const HoleContext& q, ClassMode mode);

/// Checks the structural facts that the colouring step relies on for the
/// given mode; returns the first violation as a witness.
std::optional<Finding> validate_structure(const Graph& g, const Classification& cls, ClassMode mode);

/// Edge types for edges not touching the hole (type 0 for those that do).
/// Throws InternalError for an edge that fits no type.
std::map<Edge, int> edge_types(const Graph& g, const Classification& cls);

/// Searches Q plus `extra` for a K4, odd wheel, class pattern or necklace.
std::optional<Witness> local_witness(const Graph& g, const HoleContext& q, const VertexSet& extra, ClassMode mode);

/// The same search over the whole graph.
std::optional<Witness> global_witness(const Graph& g, ClassMode mode);

} // namespace bullcol
