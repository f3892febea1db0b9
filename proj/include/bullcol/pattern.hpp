#pragma once

#include "bullcol/graph.hpp"
#include "bullcol/kinds.hpp"

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace bullcol {

/// Fixed template graph for a pattern kind. The vertex order matches the
/// order of the vertex list returned by find_induced_pattern.
///
/// S(i,j,k) templates list the centre first, then each leg outward.
/// Bull: vertices v1..v5 with edges v1v2, v2v3, v3v4, v4v5, v2v4.
/// C7 complement: i ~ j iff the cyclic distance of i and j (mod 7) is 2 or 3.
const Graph& pattern_template(PatternKind kind);

/// Exhaustive backtracking embedding of the template as an induced subgraph.
/// On success, result[i] is the host vertex playing template vertex i.
std::optional<VertexSet> find_induced_pattern(const Graph& g, PatternKind kind);

/// Restricts the search to `allowed` and, if given, to embeddings using `required`.
std::optional<VertexSet> find_induced_pattern_within(const Graph& g, PatternKind kind,
                                                     std::span<const Vertex> allowed,
                                                     std::optional<Vertex> required = std::nullopt);

/// True iff `s` induces a graph isomorphic to the template.
bool induces_pattern(const Graph& g, std::span<const Vertex> s, PatternKind kind);

/// A smallest induced odd hole v_0 .. v_{p-1} with cyclic indexing.
class HoleContext {
public:
    HoleContext() = default;
    explicit HoleContext(VertexSet cycle) : cycle_(std::move(cycle)) {}

    int length() const noexcept { return static_cast<int>(cycle_.size()); }
    /// Cyclic access; any integer index is reduced modulo the length.
    Vertex at(int i) const {
        int p = length();
        return cycle_[static_cast<std::size_t>(((i % p) + p) % p)];
    }
    int wrap(int i) const {
        int p = length();
        return ((i % p) + p) % p;
    }
    const VertexSet& cycle() const noexcept { return cycle_; }

    /// Same cycle read from `start` in direction `step` (+1 or -1).
    HoleContext relabelled(int start, int step) const;

private:
    VertexSet cycle_;
};

/// Is `cycle` (in order) an induced cycle of g?
bool is_induced_cycle(const Graph& g, std::span<const Vertex> cycle);

/// Shortest induced odd cycle of length >= 5; lengths are tried in increasing order.
std::optional<HoleContext> smallest_odd_hole(const Graph& g);

/// All induced cycles of exactly `length` (each reported once, smallest vertex
/// first, second vertex smaller than the last).
std::vector<VertexSet> induced_cycles_of_length(const Graph& g, int length, std::size_t limit = 0);

/// Seven vertices inducing the complement of C7, labelled so that i ~ j iff
/// their cyclic distance (mod 7) is 2 or 3. Precondition: g is K4-free.
std::optional<VertexSet> find_odd_antihole7(const Graph& g);

/// Chain of diamonds hub_i - {a_i, b_i} - hub_{i+1}, closed by the edge hub_k hub_0.
struct SpindleNecklace {
    VertexSet hubs;
    std::vector<std::pair<Vertex, Vertex>> pairs;

    int diamonds() const noexcept { return static_cast<int>(pairs.size()); }
    Edge closing_edge() const { return {hubs.back(), hubs.front()}; }
    friend bool operator==(const SpindleNecklace&, const SpindleNecklace&) = default;
};

/// Hub plus an induced odd cycle inside its neighbourhood. A rim of length 3 is a K4.
struct OddWheelWitness {
    Vertex hub = -1;
    VertexSet rim;
    friend bool operator==(const OddWheelWitness&, const OddWheelWitness&) = default;
};

SpindleNecklace extract_necklace_from_antihole(const Graph& g, std::span<const Vertex> s);

std::optional<OddWheelWitness> find_odd_wheel(const Graph& g);

/// Induced odd cycle (length >= 3) inside G[s], if G[s] is not bipartite.
std::optional<VertexSet> find_induced_odd_cycle(const Graph& g, std::span<const Vertex> s);

/// Shortcuts an odd closed walk along chords until it is an induced odd cycle.
VertexSet shrink_to_induced_odd_cycle(const Graph& g, VertexSet cycle);

std::optional<std::array<Vertex, 4>> find_k4(const Graph& g);

/// Diamond-necklace normal form of M_{3p+1}: hubs u_0, u_3, .., u_{3p},
/// pair {u_{3i-2}, u_{3i-1}} between u_{3i-3} and u_{3i}, closing edge u_{3p} u_0.
Graph build_spindle(int p);
SpindleNecklace spindle_necklace(int p);

bool verify_necklace(const Graph& g, const SpindleNecklace& w);

/// Exhaustive search for a necklace using only `allowed` vertices, trying
/// 1, 2, .. up to `max_diamonds` diamonds; the first (smallest) hit wins.
std::optional<SpindleNecklace> find_necklace(const Graph& g, std::span<const Vertex> allowed, int max_diamonds);
std::optional<SpindleNecklace> find_necklace(const Graph& g, int max_diamonds);

} // namespace bullcol
