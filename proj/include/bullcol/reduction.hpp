#pragma once

#include "bullcol/certificate.hpp"
#include "bullcol/graph.hpp"

#include <vector>

namespace bullcol {

/// A vertex removed while it had at most two neighbours left.
struct PeelStep {
    Vertex vertex = -1;
    VertexSet neighbours;
};

/// Node of the reduction tree. Vertex ids are ids of the input graph.
struct ReductionNode {
    enum class Kind { peel, split, block, empty };
    Kind kind = Kind::empty;
    std::vector<PeelStep> peeled; // peel: removal order
    Vertex cut = -1;              // split: shared cut vertex, -1 for a component split
    int block = -1;               // block: index into Reduction::blocks
    std::vector<int> children;
};

struct ReductionTrace {
    std::vector<ReductionNode> nodes;
    int root = -1;
};

/// 2-connected piece with minimum degree >= 3. Irreducible blocks have
/// maximum degree >= 4; the others are cubic and go to solve_low_degree.
struct ReducedBlock {
    VertexSet vertices; // sorted; local vertex i of the block graph is vertices[i]
    bool irreducible = true;
};

struct Reduction {
    std::vector<ReducedBlock> blocks;
    ReductionTrace trace;
};

/// Peels vertices of degree <= 2, splits at components and cut vertices,
/// and repeats until only blocks with minimum degree >= 3 remain.
Reduction reduce(const Graph& g);

/// Constructive Brooks colouring. Pre: max degree <= 3 and no K4 component.
Colouring solve_low_degree(const Graph& g);

/// Exact colouring of a block with neither odd hole nor odd antihole and no K4.
Colouring perfect_fallback(const Graph& g);

/// Folds per-block certificates (in block-local ids) into one certificate for g.
/// The first block without a colouring decides; its witness is mapped back.
Certificate recombine(const Graph& g, const Reduction& red, const std::vector<Certificate>& block_results,
                      ClassMode mode);

} // namespace bullcol
