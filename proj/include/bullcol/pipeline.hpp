#pragma once

#include "bullcol/certificate.hpp"
#include "bullcol/graph.hpp"
#include "bullcol/kinds.hpp"

namespace bullcol {

struct SolveOptions {
    /// Scan the whole input for the class patterns before solving.
    bool validate_class = true;
    /// Re-check the final certificate; a failure raises InternalError.
    bool self_verify = true;
};

/// Solves one reduced block (local ids). The block has minimum degree >= 3.
Certificate solve_block(const Graph& block, ClassMode mode, bool irreducible, bool validated);

/// Full pipeline: class scan, reduction, per-block solve, recombination.
Certificate solve(const Graph& g, ClassMode mode, const SolveOptions& options = {});

} // namespace bullcol
