#include "bullcol/pipeline.hpp"

#include "bullcol/chair.hpp"
#include "bullcol/ecolor.hpp"
#include "bullcol/errors.hpp"
#include "bullcol/hole.hpp"
#include "bullcol/pattern.hpp"
#include "bullcol/reduction.hpp"

namespace bullcol {

namespace {

std::optional<Certificate> class_scan(const Graph& g, ClassMode mode) {
    for (PatternKind kind : forbidden_patterns(mode))
        if (auto s = find_induced_pattern(g, kind))
            return Certificate::witness(ForbiddenPatternWitness{kind, *s}, mode,
                                        std::string("input contains an induced ") + std::string(pattern_name(kind)));
    return std::nullopt;
}

Certificate solve_block_unguarded(const Graph& b, ClassMode mode, bool irreducible) {
    if (auto k4 = find_k4(b))
        return Certificate::witness(K4Witness{*k4}, mode, "block contains K4");
    if (!irreducible)
        return Certificate::colouring(solve_low_degree(b), mode, "subcubic block");
    if (auto wheel = find_odd_wheel(b))
        return Certificate::witness(*wheel, mode, "block contains an odd wheel");

    auto hole = smallest_odd_hole(b);
    if (!hole) {
        if (auto s = find_odd_antihole7(b))
            return Certificate::witness(extract_necklace_from_antihole(b, *s), mode, "complement of C7 in block");
        return Certificate::colouring(perfect_fallback(b), mode, "block without odd holes or antiholes");
    }

    auto res = classify(b, *hole, mode);
    if (auto* f = std::get_if<Finding>(&res))
        return Certificate::witness(f->witness, mode, f->note);
    const Classification& cls = std::get<Classification>(res);
    if (auto f = validate_structure(b, cls, mode))
        return Certificate::witness(f->witness, mode, f->note);

    switch (mode) {
    case ClassMode::bull_chair:
        return solve_chair(b, cls);
    case ClassMode::bull_e:
        return hole->length() > 5 ? solve_e_large_p(b, cls, mode) : solve_e_p5(b, cls);
    case ClassMode::bull_c5_s113:
    case ClassMode::bull_c5_s123:
        return solve_c5free(b, cls, mode);
    }
    throw InternalError("unknown class mode");
}

} // namespace

Certificate solve_block(const Graph& block, ClassMode mode, bool irreducible, bool validated) {
    try {
        return solve_block_unguarded(block, mode, irreducible);
    } catch (const InternalError&) {
        // Without the upfront scan a block outside the class can break the
        // structure the colorizers rely on; report the pattern instead.
        if (!validated)
            if (auto c = class_scan(block, mode))
                return *c;
        throw;
    }
}

Certificate solve(const Graph& g, ClassMode mode, const SolveOptions& options) {
    if (options.validate_class)
        if (auto c = class_scan(g, mode))
            return *c;
    Reduction red = reduce(g);
    std::vector<Certificate> results;
    results.reserve(red.blocks.size());
    for (const ReducedBlock& blk : red.blocks) {
        Graph b = induced_subgraph(g, blk.vertices);
        results.push_back(solve_block(b, mode, blk.irreducible, options.validate_class));
    }
    Certificate cert = recombine(g, red, results, mode);
    if (options.self_verify) {
        VerifyReport rep = check_certificate(g, cert);
        if (!rep.ok)
            throw InternalError("certificate failed self-check: " + rep.reason);
    }
    return cert;
}

} // namespace bullcol
