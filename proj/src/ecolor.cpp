#include "bullcol/ecolor.hpp"
#include "hole_detail.hpp"

#include <algorithm>

namespace bullcol {

bool ForcingGraph::has(int i) const {
    int p = length();
    return links[static_cast<std::size_t>(((i % p) + p) % p)].has_value();
}

ForcingGraph build_forcing_graph(const Graph& g, const Classification& cls) {
    ForcingGraph fg;
    int p = cls.length();
    fg.links.resize(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) {
        const VertexSet& c = cls.set(Region::c, i);
        if (!c.empty()) {
            fg.links[static_cast<std::size_t>(i)] = ForcingGadget{c.front(), {-1, -1}};
            continue;
        }
        for (Vertex w : cls.set(Region::b, i)) {
            Vertex w2 = cls.primed(w) ? detail::partner(g, cls, w) : -1;
            if (w2 >= 0) {
                fg.links[static_cast<std::size_t>(i)] = ForcingGadget{-1, {w, w2}};
                break;
            }
        }
    }
    return fg;
}

SpindleNecklace extract_necklace_from_conflict(const HoleContext& q, const ForcingGraph& fg, const std::vector<int>& path) {
    int p = q.length();
    if (path.empty() || fg.length() != p)
        throw ContractViolation("necklace extraction needs a nonempty chain of links");
    int s = q.wrap(path.front());
    for (std::size_t t = 0; t < path.size(); ++t) {
        int m = q.wrap(path[t]);
        if (m != q.wrap(s + 2 * static_cast<int>(t)) || !fg.has(m))
            throw ContractViolation("chain is not a run of consecutive forcing links");
    }
    int end = q.wrap(s + 2 * static_cast<int>(path.size()));
    if (q.wrap(end + 1) != s && q.wrap(s + 1) != end)
        throw ContractViolation("chain ends are not joined by a hole edge");
    SpindleNecklace out;
    out.hubs.push_back(q.at(s));
    for (int m : path) {
        const ForcingGadget& gad = *fg.links[static_cast<std::size_t>(q.wrap(m))];
        if (gad.apex >= 0)
            out.pairs.emplace_back(gad.apex, q.at(m + 1));
        else
            out.pairs.push_back(gad.pair);
        out.hubs.push_back(q.at(m + 2));
    }
    return out;
}

namespace {

// Indices reachable from `start` through links, i.e. forced equal to it.
std::vector<int> forced_class(const HoleContext& q, const ForcingGraph& fg, int start) {
    std::vector<int> out{q.wrap(start)};
    std::vector<char> seen(static_cast<std::size_t>(q.length()), 0);
    seen[static_cast<std::size_t>(q.wrap(start))] = 1;
    for (std::size_t head = 0; head < out.size(); ++head) {
        int i = out[head];
        for (int nb : {i + 2, i - 2}) {
            int link = nb == i + 2 ? i : i - 2;
            int j = q.wrap(nb);
            if (fg.has(link) && !seen[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = 1;
                out.push_back(j);
            }
        }
    }
    return out;
}

// A forced class containing two hole neighbours covers k+1 consecutive ring
// positions; return the k links starting at the earliest such position.
std::optional<std::vector<int>> conflict_chain(const HoleContext& q, const ForcingGraph& fg, const std::vector<int>& cls) {
    int p = q.length(), k = (p - 1) / 2;
    std::vector<char> in(static_cast<std::size_t>(p), 0);
    for (int i : cls)
        in[static_cast<std::size_t>(i)] = 1;
    bool clash = false;
    for (int i = 0; i < p; ++i)
        clash = clash || (in[static_cast<std::size_t>(i)] && in[static_cast<std::size_t>(q.wrap(i + 1))]);
    if (!clash)
        return std::nullopt;
    for (int s = 0; s < p; ++s) {
        std::vector<int> chain;
        for (int t = 0; t < k && fg.has(s + 2 * t); ++t)
            chain.push_back(q.wrap(s + 2 * t));
        if (static_cast<int>(chain.size()) == k && in[static_cast<std::size_t>(s)])
            return chain;
    }
    throw InternalError("forced class touches a hole edge but holds no chain of links");
}

} // namespace

std::variant<CycleColouring, SpindleNecklace> colour_cycle_with_forcing(const HoleContext& q, const ForcingGraph& fg) {
    int p = q.length();
    if (p <= 5 || p % 2 == 0 || fg.length() != p)
        throw ContractViolation("cycle forcing needs an odd hole longer than 5");
    CycleColouring col(static_cast<std::size_t>(p), kUncoloured);
    auto at = [&](int i) -> Colour& { return col[static_cast<std::size_t>(q.wrap(i))]; };

    std::vector<int> red = forced_class(q, fg, 0);
    if (auto chain = conflict_chain(q, fg, red))
        return extract_necklace_from_conflict(q, fg, *chain);
    for (int i : red)
        at(i) = kRed;
    int k = -1;
    for (int i = 0; i < p && k < 0; ++i)
        if (at(i) == kRed && at(i - 2) == kUncoloured)
            k = i;
    if (k < 0)
        throw InternalError("red class covers the whole hole without a conflict");
    std::vector<int> green = forced_class(q, fg, k - 1);
    if (auto chain = conflict_chain(q, fg, green))
        return extract_necklace_from_conflict(q, fg, *chain);
    for (int i : green)
        at(i) = kGreen;
    // Blue run backwards from v_k-2 up to the first coloured vertex.
    for (int i = k - 2; at(i) == kUncoloured; i -= 2)
        at(i) = kBlue;
    for (Colour& c : col)
        if (c == kUncoloured)
            c = kRed;
    return col;
}

namespace {

Certificate large_p(const Graph& g, const Classification& cls, ClassMode mode) {
    const HoleContext& q = cls.hole();
    int p = q.length();
    ForcingGraph fg = build_forcing_graph(g, cls);
    auto cycle = colour_cycle_with_forcing(q, fg);
    if (auto* neck = std::get_if<SpindleNecklace>(&cycle))
        return Certificate::witness(*neck, mode, "forcing chain closes on a hole edge");
    const CycleColouring& cc = std::get<CycleColouring>(cycle);
    Colouring col(g.order());
    for (int i = 0; i < p; ++i)
        col[q.at(i)] = cc[static_cast<std::size_t>(i)];

    for (int i = 0; i < p; ++i) {
        Colour ci = cc[static_cast<std::size_t>(i)], ci1 = cc[static_cast<std::size_t>(q.wrap(i + 1))];
        Colour apex_colour = 3 - ci - ci1;
        Colour other = 3 - ci - apex_colour;
        VertexSet part;
        for (Vertex w : cls.set(Region::b, i))
            if (cls.primed(w))
                part.push_back(w);
        const VertexSet& cset = cls.set(Region::c, i);
        part.insert(part.end(), cset.begin(), cset.end());
        std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
        for (Vertex w : part)
            in[static_cast<std::size_t>(w)] = 1;
        std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
        for (Vertex root : part) {
            if (side[static_cast<std::size_t>(root)] >= 0)
                continue;
            VertexSet comp{root};
            side[static_cast<std::size_t>(root)] = 0;
            for (std::size_t head = 0; head < comp.size(); ++head)
                for (Vertex u : g.neighbours(comp[head]))
                    if (in[static_cast<std::size_t>(u)] && side[static_cast<std::size_t>(u)] < 0) {
                        side[static_cast<std::size_t>(u)] = 1 - side[static_cast<std::size_t>(comp[head])];
                        comp.push_back(u);
                    }
            int apex_side = -1;
            bool clash = false;
            for (Vertex w : comp)
                if (cls.of(w).region == Region::c) {
                    int s = side[static_cast<std::size_t>(w)];
                    clash = clash || (apex_side >= 0 && apex_side != s);
                    apex_side = s;
                }
            if (clash) {
                if (auto w = local_witness(g, q, comp, mode))
                    return Certificate::witness(*w, mode, "C vertices on both sides of a B'/C component");
                if (auto w = global_witness(g, mode))
                    return Certificate::witness(*w, mode, "C vertices on both sides of a B'/C component (block search)");
                throw InternalError("B'/C component with C vertices on both sides and no witness");
            }
            if (apex_side < 0)
                apex_side = 0;
            for (Vertex w : comp)
                col[w] = side[static_cast<std::size_t>(w)] == apex_side ? apex_colour : other;
        }
    }
    for (int i = 0; i < p; ++i)
        for (Vertex w : cls.set(Region::b, i))
            if (!cls.primed(w))
                col[w] = cc[static_cast<std::size_t>(q.wrap(i + 1))];
    if (!col.complete())
        throw InternalError("vertices outside Q, B and C in a block with a long hole");
    if (auto bad = monochromatic_edge(g, col))
        throw InternalError("long-hole colouring clashes on edge " + std::to_string(bad->first) + "-" +
                            std::to_string(bad->second));
    return Certificate::colouring(std::move(col), mode, "forcing colouring, hole length " + std::to_string(p));
}

} // namespace

Certificate solve_e_large_p(const Graph& g, const Classification& cls, ClassMode mode) {
    if (cls.length() <= 5)
        throw ContractViolation("solve_e_large_p needs a hole longer than 5");
    return large_p(g, cls, mode);
}

Certificate solve_c5free(const Graph& g, const Classification& cls, ClassMode mode) {
    if (mode != ClassMode::bull_c5_s113 && mode != ClassMode::bull_c5_s123)
        throw ContractViolation("solve_c5free needs a C5-free class");
    return solve_e_large_p(g, cls, mode);
}

} // namespace bullcol
