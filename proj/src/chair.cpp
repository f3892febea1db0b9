#include "bullcol/chair.hpp"
#include "bullcol/ecolor.hpp"

#include <algorithm>

namespace bullcol {

Certificate solve_chair(const Graph& g, const Classification& cls) {
    constexpr ClassMode mode = ClassMode::bull_chair;
    const HoleContext& q = cls.hole();
    int p = q.length();

    if (p == 5) {
        // Every hole vertex needs a C or D neighbour, which closes an M7.
        VertexSet near = q.cycle();
        for (Vertex v : q.cycle())
            for (Vertex u : g.neighbours(v))
                near.push_back(u);
        std::sort(near.begin(), near.end());
        near.erase(std::unique(near.begin(), near.end()), near.end());
        if (auto w = local_witness(g, q, near, mode))
            return Certificate::witness(*w, mode, "chair class, hole length 5");
        throw InternalError("chair class with a 5-hole but no necklace within three diamonds");
    }

    int k = (p - 1) / 2;
    auto has_c = [&](int i) { return !cls.set(Region::c, i).empty(); };
    ForcingGraph fg = build_forcing_graph(g, cls);
    for (int s = 0; s < p; ++s) {
        std::vector<int> chain;
        for (int t = 0; t < k && has_c(s + 2 * t); ++t)
            chain.push_back(q.wrap(s + 2 * t));
        if (static_cast<int>(chain.size()) == k)
            return Certificate::witness(extract_necklace_from_conflict(q, fg, chain), mode,
                                        "chair class: C apexes at (p-1)/2 consecutive links");
    }

    Colouring col(g.order());
    int start = -1;
    for (int i = 0; i < p && start < 0; ++i)
        if (has_c(i) && !has_c(i - 2))
            start = i;
    if (start < 0) {
        for (int i = 0; i < p; ++i)
            col[q.at(i)] = i == p - 1 ? kBlue : (i % 2 == 0 ? kRed : kGreen);
    } else {
        int len = 2;
        while (has_c(start + len))
            len += 2;
        // v_start .. v_start+len alternate blue/red, the rest red/green.
        for (int t = 0; t <= len; ++t)
            col[q.at(start + t)] = t % 2 == 0 ? kBlue : kRed;
        for (int t = len + 1; t < p; ++t)
            col[q.at(start + t)] = (t - len - 1) % 2 == 0 ? kRed : kGreen;
    }
    for (int i = 0; i < p; ++i)
        for (Vertex w : cls.set(Region::c, i))
            col[w] = 3 - col[q.at(i)] - col[q.at(i + 1)];
    if (!col.complete())
        throw InternalError("chair class block has vertices outside Q and C");
    if (auto bad = monochromatic_edge(g, col))
        throw InternalError("chair colouring clashes on edge " + std::to_string(bad->first) + "-" +
                            std::to_string(bad->second));
    return Certificate::colouring(std::move(col), mode, "chair class, hole length " + std::to_string(p));
}

} // namespace bullcol
