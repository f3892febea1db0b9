#include "bullcol/reduction.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace bullcol {

namespace {

using Assignment = std::vector<std::pair<Vertex, Colour>>;

// Components of G[s] after deleting `skip` (may be -1).
std::vector<VertexSet> components(const Graph& g, const VertexSet& s, Vertex skip) {
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0), seen(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : s)
        in[static_cast<std::size_t>(v)] = 1;
    if (skip >= 0)
        in[static_cast<std::size_t>(skip)] = 0;
    std::vector<VertexSet> out;
    for (Vertex start : s) {
        if (!in[static_cast<std::size_t>(start)] || seen[static_cast<std::size_t>(start)])
            continue;
        VertexSet comp{start};
        seen[static_cast<std::size_t>(start)] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (Vertex u : g.neighbours(comp[head]))
                if (in[static_cast<std::size_t>(u)] && !seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    comp.push_back(u);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

// Smallest cut vertex of the connected graph G[s], or -1.
Vertex first_cut_vertex(const Graph& g, const VertexSet& s) {
    if (s.size() < 3)
        return -1;
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : s)
        in[static_cast<std::size_t>(v)] = 1;
    std::vector<int> disc(static_cast<std::size_t>(g.order()), -1), low(static_cast<std::size_t>(g.order()), 0);
    std::vector<char> cut(static_cast<std::size_t>(g.order()), 0);
    int timer = 0;
    std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
        disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
        int children = 0;
        for (Vertex u : g.neighbours(v)) {
            if (!in[static_cast<std::size_t>(u)] || u == parent)
                continue;
            if (disc[static_cast<std::size_t>(u)] >= 0) {
                low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(u)]);
                continue;
            }
            ++children;
            dfs(u, v);
            low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(u)]);
            if (parent >= 0 && low[static_cast<std::size_t>(u)] >= disc[static_cast<std::size_t>(v)])
                cut[static_cast<std::size_t>(v)] = 1;
        }
        if (parent < 0 && children > 1)
            cut[static_cast<std::size_t>(v)] = 1;
    };
    dfs(s.front(), -1);
    for (Vertex v : s)
        if (cut[static_cast<std::size_t>(v)])
            return v;
    return -1;
}

class Reducer {
public:
    explicit Reducer(const Graph& g) : g_(g) {}

    Reduction run() {
        VertexSet all(static_cast<std::size_t>(g_.order()));
        std::iota(all.begin(), all.end(), 0);
        red_.trace.root = visit(all);
        return std::move(red_);
    }

private:
    int add(ReductionNode node) {
        red_.trace.nodes.push_back(std::move(node));
        return static_cast<int>(red_.trace.nodes.size()) - 1;
    }

    int visit(VertexSet s) {
        // Peel degree <= 2 vertices until none is left.
        std::vector<char> in(static_cast<std::size_t>(g_.order()), 0);
        std::vector<int> deg(static_cast<std::size_t>(g_.order()), 0);
        for (Vertex v : s)
            in[static_cast<std::size_t>(v)] = 1;
        for (Vertex v : s)
            for (Vertex u : g_.neighbours(v))
                deg[static_cast<std::size_t>(v)] += in[static_cast<std::size_t>(u)];
        std::vector<PeelStep> peeled;
        VertexSet queue;
        for (Vertex v : s)
            if (deg[static_cast<std::size_t>(v)] <= 2)
                queue.push_back(v);
        while (!queue.empty()) {
            std::sort(queue.begin(), queue.end(), std::greater<>());
            Vertex v = queue.back();
            queue.pop_back();
            if (!in[static_cast<std::size_t>(v)])
                continue;
            PeelStep step{v, {}};
            in[static_cast<std::size_t>(v)] = 0;
            for (Vertex u : g_.neighbours(v))
                if (in[static_cast<std::size_t>(u)]) {
                    step.neighbours.push_back(u);
                    if (--deg[static_cast<std::size_t>(u)] <= 2)
                        queue.push_back(u);
                }
            peeled.push_back(std::move(step));
        }
        if (!peeled.empty()) {
            VertexSet rest;
            for (Vertex v : s)
                if (in[static_cast<std::size_t>(v)])
                    rest.push_back(v);
            ReductionNode node;
            node.kind = ReductionNode::Kind::peel;
            node.peeled = std::move(peeled);
            int child = rest.empty() ? add(ReductionNode{}) : visit(std::move(rest));
            node.children.push_back(child);
            return add(std::move(node));
        }
        if (s.empty())
            return add(ReductionNode{});

        auto comps = components(g_, s, -1);
        if (comps.size() > 1) {
            ReductionNode node;
            node.kind = ReductionNode::Kind::split;
            for (auto& c : comps)
                node.children.push_back(visit(std::move(c)));
            return add(std::move(node));
        }
        Vertex cut = first_cut_vertex(g_, s);
        if (cut >= 0) {
            ReductionNode node;
            node.kind = ReductionNode::Kind::split;
            node.cut = cut;
            for (auto& c : components(g_, s, cut)) {
                c.push_back(cut);
                std::sort(c.begin(), c.end());
                node.children.push_back(visit(std::move(c)));
            }
            return add(std::move(node));
        }
        ReducedBlock block;
        block.vertices = s;
        block.irreducible = false;
        for (Vertex v : s)
            if (deg[static_cast<std::size_t>(v)] >= 4)
                block.irreducible = true;
        red_.blocks.push_back(std::move(block));
        ReductionNode node;
        node.kind = ReductionNode::Kind::block;
        node.block = static_cast<int>(red_.blocks.size()) - 1;
        return add(std::move(node));
    }

    const Graph& g_;
    Reduction red_;
};

Colour free_colour(const Graph& g, Vertex v, const std::vector<Colour>& col) {
    bool used[3] = {false, false, false};
    for (Vertex u : g.neighbours(v))
        if (col[static_cast<std::size_t>(u)] >= 0)
            used[col[static_cast<std::size_t>(u)]] = true;
    for (Colour c = 0; c < 3; ++c)
        if (!used[c])
            return c;
    return kUncoloured;
}

// Greedy in reverse BFS order from root inside `allowed`: every vertex but
// the root still has its uncoloured BFS parent when it is coloured.
bool colour_reverse_bfs(const Graph& g, Vertex root, const std::vector<char>& allowed, std::vector<Colour>& col) {
    VertexSet order{root};
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    seen[static_cast<std::size_t>(root)] = 1;
    for (std::size_t head = 0; head < order.size(); ++head)
        for (Vertex u : g.neighbours(order[head]))
            if (allowed[static_cast<std::size_t>(u)] && !seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                order.push_back(u);
            }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Colour c = free_colour(g, *it, col);
        if (c == kUncoloured)
            return false;
        col[static_cast<std::size_t>(*it)] = c;
    }
    return true;
}

bool is_k4(const Graph& g) {
    return g.order() == 4 && g.size() == 6;
}

Colouring low_degree_connected(const Graph& g) {
    int n = g.order();
    std::vector<Colour> col(static_cast<std::size_t>(n), kUncoloured);
    std::vector<char> all(static_cast<std::size_t>(n), 1);
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) < 3) {
            if (!colour_reverse_bfs(g, v, all, col))
                throw InternalError("greedy colouring from a low-degree root failed");
            return Colouring(col);
        }
    if (is_k4(g))
        throw ContractViolation("solve_low_degree called on K4");
    VertexSet everything(static_cast<std::size_t>(n));
    std::iota(everything.begin(), everything.end(), 0);
    Vertex cut = first_cut_vertex(g, everything);
    if (cut >= 0) {
        // Every piece sees the cut vertex with degree < 3, so each piece is
        // coloured greedily and the pieces are aligned at the cut vertex.
        Colour target = kUncoloured;
        for (const auto& comp : components(g, everything, cut)) {
            std::vector<char> allowed(static_cast<std::size_t>(n), 0);
            for (Vertex v : comp)
                allowed[static_cast<std::size_t>(v)] = 1;
            allowed[static_cast<std::size_t>(cut)] = 1;
            std::vector<Colour> local(static_cast<std::size_t>(n), kUncoloured);
            if (!colour_reverse_bfs(g, cut, allowed, local))
                throw InternalError("greedy colouring of a cubic piece failed");
            Colour here = local[static_cast<std::size_t>(cut)];
            if (target == kUncoloured)
                target = here;
            for (Vertex v : comp) {
                Colour c = local[static_cast<std::size_t>(v)];
                col[static_cast<std::size_t>(v)] = c == here ? target : c == target ? here : c;
            }
        }
        col[static_cast<std::size_t>(cut)] = target;
        return Colouring(col);
    }
    // 2-connected cubic, not K4: colour two non-adjacent neighbours y, z of x
    // alike, then go greedily towards x; x sees a repeated colour.
    for (Vertex x = 0; x < n; ++x) {
        auto nb = g.neighbours(x);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                Vertex y = nb[a], z = nb[b];
                if (g.adjacent(y, z))
                    continue;
                std::vector<char> allowed(static_cast<std::size_t>(n), 1);
                allowed[static_cast<std::size_t>(y)] = allowed[static_cast<std::size_t>(z)] = 0;
                VertexSet rest;
                for (Vertex v = 0; v < n; ++v)
                    if (allowed[static_cast<std::size_t>(v)])
                        rest.push_back(v);
                if (components(g, rest, -1).size() != 1)
                    continue;
                std::fill(col.begin(), col.end(), kUncoloured);
                col[static_cast<std::size_t>(y)] = col[static_cast<std::size_t>(z)] = kRed;
                if (colour_reverse_bfs(g, x, allowed, col))
                    return Colouring(col);
            }
    }
    throw InternalError("no Brooks triple found in a 2-connected cubic graph");
}

class ExactColouring {
public:
    explicit ExactColouring(const Graph& g) : g_(g), col_(static_cast<std::size_t>(g.order()), kUncoloured) {}

    bool run() { return step(0); }
    Colouring result() const { return Colouring(col_); }

private:
    // DSATUR branching: most constrained uncoloured vertex first.
    bool step(int placed) {
        if (placed == g_.order())
            return true;
        Vertex best = -1;
        int best_sat = -1, best_deg = -1;
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (col_[static_cast<std::size_t>(v)] != kUncoloured)
                continue;
            int mask = 0;
            for (Vertex u : g_.neighbours(v))
                if (col_[static_cast<std::size_t>(u)] >= 0)
                    mask |= 1 << col_[static_cast<std::size_t>(u)];
            int sat = __builtin_popcount(static_cast<unsigned>(mask));
            if (sat > best_sat || (sat == best_sat && g_.degree(v) > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = g_.degree(v);
            }
        }
        for (Colour c = 0; c < 3; ++c) {
            bool clash = false;
            for (Vertex u : g_.neighbours(best))
                clash = clash || col_[static_cast<std::size_t>(u)] == c;
            if (clash)
                continue;
            col_[static_cast<std::size_t>(best)] = c;
            if (step(placed + 1))
                return true;
            col_[static_cast<std::size_t>(best)] = kUncoloured;
            if (placed == 0)
                break; // colour symmetry: the first vertex may as well be red
        }
        return false;
    }

    const Graph& g_;
    std::vector<Colour> col_;
};

class Recombiner {
public:
    Recombiner(const Graph& g, const Reduction& red, const std::vector<Certificate>& results)
        : g_(g), red_(red), results_(results), scratch_(static_cast<std::size_t>(g.order()), kUncoloured) {}

    Assignment colour(int id) {
        if (id < 0 || static_cast<std::size_t>(id) >= red_.trace.nodes.size())
            throw InternalError("reduction trace refers to a missing node");
        const ReductionNode& node = red_.trace.nodes[static_cast<std::size_t>(id)];
        switch (node.kind) {
        case ReductionNode::Kind::empty: return {};
        case ReductionNode::Kind::block: {
            const ReducedBlock& b = red_.blocks.at(static_cast<std::size_t>(node.block));
            const Colouring& c = results_.at(static_cast<std::size_t>(node.block)).colours();
            if (c.size() != static_cast<int>(b.vertices.size()))
                throw InternalError("block colouring has the wrong size");
            Assignment out;
            for (std::size_t i = 0; i < b.vertices.size(); ++i)
                out.emplace_back(b.vertices[i], c[static_cast<Vertex>(i)]);
            return out;
        }
        case ReductionNode::Kind::split: {
            Assignment out;
            Colour target = kUncoloured;
            for (int child : node.children) {
                Assignment part = colour(child);
                if (node.cut < 0) {
                    out.insert(out.end(), part.begin(), part.end());
                    continue;
                }
                auto it = std::find_if(part.begin(), part.end(), [&](const auto& a) { return a.first == node.cut; });
                if (it == part.end())
                    throw InternalError("split piece does not colour its cut vertex");
                Colour here = it->second;
                if (target == kUncoloured) {
                    target = here;
                    out.insert(out.end(), part.begin(), part.end());
                    continue;
                }
                for (auto [v, c] : part)
                    if (v != node.cut)
                        out.emplace_back(v, c == here ? target : c == target ? here : c);
            }
            return out;
        }
        case ReductionNode::Kind::peel: {
            Assignment out = colour(node.children.at(0));
            for (auto [v, c] : out)
                scratch_[static_cast<std::size_t>(v)] = c;
            for (auto it = node.peeled.rbegin(); it != node.peeled.rend(); ++it) {
                if (it->neighbours.size() > 2)
                    throw InternalError("peeled vertex has more than two neighbours");
                bool used[3] = {false, false, false};
                for (Vertex u : it->neighbours) {
                    Colour c = scratch_[static_cast<std::size_t>(u)];
                    if (c < 0)
                        throw InternalError("peeled vertex reinserted before its neighbours");
                    used[c] = true;
                }
                Colour c = used[0] ? used[1] ? 2 : 1 : 0;
                scratch_[static_cast<std::size_t>(it->vertex)] = c;
                out.emplace_back(it->vertex, c);
            }
            for (auto [v, c] : out)
                scratch_[static_cast<std::size_t>(v)] = kUncoloured;
            return out;
        }
        }
        return {};
    }

private:
    const Graph& g_;
    const Reduction& red_;
    const std::vector<Certificate>& results_;
    std::vector<Colour> scratch_;
};

} // namespace

Reduction reduce(const Graph& g) {
    return Reducer(g).run();
}

Colouring solve_low_degree(const Graph& g) {
    if (g.max_degree() > 3)
        throw ContractViolation("solve_low_degree needs maximum degree at most 3");
    int n = g.order();
    VertexSet all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    Colouring out(n);
    for (const auto& comp : components(g, all, -1)) {
        Colouring part = low_degree_connected(induced_subgraph(g, comp));
        for (std::size_t i = 0; i < comp.size(); ++i)
            out[comp[i]] = part[static_cast<Vertex>(i)];
    }
    return out;
}

Colouring perfect_fallback(const Graph& g) {
    ExactColouring search(g);
    if (!search.run())
        throw InternalError("block without odd hole, odd antihole or K4 has no 3-colouring");
    return search.result();
}

Certificate recombine(const Graph& g, const Reduction& red, const std::vector<Certificate>& block_results,
                      ClassMode mode) {
    if (block_results.size() != red.blocks.size())
        throw InternalError("one certificate per block is required");
    for (std::size_t i = 0; i < block_results.size(); ++i) {
        const Certificate& c = block_results[i];
        if (c.has_colouring())
            continue;
        Certificate out = c;
        Witness mapped = remap(*c.witness_payload(), red.blocks[i].vertices);
        std::visit([&](const auto& x) { out.payload = x; }, mapped);
        return out;
    }
    Assignment all = Recombiner(g, red, block_results).colour(red.trace.root);
    Colouring col(g.order());
    for (auto [v, c] : all)
        col[v] = c;
    if (!col.complete())
        throw InternalError("recombination left vertices uncoloured");
    std::string prov = "reduction";
    for (const auto& c : block_results)
        if (!c.provenance.empty() && prov.find(c.provenance) == std::string::npos)
            prov += "; " + c.provenance;
    return Certificate::colouring(std::move(col), mode, prov);
}

} // namespace bullcol
