#include "bullcol/oracle.hpp"
#include "bullcol/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace bullcol {

namespace {

void check_cap(const Graph& g, int cap) {
    if (g.order() > cap)
        throw RefusalError("oracle refuses " + std::to_string(g.order()) + " vertices (cap " + std::to_string(cap) +
                           ")");
}

class ColourSearch {
public:
    explicit ColourSearch(const Graph& g) : g_(g), colour_(static_cast<std::size_t>(g.order()), kUncoloured) {
        order_.resize(static_cast<std::size_t>(g.order()));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    }

    bool run() { return place(0, -1); }
    Colouring result() const { return Colouring(colour_); }

private:
    // max_used bounds the colours tried so symmetric branches are skipped.
    bool place(std::size_t idx, int max_used) {
        if (idx == order_.size())
            return true;
        Vertex v = order_[idx];
        int limit = std::min(2, max_used + 1);
        for (Colour c = 0; c <= limit; ++c) {
            bool clash = false;
            for (Vertex u : g_.neighbours(v))
                if (colour_[static_cast<std::size_t>(u)] == c) {
                    clash = true;
                    break;
                }
            if (clash)
                continue;
            colour_[static_cast<std::size_t>(v)] = c;
            if (place(idx + 1, std::max(max_used, c)))
                return true;
            colour_[static_cast<std::size_t>(v)] = kUncoloured;
        }
        return false;
    }

    const Graph& g_;
    std::vector<Colour> colour_;
    std::vector<Vertex> order_;
};

struct Template {
    int n = 0;
    std::vector<char> adj;
    std::vector<int> degrees;
    int edges = 0;
};

Template load_template(PatternKind kind) {
    const Graph& t = pattern_template(kind);
    Template out;
    out.n = t.order();
    out.adj.assign(static_cast<std::size_t>(out.n * out.n), 0);
    for (Vertex u = 0; u < out.n; ++u) {
        out.degrees.push_back(t.degree(u));
        for (Vertex v = 0; v < out.n; ++v)
            out.adj[static_cast<std::size_t>(u * out.n + v)] = t.adjacent(u, v) ? 1 : 0;
    }
    out.edges = t.size();
    std::sort(out.degrees.begin(), out.degrees.end());
    return out;
}

// Is the subset (in some order) isomorphic to the template? On success the
// subset is rewritten so that subset[i] plays template vertex i.
bool match_subset(const Graph& g, const Template& t, VertexSet& subset) {
    int k = t.n;
    int edges = 0;
    std::vector<int> degs(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(subset[static_cast<std::size_t>(i)], subset[static_cast<std::size_t>(j)])) {
                ++edges;
                ++degs[static_cast<std::size_t>(i)];
                ++degs[static_cast<std::size_t>(j)];
            }
    if (edges != t.edges)
        return false;
    std::vector<int> sorted = degs;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != t.degrees)
        return false;
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            for (int j = i + 1; j < k && ok; ++j)
                ok = g.adjacent(subset[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])],
                                subset[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]) ==
                     (t.adj[static_cast<std::size_t>(i * k + j)] != 0);
        if (ok) {
            VertexSet mapped(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i)
                mapped[static_cast<std::size_t>(i)] = subset[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            subset = mapped;
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool in_class_fast(const Graph& g, ClassMode mode, Vertex fresh) {
    VertexSet all(static_cast<std::size_t>(g.order()));
    std::iota(all.begin(), all.end(), 0);
    for (PatternKind kind : forbidden_patterns(mode))
        if (find_induced_pattern_within(g, kind, all, fresh))
            return false;
    return true;
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

std::optional<Colouring> oracle_3colourable(const Graph& g, int cap) {
    check_cap(g, cap);
    ColourSearch search(g);
    if (!search.run())
        return std::nullopt;
    return search.result();
}

std::optional<VertexSet> oracle_find_pattern(const Graph& g, PatternKind kind, int cap) {
    check_cap(g, cap);
    Template t = load_template(kind);
    int n = g.order(), k = t.n;
    if (k > n)
        return std::nullopt;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        VertexSet subset(idx.begin(), idx.end());
        if (match_subset(g, t, subset))
            return subset;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return std::nullopt;
}

std::optional<ForbiddenPatternWitness> oracle_class_violation(const Graph& g, ClassMode mode, int cap) {
    for (PatternKind kind : forbidden_patterns(mode))
        if (auto s = oracle_find_pattern(g, kind, cap))
            return ForbiddenPatternWitness{kind, *s};
    return std::nullopt;
}

Graph cycle_graph(int p) {
    if (p < 3)
        throw InputError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < p; ++i)
        edges.emplace_back(i, (i + 1) % p);
    return Graph(p, edges);
}

Graph wheel_graph(int p) {
    if (p < 3)
        throw InputError("wheel rim needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < p; ++i) {
        edges.emplace_back(i, (i + 1) % p);
        edges.emplace_back(i, p);
    }
    return Graph(p + 1, edges);
}

Graph complement_graph(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v))
                edges.emplace_back(u, v);
    return Graph(g.order(), edges);
}

Graph random_class(int n, double prob, ClassMode mode, std::uint64_t seed, int budget) {
    if (n < 1 || prob < 0.0 || prob > 1.0)
        throw InputError("random_class needs n >= 1 and 0 <= prob <= 1");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < budget; ++attempt) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (uniform01(rng) < prob)
                    edges.emplace_back(u, v);
        Graph g(n, edges);
        if (!oracle_class_violation(g, mode))
            return g;
    }
    throw RefusalError("random_class rejected " + std::to_string(budget) + " samples");
}

Graph grown_class(int n, ClassMode mode, std::uint64_t seed, int budget, bool wheel_free) {
    bool c5_free = mode == ClassMode::bull_c5_s113 || mode == ClassMode::bull_c5_s123;
    std::mt19937_64 rng(seed);
    int p = c5_free ? 7 : 5;
    while (p + 2 <= std::min(n, 11) && uniform01(rng) < 0.35)
        p += 2;
    if (n < p)
        throw InputError("grown_class needs n >= " + std::to_string(p));
    std::vector<Edge> edges;
    for (int i = 0; i < p; ++i)
        edges.emplace_back(i, (i + 1) % p);
    int have = p;
    double density = 0.2 + 0.5 * uniform01(rng);
    for (int attempt = 0; have < n && attempt < budget; ++attempt) {
        std::vector<Edge> extra = edges;
        for (int u = 0; u < have; ++u)
            if (uniform01(rng) < density)
                extra.emplace_back(u, have);
        Graph g(have + 1, extra);
        if (wheel_free && (find_k4(g) || find_odd_wheel(g)))
            continue;
        if (in_class_fast(g, mode, have)) {
            edges = std::move(extra);
            ++have;
        }
    }
    if (have < n)
        throw RefusalError("grown_class stalled at " + std::to_string(have) + " vertices");
    return Graph(n, edges);
}

Graph generate(const GenerateRequest& req) {
    if (req.kind == "cycle")
        return cycle_graph(req.size);
    if (req.kind == "wheel")
        return wheel_graph(req.size);
    if (req.kind == "spindle")
        return build_spindle(req.size);
    if (req.kind == "complement_cycle")
        return complement_graph(cycle_graph(req.size));
    if (req.kind == "random_class")
        return random_class(req.size, req.prob, req.mode, req.seed);
    if (req.kind == "grown_class")
        return grown_class(req.size, req.mode, req.seed);
    throw InputError("unknown generator '" + req.kind + "'");
}

} // namespace bullcol
