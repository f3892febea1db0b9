#include "bullcol/pattern.hpp"

#include <algorithm>
#include <limits>

namespace bullcol {

Graph build_spindle(int p) {
    if (p < 1)
        throw InputError("spindle order parameter must be at least 1");
    std::vector<Edge> edges;
    for (int i = 1; i <= p; ++i) {
        int left = 3 * i - 3, a = 3 * i - 2, b = 3 * i - 1, right = 3 * i;
        edges.insert(edges.end(), {{left, a}, {left, b}, {a, b}, {a, right}, {b, right}});
    }
    edges.emplace_back(3 * p, 0);
    return Graph(3 * p + 1, edges);
}

SpindleNecklace spindle_necklace(int p) {
    if (p < 1)
        throw InputError("spindle order parameter must be at least 1");
    SpindleNecklace w;
    for (int i = 0; i <= p; ++i)
        w.hubs.push_back(3 * i);
    for (int i = 1; i <= p; ++i)
        w.pairs.emplace_back(3 * i - 2, 3 * i - 1);
    return w;
}

bool verify_necklace(const Graph& g, const SpindleNecklace& w) {
    int k = w.diamonds();
    if (k < 1 || static_cast<int>(w.hubs.size()) != k + 1)
        return false;
    VertexSet all(w.hubs.begin(), w.hubs.end());
    for (auto [a, b] : w.pairs) {
        all.push_back(a);
        all.push_back(b);
    }
    for (Vertex v : all)
        if (!g.contains(v))
            return false;
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        return false;
    for (int i = 0; i < k; ++i) {
        Vertex left = w.hubs[static_cast<std::size_t>(i)];
        Vertex right = w.hubs[static_cast<std::size_t>(i + 1)];
        auto [a, b] = w.pairs[static_cast<std::size_t>(i)];
        if (!g.adjacent(left, a) || !g.adjacent(left, b) || !g.adjacent(a, b) || !g.adjacent(a, right) ||
            !g.adjacent(b, right))
            return false;
    }
    return g.adjacent(w.hubs.back(), w.hubs.front());
}

namespace {

class NecklaceSearch {
public:
    NecklaceSearch(const Graph& g, std::span<const Vertex> allowed) : g_(g), n_(g.order()) {
        allowed_.assign(static_cast<std::size_t>(n_), 0);
        for (Vertex v : allowed)
            if (g.contains(v))
                allowed_[static_cast<std::size_t>(v)] = 1;
        // diamonds_[x][y]: pairs {a,b} forming a diamond between hubs x and y.
        diamonds_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), {});
        for (Vertex a = 0; a < n_; ++a) {
            if (!ok(a))
                continue;
            for (Vertex b : g.neighbours(a)) {
                if (b <= a || !ok(b))
                    continue;
                VertexSet common;
                for (Vertex x : g.neighbours(a))
                    if (x != b && ok(x) && g.adjacent(x, b))
                        common.push_back(x);
                for (Vertex x : common)
                    for (Vertex y : common)
                        if (x != y)
                            slot(x, y).emplace_back(a, b);
            }
        }
        hub_targets_.assign(static_cast<std::size_t>(n_), {});
        for (Vertex x = 0; x < n_; ++x)
            for (Vertex y = 0; y < n_; ++y)
                if (x != y && !slot(x, y).empty())
                    hub_targets_[static_cast<std::size_t>(x)].push_back(y);
    }

    std::optional<SpindleNecklace> run(int max_diamonds) {
        for (int k = 1; k <= max_diamonds; ++k) {
            if (3 * k + 1 > n_)
                break;
            for (Vertex h0 = 0; h0 < n_; ++h0) {
                if (!ok(h0))
                    continue;
                compute_distance_to_closers(h0);
                used_.assign(static_cast<std::size_t>(n_), 0);
                used_[static_cast<std::size_t>(h0)] = 1;
                hubs_.assign(1, h0);
                pairs_.clear();
                if (extend(k))
                    return SpindleNecklace{hubs_, pairs_};
            }
        }
        return std::nullopt;
    }

private:
    bool ok(Vertex v) const { return allowed_[static_cast<std::size_t>(v)] != 0; }

    std::vector<std::pair<Vertex, Vertex>>& slot(Vertex x, Vertex y) {
        return diamonds_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y)];
    }

    // Hub-graph distance from every vertex to a neighbour of h0; distinctness ignored,
    // so this is a valid lower bound for pruning.
    void compute_distance_to_closers(Vertex h0) {
        constexpr int inf = std::numeric_limits<int>::max() / 2;
        dist_.assign(static_cast<std::size_t>(n_), inf);
        std::vector<Vertex> queue;
        for (Vertex v : g_.neighbours(h0))
            if (ok(v)) {
                dist_[static_cast<std::size_t>(v)] = 0;
                queue.push_back(v);
            }
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex y = queue[head];
            for (Vertex x = 0; x < n_; ++x)
                if (dist_[static_cast<std::size_t>(x)] == inf && !slot(x, y).empty()) {
                    dist_[static_cast<std::size_t>(x)] = dist_[static_cast<std::size_t>(y)] + 1;
                    queue.push_back(x);
                }
        }
    }

    bool extend(int remaining) {
        Vertex current = hubs_.back();
        if (remaining == 0)
            return g_.adjacent(current, hubs_.front());
        if (dist_[static_cast<std::size_t>(current)] > remaining)
            return false;
        for (Vertex next : hub_targets_[static_cast<std::size_t>(current)]) {
            if (used_[static_cast<std::size_t>(next)] || dist_[static_cast<std::size_t>(next)] > remaining - 1)
                continue;
            for (auto [a, b] : slot(current, next)) {
                if (used_[static_cast<std::size_t>(a)] || used_[static_cast<std::size_t>(b)])
                    continue;
                used_[static_cast<std::size_t>(a)] = used_[static_cast<std::size_t>(b)] =
                    used_[static_cast<std::size_t>(next)] = 1;
                hubs_.push_back(next);
                pairs_.emplace_back(a, b);
                if (extend(remaining - 1))
                    return true;
                hubs_.pop_back();
                pairs_.pop_back();
                used_[static_cast<std::size_t>(a)] = used_[static_cast<std::size_t>(b)] =
                    used_[static_cast<std::size_t>(next)] = 0;
            }
        }
        return false;
    }

    const Graph& g_;
    int n_;
    std::vector<char> allowed_;
    std::vector<std::vector<std::pair<Vertex, Vertex>>> diamonds_;
    std::vector<VertexSet> hub_targets_;
    std::vector<int> dist_;
    std::vector<char> used_;
    VertexSet hubs_;
    std::vector<std::pair<Vertex, Vertex>> pairs_;
};

} // namespace

std::optional<SpindleNecklace> find_necklace(const Graph& g, std::span<const Vertex> allowed, int max_diamonds) {
    return NecklaceSearch(g, allowed).run(max_diamonds);
}

std::optional<SpindleNecklace> find_necklace(const Graph& g, int max_diamonds) {
    VertexSet all(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v)
        all[static_cast<std::size_t>(v)] = v;
    return find_necklace(g, all, max_diamonds);
}

} // namespace bullcol
