#include "bullcol/pattern.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace bullcol {

namespace {

struct KindEntry {
    PatternKind kind;
    std::string_view name;
};

constexpr std::array<KindEntry, 11> kKindNames{{
    {PatternKind::bull, "bull"},
    {PatternKind::claw, "claw"},
    {PatternKind::chair, "chair"},
    {PatternKind::e, "E"},
    {PatternKind::s113, "S113"},
    {PatternKind::s123, "S123"},
    {PatternKind::c5, "C5"},
    {PatternKind::p5, "P5"},
    {PatternKind::p6, "P6"},
    {PatternKind::k4, "K4"},
    {PatternKind::c7_complement, "C7complement"},
}};

constexpr std::array<PatternKind, 2> kBullChair{PatternKind::bull, PatternKind::chair};
constexpr std::array<PatternKind, 2> kBullE{PatternKind::bull, PatternKind::e};
constexpr std::array<PatternKind, 3> kBullC5S113{PatternKind::bull, PatternKind::c5, PatternKind::s113};
constexpr std::array<PatternKind, 3> kBullC5S123{PatternKind::bull, PatternKind::c5, PatternKind::s123};

// Centre 0, then each leg listed outward.
Graph spider(std::initializer_list<int> legs) {
    std::vector<Edge> edges;
    int next = 1;
    for (int len : legs) {
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph(next, edges);
}

Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph make_template(PatternKind kind) {
    switch (kind) {
    case PatternKind::bull: return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 3}});
    case PatternKind::claw: return spider({1, 1, 1});
    case PatternKind::chair: return spider({1, 1, 2});
    case PatternKind::e: return spider({1, 2, 2});
    case PatternKind::s113: return spider({1, 1, 3});
    case PatternKind::s123: return spider({1, 2, 3});
    case PatternKind::c5: return cycle_graph(5);
    case PatternKind::p5: return path_graph(5);
    case PatternKind::p6: return path_graph(6);
    case PatternKind::k4: return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    case PatternKind::c7_complement: {
        std::vector<Edge> edges;
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j) {
                int d = std::min(j - i, 7 - (j - i));
                if (d == 2 || d == 3)
                    edges.emplace_back(i, j);
            }
        return Graph(7, edges);
    }
    }
    throw ContractViolation("unknown pattern kind");
}

// Backtracking embedding of a template into g.
class Embedder {
public:
    Embedder(const Graph& g, const Graph& t, std::span<const Vertex> allowed)
        : g_(g), t_(t), allowed_(static_cast<std::size_t>(g.order()), 0),
          used_(static_cast<std::size_t>(g.order()), 0), map_(static_cast<std::size_t>(t.order()), -1) {
        for (Vertex v : allowed)
            allowed_[static_cast<std::size_t>(v)] = 1;
    }

    std::optional<VertexSet> run(std::optional<Vertex> required) {
        if (t_.order() == 0)
            return VertexSet{};
        if (required) {
            if (!g_.contains(*required) || !allowed_[static_cast<std::size_t>(*required)])
                return std::nullopt;
            for (Vertex start = 0; start < t_.order(); ++start) {
                prepare_order(start);
                if (try_place(0, *required) && extend(1))
                    return map_;
                reset();
            }
            return std::nullopt;
        }
        prepare_order(0);
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (!allowed_[static_cast<std::size_t>(v)])
                continue;
            if (try_place(0, v) && extend(1))
                return map_;
            reset();
        }
        return std::nullopt;
    }

private:
    void prepare_order(Vertex start) {
        order_.clear();
        anchor_.assign(static_cast<std::size_t>(t_.order()), -1);
        std::vector<char> seen(static_cast<std::size_t>(t_.order()), 0);
        order_.push_back(start);
        seen[static_cast<std::size_t>(start)] = 1;
        for (std::size_t i = 0; i < order_.size(); ++i)
            for (Vertex w : t_.neighbours(order_[i]))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    anchor_[static_cast<std::size_t>(w)] = order_[i];
                    order_.push_back(w);
                }
        // Disconnected templates: append the rest without an anchor.
        for (Vertex v = 0; v < t_.order(); ++v)
            if (!seen[static_cast<std::size_t>(v)])
                order_.push_back(v);
    }

    void reset() {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(map_.begin(), map_.end(), -1);
    }

    bool consistent(Vertex tv, Vertex gv) const {
        if (g_.degree(gv) < t_.degree(tv))
            return false;
        for (Vertex other = 0; other < t_.order(); ++other) {
            Vertex mapped = map_[static_cast<std::size_t>(other)];
            if (mapped < 0 || other == tv)
                continue;
            if (t_.adjacent(tv, other) != g_.adjacent(gv, mapped))
                return false;
        }
        return true;
    }

    bool try_place(std::size_t pos, Vertex gv) {
        Vertex tv = order_[pos];
        if (used_[static_cast<std::size_t>(gv)] || !consistent(tv, gv))
            return false;
        map_[static_cast<std::size_t>(tv)] = gv;
        used_[static_cast<std::size_t>(gv)] = 1;
        return true;
    }

    void unplace(std::size_t pos) {
        Vertex tv = order_[pos];
        used_[static_cast<std::size_t>(map_[static_cast<std::size_t>(tv)])] = 0;
        map_[static_cast<std::size_t>(tv)] = -1;
    }

    bool extend(std::size_t pos) {
        if (pos == order_.size())
            return true;
        Vertex tv = order_[pos];
        Vertex anchor = anchor_[static_cast<std::size_t>(tv)];
        auto attempt = [&](Vertex gv) {
            if (!allowed_[static_cast<std::size_t>(gv)] || !try_place(pos, gv))
                return false;
            if (extend(pos + 1))
                return true;
            unplace(pos);
            return false;
        };
        if (anchor >= 0) {
            for (Vertex gv : g_.neighbours(map_[static_cast<std::size_t>(anchor)]))
                if (attempt(gv))
                    return true;
        } else {
            for (Vertex gv = 0; gv < g_.order(); ++gv)
                if (attempt(gv))
                    return true;
        }
        return false;
    }

    const Graph& g_;
    const Graph& t_;
    std::vector<char> allowed_;
    std::vector<char> used_;
    VertexSet map_;
    VertexSet order_;
    VertexSet anchor_;
};

VertexSet all_vertices(const Graph& g) {
    VertexSet all(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v)
        all[static_cast<std::size_t>(v)] = v;
    return all;
}

} // namespace

std::string_view pattern_name(PatternKind kind) {
    for (const auto& entry : kKindNames)
        if (entry.kind == kind)
            return entry.name;
    return "unknown";
}

std::optional<PatternKind> pattern_from_name(std::string_view name) {
    for (const auto& entry : kKindNames)
        if (entry.name == name)
            return entry.kind;
    return std::nullopt;
}

std::string_view class_mode_name(ClassMode mode) {
    switch (mode) {
    case ClassMode::bull_chair: return "bull-chair";
    case ClassMode::bull_e: return "bull-e";
    case ClassMode::bull_c5_s113: return "bull-c5-s113";
    case ClassMode::bull_c5_s123: return "bull-c5-s123";
    }
    return "unknown";
}

std::optional<ClassMode> class_mode_from_name(std::string_view name) {
    for (auto mode : {ClassMode::bull_chair, ClassMode::bull_e, ClassMode::bull_c5_s113, ClassMode::bull_c5_s123})
        if (class_mode_name(mode) == name)
            return mode;
    return std::nullopt;
}

std::span<const PatternKind> forbidden_patterns(ClassMode mode) {
    switch (mode) {
    case ClassMode::bull_chair: return kBullChair;
    case ClassMode::bull_e: return kBullE;
    case ClassMode::bull_c5_s113: return kBullC5S113;
    case ClassMode::bull_c5_s123: return kBullC5S123;
    }
    return {};
}

const Graph& pattern_template(PatternKind kind) {
    static const std::map<PatternKind, Graph> templates = [] {
        std::map<PatternKind, Graph> all;
        for (const auto& entry : kKindNames)
            all.emplace(entry.kind, make_template(entry.kind));
        return all;
    }();
    return templates.at(kind);
}

std::optional<VertexSet> find_induced_pattern_within(const Graph& g, PatternKind kind,
                                                     std::span<const Vertex> allowed,
                                                     std::optional<Vertex> required) {
    for (Vertex v : allowed)
        if (!g.contains(v))
            throw InputError("vertex " + std::to_string(v) + " out of range");
    Embedder embedder(g, pattern_template(kind), allowed);
    return embedder.run(required);
}

std::optional<VertexSet> find_induced_pattern(const Graph& g, PatternKind kind) {
    auto all = all_vertices(g);
    return find_induced_pattern_within(g, kind, all);
}

bool induces_pattern(const Graph& g, std::span<const Vertex> s, PatternKind kind) {
    const Graph& t = pattern_template(kind);
    if (static_cast<int>(s.size()) != t.order())
        return false;
    VertexSet sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (Vertex v : sorted)
        if (!g.contains(v))
            return false;
    return find_induced_pattern_within(g, kind, sorted).has_value();
}

// ---------------------------------------------------------------- holes

HoleContext HoleContext::relabelled(int start, int step) const {
    VertexSet out;
    out.reserve(cycle_.size());
    for (int t = 0; t < length(); ++t)
        out.push_back(at(start + step * t));
    return HoleContext(std::move(out));
}

bool is_induced_cycle(const Graph& g, std::span<const Vertex> cycle) {
    int p = static_cast<int>(cycle.size());
    if (p < 3)
        return false;
    VertexSet sorted(cycle.begin(), cycle.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == p - 1);
            if (g.adjacent(cycle[static_cast<std::size_t>(i)], cycle[static_cast<std::size_t>(j)]) != consecutive)
                return false;
        }
    return true;
}

namespace {

class CycleSearch {
public:
    CycleSearch(const Graph& g, int length, std::size_t limit) : g_(g), length_(length), limit_(limit) {}

    std::vector<VertexSet> run() {
        for (Vertex s = 0; s < g_.order() && !full(); ++s) {
            path_.assign(1, s);
            extend();
        }
        return std::move(found_);
    }

private:
    bool full() const { return limit_ != 0 && found_.size() >= limit_; }

    void extend() {
        if (full())
            return;
        int pos = static_cast<int>(path_.size());
        Vertex last = path_.back();
        Vertex start = path_.front();
        for (Vertex x : g_.neighbours(last)) {
            if (x <= start || std::find(path_.begin(), path_.end(), x) != path_.end())
                continue;
            bool closing = pos == length_ - 1;
            // x may only touch its predecessor, and the start vertex when closing.
            bool ok = true;
            for (int i = 0; i + 1 < pos && ok; ++i) {
                bool adj = g_.adjacent(x, path_[static_cast<std::size_t>(i)]);
                bool expected = closing && i == 0;
                if (adj != expected)
                    ok = false;
            }
            if (!ok)
                continue;
            if (closing) {
                if (path_[1] < x) {
                    path_.push_back(x);
                    found_.push_back(path_);
                    path_.pop_back();
                    if (full())
                        return;
                }
                continue;
            }
            path_.push_back(x);
            extend();
            path_.pop_back();
            if (full())
                return;
        }
    }

    const Graph& g_;
    int length_;
    std::size_t limit_;
    VertexSet path_;
    std::vector<VertexSet> found_;
};

} // namespace

std::vector<VertexSet> induced_cycles_of_length(const Graph& g, int length, std::size_t limit) {
    if (length < 3)
        return {};
    return CycleSearch(g, length, limit).run();
}

std::optional<HoleContext> smallest_odd_hole(const Graph& g) {
    for (int len = 5; len <= g.order(); len += 2) {
        auto cycles = induced_cycles_of_length(g, len, 1);
        if (!cycles.empty())
            return HoleContext(std::move(cycles.front()));
    }
    return std::nullopt;
}

std::optional<VertexSet> find_odd_antihole7(const Graph& g) {
    return find_induced_pattern(g, PatternKind::c7_complement);
}

SpindleNecklace extract_necklace_from_antihole(const Graph& g, std::span<const Vertex> s) {
    if (s.size() != 7)
        throw InputError("antihole needs exactly 7 vertices");
    for (Vertex v : s)
        if (!g.contains(v))
            throw InputError("vertex " + std::to_string(v) + " out of range");
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) {
            int d = std::min(j - i, 7 - (j - i));
            bool expected = d == 2 || d == 3;
            if (g.adjacent(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]) != expected)
                throw InputError("vertex set does not induce the complement of C7 in complement-cycle order");
        }
    SpindleNecklace w;
    w.hubs = {s[0], s[1], s[2]};
    w.pairs = {{s[3], s[5]}, {s[4], s[6]}};
    return w;
}

VertexSet shrink_to_induced_odd_cycle(const Graph& g, VertexSet cycle) {
    if (cycle.size() % 2 == 0)
        throw ContractViolation("shrink_to_induced_odd_cycle needs an odd cycle");
    for (;;) {
        int len = static_cast<int>(cycle.size());
        bool shrunk = false;
        for (int i = 0; i < len && !shrunk; ++i)
            for (int j = i + 2; j < len && !shrunk; ++j) {
                if (i == 0 && j == len - 1)
                    continue;
                if (!g.adjacent(cycle[static_cast<std::size_t>(i)], cycle[static_cast<std::size_t>(j)]))
                    continue;
                // The chord splits the cycle into two cycles of lengths j-i+1 and len-(j-i)+1;
                // exactly one is odd.
                VertexSet next;
                if ((j - i + 1) % 2 == 1) {
                    next.assign(cycle.begin() + i, cycle.begin() + j + 1);
                } else {
                    next.assign(cycle.begin() + j, cycle.end());
                    next.insert(next.end(), cycle.begin(), cycle.begin() + i + 1);
                }
                cycle = std::move(next);
                shrunk = true;
            }
        if (!shrunk)
            return cycle;
    }
}

std::optional<VertexSet> find_induced_odd_cycle(const Graph& g, std::span<const Vertex> s) {
    std::vector<char> inside(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : s)
        inside[static_cast<std::size_t>(v)] = 1;
    std::vector<int> depth(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
    for (Vertex root : s) {
        if (depth[static_cast<std::size_t>(root)] >= 0)
            continue;
        depth[static_cast<std::size_t>(root)] = 0;
        std::vector<Vertex> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            for (Vertex w : g.neighbours(v)) {
                if (!inside[static_cast<std::size_t>(w)])
                    continue;
                if (depth[static_cast<std::size_t>(w)] < 0) {
                    depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
                    parent[static_cast<std::size_t>(w)] = v;
                    queue.push_back(w);
                } else if (depth[static_cast<std::size_t>(w)] == depth[static_cast<std::size_t>(v)]) {
                    // Same BFS level: tree paths to the common ancestor plus this edge form an odd cycle.
                    VertexSet left{v}, right{w};
                    Vertex a = v, b = w;
                    while (a != b) {
                        a = parent[static_cast<std::size_t>(a)];
                        b = parent[static_cast<std::size_t>(b)];
                        left.push_back(a);
                        right.push_back(b);
                    }
                    right.pop_back();
                    VertexSet cycle(left.begin(), left.end());
                    cycle.insert(cycle.end(), right.rbegin(), right.rend());
                    return shrink_to_induced_odd_cycle(g, std::move(cycle));
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<OddWheelWitness> find_odd_wheel(const Graph& g) {
    for (Vertex w = 0; w < g.order(); ++w) {
        auto nb = g.neighbours(w);
        if (auto rim = find_induced_odd_cycle(g, nb))
            return OddWheelWitness{w, std::move(*rim)};
    }
    return std::nullopt;
}

std::optional<std::array<Vertex, 4>> find_k4(const Graph& g) {
    for (auto [u, v] : g.edges())
        for (Vertex a : g.neighbours(u)) {
            if (a <= v || !g.adjacent(a, v))
                continue;
            for (Vertex b : g.neighbours(u))
                if (b > a && g.adjacent(b, v) && g.adjacent(a, b))
                    return std::array<Vertex, 4>{u, v, a, b};
        }
    return std::nullopt;
}

} // namespace bullcol
