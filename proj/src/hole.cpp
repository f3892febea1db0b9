#include "hole_detail.hpp"

#include <algorithm>
#include <numeric>

namespace bullcol {

namespace {

VertexSet unique_sorted(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

std::optional<Witness> search_in(const Graph& g, const VertexSet& s, ClassMode mode, int max_diamonds) {
    Graph h = induced_subgraph(g, s);
    auto lift = [&](const Witness& w) { return remap(w, s); };
    if (auto k = find_k4(h))
        return lift(K4Witness{*k});
    if (auto w = find_odd_wheel(h)) {
        if (w->rim.size() == 3)
            return lift(K4Witness{{w->hub, w->rim[0], w->rim[1], w->rim[2]}});
        return lift(*w);
    }
    for (PatternKind kind : forbidden_patterns(mode))
        if (auto found = find_induced_pattern(h, kind))
            return lift(ForbiddenPatternWitness{kind, *found});
    if (auto neck = find_necklace(h, max_diamonds))
        return lift(*neck);
    return std::nullopt;
}

bool is_forbidden(ClassMode mode, PatternKind kind) {
    auto f = forbidden_patterns(mode);
    return std::find(f.begin(), f.end(), kind) != f.end();
}

// Cyclic distance between hole indices.
int cyc(int p, int a, int b) {
    int d = ((a - b) % p + p) % p;
    return std::min(d, p - d);
}

} // namespace

Classification::Classification(const Graph& g, HoleContext hole, std::vector<Membership> members)
    : hole_(std::move(hole)), members_(std::move(members)), primed_(members_.size(), 0) {
    int p = hole_.length();
    for (Vertex v = 0; v < static_cast<Vertex>(members_.size()); ++v) {
        const Membership& m = members_[static_cast<std::size_t>(v)];
        if (m.region != Region::hole)
            sets_[{m.region, m.anchor}].push_back(v);
    }
    for (Vertex v = 0; v < static_cast<Vertex>(members_.size()); ++v) {
        const Membership& m = members_[static_cast<std::size_t>(v)];
        if (m.region != Region::a && m.region != Region::b)
            continue;
        for (Vertex u : g.neighbours(v)) {
            const Membership& o = members_[static_cast<std::size_t>(u)];
            if (o.anchor != m.anchor)
                continue;
            if (o.region == m.region || (m.region == Region::b && o.region == Region::c))
                primed_[static_cast<std::size_t>(v)] = 1;
        }
    }
    (void)p;
}

bool Classification::in(Vertex v, Region r, int i) const {
    const Membership& m = of(v);
    return m.region == r && (r == Region::hole || m.anchor == hole_.wrap(i));
}

const VertexSet& Classification::set(Region r, int i) const {
    auto it = sets_.find({r, hole_.wrap(i)});
    return it == sets_.end() ? empty_ : it->second;
}

VertexSet Classification::all(Region r) const {
    VertexSet out;
    for (int i = 0; i < length(); ++i) {
        const VertexSet& s = set(r, i);
        out.insert(out.end(), s.begin(), s.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet Classification::primed_set(Region r, int i) const {
    VertexSet out;
    for (Vertex v : set(r, i))
        if (primed(v))
            out.push_back(v);
    return out;
}

VertexSet Classification::star_set(Region r, int i) const {
    VertexSet out;
    for (Vertex v : set(r, i))
        if (!primed(v))
            out.push_back(v);
    return out;
}

std::pair<int, int> q_value(const Graph& g, const HoleContext& q, Vertex w) {
    int p = q.length();
    std::vector<char> adj(static_cast<std::size_t>(p));
    int count = 0;
    for (int i = 0; i < p; ++i) {
        adj[static_cast<std::size_t>(i)] = g.adjacent(w, q.at(i)) ? 1 : 0;
        count += adj[static_cast<std::size_t>(i)];
    }
    if (count == p)
        return {p, 0};
    if (count == 0)
        return {0, 0};
    int best = 0, start = 0;
    for (int i = 0; i < p; ++i) {
        if (!adj[static_cast<std::size_t>(i)] || adj[static_cast<std::size_t>(q.wrap(i - 1))])
            continue;
        int len = 0;
        while (adj[static_cast<std::size_t>(q.wrap(i + len))])
            ++len;
        if (len > best) {
            best = len;
            start = i;
        }
    }
    return {best, start};
}

namespace detail {

Finding settle(const Graph& g, const HoleContext& q, ClassMode mode, const std::string& note,
               const std::vector<Candidate>& candidates, const VertexSet& involved) {
    for (const Candidate& c : candidates) {
        if (c.kind == PatternKind::k4) {
            if (c.vertices.size() == 4 && induces_pattern(g, c.vertices, PatternKind::k4))
                return {K4Witness{{c.vertices[0], c.vertices[1], c.vertices[2], c.vertices[3]}}, note};
            continue;
        }
        if (!is_forbidden(mode, c.kind) || !induces_pattern(g, c.vertices, c.kind))
            continue;
        // Reorder so that vertices[i] plays template vertex i.
        if (auto placed = find_induced_pattern_within(g, c.kind, c.vertices))
            return {ForbiddenPatternWitness{c.kind, *placed}, note};
    }
    VertexSet local = involved;
    local.insert(local.end(), q.cycle().begin(), q.cycle().end());
    local = unique_sorted(local);
    if (auto w = search_in(g, local, mode, 4))
        return {*w, note + " (local search)"};
    if (auto w = global_witness(g, mode))
        return {*w, note + " (block search)"};
    throw InternalError("no witness for violated " + note);
}

std::optional<Finding> odd_cycle_around(const Graph& g, const VertexSet& s, Vertex hub, const std::string& note) {
    if (s.size() < 3)
        return std::nullopt;
    auto cycle = find_induced_odd_cycle(g, s);
    if (!cycle)
        return std::nullopt;
    if (cycle->size() == 3)
        return Finding{K4Witness{{hub, (*cycle)[0], (*cycle)[1], (*cycle)[2]}}, note};
    return Finding{OddWheelWitness{hub, *cycle}, note};
}

Vertex partner(const Graph& g, const Classification& cls, Vertex v) {
    const Membership& m = cls.of(v);
    for (Vertex u : g.neighbours(v)) {
        const Membership& o = cls.of(u);
        if (o.region == Region::hole || o.anchor != m.anchor)
            continue;
        if (o.region == m.region || (m.region == Region::b && o.region == Region::c))
            return u;
    }
    return -1;
}

} // namespace detail

std::optional<Witness> local_witness(const Graph& g, const HoleContext& q, const VertexSet& extra, ClassMode mode) {
    VertexSet s = extra;
    s.insert(s.end(), q.cycle().begin(), q.cycle().end());
    return search_in(g, unique_sorted(s), mode, 4);
}

std::optional<Witness> global_witness(const Graph& g, ClassMode mode) {
    VertexSet all(static_cast<std::size_t>(g.order()));
    std::iota(all.begin(), all.end(), 0);
    return search_in(g, all, mode, std::max(1, g.order() / 3));
}

ClassifyResult classify(const Graph& g, const HoleContext& q, ClassMode mode) {
    using detail::Candidate;
    int p = q.length();
    if (p < 5 || p % 2 == 0 || !is_induced_cycle(g, q.cycle()))
        throw ContractViolation("classify needs an induced odd hole");
    auto V = [&](int i) { return q.at(i); };
    auto settle = [&](const std::string& note, std::vector<Candidate> c, VertexSet involved) {
        return ClassifyResult{detail::settle(g, q, mode, note, c, involved)};
    };
    bool c5_free = mode == ClassMode::bull_c5_s113 || mode == ClassMode::bull_c5_s123;
    if (c5_free && p == 5)
        return Finding{ForbiddenPatternWitness{PatternKind::c5, q.cycle()}, "hole of length 5"};

    int n = g.order();
    std::vector<Membership> members(static_cast<std::size_t>(n));
    std::vector<char> on_hole(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < p; ++i) {
        members[static_cast<std::size_t>(V(i))] = {Region::hole, i};
        on_hole[static_cast<std::size_t>(V(i))] = 1;
    }
    VertexSet undominated;
    for (Vertex w = 0; w < n; ++w) {
        if (on_hole[static_cast<std::size_t>(w)])
            continue;
        std::vector<int> pos;
        for (int i = 0; i < p; ++i)
            if (g.adjacent(w, V(i)))
                pos.push_back(i);
        if (pos.empty()) {
            undominated.push_back(w);
            continue;
        }
        auto [qv, j] = q_value(g, q, w);
        int deg = static_cast<int>(pos.size());
        if (qv == p)
            return Finding{OddWheelWitness{w, q.cycle()}, "vertex adjacent to the whole hole"};
        if (qv == 2)
            return settle("q(w)=2", {{PatternKind::bull, {V(j - 1), V(j), V(j + 1), V(j + 2), w}}}, {w});
        if (qv >= 4) {
            if (p == 5 && qv == 4) {
                members[static_cast<std::size_t>(w)] = {Region::d, j};
                continue;
            }
            return settle("q(w)>=4", {{PatternKind::bull, {V(j - 1), V(j), V(j + 1), V(j + 3), w}}}, {w});
        }
        if (qv == 3) {
            if (deg == 3) {
                members[static_cast<std::size_t>(w)] = {Region::c, j};
                continue;
            }
            std::vector<Candidate> cands;
            for (int k : pos)
                if (cyc(p, k, j + 1) > 1) {
                    cands.push_back({PatternKind::bull, {V(j - 1), V(j), V(j + 1), V(k), w}});
                    cands.push_back({PatternKind::bull, {V(j + 1), V(j + 2), V(j + 3), V(k), w}});
                }
            return settle("q(w)=3 with a fourth neighbour", cands, {w});
        }
        // q(w) = 1
        if (deg == 1) {
            members[static_cast<std::size_t>(w)] = {Region::a, pos[0]};
            continue;
        }
        if (deg == 2) {
            int a = pos[0], b = pos[1];
            if (q.wrap(a + 2) == b) {
                members[static_cast<std::size_t>(w)] = {Region::b, a};
                continue;
            }
            if (q.wrap(b + 2) == a) {
                members[static_cast<std::size_t>(w)] = {Region::b, b};
                continue;
            }
        }
        throw InternalError("vertex " + std::to_string(w) +
                            " closes an odd hole shorter than the chosen one; hole is not smallest");
    }

    if (!undominated.empty()) {
        // A vertex at distance exactly 2 and its neighbour next to the hole.
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        VertexSet queue;
        for (Vertex v : q.cycle()) {
            dist[static_cast<std::size_t>(v)] = 0;
            queue.push_back(v);
        }
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (Vertex u : g.neighbours(queue[head]))
                if (dist[static_cast<std::size_t>(u)] < 0) {
                    dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(queue[head])] + 1;
                    queue.push_back(u);
                }
        Vertex v = -1, v1 = -1;
        for (Vertex x = 0; x < n && v < 0; ++x)
            if (dist[static_cast<std::size_t>(x)] == 2)
                for (Vertex y : g.neighbours(x))
                    if (dist[static_cast<std::size_t>(y)] == 1) {
                        v = x;
                        v1 = y;
                        break;
                    }
        if (v < 0)
            throw ContractViolation("classify needs a connected graph");
        auto [qv, j] = q_value(g, q, v1);
        if (qv == p)
            return Finding{OddWheelWitness{v1, q.cycle()}, "domination: vertex adjacent to the whole hole"};
        if (qv >= 2) {
            int k = j + qv - 1;
            return settle("domination: two consecutive neighbours", {{PatternKind::bull, {v, v1, V(k - 1), V(k), V(k + 1)}}},
                          {v, v1});
        }
        const Membership& m = members[static_cast<std::size_t>(v1)];
        int c = m.region == Region::b ? m.anchor + 2 : m.anchor;
        std::vector<Candidate> cands;
        switch (mode) {
        case ClassMode::bull_chair:
            cands.push_back({PatternKind::chair, {v, v1, V(c), V(c + 1), V(c - 1)}});
            break;
        case ClassMode::bull_e:
            cands.push_back({PatternKind::e, {v, v1, V(c), V(c + 1), V(c + 2), V(c - 1)}});
            break;
        case ClassMode::bull_c5_s113:
            cands.push_back({PatternKind::s113, {V(c - 1), V(c), v1, V(c + 1), V(c + 2), V(c + 3)}});
            break;
        case ClassMode::bull_c5_s123:
            cands.push_back({PatternKind::s123, {V(c - 1), V(c), v1, v, V(c + 1), V(c + 2), V(c + 3)}});
            break;
        }
        return settle("domination: vertex at distance 2", cands, {v, v1});
    }
    return Classification(g, q, std::move(members));
}

std::optional<Finding> validate_structure(const Graph& g, const Classification& cls, ClassMode mode) {
    using detail::Candidate;
    const HoleContext& q = cls.hole();
    int p = q.length();
    auto V = [&](int i) { return q.at(i); };
    auto settle = [&](const std::string& note, std::vector<Candidate> c, VertexSet involved) {
        return std::optional<Finding>(detail::settle(g, q, mode, note, c, involved));
    };
    auto is_bc = [&](Vertex v) {
        Region r = cls.of(v).region;
        return r == Region::b || r == Region::c;
    };
    auto with_partner = [&](VertexSet s) {
        VertexSet out = s;
        for (Vertex v : s)
            if (cls.primed(v))
                out.push_back(detail::partner(g, cls, v));
        return out;
    };

    // Edges between B/C sets whose anchors are two or more apart.
    for (auto [u, w] : g.edges()) {
        if (!is_bc(u) || !is_bc(w))
            continue;
        int i = cls.of(u).anchor, j = cls.of(w).anchor;
        if (cyc(p, i, j) < 2)
            continue;
        Vertex lo = u, hi = w;
        if (q.wrap(i + 2) != j)
            std::swap(lo, hi);
        int a = cls.of(lo).anchor, b = a + 2;
        std::vector<Candidate> cands;
        if (q.wrap(b) == cls.of(hi).anchor) {
            if (p > 5)
                cands.push_back({PatternKind::bull, {V(a), lo, V(b), hi, V(b + 2)}});
            else if (cls.of(hi).region == Region::b)
                cands.push_back({PatternKind::bull, {V(a), lo, hi, V(b), V(b + 1)}});
            else if (cls.of(lo).region == Region::b)
                cands.push_back({PatternKind::bull, {V(b + 2), hi, lo, V(b), V(b - 1)}});
        }
        return settle("edge between distant B/C sets", cands, {u, w});
    }

    // Consecutive nonempty C sets.
    for (int i = 0; i < p; ++i)
        for (Vertex w : cls.set(Region::c, i))
            for (Vertex w2 : cls.set(Region::c, i + 1)) {
                if (g.adjacent(w, w2))
                    return settle("C_i and C_i+1 both nonempty", {{PatternKind::k4, {w, V(i + 1), V(i + 2), w2}}},
                                  {w, w2});
                return settle("C_i and C_i+1 both nonempty",
                              {{PatternKind::bull, {V(i - 1), V(i), w, V(i + 1), w2}}}, {w, w2});
            }

    // An edge between neighbouring B/C sets needs a B* endpoint.
    for (auto [u, w] : g.edges()) {
        if (!is_bc(u) || !is_bc(w))
            continue;
        int i = cls.of(u).anchor, j = cls.of(w).anchor;
        if (cyc(p, i, j) != 1)
            continue;
        bool u_star = cls.of(u).region == Region::b && !cls.primed(u);
        bool w_star = cls.of(w).region == Region::b && !cls.primed(w);
        if (u_star || w_star)
            continue;
        Vertex lo = u, hi = w;
        if (q.wrap(i + 1) != j)
            std::swap(lo, hi);
        int a = cls.of(lo).anchor;
        std::vector<Candidate> cands;
        if (cls.of(lo).region == Region::c && cls.primed(hi)) {
            Vertex w3 = detail::partner(g, cls, hi);
            if (!g.adjacent(lo, w3))
                cands.push_back({PatternKind::bull, {V(a - 1), V(a), lo, V(a + 1), w3}});
            else
                cands.push_back({PatternKind::k4, {lo, V(a + 1), hi, w3}});
        }
        return settle("edge between neighbouring B/C sets without a B* end", cands, with_partner({u, w}));
    }

    switch (mode) {
    case ClassMode::bull_chair:
        for (int i = 0; i < p; ++i) {
            for (Vertex w : cls.set(Region::a, i))
                return settle("chair class: A is empty", {{PatternKind::chair, {V(i), V(i - 1), V(i + 1), V(i + 2), w}}},
                              {w});
            for (Vertex w : cls.set(Region::b, i)) {
                int c = i + 2;
                return settle("chair class: B is empty", {{PatternKind::chair, {V(c), V(c - 1), V(c + 1), V(c + 2), w}}},
                              {w});
            }
        }
        for (int i = 0; i < p; ++i) {
            const VertexSet& s = cls.set(Region::c, i);
            if (s.size() < 2)
                continue;
            Vertex w = s[0], w2 = s[1];
            if (g.adjacent(w, w2))
                return settle("chair class: |C_i| <= 1", {{PatternKind::k4, {V(i), V(i + 1), w, w2}}}, {w, w2});
            return settle("chair class: |C_i| <= 1", {{PatternKind::chair, {V(i), w, w2, V(i - 1), V(i - 2)}}}, {w, w2});
        }
        return std::nullopt;
    case ClassMode::bull_e:
        if (p == 5)
            return detail::validate_p5_facts(g, cls, mode);
        for (int i = 0; i < p; ++i)
            for (Vertex w : cls.set(Region::a, i))
                return settle("E class with p>5: A is empty",
                              {{PatternKind::e, {V(i), w, V(i - 1), V(i - 2), V(i + 1), V(i + 2)}}}, {w});
        break;
    case ClassMode::bull_c5_s113:
        for (int i = 0; i < p; ++i)
            for (Vertex w : cls.set(Region::a, i))
                return settle("S113 class: A is empty",
                              {{PatternKind::s113, {V(i), w, V(i - 1), V(i + 1), V(i + 2), V(i + 3)}}}, {w});
        break;
    case ClassMode::bull_c5_s123:
        for (int i = 0; i < p; ++i)
            for (Vertex w : cls.set(Region::a, i))
                return settle("S123 class: A is empty",
                              {{PatternKind::s123, {V(i), w, V(i - 1), V(i - 2), V(i + 1), V(i + 2), V(i + 3)}}}, {w});
        break;
    }
    // G[B_i u C_i] bipartite.
    for (int i = 0; i < p; ++i) {
        VertexSet s = cls.set(Region::b, i);
        const VertexSet& c = cls.set(Region::c, i);
        s.insert(s.end(), c.begin(), c.end());
        if (auto f = detail::odd_cycle_around(g, s, V(i), "G[B_i u C_i] is bipartite"))
            return f;
    }
    return std::nullopt;
}

std::map<Edge, int> edge_types(const Graph& g, const Classification& cls) {
    const HoleContext& q = cls.hole();
    std::map<Edge, int> out;
    for (auto [u, w] : g.edges()) {
        const Membership& a = cls.of(u);
        const Membership& b = cls.of(w);
        if (a.region == Region::hole || b.region == Region::hole) {
            out[{u, w}] = 0;
            continue;
        }
        if (a.region == Region::d || b.region == Region::d) {
            out[{u, w}] = 7;
            continue;
        }
        auto bc = [](Region r) { return r == Region::b || r == Region::c; };
        auto typed = [&](const Membership& x, const Membership& y) -> int {
            if (bc(x.region) && bc(y.region)) {
                if (x.anchor == y.anchor)
                    return 1;
                if (q.wrap(x.anchor + 1) == y.anchor)
                    return 2;
            }
            if (x.region == Region::a && bc(y.region) && q.wrap(x.anchor - 1) == y.anchor)
                return 3;
            if (x.region == Region::a && y.region == Region::a) {
                if (x.anchor == y.anchor)
                    return 4;
                if (q.wrap(x.anchor + 1) == y.anchor)
                    return 5;
            }
            if (x.region == Region::a && y.region == Region::b &&
                (q.wrap(x.anchor + 1) == y.anchor || q.wrap(x.anchor + 2) == y.anchor))
                return 6;
            return -1;
        };
        int t = typed(a, b);
        if (t < 0)
            t = typed(b, a);
        if (t < 0)
            throw InternalError("edge " + std::to_string(u) + "-" + std::to_string(w) + " fits no edge type");
        out[{u, w}] = t;
    }
    return out;
}

} // namespace bullcol
