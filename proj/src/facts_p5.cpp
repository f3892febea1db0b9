#include "hole_detail.hpp"

namespace bullcol::detail {

namespace {

class P5Facts {
public:
    P5Facts(const Graph& g, const Classification& cls, ClassMode mode) : g_(g), cls_(cls), q_(cls.hole()), mode_(mode) {}

    std::optional<Finding> run() {
        for (auto check : {&P5Facts::bipartite, &P5Facts::a_forced_edges, &P5Facts::a_forbidden_edges,
                           &P5Facts::a_primed_spread, &P5Facts::a_b_triangle, &P5Facts::c_forced_edges,
                           &P5Facts::c_forbidden_edges, &P5Facts::a_primed_closed, &P5Facts::single_c,
                           &P5Facts::b_primed_closed, &P5Facts::d_forced_edges, &P5Facts::d_shape})
            if (auto f = (this->*check)())
                return f;
        return std::nullopt;
    }

private:
    Vertex V(int i) const { return q_.at(i); }
    const VertexSet& S(Region r, int i) const { return cls_.set(r, i); }
    bool adj(Vertex a, Vertex b) const { return g_.adjacent(a, b); }

    std::optional<Finding> settle(const std::string& note, std::vector<Candidate> c, VertexSet involved) const {
        return detail::settle(g_, q_, mode_, note, c, involved);
    }

    VertexSet with_partners(VertexSet s) const {
        VertexSet out = s;
        for (Vertex v : s)
            if (cls_.primed(v))
                out.push_back(partner(g_, cls_, v));
        return out;
    }

    std::optional<Finding> bipartite() {
        for (int i = 0; i < 5; ++i) {
            VertexSet bc = S(Region::b, i);
            bc.insert(bc.end(), S(Region::c, i).begin(), S(Region::c, i).end());
            if (auto f = odd_cycle_around(g_, bc, V(i), "G[B_i u C_i] is bipartite"))
                return f;
            if (auto f = odd_cycle_around(g_, S(Region::a, i), V(i), "G[A_i] is bipartite"))
                return f;
        }
        return std::nullopt;
    }

    std::optional<Finding> a_forced_edges() {
        const std::string note = "A_i is complete to A_i+1, A_i-1 and B_i-1";
        for (int i = 0; i < 5; ++i)
            for (Vertex w : S(Region::a, i)) {
                for (const VertexSet* s : {&S(Region::a, i + 1), &S(Region::b, i - 1)})
                    for (Vertex w2 : *s)
                        if (!adj(w, w2))
                            return settle(note, {{PatternKind::e, {w, V(i), V(i + 1), V(i + 2), V(i + 3), w2}}}, {w, w2});
                for (Vertex w2 : S(Region::a, i - 1))
                    if (!adj(w, w2))
                        return settle(note, {{PatternKind::e, {w, V(i), V(i - 1), V(i - 2), V(i - 3), w2}}}, {w, w2});
            }
        return std::nullopt;
    }

    std::optional<Finding> a_forbidden_edges() {
        const std::string note = "forbidden edge at an A vertex";
        for (int i = 0; i < 5; ++i)
            for (Vertex w : S(Region::a, i)) {
                auto hit = [&](const VertexSet& s) -> Vertex {
                    for (Vertex w2 : s)
                        if (adj(w, w2))
                            return w2;
                    return -1;
                };
                if (Vertex w2 = hit(S(Region::a, i + 2)); w2 >= 0)
                    return settle(note, {{PatternKind::e, {V(i + 3), V(i + 4), V(i), V(i + 1), w, w2}}}, {w, w2});
                if (Vertex w2 = hit(S(Region::a, i + 3)); w2 >= 0)
                    return settle(note, {{PatternKind::e, {V(i + 2), V(i + 1), V(i), V(i + 4), w, w2}}}, {w, w2});
                for (Region r : {Region::b, Region::c}) {
                    if (Vertex w2 = hit(S(r, i)); w2 >= 0)
                        return settle(note, {{PatternKind::bull, {V(i - 1), V(i), w, w2, V(i + 2)}}}, {w, w2});
                    if (Vertex w2 = hit(S(r, i + 3)); w2 >= 0)
                        return settle(note, {{PatternKind::bull, {V(i + 1), V(i), w, w2, V(i + 3)}}}, {w, w2});
                }
                if (Vertex w2 = hit(S(Region::c, i + 1)); w2 >= 0)
                    return settle(note, {{PatternKind::bull, {w, w2, V(i + 2), V(i + 3), V(i + 4)}}}, {w, w2});
                if (Vertex w2 = hit(S(Region::c, i + 2)); w2 >= 0)
                    return settle(note, {{PatternKind::bull, {w, w2, V(i + 3), V(i + 2), V(i + 1)}}}, {w, w2});
            }
        return std::nullopt;
    }

    std::optional<Finding> a_primed_spread() {
        for (int i = 0; i < 5; ++i) {
            VertexSet x = cls_.primed_set(Region::a, i), y = cls_.primed_set(Region::a, i + 1);
            if (x.empty() || y.empty())
                continue;
            Vertex w = x[0], w2 = partner(g_, cls_, w), u = y[0], u2 = partner(g_, cls_, u);
            return settle("A'_i and A'_i+1 both nonempty", {{PatternKind::k4, {w, w2, u, u2}}}, {w, w2, u, u2});
        }
        return std::nullopt;
    }

    std::optional<Finding> a_b_triangle() {
        for (int i = 0; i < 5; ++i)
            for (Vertex w : S(Region::a, i))
                for (Vertex w1 : S(Region::a, i + 1))
                    for (Vertex w2 : S(Region::b, i + 2))
                        if (adj(w, w2) && adj(w1, w2))
                            return settle("A_i, A_i+1 and B_i+2 form a triangle",
                                          {{PatternKind::bull, {V(i), w, w1, w2, V(i + 2)}}}, {w, w1, w2});
        return std::nullopt;
    }

    std::optional<Finding> c_forced_edges() {
        const std::string note = "C_i is complete to A_i+1, B_i-1 and B_i+1";
        for (int i = 0; i < 5; ++i)
            for (Vertex w : S(Region::c, i)) {
                for (const VertexSet* s : {&S(Region::a, i + 1), &S(Region::b, i + 1)})
                    for (Vertex w2 : *s)
                        if (!adj(w, w2))
                            return settle(note, {{PatternKind::bull, {V(i - 1), V(i), V(i + 1), w, w2}}}, {w, w2});
                for (Vertex w2 : S(Region::b, i - 1))
                    if (!adj(w, w2))
                        return settle(note, {{PatternKind::bull, {V(i + 3), V(i + 2), V(i + 1), w, w2}}}, {w, w2});
            }
        return std::nullopt;
    }

    std::optional<Finding> c_forbidden_edges() {
        const std::string note = "forbidden edge between C_i and A";
        for (int i = 0; i < 5; ++i)
            for (Vertex w : S(Region::c, i))
                for (int off : {0, 2, 3, 4})
                    for (Vertex w2 : S(Region::a, i + off)) {
                        if (!adj(w, w2))
                            continue;
                        bool low = off == 2 || off == 3;
                        VertexSet set = low ? VertexSet{V(i - 1), V(i), V(i + 1), w, w2}
                                            : VertexSet{V(i + 3), V(i + 2), V(i + 1), w, w2};
                        return settle(note, {{PatternKind::bull, set}}, {w, w2});
                    }
        return std::nullopt;
    }

    std::optional<Finding> a_primed_closed() {
        for (int i = 0; i < 5; ++i)
            for (Vertex w : cls_.primed_set(Region::a, i))
                for (Vertex w1 : S(Region::a, i)) {
                    if (!adj(w, w1))
                        continue;
                    for (Vertex w2 : g_.neighbours(w)) {
                        Region r = cls_.of(w2).region;
                        if (r == Region::hole || r == Region::d || cls_.in(w2, Region::a, i) || adj(w1, w2))
                            continue;
                        return settle("neighbours of an A'_i edge agree", {}, {w, w1, w2});
                    }
                }
        return std::nullopt;
    }

    std::optional<Finding> single_c() {
        for (int i = 0; i < 5; ++i) {
            const VertexSet& c = S(Region::c, i);
            if (c.empty())
                continue;
            Vertex w = c[0];
            for (int j = 0; j < 5; ++j)
                if (j != i && !S(Region::c, j).empty())
                    return settle("only one C_i is nonempty", {}, {w, S(Region::c, j)[0]});
            VertexSet bad = cls_.primed_set(Region::a, i + 1);
            for (int off = 1; off <= 4; ++off) {
                VertexSet b = cls_.primed_set(Region::b, i + off);
                bad.insert(bad.end(), b.begin(), b.end());
            }
            if (!bad.empty())
                return settle("C_i forbids A'_i+1 and B'_j for j != i", {}, with_partners({w, bad[0]}));
        }
        return std::nullopt;
    }

    std::optional<Finding> b_primed_closed() {
        for (int i = 0; i < 5; ++i)
            for (Vertex w : cls_.primed_set(Region::b, i))
                for (Vertex w1 : cls_.primed_set(Region::b, i)) {
                    if (!adj(w, w1))
                        continue;
                    for (Vertex w2 : g_.neighbours(w)) {
                        Region r = cls_.of(w2).region;
                        if (r == Region::hole || r == Region::d || cls_.in(w2, Region::b, i) ||
                            cls_.in(w2, Region::c, i) || adj(w1, w2))
                            continue;
                        return settle("neighbours of a B'_i edge agree", {}, {w, w1, w2});
                    }
                }
        return std::nullopt;
    }

    std::optional<Finding> d_forced_edges() {
        const std::string note = "D_i is complete to A_i+1, A_i+2, B_i-1 .. B_i+2";
        for (int i = 0; i < 5; ++i)
            for (Vertex w : S(Region::d, i)) {
                auto missing = [&](const VertexSet& s) -> Vertex {
                    for (Vertex w2 : s)
                        if (!adj(w, w2))
                            return w2;
                    return -1;
                };
                if (Vertex w2 = missing(S(Region::a, i + 1)); w2 >= 0)
                    return settle(note, {{PatternKind::bull, {V(i - 1), V(i), w, V(i + 1), w2}}}, {w, w2});
                if (Vertex w2 = missing(S(Region::a, i + 2)); w2 >= 0)
                    return settle(note, {{PatternKind::bull, {V(i + 4), V(i + 3), w, V(i + 2), w2}}}, {w, w2});
                if (Vertex w2 = missing(S(Region::b, i - 1)); w2 >= 0)
                    return settle(note, {{PatternKind::bull, {V(i + 3), w, V(i), V(i + 1), w2}}}, {w, w2});
                if (Vertex w2 = missing(S(Region::b, i)); w2 >= 0)
                    return settle(note, {{PatternKind::bull, {w2, V(i + 2), V(i + 3), w, V(i + 4)}}}, {w, w2});
                if (Vertex w2 = missing(S(Region::b, i + 1)); w2 >= 0)
                    return settle(note, {{PatternKind::bull, {w2, V(i), V(i + 1), w, V(i + 4)}}}, {w, w2});
                if (Vertex w2 = missing(S(Region::b, i + 2)); w2 >= 0)
                    return settle(note, {{PatternKind::bull, {V(i), w, V(i + 3), V(i + 2), w2}}}, {w, w2});
            }
        return std::nullopt;
    }

    std::optional<Finding> d_shape() {
        VertexSet d = cls_.all(Region::d);
        if (d.empty())
            return std::nullopt;
        Vertex w = d[0];
        int i = cls_.of(w).anchor;
        const std::string note = "D = D*_i with its neighbourhood restrictions";
        for (Vertex w2 : d)
            if (cls_.of(w2).anchor != i)
                return settle(note, {}, {w, w2});
        for (Vertex a : d)
            for (Vertex b : d)
                if (a < b && adj(a, b))
                    return settle(note, {{PatternKind::k4, {V(i + 1), V(i + 2), a, b}}}, {a, b});
        for (Vertex w2 : S(Region::a, i))
            return settle(note,
                          {adj(w, w2) ? Candidate{PatternKind::bull, {V(i - 1), V(i), w2, w, V(i + 2)}}
                                      : Candidate{PatternKind::bull, {w2, V(i), V(i + 1), w, V(i + 3)}}},
                          {w, w2});
        for (Vertex w2 : S(Region::a, i + 3))
            return settle(note,
                          {adj(w, w2) ? Candidate{PatternKind::bull, {V(i + 4), V(i + 3), w2, w, V(i + 1)}}
                                      : Candidate{PatternKind::bull, {w2, V(i + 3), V(i + 2), w, V(i)}}},
                          {w, w2});
        for (int off : {1, 2}) {
            VertexSet ap = cls_.primed_set(Region::a, i + off);
            if (!ap.empty())
                return settle(note, {{PatternKind::k4, {w, ap[0], partner(g_, cls_, ap[0]), V(i + off)}}},
                              with_partners({w, ap[0]}));
        }
        for (Vertex b : cls_.all(Region::b))
            if (cls_.primed(b))
                return settle(note, {}, with_partners({w, b}));
        for (Vertex c : cls_.all(Region::c)) {
            int j = cls_.of(c).anchor;
            std::vector<Candidate> cands;
            if (j == i)
                cands.push_back(adj(w, c) ? Candidate{PatternKind::k4, {V(i), V(i + 1), w, c}}
                                          : Candidate{PatternKind::bull, {V(i + 4), V(i + 3), w, V(i + 2), c}});
            if (j == q_.wrap(i + 1))
                cands.push_back(adj(w, c) ? Candidate{PatternKind::k4, {V(i + 2), V(i + 3), w, c}}
                                          : Candidate{PatternKind::bull, {V(i + 4), V(i), w, V(i + 1), c}});
            return settle(note, cands, {w, c});
        }
        return std::nullopt;
    }

    const Graph& g_;
    const Classification& cls_;
    const HoleContext& q_;
    ClassMode mode_;
};

} // namespace

std::optional<Finding> validate_p5_facts(const Graph& g, const Classification& cls, ClassMode mode) {
    return P5Facts(g, cls, mode).run();
}

} // namespace bullcol::detail
