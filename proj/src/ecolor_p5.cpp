#include "bullcol/ecolor.hpp"
#include "hole_detail.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace bullcol {

namespace {

// Satisfiability of clauses over "component flipped" variables.
class TwoSat {
public:
    explicit TwoSat(int vars) : n_(vars), graph_(static_cast<std::size_t>(2 * vars)) {}

    // Literal: 2*var + (value ? 1 : 0) stands for "var == value".
    static int lit(int var, bool value) { return 2 * var + (value ? 1 : 0); }

    void either(int a, int b) {
        graph_[static_cast<std::size_t>(a ^ 1)].push_back(b);
        graph_[static_cast<std::size_t>(b ^ 1)].push_back(a);
    }

    std::optional<std::vector<bool>> solve() {
        int m = 2 * n_;
        std::vector<int> index(static_cast<std::size_t>(m), -1), low(static_cast<std::size_t>(m), 0),
            comp(static_cast<std::size_t>(m), -1);
        std::vector<char> on(static_cast<std::size_t>(m), 0);
        std::vector<int> stack;
        int counter = 0, comps = 0;
        std::function<void(int)> strong = [&](int v) {
            index[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = counter++;
            stack.push_back(v);
            on[static_cast<std::size_t>(v)] = 1;
            for (int u : graph_[static_cast<std::size_t>(v)]) {
                if (index[static_cast<std::size_t>(u)] < 0) {
                    strong(u);
                    low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(u)]);
                } else if (on[static_cast<std::size_t>(u)]) {
                    low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(u)]);
                }
            }
            if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
                int u;
                do {
                    u = stack.back();
                    stack.pop_back();
                    on[static_cast<std::size_t>(u)] = 0;
                    comp[static_cast<std::size_t>(u)] = comps;
                } while (u != v);
                ++comps;
            }
        };
        for (int v = 0; v < m; ++v)
            if (index[static_cast<std::size_t>(v)] < 0)
                strong(v);
        std::vector<bool> value(static_cast<std::size_t>(n_));
        for (int x = 0; x < n_; ++x) {
            int t = comp[static_cast<std::size_t>(lit(x, true))], f = comp[static_cast<std::size_t>(lit(x, false))];
            if (t == f)
                return std::nullopt;
            // Tarjan numbers components in reverse topological order.
            value[static_cast<std::size_t>(x)] = t < f;
        }
        return value;
    }

private:
    int n_;
    std::vector<std::vector<int>> graph_;
};

// Vertices whose colour is one of two values, chosen per connected component.
struct Flexible {
    VertexSet vertices;
    Colour first = kRed, second = kGreen;
    Colour pinned = kUncoloured; // colour forced onto the C vertices of the group
};

class P5Colourer {
public:
    P5Colourer(const Graph& g, const Classification& cls) : g_(g), cls_(cls), q_(cls.hole()), col_(g.order()) {}

    std::optional<Colouring> run() {
        auto V = [&](int i) { return q_.at(i); };
        auto S = [&](Region r, int i) -> const VertexSet& { return cls_.set(r, i); };
        bool has_d = !cls_.all(Region::d).empty();

        // Step 1.
        col_[V(0)] = col_[V(2)] = kRed;
        col_[V(1)] = col_[V(3)] = kGreen;
        col_[V(4)] = kBlue;
        // Step 2.
        for (int i = 1; i < 5; ++i)
            for (Vertex w : cls_.star_set(Region::b, i))
                col_[w] = col_[V(i + 1)];
        // Step 3.
        for (int i : {0, 1, 2})
            for (Vertex w : cls_.star_set(Region::a, i))
                col_[w] = col_[V(i - 1)];
        // Step 4.
        for (Vertex w : S(Region::c, 0))
            col_[w] = kBlue;
        add_flexible(cls_.primed_set(Region::a, 0), kGreen, kBlue, kUncoloured);
        add_flexible(cls_.primed_set(Region::a, 2), kGreen, kBlue, kUncoloured);
        add_flexible(cls_.primed_set(Region::a, 3), kRed, kBlue, kUncoloured);
        VertexSet bc = cls_.primed_set(Region::b, 0);
        bc.insert(bc.end(), S(Region::c, 0).begin(), S(Region::c, 0).end());
        add_flexible(bc, kGreen, kBlue, kBlue);

        if (!has_d) {
            // Step 5.
            for (Vertex w : cls_.star_set(Region::a, 4))
                col_[w] = kGreen;
            VertexSet trigger = cls_.primed_set(Region::a, 2);
            VertexSet b1 = cls_.primed_set(Region::b, 0);
            trigger.insert(trigger.end(), b1.begin(), b1.end());
            for (Vertex w : cls_.star_set(Region::a, 3))
                col_[w] = touches(w, trigger) ? kRed : kBlue;
            VertexSet a5 = cls_.star_set(Region::a, 4);
            for (Vertex w : cls_.star_set(Region::b, 0))
                col_[w] = touches(w, a5) ? kBlue : kGreen;
        } else {
            // Step 6.
            for (Vertex w : S(Region::d, 0))
                col_[w] = kBlue;
            VertexSet b1 = cls_.star_set(Region::b, 0);
            for (Vertex w : b1)
                col_[w] = kGreen;
            add_flexible(cls_.primed_set(Region::a, 4), kRed, kGreen, kUncoloured);
            for (Vertex w : cls_.star_set(Region::a, 4))
                col_[w] = touches(w, b1) ? kRed : kGreen;
        }
        return settle_flexible();
    }

private:
    bool touches(Vertex w, const VertexSet& s) const {
        return std::any_of(s.begin(), s.end(), [&](Vertex u) { return g_.adjacent(w, u); });
    }

    void add_flexible(const VertexSet& s, Colour a, Colour b, Colour pinned) {
        if (!s.empty())
            groups_.push_back({s, a, b, pinned});
    }

    // Splits each group into components, orients them with 2-SAT and writes
    // the colours. Vertices of a group with a pinned colour keep their side.
    std::optional<Colouring> settle_flexible() {
        int n = g_.order();
        std::vector<int> var(static_cast<std::size_t>(n), -1), side(static_cast<std::size_t>(n), -1);
        std::vector<std::pair<Colour, Colour>> palette;
        std::vector<int> group_of(static_cast<std::size_t>(n), -1);
        for (std::size_t gi = 0; gi < groups_.size(); ++gi)
            for (Vertex v : groups_[gi].vertices)
                group_of[static_cast<std::size_t>(v)] = static_cast<int>(gi);
        for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
            const Flexible& grp = groups_[gi];
            for (Vertex root : grp.vertices) {
                if (var[static_cast<std::size_t>(root)] >= 0)
                    continue;
                int id = static_cast<int>(palette.size());
                palette.emplace_back(grp.first, grp.second);
                VertexSet comp{root};
                var[static_cast<std::size_t>(root)] = id;
                side[static_cast<std::size_t>(root)] = 0;
                for (std::size_t head = 0; head < comp.size(); ++head)
                    for (Vertex u : g_.neighbours(comp[head])) {
                        if (group_of[static_cast<std::size_t>(u)] != static_cast<int>(gi))
                            continue;
                        int want = 1 - side[static_cast<std::size_t>(comp[head])];
                        if (var[static_cast<std::size_t>(u)] < 0) {
                            var[static_cast<std::size_t>(u)] = id;
                            side[static_cast<std::size_t>(u)] = want;
                            comp.push_back(u);
                        } else if (side[static_cast<std::size_t>(u)] != want) {
                            return std::nullopt;
                        }
                    }
            }
        }
        auto colour_of = [&](Vertex v, bool flipped) {
            auto [a, b] = palette[static_cast<std::size_t>(var[static_cast<std::size_t>(v)])];
            return (side[static_cast<std::size_t>(v)] == 1) != flipped ? b : a;
        };
        TwoSat sat(static_cast<int>(palette.size()));
        for (std::size_t gi = 0; gi < groups_.size(); ++gi) {
            Colour pin = groups_[gi].pinned;
            if (pin == kUncoloured)
                continue;
            for (Vertex v : groups_[gi].vertices)
                if (col_[v] == pin)
                    for (bool f : {false, true})
                        if (colour_of(v, f) != pin)
                            sat.either(TwoSat::lit(var[static_cast<std::size_t>(v)], !f),
                                       TwoSat::lit(var[static_cast<std::size_t>(v)], !f));
        }
        for (auto [u, v] : g_.edges()) {
            int xu = var[static_cast<std::size_t>(u)], xv = var[static_cast<std::size_t>(v)];
            if (xu < 0 && xv < 0) {
                if (col_[u] != kUncoloured && col_[u] == col_[v])
                    return std::nullopt;
                continue;
            }
            if (xu < 0 || xv < 0) {
                Vertex flex = xu < 0 ? v : u, fixed = xu < 0 ? u : v;
                if (col_[fixed] == kUncoloured)
                    continue;
                int x = var[static_cast<std::size_t>(flex)];
                for (bool f : {false, true})
                    if (colour_of(flex, f) == col_[fixed])
                        sat.either(TwoSat::lit(x, !f), TwoSat::lit(x, !f));
                continue;
            }
            if (xu == xv)
                continue;
            for (bool fu : {false, true})
                for (bool fv : {false, true})
                    if (colour_of(u, fu) == colour_of(v, fv))
                        sat.either(TwoSat::lit(xu, !fu), TwoSat::lit(xv, !fv));
        }
        auto solution = sat.solve();
        if (!solution)
            return std::nullopt;
        for (Vertex v = 0; v < n; ++v)
            if (var[static_cast<std::size_t>(v)] >= 0)
                col_[v] = colour_of(v, (*solution)[static_cast<std::size_t>(var[static_cast<std::size_t>(v)])]);
        if (!col_.complete() || monochromatic_edge(g_, col_))
            return std::nullopt;
        return col_;
    }

    const Graph& g_;
    const Classification& cls_;
    const HoleContext& q_;
    Colouring col_;
    std::vector<Flexible> groups_;
};

// Which normalised case the labelling matches, or 0.
int normal_case(const Classification& cls) {
    bool c_empty = cls.all(Region::c).empty(), d_empty = cls.all(Region::d).empty();
    auto no_b_primed_except = [&](int keep) {
        for (int i = 0; i < 5; ++i)
            if (i != keep && !cls.primed_set(Region::b, i).empty())
                return false;
        return true;
    };
    if (!c_empty) {
        bool only_c0 = cls.all(Region::c) == cls.set(Region::c, 0);
        if (only_c0 && no_b_primed_except(0) && cls.primed_set(Region::a, 4).empty())
            return 1;
        return 0;
    }
    if (d_empty) {
        if (no_b_primed_except(-1) && cls.primed_set(Region::a, 1).empty() && cls.primed_set(Region::a, 4).empty())
            return 2;
        return 0;
    }
    return cls.all(Region::d) == cls.set(Region::d, 0) ? 3 : 0;
}

// Sweeps the ten labellings of the hole; normalised labellings go first.
std::optional<Certificate> sweep(const Graph& g, const HoleContext& hole, const std::string& origin) {
    struct Labelling {
        int start, step, kind;
        Classification cls;
    };
    std::vector<Labelling> order;
    for (int step : {1, -1})
        for (int start = 0; start < 5; ++start) {
            HoleContext q = hole.relabelled(start, step);
            auto res = classify(g, q, ClassMode::bull_e);
            if (!std::holds_alternative<Classification>(res))
                continue;
            Classification cls = std::get<Classification>(std::move(res));
            int kind = normal_case(cls);
            order.push_back({start, step, kind, std::move(cls)});
        }
    std::stable_sort(order.begin(), order.end(),
                     [](const Labelling& a, const Labelling& b) { return (a.kind == 0) < (b.kind == 0); });
    for (const Labelling& l : order)
        if (auto col = P5Colourer(g, l.cls).run()) {
            std::string note = "5-hole colouring";
            note += l.kind ? ", case " + std::to_string(l.kind) : ", unnormalised labelling";
            note += origin;
            return Certificate::colouring(std::move(*col), ClassMode::bull_e, note);
        }
    return std::nullopt;
}

} // namespace

Certificate solve_e_p5(const Graph& g, const Classification& cls) {
    constexpr ClassMode mode = ClassMode::bull_e;
    const HoleContext& q = cls.hole();
    if (q.length() != 5)
        throw ContractViolation("solve_e_p5 needs a 5-hole");
    if (auto c = sweep(g, q, ""))
        return *c;

    // Restart on other 5-holes: first those obtained by swapping a B' vertex
    // into the hole, then any other induced C5.
    std::vector<VertexSet> holes;
    for (int i = 0; i < 5; ++i)
        for (Vertex w : cls.primed_set(Region::b, i))
            holes.push_back({q.at(i), w, q.at(i + 2), q.at(i + 3), q.at(i + 4)});
    for (auto& c : induced_cycles_of_length(g, 5, static_cast<std::size_t>(g.order()) * 4))
        holes.push_back(std::move(c));
    std::set<VertexSet> tried;
    {
        VertexSet key = q.cycle();
        std::sort(key.begin(), key.end());
        tried.insert(key);
    }
    int restarts = 0;
    for (const VertexSet& h : holes) {
        VertexSet key = h;
        std::sort(key.begin(), key.end());
        if (!tried.insert(key).second || !is_induced_cycle(g, h))
            continue;
        if (++restarts > g.order())
            break;
        HoleContext q2(h);
        auto res = classify(g, q2, mode);
        if (auto* f = std::get_if<Finding>(&res))
            return Certificate::witness(f->witness, mode, f->note);
        const Classification& cls2 = std::get<Classification>(res);
        if (auto f = validate_structure(g, cls2, mode))
            return Certificate::witness(f->witness, mode, f->note);
        if (auto c = sweep(g, q2, ", after restart on another 5-hole"))
            return *c;
    }
    if (auto w = global_witness(g, mode))
        return Certificate::witness(*w, mode, "5-hole block: no labelling colours, block search");
    throw InternalError("5-hole block: no labelling colours and no witness found");
}

} // namespace bullcol
