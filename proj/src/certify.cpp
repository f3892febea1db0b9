#include "bullcol/certificate.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace bullcol {

namespace {

using json = nlohmann::json;

// Reference pattern graphs for the checker. Kept separate from the search
// templates on purpose: a bug there must not be able to hide here.
struct RefPattern {
    int n;
    std::vector<Edge> edges;
};

RefPattern spider_ref(std::initializer_list<int> legs) {
    RefPattern r{1, {}};
    for (int len : legs) {
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            r.edges.emplace_back(prev, r.n);
            prev = r.n++;
        }
    }
    return r;
}

RefPattern reference(PatternKind kind) {
    switch (kind) {
    case PatternKind::bull: return {5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 3}}};
    case PatternKind::claw: return {4, {{0, 1}, {0, 2}, {0, 3}}};
    case PatternKind::chair: return spider_ref({1, 1, 2});
    case PatternKind::e: return spider_ref({1, 2, 2});
    case PatternKind::s113: return spider_ref({1, 1, 3});
    case PatternKind::s123: return spider_ref({1, 2, 3});
    case PatternKind::c5: return {5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}};
    case PatternKind::p5: return {5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}};
    case PatternKind::p6: return {6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}};
    case PatternKind::k4: return {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    case PatternKind::c7_complement: {
        RefPattern r{7, {}};
        for (int i = 0; i < 7; ++i) {
            r.edges.emplace_back(i, (i + 2) % 7);
            r.edges.emplace_back(i, (i + 3) % 7);
        }
        return r;
    }
    }
    return {0, {}};
}

std::string lbl(const Graph& g, Vertex v) {
    return g.contains(v) ? std::to_string(g.label(v)) : "<invalid " + std::to_string(v) + ">";
}

bool all_valid_distinct(const Graph& g, const VertexSet& vs, std::string& why) {
    std::set<Vertex> seen;
    for (Vertex v : vs) {
        if (!g.contains(v)) {
            why = "vertex " + lbl(g, v) + " is not in the graph";
            return false;
        }
        if (!seen.insert(v).second) {
            why = "vertex " + lbl(g, v) + " listed twice";
            return false;
        }
    }
    return true;
}

bool need_edge(const Graph& g, Vertex u, Vertex v, std::string& why) {
    if (g.adjacent(u, v))
        return true;
    why = "missing edge " + lbl(g, u) + "-" + lbl(g, v);
    return false;
}

VerifyReport check_colouring(const Graph& g, const Colouring& c) {
    if (c.size() != g.order())
        return {false, "colouring has " + std::to_string(c.size()) + " entries for " +
                           std::to_string(g.order()) + " vertices"};
    for (Vertex v = 0; v < g.order(); ++v)
        if (c[v] < 0 || c[v] > 2)
            return {false, "vertex " + lbl(g, v) + " has no colour in {0,1,2}"};
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v : g.neighbours(u))
            if (u < v && c[u] == c[v])
                return {false, "monochromatic edge " + lbl(g, u) + "-" + lbl(g, v) + " (colour " +
                                   std::to_string(c[u]) + ")"};
    return {true, {}};
}

VerifyReport check_k4(const Graph& g, const K4Witness& w) {
    std::string why;
    VertexSet vs(w.vertices.begin(), w.vertices.end());
    if (!all_valid_distinct(g, vs, why))
        return {false, why};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (!need_edge(g, vs[i], vs[j], why))
                return {false, why};
    return {true, {}};
}

VerifyReport check_wheel(const Graph& g, const OddWheelWitness& w) {
    std::string why;
    int r = static_cast<int>(w.rim.size());
    if (r < 3 || r % 2 == 0)
        return {false, "rim length " + std::to_string(r) + " is not odd and at least 3"};
    VertexSet all = w.rim;
    all.push_back(w.hub);
    if (!all_valid_distinct(g, all, why))
        return {false, why};
    for (Vertex v : w.rim)
        if (!need_edge(g, w.hub, v, why))
            return {false, why};
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            bool consecutive = j == i + 1 || (i == 0 && j == r - 1);
            Vertex a = w.rim[static_cast<std::size_t>(i)], b = w.rim[static_cast<std::size_t>(j)];
            if (consecutive && !g.adjacent(a, b))
                return {false, "missing rim edge " + lbl(g, a) + "-" + lbl(g, b)};
            if (!consecutive && g.adjacent(a, b))
                return {false, "rim chord " + lbl(g, a) + "-" + lbl(g, b)};
        }
    return {true, {}};
}

VerifyReport check_necklace(const Graph& g, const SpindleNecklace& w) {
    std::string why;
    std::size_t k = w.pairs.size();
    if (k < 1)
        return {false, "necklace has no diamonds"};
    if (w.hubs.size() != k + 1)
        return {false, "necklace needs " + std::to_string(k + 1) + " hubs, has " + std::to_string(w.hubs.size())};
    VertexSet all = w.hubs;
    for (auto [a, b] : w.pairs) {
        all.push_back(a);
        all.push_back(b);
    }
    if (!all_valid_distinct(g, all, why))
        return {false, why};
    for (std::size_t i = 0; i < k; ++i) {
        Vertex h = w.hubs[i], h2 = w.hubs[i + 1];
        auto [a, b] = w.pairs[i];
        for (auto [x, y] : {Edge{h, a}, Edge{h, b}, Edge{a, b}, Edge{a, h2}, Edge{b, h2}})
            if (!need_edge(g, x, y, why))
                return {false, why};
    }
    if (!need_edge(g, w.hubs.back(), w.hubs.front(), why))
        return {false, why};
    return {true, {}};
}

VerifyReport check_pattern(const Graph& g, const ForbiddenPatternWitness& w, ClassMode mode) {
    auto forbidden = forbidden_patterns(mode);
    if (std::find(forbidden.begin(), forbidden.end(), w.pattern) == forbidden.end())
        return {false, std::string(pattern_name(w.pattern)) + " is not forbidden in class " +
                           std::string(class_mode_name(mode))};
    std::string why;
    if (!all_valid_distinct(g, w.vertices, why))
        return {false, why};
    RefPattern ref = reference(w.pattern);
    int n = ref.n;
    if (static_cast<int>(w.vertices.size()) != n)
        return {false, std::string(pattern_name(w.pattern)) + " needs " + std::to_string(n) + " vertices"};
    std::vector<char> t(static_cast<std::size_t>(n * n), 0);
    for (auto [a, b] : ref.edges)
        t[static_cast<std::size_t>(a * n + b)] = t[static_cast<std::size_t>(b * n + a)] = 1;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int i = 0; i < n && match; ++i)
            for (int j = i + 1; j < n && match; ++j) {
                bool host = g.adjacent(w.vertices[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])],
                                       w.vertices[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]);
                match = host == (t[static_cast<std::size_t>(i * n + j)] != 0);
            }
        if (match)
            return {true, {}};
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {false, "vertices do not induce " + std::string(pattern_name(w.pattern))};
}

// JSON helpers. Unknown labels map to -1 so the checker reports them.
Vertex from_label(const Graph& g, const json& j) {
    if (!j.is_number_integer())
        throw InputError("certificate vertex is not an integer: " + j.dump());
    return g.vertex_with_label(j.get<long long>()).value_or(-1);
}

json to_label(const Graph& g, Vertex v) {
    return g.contains(v) ? json(g.label(v)) : json(-1);
}

json labels(const Graph& g, const VertexSet& vs) {
    json out = json::array();
    for (Vertex v : vs)
        out.push_back(to_label(g, v));
    return out;
}

VertexSet vertices_from(const Graph& g, const json& arr) {
    if (!arr.is_array())
        throw InputError("expected a vertex array, got " + arr.dump());
    VertexSet out;
    for (const auto& x : arr)
        out.push_back(from_label(g, x));
    return out;
}

const json& field(const json& obj, const char* name) {
    if (!obj.is_object() || !obj.contains(name))
        throw InputError(std::string("certificate is missing field '") + name + "'");
    return obj.at(name);
}

} // namespace

VerifyReport check_certificate(const Graph& g, const Certificate& cert) {
    bool is_colouring = std::holds_alternative<Colouring>(cert.payload);
    bool is_pattern = std::holds_alternative<ForbiddenPatternWitness>(cert.payload);
    switch (cert.decision) {
    case Decision::three_colourable:
        if (!is_colouring)
            return {false, "three_colourable certificate must carry a colouring"};
        break;
    case Decision::not_three_colourable:
        if (is_colouring || is_pattern)
            return {false, "not_three_colourable certificate must carry a K4, odd wheel or necklace"};
        break;
    case Decision::not_in_class:
        if (!is_pattern)
            return {false, "not_in_class certificate must carry a forbidden pattern"};
        break;
    }
    if (auto* c = std::get_if<Colouring>(&cert.payload))
        return check_colouring(g, *c);
    if (auto* k = std::get_if<K4Witness>(&cert.payload))
        return check_k4(g, *k);
    if (auto* w = std::get_if<OddWheelWitness>(&cert.payload))
        return check_wheel(g, *w);
    if (auto* s = std::get_if<SpindleNecklace>(&cert.payload))
        return check_necklace(g, *s);
    return check_pattern(g, std::get<ForbiddenPatternWitness>(cert.payload), cert.mode);
}

bool verify(const Graph& g, const Certificate& cert) {
    return check_certificate(g, cert).ok;
}

std::string certificate_to_json(const Graph& g, const Certificate& cert) {
    json payload;
    payload["kind"] = std::string(cert.payload_kind());
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Colouring>) {
                json colours = json::object();
                for (Vertex v = 0; v < x.size() && v < g.order(); ++v)
                    colours[std::to_string(g.label(v))] = x[v];
                payload["colours"] = colours;
            } else if constexpr (std::is_same_v<T, K4Witness>) {
                payload["vertices"] = labels(g, VertexSet(x.vertices.begin(), x.vertices.end()));
            } else if constexpr (std::is_same_v<T, OddWheelWitness>) {
                payload["hub"] = to_label(g, x.hub);
                payload["rim"] = labels(g, x.rim);
            } else if constexpr (std::is_same_v<T, SpindleNecklace>) {
                payload["hubs"] = labels(g, x.hubs);
                json pairs = json::array();
                for (auto [a, b] : x.pairs)
                    pairs.push_back(json::array({to_label(g, a), to_label(g, b)}));
                payload["pairs"] = pairs;
                if (!x.hubs.empty()) {
                    auto [u, v] = x.closing_edge();
                    payload["closing_edge"] = json::array({to_label(g, u), to_label(g, v)});
                }
            } else {
                payload["pattern"] = std::string(pattern_name(x.pattern));
                payload["vertices"] = labels(g, x.vertices);
            }
        },
        cert.payload);
    json doc;
    doc["decision"] = std::string(decision_name(cert.decision));
    doc["class"] = std::string(class_mode_name(cert.mode));
    doc["payload"] = payload;
    doc["provenance"] = cert.provenance;
    return doc.dump(2) + "\n";
}

Certificate certificate_from_json(const Graph& g, std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("certificate is not valid JSON: ") + e.what());
    }
    try {
        Certificate cert;
        std::string decision = field(doc, "decision").get<std::string>();
        if (decision == "three_colourable")
            cert.decision = Decision::three_colourable;
        else if (decision == "not_three_colourable")
            cert.decision = Decision::not_three_colourable;
        else if (decision == "not_in_class")
            cert.decision = Decision::not_in_class;
        else
            throw InputError("unknown decision '" + decision + "'");
        std::string cls = field(doc, "class").get<std::string>();
        auto mode = class_mode_from_name(cls);
        if (!mode)
            throw InputError("unknown class '" + cls + "'");
        cert.mode = *mode;
        if (doc.contains("provenance") && doc["provenance"].is_string())
            cert.provenance = doc["provenance"].get<std::string>();

        const json& payload = field(doc, "payload");
        std::string kind = field(payload, "kind").get<std::string>();
        if (kind == "colouring") {
            const json& colours = field(payload, "colours");
            if (!colours.is_object())
                throw InputError("'colours' must map vertex labels to colours");
            Colouring c(g.order());
            for (const auto& [key, value] : colours.items()) {
                long long label = 0;
                try {
                    std::size_t used = 0;
                    label = std::stoll(key, &used);
                    if (used != key.size())
                        throw std::invalid_argument(key);
                } catch (const std::exception&) {
                    throw InputError("colour key '" + key + "' is not a vertex label");
                }
                if (!value.is_number_integer())
                    throw InputError("colour of vertex " + key + " is not an integer");
                auto v = g.vertex_with_label(label);
                if (!v)
                    throw InputError("colour given for unknown vertex " + key);
                c[*v] = static_cast<Colour>(std::clamp<long long>(value.get<long long>(), -1, 3));
            }
            cert.payload = std::move(c);
        } else if (kind == "k4") {
            VertexSet vs = vertices_from(g, field(payload, "vertices"));
            if (vs.size() != 4)
                throw InputError("k4 payload needs exactly 4 vertices");
            K4Witness w;
            std::copy(vs.begin(), vs.end(), w.vertices.begin());
            cert.payload = w;
        } else if (kind == "odd_wheel") {
            cert.payload = OddWheelWitness{from_label(g, field(payload, "hub")), vertices_from(g, field(payload, "rim"))};
        } else if (kind == "spindle_necklace") {
            SpindleNecklace w;
            w.hubs = vertices_from(g, field(payload, "hubs"));
            const json& pairs = field(payload, "pairs");
            if (!pairs.is_array())
                throw InputError("'pairs' must be an array");
            for (const auto& p : pairs) {
                VertexSet ab = vertices_from(g, p);
                if (ab.size() != 2)
                    throw InputError("each necklace pair needs 2 vertices");
                w.pairs.emplace_back(ab[0], ab[1]);
            }
            if (payload.contains("closing_edge")) {
                VertexSet e = vertices_from(g, payload["closing_edge"]);
                if (e.size() != 2 || w.hubs.empty() || Edge{e[0], e[1]} != w.closing_edge())
                    throw InputError("closing_edge must join the last hub to the first");
            }
            cert.payload = std::move(w);
        } else if (kind == "forbidden_pattern") {
            std::string name = field(payload, "pattern").get<std::string>();
            auto pk = pattern_from_name(name);
            if (!pk)
                throw InputError("unknown pattern '" + name + "'");
            cert.payload = ForbiddenPatternWitness{*pk, vertices_from(g, field(payload, "vertices"))};
        } else {
            throw InputError("unknown payload kind '" + kind + "'");
        }
        return cert;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed certificate: ") + e.what());
    }
}

} // namespace bullcol
