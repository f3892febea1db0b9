#include "bullcol/certificate.hpp"
#include "bullcol/witness.hpp"

#include <sstream>

namespace bullcol {

namespace {

Vertex map_vertex(Vertex v, std::span<const Vertex> to_parent) {
    if (v < 0 || static_cast<std::size_t>(v) >= to_parent.size())
        throw InternalError("witness vertex " + std::to_string(v) + " outside the local graph");
    return to_parent[static_cast<std::size_t>(v)];
}

VertexSet map_all(const VertexSet& vs, std::span<const Vertex> to_parent) {
    VertexSet out;
    out.reserve(vs.size());
    for (Vertex v : vs)
        out.push_back(map_vertex(v, to_parent));
    return out;
}

void write_list(std::ostringstream& out, const VertexSet& vs) {
    out << '[';
    for (std::size_t i = 0; i < vs.size(); ++i)
        out << (i ? "," : "") << vs[i];
    out << ']';
}

} // namespace

Witness remap(const Witness& w, std::span<const Vertex> to_parent) {
    return std::visit(
        [&](const auto& x) -> Witness {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, K4Witness>) {
                K4Witness out;
                for (std::size_t i = 0; i < 4; ++i)
                    out.vertices[i] = map_vertex(x.vertices[i], to_parent);
                return out;
            } else if constexpr (std::is_same_v<T, OddWheelWitness>) {
                return OddWheelWitness{map_vertex(x.hub, to_parent), map_all(x.rim, to_parent)};
            } else if constexpr (std::is_same_v<T, SpindleNecklace>) {
                SpindleNecklace out;
                out.hubs = map_all(x.hubs, to_parent);
                for (auto [a, b] : x.pairs)
                    out.pairs.emplace_back(map_vertex(a, to_parent), map_vertex(b, to_parent));
                return out;
            } else {
                return ForbiddenPatternWitness{x.pattern, map_all(x.vertices, to_parent)};
            }
        },
        w);
}

bool proves_not_colourable(const Witness& w) {
    return !std::holds_alternative<ForbiddenPatternWitness>(w);
}

std::string_view witness_kind(const Witness& w) {
    switch (w.index()) {
    case 0: return "k4";
    case 1: return "odd_wheel";
    case 2: return "spindle_necklace";
    default: return "forbidden_pattern";
    }
}

std::string describe(const Witness& w) {
    std::ostringstream out;
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, K4Witness>) {
                out << "K4 ";
                write_list(out, VertexSet(x.vertices.begin(), x.vertices.end()));
            } else if constexpr (std::is_same_v<T, OddWheelWitness>) {
                out << "odd wheel hub " << x.hub << " rim ";
                write_list(out, x.rim);
            } else if constexpr (std::is_same_v<T, SpindleNecklace>) {
                out << "necklace M" << 3 * x.diamonds() + 1 << " hubs ";
                write_list(out, x.hubs);
            } else {
                out << pattern_name(x.pattern) << ' ';
                write_list(out, x.vertices);
            }
        },
        w);
    return out.str();
}

std::string_view decision_name(Decision d) {
    switch (d) {
    case Decision::three_colourable: return "three_colourable";
    case Decision::not_three_colourable: return "not_three_colourable";
    case Decision::not_in_class: return "not_in_class";
    }
    return "unknown";
}

Certificate Certificate::colouring(Colouring c, ClassMode mode, std::string provenance) {
    return Certificate{Decision::three_colourable, mode, std::move(c), std::move(provenance)};
}

Certificate Certificate::witness(const Witness& w, ClassMode mode, std::string provenance) {
    Certificate cert;
    cert.decision = proves_not_colourable(w) ? Decision::not_three_colourable : Decision::not_in_class;
    cert.mode = mode;
    cert.provenance = std::move(provenance);
    std::visit([&](const auto& x) { cert.payload = x; }, w);
    return cert;
}

std::optional<Witness> Certificate::witness_payload() const {
    return std::visit(
        [](const auto& x) -> std::optional<Witness> {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Colouring>)
                return std::nullopt;
            else
                return Witness{x};
        },
        payload);
}

std::string_view Certificate::payload_kind() const {
    if (has_colouring())
        return "colouring";
    return witness_kind(*witness_payload());
}

} // namespace bullcol
