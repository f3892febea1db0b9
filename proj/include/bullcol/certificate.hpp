#pragma once

#include "bullcol/graph.hpp"
#include "bullcol/kinds.hpp"
#include "bullcol/witness.hpp"

#include <string>
#include <variant>

namespace bullcol {

enum class Decision { three_colourable, not_three_colourable, not_in_class };

std::string_view decision_name(Decision d);

using Payload = std::variant<Colouring, K4Witness, OddWheelWitness, SpindleNecklace, ForbiddenPatternWitness>;

/// Answer plus evidence. All vertex ids refer to the graph the certificate was issued for.
struct Certificate {
    Decision decision = Decision::three_colourable;
    ClassMode mode = ClassMode::bull_e;
    Payload payload;
    std::string provenance;

    static Certificate colouring(Colouring c, ClassMode mode, std::string provenance);
    static Certificate witness(const Witness& w, ClassMode mode, std::string provenance);

    bool has_colouring() const { return std::holds_alternative<Colouring>(payload); }
    const Colouring& colours() const { return std::get<Colouring>(payload); }
    std::optional<Witness> witness_payload() const;
    std::string_view payload_kind() const;
};

/// Result of checking a certificate; `reason` explains a rejection.
struct VerifyReport {
    bool ok = false;
    std::string reason;
};

/// Independent check of a certificate against g. Shares no logic with the
/// producers beyond graph-core; never throws on malformed payloads.
VerifyReport check_certificate(const Graph& g, const Certificate& cert);
bool verify(const Graph& g, const Certificate& cert);

/// Certificate document (JSON). Vertices are written as the graph's labels.
std::string certificate_to_json(const Graph& g, const Certificate& cert);
Certificate certificate_from_json(const Graph& g, std::string_view text);

} // namespace bullcol
