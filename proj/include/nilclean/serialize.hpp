#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "nilclean/constructors.hpp"
#include "nilclean/decompose.hpp"
#include "nilclean/ideal.hpp"
#include "nilclean/theorems.hpp"

namespace nilclean {

using Json = nlohmann::json;

/// {"ring": spec, "members": [...], "generators": [...]?}
Json to_json(const Ideal& ideal);
/// Rebuilds the ring from its spec; NotAnIdeal if the members are not an ideal.
Ideal ideal_from_json(const Json& j, const BuildOptions& opts = {});

/// {element, idempotent, second, kind, commutes, nil_index}
Json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

/// {id, paper_result, instances_tested, hypotheses_met, verdict, witness?, millis, notes?}
Json to_json(const TheoremReport& r);
TheoremReport report_from_json(const Json& j);

/// {order, zero, one, add: [[...]], mul: [[...]]}
Json table_to_json(const FiniteRing& ring);
/// Builds a table-backed ring without axiom checks. BadParameter on malformed input.
RingPtr table_ring_from_json(const Json& j);

/// Stable text form used by the CLI: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace nilclean
