#pragma once

#include <string>

#include <json.hpp>

#include "catcoh/complexes.hpp"
#include "catcoh/verify.hpp"

namespace catcoh {

using Json = nlohmann::ordered_json;

/// {"H0":{"rank":1,"torsion":[]},...} for degrees 0..window.
Json invariants_json(const GradedInvariants& g);
/// Keys in a fixed order; wall time omitted when timing is false.
Json report_json(const TheoremReport& report, bool timing = true);

/// Compact single-line JSON; an empty report serializes to {}.
std::string serialize_invariants(const GradedInvariants& g);
std::string serialize_report(const TheoremReport& report, bool timing = true, int indent = -1);

}  // namespace catcoh
