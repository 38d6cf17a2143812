#pragma once

#include <nlohmann/json.hpp>

#include "framize/presentations.hpp"
#include "framize/rewrite.hpp"

namespace framize {

using Json = nlohmann::ordered_json;

/// {params, order, rules: [{name, lhs, rhs, provenance}]} with words and
/// elements in their canonical textual forms.
Json system_to_json(const RuleSystem& sys);

/// Parse a system exported by system_to_json; the alphabet is inferred from
/// `like` (an AlgebraKind tag name recorded in the document name is not
/// trusted; rules are re-checked against the order on import).
RuleSystem system_from_json(const Json& j);

Json trace_to_json(const ReductionTrace& trace, const RuleSystem& sys, TraceDetail detail);
Json report_pairs_to_json(const CriticalPairReport& report, const RuleSystem& sys);

/// Shape checks used by the tests and the CLI; throw on violation.
void validate_system_json(const Json& j);
void validate_trace_json(const Json& j);
void validate_pairs_json(const Json& j);
void validate_report_json(const Json& j);

}  // namespace framize
