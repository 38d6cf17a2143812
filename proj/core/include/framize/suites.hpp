#pragma once

#include <string>
#include <vector>

#include "framize/json_io.hpp"
#include "framize/presentations.hpp"

namespace framize {

/// Scripted verification suites.  Each replays a fixed list of identities
/// (or randomized equivalence checks) inside the relevant presentation and
/// reports per-item outcomes with reduction step counts and residuals.
enum class SuiteId {
  E_IDEMPOTENT,
  E_ABSORB_H,
  G_INVERSE,
  QUARTIC,
  QUINTIC,
  FACTORIZATION,
  BMW_SHORT_DERIVED,
  YH_CUBIC,
  YTL_QUOTIENT_SMOKE,
  D1_COLLAPSE,
  EPI_T1,
  SPAN_CASES,
};

const char* suite_name(SuiteId id);
SuiteId suite_from_name(const std::string& name);
std::vector<SuiteId> all_suites();

struct ReportItem {
  std::string name;
  bool verified;
  std::size_t steps = 0;
  std::string residual;  // canonical text of the nonzero residual, if any
  std::string note;      // e.g. "held as axiom"
};

struct Report {
  SuiteId suite;
  int d = 1;
  int n = 2;
  std::vector<ReportItem> items;
  long wall_time_ms = 0;
  bool exhausted = false;

  bool passed() const;
  Json to_json() const;
};

/// Run one suite at framing modulus d (ignored by the unframized suites).
/// The strand count is fixed per suite: 2 for the single-index identities,
/// 3 for the neighbor identities and the randomized collapse checks.
Report run_suite(SuiteId id, int d = 2);

/// The four-step derivation of the quartic relation followed by the closing
/// identity, each step checked as an exact element identity in the d-framized
/// BMW algebra on two strands.
Report replay_quartic_proof(int d);

/// The quintic annihilating polynomial of the braid generator, plus the
/// scalar-level factorization cross-checks.
Report verify_quintic_polynomial(int d);

}  // namespace framize
