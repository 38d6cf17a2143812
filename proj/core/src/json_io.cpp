#include "framize/json_io.hpp"

#include <stdexcept>

#include "framize/parse.hpp"
#include "framize/print.hpp"

namespace framize {

namespace {

LetterKind kind_from_string(const std::string& s) {
  if (s == "t") return LetterKind::Tpow;
  if (s == "h") return LetterKind::H;
  if (s == "g") return LetterKind::G;
  if (s == "G") return LetterKind::Ginv;
  if (s == "T") return LetterKind::Bgen;
  if (s == "Tinv") return LetterKind::Bginv;
  if (s == "tau") return LetterKind::Tau;
  throw std::invalid_argument("unknown letter kind '" + s + "'");
}

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument("malformed document: " + what);
}

}  // namespace

Json system_to_json(const RuleSystem& sys) {
  Json j;
  j["name"] = sys.name();
  j["params"] = Json{{"d", sys.context().d}, {"n", sys.context().n}};
  j["field"] = sys.field()->names();
  Json kinds = Json::array();
  for (LetterKind k : sys.alphabet().kinds) kinds.push_back(kind_name(k));
  j["alphabet"] = kinds;
  j["order"] = sys.order().describe();
  j["max_steps"] = sys.max_steps();
  Json rules = Json::array();
  for (const auto& r : sys.rules()) {
    rules.push_back(Json{{"name", r.name},
                         {"lhs", word_to_string(r.lhs)},
                         {"rhs", element_to_string(r.rhs, sys.order())},
                         {"provenance", r.provenance}});
  }
  j["rules"] = rules;
  return j;
}

RuleSystem system_from_json(const Json& j) {
  validate_system_json(j);
  Context ctx{j["params"]["d"].get<int>(), j["params"]["n"].get<int>()};
  FieldPtr field = make_field(j["field"].get<std::vector<std::string>>());
  Alphabet alphabet;
  for (const auto& k : j["alphabet"]) alphabet.kinds.insert(kind_from_string(k.get<std::string>()));
  RuleSystem sys(j["name"].get<std::string>(), field, ctx, TermOrder(), alphabet,
                 j["max_steps"].get<int>());
  for (const auto& r : j["rules"]) {
    sys.add_rule(RewriteRule{r["name"].get<std::string>(),
                             parse_word(r["lhs"].get<std::string>(), field, ctx),
                             parse_element(r["rhs"].get<std::string>(), field, ctx),
                             r["provenance"].get<std::string>()});
  }
  return sys;
}

Json trace_to_json(const ReductionTrace& trace, const RuleSystem& sys, TraceDetail detail) {
  Json j;
  j["final"] = element_to_string(trace.final, sys.order());
  j["steps"] = trace.step_count;
  j["exhausted"] = trace.exhausted;
  if (detail != TraceDetail::Counts) {
    Json steps = Json::array();
    for (const auto& s : trace.steps) {
      Json step;
      step["position"] = s.position;
      step["rule"] = s.rule;
      if (detail == TraceDetail::Full) {
        step["before"] = element_to_string(s.before, sys.order());
        step["after"] = element_to_string(s.after, sys.order());
      }
      steps.push_back(std::move(step));
    }
    j["trace"] = std::move(steps);
  }
  return j;
}

Json report_pairs_to_json(const CriticalPairReport& report, const RuleSystem& sys) {
  Json j;
  j["system"] = sys.name();
  j["bound"] = report.bound;
  j["total"] = report.pairs.size();
  j["joinable"] = report.joinable_count();
  Json pairs = Json::array();
  for (const auto& p : report.pairs) {
    pairs.push_back(Json{{"overlap", word_to_string(p.overlap)},
                         {"rule_left", p.rule_left},
                         {"rule_right", p.rule_right},
                         {"left", element_to_string(p.left_reduct, sys.order())},
                         {"right", element_to_string(p.right_reduct, sys.order())},
                         {"joinable", p.joinable}});
  }
  j["pairs"] = std::move(pairs);
  return j;
}

void validate_system_json(const Json& j) {
  require(j.is_object(), "system document is not an object");
  for (const char* key : {"name", "params", "field", "alphabet", "order", "max_steps", "rules"})
    require(j.contains(key), std::string("missing key '") + key + "'");
  require(j["params"].contains("d") && j["params"].contains("n"), "params needs d and n");
  require(j["field"].is_array(), "field is not an array");
  require(j["rules"].is_array(), "rules is not an array");
  for (const auto& r : j["rules"])
    for (const char* key : {"name", "lhs", "rhs", "provenance"})
      require(r.contains(key) && r[key].is_string(), std::string("rule missing '") + key + "'");
}

void validate_trace_json(const Json& j) {
  require(j.is_object(), "trace document is not an object");
  for (const char* key : {"final", "steps", "exhausted"})
    require(j.contains(key), std::string("missing key '") + key + "'");
  require(j["exhausted"].is_boolean(), "exhausted is not boolean");
  if (j.contains("trace")) {
    require(j["trace"].is_array(), "trace is not an array");
    for (const auto& s : j["trace"])
      require(s.contains("position") && s.contains("rule"), "trace step incomplete");
  }
}

void validate_pairs_json(const Json& j) {
  require(j.is_object(), "pair report is not an object");
  for (const char* key : {"system", "bound", "total", "joinable", "pairs"})
    require(j.contains(key), std::string("missing key '") + key + "'");
  require(j["pairs"].is_array(), "pairs is not an array");
  for (const auto& p : j["pairs"]) {
    for (const char* key : {"overlap", "rule_left", "rule_right", "left", "right", "joinable"})
      require(p.contains(key), std::string("pair missing '") + key + "'");
    require(p["joinable"].is_boolean(), "joinable is not boolean");
  }
}

void validate_report_json(const Json& j) {
  require(j.is_object(), "report is not an object");
  for (const char* key : {"suite", "params", "items", "wall_time_ms"})
    require(j.contains(key), std::string("missing key '") + key + "'");
  require(j["items"].is_array(), "items is not an array");
  for (const auto& item : j["items"]) {
    for (const char* key : {"name", "verified", "steps"})
      require(item.contains(key), std::string("item missing '") + key + "'");
    require(item["verified"].is_boolean(), "verified is not boolean");
  }
}

}  // namespace framize
