// Command line front end: reduce words to normal form, verify identities,
// run verification suites, inspect presentations, spanning sets and framed
// braid normal forms.  Exit codes: 0 success/verified, 1 verification
// failure, 2 usage error, 3 step-budget exhaustion.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "framize/json_io.hpp"
#include "framize/parse.hpp"
#include "framize/print.hpp"
#include "framize/suites.hpp"

using namespace framize;

namespace {

struct CommonOpts {
  std::string algebra = "fbmw";
  int d = 1;
  int n = 2;
  int r = 1;
  bool json = false;
  int max_steps = 0;  // 0: keep the default
  bool th_commute = false;
  bool no_ginv_expand = false;
  std::string system_file;
  std::vector<std::string> sets;  // NAME=EXPR substitutions
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_algebra = true) {
  if (with_algebra)
    cmd->add_option("--algebra,-a", o.algebra,
                    "algebra tag (bmw, fbmw, yh, hecke, ytl, shecke, fshecke, hb, hb_cyc, "
                    "hb_inf, fhb, fhb_cyc, fhb_inf)");
  cmd->add_option("--d,-d", o.d, "framing modulus");
  cmd->add_option("--n,-n", o.n, "strand count");
  cmd->add_option("--r", o.r, "cyclotomic degree (hb_cyc, fhb_cyc)");
  cmd->add_flag("--json,-j", o.json, "machine readable output");
  cmd->add_option("--max-steps", o.max_steps, "rewrite step budget per monomial");
  cmd->add_flag("--enable-th-commute", o.th_commute,
                "enable the optional topological-th-commute rules");
  cmd->add_flag("--no-ginv-expand", o.no_ginv_expand, "keep inverse braid letters unexpanded");
  cmd->add_option("--system", o.system_file, "load the rule system from an exported document");
  cmd->add_option("--set", o.sets, "substitute a parameter, e.g. --set u=q^2");
}

int env_max_steps() {
  if (const char* v = std::getenv("FRAMIZE_MAX_STEPS")) return std::atoi(v);
  return 0;
}

RuleSystem build_system(const CommonOpts& o) {
  if (!o.system_file.empty()) {
    std::ifstream in(o.system_file);
    if (!in) throw std::invalid_argument("cannot open " + o.system_file);
    Json j = Json::parse(in);
    RuleSystem sys = system_from_json(j);
    if (o.max_steps > 0) sys.set_max_steps(o.max_steps);
    return sys;
  }
  AlgebraKind kind{tag_from_name(o.algebra), o.d, o.r};
  PresentationOptions opts;
  opts.topological_th_commute = o.th_commute;
  opts.expand_g_inverse = !o.no_ginv_expand;
  if (o.max_steps > 0)
    opts.max_steps = o.max_steps;
  else if (int e = env_max_steps(); e > 0)
    opts.max_steps = e;
  RuleSystem sys = presentation(kind, o.n, opts);
  if (!o.sets.empty()) {
    // Substitute textual rational functions for parameters in every rule.
    RuleSystem out(sys.name(), sys.field(), sys.context(), sys.order(), sys.alphabet(),
                   sys.max_steps());
    std::vector<std::pair<std::size_t, Scalar>> subs;
    for (const std::string& s : o.sets) {
      auto eq = s.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("--set expects NAME=EXPR");
      auto idx = sys.field()->index_of(s.substr(0, eq));
      if (!idx) throw std::invalid_argument("unknown parameter in --set: " + s);
      subs.emplace_back(*idx, parse_scalar(s.substr(eq + 1), sys.field()));
    }
    for (RewriteRule r : sys.rules()) {
      Element rhs = Element::zero(sys.field(), sys.context());
      for (const auto& [w, c] : r.rhs.terms()) {
        Scalar cc = c;
        for (const auto& [idx, val] : subs) cc = cc.substitute(idx, val);
        rhs.add_term(w, cc);
      }
      r.rhs = rhs;
      out.add_rule(std::move(r));
    }
    return out;
  }
  return sys;
}

TraceDetail detail_from(const std::string& s) {
  if (s == "none") return TraceDetail::Counts;
  if (s == "full") return TraceDetail::Full;
  return TraceDetail::Steps;
}

int emit_trace(const ReductionTrace& trace, const RuleSystem& sys, bool json, TraceDetail detail) {
  if (json) {
    std::cout << trace_to_json(trace, sys, detail).dump(2) << "\n";
  } else {
    if (detail != TraceDetail::Counts)
      for (const auto& s : trace.steps)
        std::cout << "  [" << s.rule << " @ " << s.position << "]\n";
    std::cout << element_to_string(trace.final, sys.order()) << "\n";
    if (trace.exhausted) std::cerr << "warning: step budget exhausted\n";
  }
  return trace.exhausted ? 3 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computation in framized knot algebras"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string expr, expr2, trace_mode = "steps", export_file, suite_arg;
  bool enumerate = false;

  auto* reduce_cmd = app.add_subcommand("reduce", "reduce an element to normal form");
  add_common(reduce_cmd, o);
  reduce_cmd->add_option("--trace", trace_mode, "trace detail: none, steps, full");
  reduce_cmd->add_option("expr", expr, "element expression")->required();

  auto* verify_cmd = app.add_subcommand("verify", "verify an identity by reduction to zero");
  add_common(verify_cmd, o);
  verify_cmd->add_option("--trace", trace_mode, "trace detail: none, steps, full");
  verify_cmd->add_option("lhs", expr, "left side")->required();
  verify_cmd->add_option("rhs", expr2, "right side")->required();

  auto* suite_cmd = app.add_subcommand("suite", "run a verification suite");
  add_common(suite_cmd, o, false);
  suite_cmd->add_option("name", suite_arg, "suite name or 'all'")->required();

  auto* span_cmd = app.add_subcommand("span", "spanning-set reduction and enumeration");
  add_common(span_cmd, o);
  span_cmd->add_flag("--enumerate", enumerate, "enumerate distinct spanning normal forms");
  span_cmd->add_option("word", expr, "monomial to reduce to spanning form");

  auto* bound_cmd = app.add_subcommand("bound", "spanning monomial count");
  add_common(bound_cmd, o, false);

  auto* pres_cmd = app.add_subcommand("presentation", "print or export a presentation");
  add_common(pres_cmd, o);
  pres_cmd->add_option("--export", export_file, "write the rule system document to a file");

  auto* nf_cmd = app.add_subcommand("nf", "framed braid normal form");
  add_common(nf_cmd, o);
  nf_cmd->add_option("word", expr, "word over framing and braid letters")->required();

  auto* pairs_cmd = app.add_subcommand("pairs", "critical pair audit");
  add_common(pairs_cmd, o);
  int max_overlap = 6;
  pairs_cmd->add_option("--max-overlap", max_overlap, "largest overlap word length");

  CLI11_PARSE(app, argc, argv);

  try {
    if (reduce_cmd->parsed()) {
      RuleSystem sys = build_system(o);
      TraceDetail detail = detail_from(trace_mode);
      ReductionTrace tr = reduce(parse_element(expr, sys.field(), sys.context()), sys, detail);
      return emit_trace(tr, sys, o.json, detail);
    }
    if (verify_cmd->parsed()) {
      RuleSystem sys = build_system(o);
      TraceDetail detail = detail_from(trace_mode);
      VerifyResult v = verify_identity(parse_element(expr, sys.field(), sys.context()),
                                       parse_element(expr2, sys.field(), sys.context()), sys,
                                       detail);
      if (o.json) {
        Json j;
        j["verified"] = v.verified;
        j["residual"] = element_to_string(v.trace.final, sys.order());
        j["steps"] = v.trace.step_count;
        j["exhausted"] = v.trace.exhausted;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (v.verified ? "verified" : "NOT verified; residual: " +
                                                    element_to_string(v.trace.final, sys.order()))
                  << "\n";
      }
      if (v.trace.exhausted) return 3;
      return v.verified ? 0 : 1;
    }
    if (suite_cmd->parsed()) {
      std::vector<SuiteId> ids;
      if (suite_arg == "all")
        ids = all_suites();
      else
        ids.push_back(suite_from_name(suite_arg));
      bool all_ok = true, any_exhausted = false;
      Json out = Json::array();
      for (SuiteId id : ids) {
        Report rep = run_suite(id, o.d);
        all_ok = all_ok && rep.passed();
        any_exhausted = any_exhausted || rep.exhausted;
        if (o.json) {
          out.push_back(rep.to_json());
        } else {
          std::cout << suite_name(id) << " (d=" << rep.d << ", n=" << rep.n << "): "
                    << (rep.passed() ? "pass" : "FAIL") << "\n";
          for (const auto& item : rep.items) {
            std::cout << "  " << (item.verified ? "ok " : (item.note.empty() ? "FAIL" : "held"))
                      << "  " << item.name;
            if (!item.note.empty()) std::cout << "  [" << item.note << "]";
            if (!item.residual.empty()) std::cout << "  residual: " << item.residual;
            std::cout << "\n";
          }
        }
      }
      if (o.json) std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
      if (any_exhausted) return 3;
      return all_ok ? 0 : 1;
    }
    if (span_cmd->parsed()) {
      RuleSystem sys = build_system(o);
      if (enumerate) {
        SpanningEnumeration e = spanning_enumerate(o.d, o.n, sys);
        if (o.json) {
          Json j;
          j["candidates"] = e.candidates;
          j["distinct"] = e.elements.size();
          Json arr = Json::array();
          for (const auto& el : e.elements) arr.push_back(element_to_string(el, sys.order()));
          j["elements"] = std::move(arr);
          j["exhausted"] = e.exhausted.size();
          std::cout << j.dump(2) << "\n";
        } else {
          std::cout << e.elements.size() << " distinct normal forms from " << e.candidates
                    << " candidates\n";
          for (const auto& el : e.elements)
            std::cout << "  " << element_to_string(el, sys.order()) << "\n";
        }
        return e.exhausted.empty() ? 0 : 3;
      }
      if (expr.empty()) throw CLI::ValidationError("span", "need a word or --enumerate");
      SpanningTrace tr = spanning_reduce(parse_word(expr, sys.field(), sys.context()), sys);
      if (o.json) {
        Json j;
        Json steps = Json::array();
        for (const auto& s : tr.steps)
          steps.push_back(Json{{"rule", s.rule}, {"forward", s.forward}});
        j["steps"] = std::move(steps);
        j["final"] = element_to_string(tr.final, sys.order());
        j["exhausted"] = tr.exhausted;
        std::cout << j.dump(2) << "\n";
      } else {
        for (const auto& s : tr.steps)
          std::cout << "  [" << s.rule << (s.forward ? "" : " (reversed)") << "]\n";
        std::cout << element_to_string(tr.final, sys.order()) << "\n";
      }
      return tr.exhausted ? 3 : 0;
    }
    if (bound_cmd->parsed()) {
      std::cout << dimension_bound(o.d, o.n).str() << "\n";
      return 0;
    }
    if (pres_cmd->parsed()) {
      RuleSystem sys = build_system(o);
      Json j = system_to_json(sys);
      if (!export_file.empty()) {
        std::ofstream out(export_file);
        if (!out) throw std::invalid_argument("cannot write " + export_file);
        out << j.dump(2) << "\n";
        std::cout << "wrote " << export_file << "\n";
        return 0;
      }
      if (o.json) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << sys.name() << "  [" << sys.rules().size() << " rules]\n";
        for (const auto& r : sys.rules())
          std::cout << "  " << r.name << ": " << word_to_string(r.lhs) << " -> "
                    << element_to_string(r.rhs, sys.order()) << "\n";
      }
      return 0;
    }
    if (nf_cmd->parsed()) {
      RuleSystem sys = build_system(o);
      FramedBraidNF nf = framed_nf(parse_word(expr, sys.field(), sys.context()), sys.context());
      if (o.json) {
        Json j;
        j["framings"] = nf.framings;
        j["braid"] = word_to_string(nf.braid);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "framings:";
        for (int f : nf.framings) std::cout << ' ' << f;
        std::cout << "\nbraid: " << word_to_string(nf.braid) << "\n";
      }
      return 0;
    }
    if (pairs_cmd->parsed()) {
      RuleSystem sys = build_system(o);
      CriticalPairReport rep = critical_pairs(sys, max_overlap);
      Json j = report_pairs_to_json(rep, sys);
      if (o.json) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << sys.name() << ": " << rep.joinable_count() << "/" << rep.pairs.size()
                  << " overlaps joinable (bound " << rep.bound << ")\n";
        for (const auto& p : rep.pairs)
          if (!p.joinable)
            std::cout << "  NOT joinable: " << word_to_string(p.overlap) << " via " << p.rule_left
                      << " / " << p.rule_right << "\n";
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
