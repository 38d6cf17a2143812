#include "framize/rewrite.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace framize {

bool Alphabet::contains(const Letter& l, const Context& ctx) const {
  if (!kinds.count(l.kind)) return false;
  switch (l.kind) {
    case LetterKind::Tpow:
      return l.index >= 1 && l.index <= ctx.n && l.exponent >= 1 && l.exponent <= ctx.d - 1;
    case LetterKind::Bgen:
    case LetterKind::Bginv:
      return l.index == 0;
    default:
      return l.index >= 1 && l.index <= ctx.n - 1;
  }
}

bool Alphabet::contains(const Word& w, const Context& ctx) const {
  for (const Letter& l : w)
    if (!contains(l, ctx)) return false;
  return true;
}

const RewriteRule* RuleSystem::find_rule(const std::string& name) const {
  for (const auto& r : rules_)
    if (r.name == name) return &r;
  return nullptr;
}

void RuleSystem::add_rule(RewriteRule rule) {
  if (rule.lhs.empty()) throw std::invalid_argument("rule '" + rule.name + "' has an empty lhs");
  if (find_rule(rule.name)) throw std::invalid_argument("duplicate rule name '" + rule.name + "'");
  if (!alphabet_.contains(rule.lhs, ctx_))
    throw std::invalid_argument("rule '" + rule.name + "' lhs leaves the alphabet");
  if (!(rule.rhs.context() == ctx_) || !same_field(rule.rhs.field(), field_))
    throw std::invalid_argument("rule '" + rule.name + "' rhs context mismatch");
  for (const auto& [w, c] : rule.rhs.terms()) {
    if (!alphabet_.contains(w, ctx_))
      throw std::invalid_argument("rule '" + rule.name + "' rhs leaves the alphabet");
    if (!order_.greater(rule.lhs, w))
      throw std::invalid_argument("rule '" + rule.name +
                                  "' is not oriented: lhs does not exceed rhs word " +
                                  word_to_string(w) + "; re-orient the identity");
  }
  rules_.push_back(std::move(rule));
}

namespace {

bool match_at(const Word& w, const Word& pattern, std::size_t pos) {
  if (pos + pattern.size() > w.size()) return false;
  for (std::size_t i = 0; i < pattern.size(); ++i)
    if (!(w[pos + i] == pattern[i])) return false;
  return true;
}

struct Redex {
  std::size_t position;
  const RewriteRule* rule;
};

std::optional<Redex> leftmost_redex(const Word& w, const RuleSystem& sys) {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (const auto& r : sys.rules()) {
      if (match_at(w, r.lhs, pos)) return Redex{pos, &r};
    }
  }
  return std::nullopt;
}

// c * (w[0..pos) . rhs . w[pos+len..)) accumulated into out.
void substitute(Element& out, const Word& w, std::size_t pos, std::size_t len, const Element& rhs,
                const Scalar& c, int d) {
  Word prefix(w.begin(), w.begin() + pos);
  Word suffix(w.begin() + pos + len, w.end());
  for (const auto& [wr, cr] : rhs.terms()) {
    Word full = concat(concat(prefix, wr, d), suffix, d);
    out.add_term(full, c * cr);
  }
}

Element merge(const Element& a, const Element& b) { return a + b; }

}  // namespace

ReductionTrace reduce(const Element& a, const RuleSystem& sys, TraceDetail detail) {
  if (!(a.context() == sys.context()) || !same_field(a.field(), sys.field()))
    throw std::invalid_argument("element does not live in the system's context");
  for (const auto& [w, c] : a.terms())
    if (!sys.alphabet().contains(w, sys.context()))
      throw std::invalid_argument("element leaves the system's alphabet: " + word_to_string(w));

  ReductionTrace trace{.steps = {}, .step_count = 0, .final = Element::zero(a.field(), a.context())};
  Element normal = Element::zero(a.field(), a.context());
  Element pending = a;
  long budget = static_cast<long>(sys.max_steps()) *
                static_cast<long>(std::max<std::size_t>(1, a.term_count()));

  while (!pending.is_zero()) {
    const Word w = pending.leading_word(sys.order());
    const Scalar c = pending.coeff(w);
    auto redex = leftmost_redex(w, sys);
    if (!redex) {
      pending.add_term(w, -c);
      normal.add_term(w, c);
      continue;
    }
    if (budget == 0) {
      trace.exhausted = true;
      break;
    }
    --budget;
    TraceStep step{redex->position, redex->rule->name, Element::zero(a.field(), a.context()),
                   Element::zero(a.field(), a.context())};
    if (detail == TraceDetail::Full) step.before = merge(normal, pending);
    pending.add_term(w, -c);
    substitute(pending, w, redex->position, redex->rule->lhs.size(), redex->rule->rhs, c,
               sys.context().d);
    // Pull back any arrivals that landed on words already known normal.
    // (normal words are irreducible, so coefficients just accumulate there)
    Element still_pending = Element::zero(a.field(), a.context());
    for (const auto& [pw, pc] : pending.terms()) {
      if (!normal.coeff(pw).is_zero())
        normal.add_term(pw, pc);
      else
        still_pending.add_term(pw, pc);
    }
    pending = std::move(still_pending);
    ++trace.step_count;
    if (detail != TraceDetail::Counts) {
      if (detail == TraceDetail::Full) step.after = merge(normal, pending);
      trace.steps.push_back(std::move(step));
    }
  }
  trace.final = merge(normal, pending);
  return trace;
}

VerifyResult verify_identity(const Element& lhs, const Element& rhs, const RuleSystem& sys,
                             TraceDetail detail) {
  ReductionTrace t = reduce(lhs - rhs, sys, detail);
  bool ok = !t.exhausted && t.final.is_zero();
  return VerifyResult{ok, std::move(t)};
}

RuleSystem extend_with_lemma(const RuleSystem& sys, const std::string& name, const Word& lhs,
                             const Element& rhs,
                             const std::optional<std::string>& axiom_provenance) {
  if (!axiom_provenance) {
    VerifyResult v = verify_identity(Element::monomial(sys.field(), sys.context(), lhs), rhs, sys);
    if (!v.verified)
      throw std::invalid_argument("lemma '" + name + "' failed verification; residual is nonzero");
  }
  RuleSystem out = sys;
  out.add_rule(RewriteRule{name, lhs, rhs, axiom_provenance.value_or("lemma")});
  return out;
}

Element apply_rule_to_word(const Word& w, const RewriteRule& rule, std::size_t position,
                           const RuleSystem& sys, bool forward) {
  Element out = Element::zero(sys.field(), sys.context());
  if (forward) {
    if (!match_at(w, rule.lhs, position))
      throw std::invalid_argument("rule '" + rule.name + "' does not match " + word_to_string(w) +
                                  " at position " + std::to_string(position));
    substitute(out, w, position, rule.lhs.size(), rule.rhs, Scalar::one(sys.field()),
               sys.context().d);
    return out;
  }
  if (rule.rhs.term_count() != 1)
    throw std::invalid_argument("backward application needs a one-word rhs: " + rule.name);
  const auto& [rw, rc] = *rule.rhs.terms().begin();
  if (!match_at(w, rw, position))
    throw std::invalid_argument("rule '" + rule.name + "' rhs does not match " +
                                word_to_string(w) + " at position " + std::to_string(position));
  Element lhs_elem = Element::monomial(sys.field(), sys.context(), rule.lhs);
  substitute(out, w, position, rw.size(), lhs_elem, rc.inverse(), sys.context().d);
  return out;
}

std::size_t CriticalPairReport::joinable_count() const {
  std::size_t n = 0;
  for (const auto& p : pairs)
    if (p.joinable) ++n;
  return n;
}

CriticalPairReport critical_pairs(const RuleSystem& sys, int max_overlap) {
  CriticalPairReport report{.pairs = {}, .bound = max_overlap};
  std::set<std::tuple<Word, std::string, std::string, std::size_t>> seen;

  const auto& rules = sys.rules();
  for (const auto& r1 : rules) {
    for (const auto& r2 : rules) {
      const std::size_t n1 = r1.lhs.size();
      const std::size_t n2 = r2.lhs.size();
      for (std::size_t k = 0; k < n1; ++k) {
        if (k == 0 && r1.name == r2.name) continue;  // identical application
        Word overlap;
        if (k + n2 <= n1) {
          if (!match_at(r1.lhs, r2.lhs, k)) continue;
          overlap = r1.lhs;
        } else {
          const std::size_t shared = n1 - k;
          bool ok = true;
          for (std::size_t i = 0; i < shared; ++i)
            if (!(r1.lhs[k + i] == r2.lhs[i])) ok = false;
          if (!ok) continue;
          overlap = r1.lhs;
          overlap.insert(overlap.end(), r2.lhs.begin() + shared, r2.lhs.end());
        }
        if (static_cast<int>(overlap.size()) > max_overlap) continue;
        if (!seen.insert({overlap, r1.name, r2.name, k}).second) continue;

        Element left = apply_rule_to_word(overlap, r1, 0, sys);
        Element right = apply_rule_to_word(overlap, r2, k, sys);
        ReductionTrace lt = reduce(left, sys);
        ReductionTrace rt = reduce(right, sys);
        bool joinable = !lt.exhausted && !rt.exhausted && lt.final == rt.final;
        report.pairs.push_back(CriticalPair{overlap, r1.name, r2.name, std::move(lt.final),
                                            std::move(rt.final), joinable});
      }
    }
  }
  return report;
}

}  // namespace framize
