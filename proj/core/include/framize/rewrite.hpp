#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "framize/element.hpp"

namespace framize {

/// Oriented identity: the word `lhs` rewrites to the element `rhs`.
/// Invariant: lhs is nonempty and strictly greater, under the system order,
/// than every word of rhs.
struct RewriteRule {
  std::string name;
  Word lhs;
  Element rhs;
  std::string provenance;  // "defining", "derived", "lemma", "user", ...
};

/// Generator inventory: which kinds exist and their index ranges, derived
/// from (d, n) and the algebra kind.
struct Alphabet {
  std::set<LetterKind> kinds;
  bool contains(const Letter& l, const Context& ctx) const;
  bool contains(const Word& w, const Context& ctx) const;
};

class RuleSystem {
public:
  RuleSystem(std::string name, FieldPtr field, Context ctx, TermOrder order, Alphabet alphabet,
             int max_steps = 10000)
      : name_(std::move(name)),
        field_(std::move(field)),
        ctx_(ctx),
        order_(order),
        alphabet_(std::move(alphabet)),
        max_steps_(max_steps) {}

  const std::string& name() const { return name_; }
  const FieldPtr& field() const { return field_; }
  const Context& context() const { return ctx_; }
  const TermOrder& order() const { return order_; }
  const Alphabet& alphabet() const { return alphabet_; }
  int max_steps() const { return max_steps_; }
  void set_max_steps(int n) { max_steps_ = n; }
  const std::vector<RewriteRule>& rules() const { return rules_; }

  const RewriteRule* find_rule(const std::string& name) const;

  /// Append with orientation and alphabet checks; throws on violation.
  void add_rule(RewriteRule rule);

  Element unit() const { return Element::unit(field_, ctx_); }
  Element monomial(const Word& w) const { return Element::monomial(field_, ctx_, w); }
  Scalar scalar(const std::string& name) const { return Scalar::variable(field_, name); }

private:
  std::string name_;
  FieldPtr field_;
  Context ctx_;
  TermOrder order_;
  Alphabet alphabet_;
  int max_steps_;
  std::vector<RewriteRule> rules_;
};

enum class TraceDetail { Counts, Steps, Full };

struct TraceStep {
  std::size_t position;  // letter offset of the redex in its word
  std::string rule;
  Element before;  // populated in Full detail only
  Element after;
};

struct ReductionTrace {
  std::vector<TraceStep> steps;  // empty in Counts detail
  std::size_t step_count = 0;
  Element final;
  bool exhausted = false;
};

/// Normal form under the system: for each step, take the greatest reducible
/// word, rewrite its leftmost redex with the first matching rule in list
/// order, recombine and cancel.  Stops when nothing matches or the step
/// budget (max_steps per initial monomial) runs out.
ReductionTrace reduce(const Element& a, const RuleSystem& sys,
                      TraceDetail detail = TraceDetail::Counts);

struct VerifyResult {
  bool verified;
  ReductionTrace trace;  // of lhs - rhs
};

/// Sound one-sided check: reduction of lhs - rhs to zero proves the identity;
/// a nonzero residual decides nothing.
VerifyResult verify_identity(const Element& lhs, const Element& rhs, const RuleSystem& sys,
                             TraceDetail detail = TraceDetail::Counts);

/// Append an identity as a lowest-priority rule.  Unless `axiom_provenance`
/// is given the identity must first pass verify_identity.
RuleSystem extend_with_lemma(const RuleSystem& sys, const std::string& name, const Word& lhs,
                             const Element& rhs,
                             const std::optional<std::string>& axiom_provenance = std::nullopt);

/// One rule application to a single word at a fixed position; forward
/// rewrites an lhs occurrence to rhs, backward rewrites an rhs occurrence
/// back to lhs (the rule read as an identity; requires a one-word rhs).
/// Scripted replays use this; reduce never applies rules backward.
Element apply_rule_to_word(const Word& w, const RewriteRule& rule, std::size_t position,
                           const RuleSystem& sys, bool forward = true);

struct CriticalPair {
  Word overlap;
  std::string rule_left;
  std::string rule_right;
  Element left_reduct;
  Element right_reduct;
  bool joinable;
};

struct CriticalPairReport {
  std::vector<CriticalPair> pairs;
  int bound;
  std::size_t joinable_count() const;
};

/// Enumerate every word up to `max_overlap` letters that two rule left sides
/// cover with genuine overlap or containment, reduce both one-step reducts,
/// and record joinability.  Non-joinable pairs are reported, not fatal.
CriticalPairReport critical_pairs(const RuleSystem& sys, int max_overlap);

}  // namespace framize
