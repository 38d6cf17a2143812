#pragma once

#include <map>

#include "framize/order.hpp"
#include "framize/scalar.hpp"
#include "framize/word.hpp"

namespace framize {

/// Scalar-linear combination of words over a fixed (d, n) context.  No zero
/// coefficients are stored; the empty word is the algebra unit.
class Element {
public:
  using TermMap = std::map<Word, Scalar>;  // structural letter order on keys

  Element(FieldPtr field, Context ctx) : field_(std::move(field)), ctx_(ctx) {}

  static Element zero(FieldPtr field, Context ctx) { return Element(std::move(field), ctx); }
  static Element unit(FieldPtr field, Context ctx);
  static Element monomial(FieldPtr field, Context ctx, const Word& w);
  static Element from_scalar(Context ctx, const Scalar& c);

  const FieldPtr& field() const { return field_; }
  const Context& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of `w`; zero scalar when absent.
  Scalar coeff(const Word& w) const;

  void add_term(const Word& w, const Scalar& c);  // w must be normalized

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);  // free product
  Element operator-() const;
  Element scaled(const Scalar& c) const;
  Element pow(int n) const;  // n >= 0

  friend bool operator==(const Element& a, const Element& b) {
    return a.ctx_ == b.ctx_ && same_field(a.field_, b.field_) && a.terms_ == b.terms_;
  }

  /// Words sorted descending under `order` (printing order).
  std::vector<const Word*> sorted_words(const TermOrder& order) const;

  /// Largest word under `order`; throws when zero.
  const Word& leading_word(const TermOrder& order) const;

private:
  void require_compatible(const Element& other) const;

  FieldPtr field_;
  Context ctx_;
  TermMap terms_;
};

}  // namespace framize
