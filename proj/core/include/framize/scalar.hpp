#pragma once

#include <map>
#include <string>

#include "framize/poly.hpp"

namespace framize {

/// Rational function over the integers in the indeterminates of a
/// ParameterField, kept in canonical form: numerator and denominator coprime,
/// denominator nonzero with positive leading coefficient, zero stored as 0/1.
/// Two scalars are equal as field elements iff their representations match.
class Scalar {
public:
  explicit Scalar(FieldPtr field) : num_(Poly::zero(field)), den_(Poly::constant(field, 1)) {}
  Scalar(Poly num, Poly den);

  static Scalar zero(FieldPtr field) { return Scalar(std::move(field)); }
  static Scalar one(FieldPtr field) { return integer(std::move(field), 1); }
  static Scalar integer(FieldPtr field, Int value);
  static Scalar rational(FieldPtr field, const Rat& value);
  static Scalar variable(FieldPtr field, const std::string& name);
  static Scalar from_poly(Poly p);

  const FieldPtr& field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);  // throws on b == 0
  Scalar operator-() const;
  Scalar inverse() const;  // throws on zero
  Scalar pow(int n) const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Exact evaluation at a rational point given by name; throws when the
  /// denominator vanishes or a needed name is missing.
  Rat eval(const std::map<std::string, Rat>& point) const;

  /// Substitute `value` for the variable `var` and re-canonicalize.
  Scalar substitute(std::size_t var, const Scalar& value) const;

  /// Re-express over `target`; every variable used must exist there.
  Scalar migrate(const FieldPtr& target) const;

private:
  void canonicalize();

  Poly num_;
  Poly den_;
};

/// The scalar written `y` in BMW-style relations: 1 + (l^{-1} - l)/m, the
/// value of the loop weight at framing zero.  The field must contain l and m.
/// The reserved token y0 always denotes this value; it is substituted away
/// eagerly (see parse_scalar) and never stored as an indeterminate.
Scalar y0_value(const FieldPtr& field);

}  // namespace framize
