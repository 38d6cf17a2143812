#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "framize/field.hpp"

namespace framize {

/// Exponent vector over a fixed ParameterField, compared graded-lex:
/// total degree first, then earlier variables more significant.
struct Mono {
  std::vector<int> exp;

  int degree() const {
    int d = 0;
    for (int e : exp) d += e;
    return d;
  }

  bool is_unit() const {
    for (int e : exp)
      if (e != 0) return false;
    return true;
  }

  friend std::strong_ordering operator<=>(const Mono& a, const Mono& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t i = 0; i < a.exp.size() && i < b.exp.size(); ++i)
      if (auto c = a.exp[i] <=> b.exp[i]; c != 0) return c;
    return a.exp.size() <=> b.exp.size();
  }
  friend bool operator==(const Mono& a, const Mono& b) { return a.exp == b.exp; }

  Mono mul(const Mono& o) const {
    Mono r = *this;
    for (std::size_t i = 0; i < r.exp.size(); ++i) r.exp[i] += o.exp[i];
    return r;
  }

  /// Componentwise division; nullopt when some exponent would go negative.
  std::optional<Mono> div(const Mono& o) const {
    Mono r = *this;
    for (std::size_t i = 0; i < r.exp.size(); ++i) {
      r.exp[i] -= o.exp[i];
      if (r.exp[i] < 0) return std::nullopt;
    }
    return r;
  }
};

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients.  Terms are kept in a map with no zero coefficients.
class Poly {
public:
  using TermMap = std::map<Mono, Int>;

  explicit Poly(FieldPtr field) : field_(std::move(field)) {}

  static Poly zero(FieldPtr field) { return Poly(std::move(field)); }
  static Poly constant(FieldPtr field, Int value);
  static Poly variable(FieldPtr field, std::size_t var, int power = 1);

  const FieldPtr& field() const { return field_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit()); }
  Int constant_value() const;  // requires is_constant()

  const Mono& leading_mono() const { return terms_.rbegin()->first; }
  const Int& leading_coeff() const { return terms_.rbegin()->second; }
  int total_degree() const { return is_zero() ? -1 : leading_mono().degree(); }
  int degree_in(std::size_t var) const;
  bool contains_var(std::size_t var) const { return degree_in(var) > 0; }

  void add_term(const Mono& m, const Int& c);

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly mul_int(const Int& c) const;
  Poly pow(int n) const;  // n >= 0

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Integer content (gcd of coefficients), nonnegative; 0 for the zero poly.
  Int content() const;
  Poly primitive_part() const;

  /// Exact division; nullopt when b does not divide a.
  static std::optional<Poly> div_exact(const Poly& a, const Poly& b);

  static Poly gcd(const Poly& a, const Poly& b);

  Rat eval(const std::vector<Rat>& point) const;

  /// Coefficient of var^k, as a polynomial with var removed from the monomials.
  Poly coeff_in(std::size_t var, int k) const;

private:
  FieldPtr field_;
  TermMap terms_;
};

}  // namespace framize
