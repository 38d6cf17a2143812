#include "framize/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace framize {

namespace {

Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Poly Poly::constant(FieldPtr field, Int value) {
  Poly p(field);
  if (value != 0) {
    Mono m{std::vector<int>(field->size(), 0)};
    p.terms_.emplace(std::move(m), std::move(value));
  }
  return p;
}

Poly Poly::variable(FieldPtr field, std::size_t var, int power) {
  if (var >= field->size()) throw std::out_of_range("variable index out of range");
  if (power < 0) throw std::invalid_argument("negative power in Poly::variable");
  Poly p(field);
  if (power == 0) return constant(field, 1);
  Mono m{std::vector<int>(field->size(), 0)};
  m.exp[var] = power;
  p.terms_.emplace(std::move(m), Int(1));
  return p;
}

Int Poly::constant_value() const {
  if (terms_.empty()) return 0;
  return terms_.begin()->second;
}

int Poly::degree_in(std::size_t var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exp[var]);
  return d;
}

void Poly::add_term(const Mono& m, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(field_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(a.field_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma.mul(mb), ca * cb);
  return r;
}

Poly Poly::mul_int(const Int& c) const {
  Poly r(field_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

Poly Poly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative power in Poly::pow");
  Poly r = constant(field_, 1);
  Poly base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

Int Poly::content() const {
  Int g = 0;
  for (const auto& [m, c] : terms_) {
    g = int_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

Poly Poly::primitive_part() const {
  if (is_zero()) return *this;
  Int g = content();
  if (leading_coeff() < 0) g = -g;
  Poly r(field_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c / g);
  return r;
}

std::optional<Poly> Poly::div_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) return std::nullopt;
  Poly r = a;
  Poly q(a.field_);
  while (!r.is_zero()) {
    auto m = r.leading_mono().div(b.leading_mono());
    if (!m) return std::nullopt;
    Int c = r.leading_coeff() / b.leading_coeff();
    if (c * b.leading_coeff() != r.leading_coeff()) return std::nullopt;
    Poly t(a.field_);
    t.add_term(*m, c);
    q = q + t;
    r = r - t * b;
  }
  return q;
}

namespace {

// Univariate view helpers for the gcd recursion.

// gcd of the coefficients of `p` viewed as a polynomial in `var`.
Poly content_in(const Poly& p, std::size_t var) {
  Poly g = Poly::zero(p.field());
  for (int k = 0; k <= p.degree_in(var); ++k) {
    Poly c = p.coeff_in(var, k);
    if (!c.is_zero()) g = Poly::gcd(g, c);
  }
  return g;
}

// One pseudo-division step sequence: returns a polynomial proportional to
// prem(a, b) in `var`.  Exact constant factors are irrelevant because the
// caller takes primitive parts.
Poly pseudo_rem(const Poly& a, const Poly& b, std::size_t var) {
  const int db = b.degree_in(var);
  Poly lb = b.coeff_in(var, db);
  Poly r = a;
  while (!r.is_zero() && r.degree_in(var) >= db) {
    const int dr = r.degree_in(var);
    Poly lr = r.coeff_in(var, dr);
    Poly shift = Poly::variable(r.field(), var, dr - db);
    r = r * lb - lr * shift * b;
    if (!r.is_zero() && r.degree_in(var) >= dr && dr >= db) {
      // Degree must drop; guard against a non-reducing step.
      throw std::logic_error("pseudo-division failed to reduce degree");
    }
  }
  return r;
}

}  // namespace

Poly Poly::coeff_in(std::size_t var, int k) const {
  Poly r(field_);
  for (const auto& [m, c] : terms_) {
    if (m.exp[var] != k) continue;
    Mono stripped = m;
    stripped.exp[var] = 0;
    r.add_term(stripped, c);
  }
  return r;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.primitive_part().mul_int(b.content());
  if (b.is_zero()) return a.primitive_part().mul_int(a.content());

  // Highest variable present in either operand.
  std::size_t nvars = a.field_->size();
  std::optional<std::size_t> main_var;
  for (std::size_t v = nvars; v-- > 0;) {
    if (a.contains_var(v) || b.contains_var(v)) {
      main_var = v;
      break;
    }
  }
  if (!main_var) {
    // Both are integer constants.
    return constant(a.field_, int_gcd(a.constant_value(), b.constant_value()));
  }
  const std::size_t v = *main_var;

  Poly ca = content_in(a, v);
  Poly cb = content_in(b, v);
  Poly c = gcd(ca, cb);
  Poly pa = *div_exact(a, ca);
  Poly pb = *div_exact(b, cb);

  // Primitive polynomial remainder sequence in v.
  Poly r0 = pa.degree_in(v) >= pb.degree_in(v) ? pa : pb;
  Poly r1 = pa.degree_in(v) >= pb.degree_in(v) ? pb : pa;
  while (!r1.is_zero()) {
    if (r1.degree_in(v) == 0) {
      // v-free and primitive in v: the v-part of the gcd is trivial.
      return c;
    }
    Poly r2 = pseudo_rem(r0, r1, v);
    if (!r2.is_zero()) {
      Poly cr = content_in(r2, v);
      r2 = *div_exact(r2, cr);
    }
    r0 = r1;
    r1 = r2;
  }
  Poly g = c * r0;
  if (!g.is_zero() && g.leading_coeff() < 0) g = -g;
  return g;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
  if (point.size() != field_->size())
    throw std::invalid_argument("evaluation point arity mismatch");
  Rat total = 0;
  for (const auto& [m, c] : terms_) {
    Rat term(c);
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
      for (int k = 0; k < m.exp[i]; ++k) term *= point[i];
    }
    total += term;
  }
  return total;
}

}  // namespace framize
