#include "framize/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace framize {

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (!same_field(num_.field(), den_.field()))
    throw std::invalid_argument("numerator/denominator field mismatch");
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  canonicalize();
}

Scalar Scalar::integer(FieldPtr field, Int value) {
  Scalar s(field);
  s.num_ = Poly::constant(field, std::move(value));
  return s;
}

Scalar Scalar::rational(FieldPtr field, const Rat& value) {
  return Scalar(Poly::constant(field, numerator(value)), Poly::constant(field, denominator(value)));
}

Scalar Scalar::variable(FieldPtr field, const std::string& name) {
  auto idx = field->index_of(name);
  if (!idx) throw std::invalid_argument("unknown indeterminate '" + name + "'");
  return from_poly(Poly::variable(field, *idx));
}

Scalar Scalar::from_poly(Poly p) {
  Scalar s(p.field());
  s.num_ = std::move(p);
  return s;
}

bool Scalar::is_one() const {
  return num_.is_constant() && num_.constant_value() == 1 && den_.is_constant() &&
         den_.constant_value() == 1;
}

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.field(), 1);
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  num_ = *Poly::div_exact(num_, g);
  den_ = *Poly::div_exact(den_, g);
  if (den_.leading_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return Scalar(a.num_ * b.num_, a.den_ * b.den_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw std::domain_error("division by zero scalar");
  return Scalar(a.num_ * b.den_, a.den_ * b.num_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  Scalar r = Scalar::one(field());
  Scalar base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

Rat Scalar::eval(const std::map<std::string, Rat>& point) const {
  const auto& f = *field();
  std::vector<Rat> values(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto it = point.find(f.name(i));
    if (it == point.end())
      throw std::invalid_argument("evaluation point missing '" + f.name(i) + "'");
    values[i] = it->second;
  }
  Rat d = den_.eval(values);
  if (d == 0) {
    std::ostringstream os;
    os << "denominator vanishes at";
    for (std::size_t i = 0; i < f.size(); ++i) os << ' ' << f.name(i) << '=' << values[i];
    throw std::domain_error(os.str());
  }
  return num_.eval(values) / d;
}

namespace {

Scalar substitute_poly(const Poly& p, std::size_t var, const Scalar& value) {
  Scalar acc = Scalar::zero(p.field());
  for (const auto& [m, c] : p.terms()) {
    Mono stripped = m;
    int e = stripped.exp[var];
    stripped.exp[var] = 0;
    Poly rest(p.field());
    rest.add_term(stripped, c);
    acc = acc + Scalar::from_poly(rest) * value.pow(e);
  }
  return acc;
}

}  // namespace

Scalar Scalar::substitute(std::size_t var, const Scalar& value) const {
  Scalar n = substitute_poly(num_, var, value);
  Scalar d = substitute_poly(den_, var, value);
  if (d.is_zero()) throw std::domain_error("substitution makes the denominator vanish");
  return n / d;
}

Scalar Scalar::migrate(const FieldPtr& target) const {
  auto move_poly = [&](const Poly& p) {
    Poly r(target);
    const auto& src = *p.field();
    std::vector<std::optional<std::size_t>> map(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) map[i] = target->index_of(src.name(i));
    for (const auto& [m, c] : p.terms()) {
      Mono t{std::vector<int>(target->size(), 0)};
      for (std::size_t i = 0; i < m.exp.size(); ++i) {
        if (m.exp[i] == 0) continue;
        if (!map[i])
          throw std::invalid_argument("indeterminate '" + src.name(i) +
                                      "' does not exist in the target field");
        t.exp[*map[i]] = m.exp[i];
      }
      r.add_term(t, c);
    }
    return r;
  };
  return Scalar(move_poly(num_), move_poly(den_));
}

Scalar y0_value(const FieldPtr& field) {
  Scalar l = Scalar::variable(field, "l");
  Scalar m = Scalar::variable(field, "m");
  return Scalar::one(field) + (l.inverse() - l) / m;
}

}  // namespace framize
