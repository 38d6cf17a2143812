#include "framize/print.hpp"

#include <sstream>

namespace framize {

namespace {

std::string mono_to_string(const Mono& m, const ParameterField& f) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.exp.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << f.name(i);
    if (m.exp[i] != 1) os << '^' << m.exp[i];
  }
  return os.str();
}

std::string poly_term(const Mono& m, const Int& coeff, const ParameterField& f) {
  std::string ms = mono_to_string(m, f);
  if (ms.empty()) return coeff.str();
  if (coeff == 1) return ms;
  return coeff.str() + "*" + ms;
}

// True when the single positive term `coeff*mono` would reparse as one factor
// without parentheses around a following '/'.
int factor_count(const Poly& p) {
  if (p.terms().size() != 1) return 2;
  const auto& [m, c] = *p.terms().begin();
  int count = (c != 1 || m.is_unit()) ? 1 : 0;
  for (int e : m.exp)
    if (e != 0) ++count;
  return count;
}

bool negated_lead(const Scalar& s) {
  return !s.is_zero() && s.num().leading_coeff() < 0;
}

// Positive single product term with trivial denominator.
bool simple_coeff(const Scalar& s) {
  return s.den().is_constant() && s.den().constant_value() == 1 && s.num().terms().size() == 1 &&
         s.num().leading_coeff() > 0;
}

}  // namespace

std::string poly_to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  const auto& f = *p.field();
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const Int& c = it->second;
    if (first) {
      if (c < 0) os << '-';
      os << poly_term(it->first, c < 0 ? Int(-c) : c, f);
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
      os << poly_term(it->first, c < 0 ? Int(-c) : c, f);
    }
  }
  return os.str();
}

std::string scalar_to_string(const Scalar& s) {
  std::string num = poly_to_string(s.num());
  if (s.num().terms().size() > 1) num = "(" + num + ")";
  if (s.den().is_constant() && s.den().constant_value() == 1) return num;
  std::string den = poly_to_string(s.den());
  if (factor_count(s.den()) > 1) den = "(" + den + ")";
  return num + "/" + den;
}

std::string element_to_string(const Element& e, const TermOrder& order) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Word* w : e.sorted_words(order)) {
    Scalar c = e.coeff(*w);
    bool neg = negated_lead(c);
    if (neg) c = -c;
    std::string piece;
    if (w->empty()) {
      piece = scalar_to_string(c);
      if (!simple_coeff(c)) piece = "(" + piece + ")";
    } else if (c.is_one()) {
      piece = word_to_string(*w);
    } else {
      std::string cs = scalar_to_string(c);
      if (!simple_coeff(c)) cs = "(" + cs + ")";
      piece = cs + "*" + word_to_string(*w);
    }
    if (first) {
      os << (neg ? "-" : "") << piece;
      first = false;
    } else {
      os << (neg ? " - " : " + ") << piece;
    }
  }
  return os.str();
}

}  // namespace framize
