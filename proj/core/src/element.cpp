#include "framize/element.hpp"

#include <algorithm>
#include <stdexcept>

namespace framize {

Element Element::unit(FieldPtr field, Context ctx) {
  Element e(field, ctx);
  e.add_term({}, Scalar::one(field));
  return e;
}

Element Element::monomial(FieldPtr field, Context ctx, const Word& w) {
  Element e(field, ctx);
  e.add_term(normalize_word(w, ctx.d), Scalar::one(field));
  return e;
}

Element Element::from_scalar(Context ctx, const Scalar& c) {
  Element e(c.field(), ctx);
  e.add_term({}, c);
  return e;
}

Scalar Element::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Element::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    Scalar s = it->second + c;
    if (s.is_zero())
      terms_.erase(it);
    else
      it->second = std::move(s);
  }
}

void Element::require_compatible(const Element& other) const {
  if (!(ctx_ == other.ctx_))
    throw std::invalid_argument("element context mismatch (d, n differ)");
  if (!same_field(field_, other.field_))
    throw std::invalid_argument("element scalar field mismatch");
}

Element operator+(const Element& a, const Element& b) {
  a.require_compatible(b);
  Element r = a;
  for (const auto& [w, c] : b.terms_) r.add_term(w, c);
  return r;
}

Element operator-(const Element& a, const Element& b) {
  a.require_compatible(b);
  Element r = a;
  for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
  return r;
}

Element operator*(const Element& a, const Element& b) {
  a.require_compatible(b);
  Element r(a.field_, a.ctx_);
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add_term(concat(wa, wb, a.ctx_.d), ca * cb);
  return r;
}

Element Element::operator-() const {
  Element r(field_, ctx_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

Element Element::scaled(const Scalar& c) const {
  Element r(field_, ctx_);
  if (c.is_zero()) return r;
  for (const auto& [w, v] : terms_) r.add_term(w, v * c);
  return r;
}

Element Element::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative power of an element");
  Element r = Element::unit(field_, ctx_);
  Element base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

std::vector<const Word*> Element::sorted_words(const TermOrder& order) const {
  std::vector<const Word*> ws;
  ws.reserve(terms_.size());
  for (const auto& [w, c] : terms_) ws.push_back(&w);
  std::sort(ws.begin(), ws.end(),
            [&](const Word* a, const Word* b) { return order.greater(*a, *b); });
  return ws;
}

const Word& Element::leading_word(const TermOrder& order) const {
  if (terms_.empty()) throw std::logic_error("leading word of the zero element");
  const Word* best = &terms_.begin()->first;
  for (const auto& [w, c] : terms_)
    if (order.greater(w, *best)) best = &w;
  return *best;
}

}  // namespace framize
