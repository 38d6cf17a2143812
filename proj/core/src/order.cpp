#include "framize/order.hpp"

#include <sstream>

namespace framize {

int TermOrder::word_weight(const Word& w) const {
  int total = 0;
  for (const Letter& l : w) total += weight_of(l.kind);
  return total;
}

std::strong_ordering TermOrder::compare_letters(const Letter& a, const Letter& b) const {
  if (auto c = static_cast<int>(a.kind) <=> static_cast<int>(b.kind); c != 0) return c;
  switch (a.kind) {
    case LetterKind::Tpow:
      if (auto c = a.index <=> b.index; c != 0) return c;
      return a.exponent <=> b.exponent;
    case LetterKind::Bgen:
    case LetterKind::Bginv:
      return std::strong_ordering::equal;
    default:
      // Braid-like kinds: smaller index is the greater letter.
      return b.index <=> a.index;
  }
}

std::strong_ordering TermOrder::compare(const Word& a, const Word& b) const {
  if (auto c = word_weight(a) <=> word_weight(b); c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (auto c = compare_letters(a[i], b[i]); c != 0) return c;
  return std::strong_ordering::equal;
}

std::string TermOrder::describe() const {
  std::ostringstream os;
  os << "weighted degree (t=" << weight_of(LetterKind::Tpow) << ", h=" << weight_of(LetterKind::H)
     << ", g=" << weight_of(LetterKind::G) << ", G=" << weight_of(LetterKind::Ginv)
     << ", T=" << weight_of(LetterKind::Bgen) << ", Tinv=" << weight_of(LetterKind::Bginv)
     << ", tau=" << weight_of(LetterKind::Tau)
     << "), then length, then lex with t < h < g < G < T < Tinv < tau";
  return os.str();
}

}  // namespace framize
