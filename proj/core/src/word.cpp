#include "framize/word.hpp"

#include <sstream>

namespace framize {

const char* kind_name(LetterKind k) {
  switch (k) {
    case LetterKind::Tpow: return "t";
    case LetterKind::H: return "h";
    case LetterKind::G: return "g";
    case LetterKind::Ginv: return "G";
    case LetterKind::Bgen: return "T";
    case LetterKind::Bginv: return "Tinv";
    case LetterKind::Tau: return "tau";
  }
  return "?";
}

Word normalize_word(const Word& w, int d) {
  if (d < 1) throw std::invalid_argument("framing modulus must be positive");
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (l.kind == LetterKind::Tpow) {
      l.exponent = mod_exp(l.exponent, d);
      if (l.exponent == 0) continue;
      if (!out.empty() && out.back().kind == LetterKind::Tpow && out.back().index == l.index) {
        int e = mod_exp(out.back().exponent + l.exponent, d);
        out.pop_back();
        if (e != 0) out.push_back(t(l.index, e));
        continue;
      }
    } else {
      l.exponent = 0;
    }
    out.push_back(l);
  }
  return out;
}

Word concat(const Word& a, const Word& b, int d) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return normalize_word(w, d);
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : w) {
    if (!first) os << '*';
    first = false;
    os << kind_name(l.kind);
    if (l.kind != LetterKind::Bgen && l.kind != LetterKind::Bginv) os << l.index;
    if (l.kind == LetterKind::Tpow) os << '^' << l.exponent;
  }
  return os.str();
}

}  // namespace framize
