#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace framize {

/// Generator alphabet.  G/Ginv are the braid generators and their inverses,
/// H the tangle generators, Tpow a framing generator raised to a power in
/// 1..d-1, Bgen/Bginv the B-type generator T and its inverse, Tau the
/// elementary singular generators.
enum class LetterKind : std::uint8_t { Tpow = 0, H, G, Ginv, Bgen, Bginv, Tau };

const char* kind_name(LetterKind k);

struct Letter {
  LetterKind kind;
  int index;     // G/Ginv/H/Tau: 1..n-1; Tpow: 1..n; Bgen/Bginv: 0
  int exponent;  // Tpow only, kept in 1..d-1; 0 elsewhere

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;  // structural
};

inline Letter g(int i) { return {LetterKind::G, i, 0}; }
inline Letter ginv(int i) { return {LetterKind::Ginv, i, 0}; }
inline Letter h(int i) { return {LetterKind::H, i, 0}; }
inline Letter t(int i, int e) { return {LetterKind::Tpow, i, e}; }
inline Letter bgen() { return {LetterKind::Bgen, 0, 0}; }
inline Letter bginv() { return {LetterKind::Bginv, 0, 0}; }
inline Letter tau(int i) { return {LetterKind::Tau, i, 0}; }

/// A word of the free algebra.  Canonical form: no Tpow letter with exponent
/// divisible by d, adjacent Tpow letters with equal index merged.
using Word = std::vector<Letter>;

/// Algebra context: framing modulus d and strand count n.
struct Context {
  int d = 1;
  int n = 2;
  friend bool operator==(const Context&, const Context&) = default;
};

/// Reduce a framing exponent into 0..d-1.
inline int mod_exp(int e, int d) {
  int r = e % d;
  return r < 0 ? r + d : r;
}

/// Canonicalize a word: merge adjacent equal-index framing letters mod d and
/// drop vanishing exponents.  Other letters are untouched.
Word normalize_word(const Word& w, int d);

/// Concatenate and canonicalize.
Word concat(const Word& a, const Word& b, int d);

std::string word_to_string(const Word& w);

}  // namespace framize
