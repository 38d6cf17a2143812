#pragma once

#include <array>
#include <compare>
#include <string>

#include "framize/word.hpp"

namespace framize {

/// Word order used to orient every relation: weighted degree first, then
/// letter count, then left-to-right letter comparison.
///
/// Framing letters carry weight 0 so that the framized quadratic (whose right
/// side holds framing pairs next to a braid letter) still decreases; inverse
/// letters carry weight 3 so that their expansion into at most three weighted
/// letters decreases as well.  Letters compare by kind t < h < g < g^{-1} <
/// T < T^{-1} < tau; within a kind, braid-like letters compare descending by
/// index (so g_i g_{i+1} g_i > g_{i+1} g_i g_{i+1} and commutations sort the
/// higher index leftward) and framing letters ascending by index then by
/// exponent (so framing blocks sort ascending).
///
/// The order is total and compatible with concatenation as long as no framing
/// merge happens across the boundary.
class TermOrder {
public:
  TermOrder() = default;

  int weight_of(LetterKind k) const { return weights_[static_cast<std::size_t>(k)]; }
  void set_weight(LetterKind k, int w) { weights_[static_cast<std::size_t>(k)] = w; }

  int word_weight(const Word& w) const;

  std::strong_ordering compare_letters(const Letter& a, const Letter& b) const;
  std::strong_ordering compare(const Word& a, const Word& b) const;

  bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }
  bool greater(const Word& a, const Word& b) const { return compare(a, b) > 0; }

  std::string describe() const;

private:
  // Indexed by LetterKind: Tpow, H, G, Ginv, Bgen, Bginv, Tau.
  std::array<int, 7> weights_{0, 1, 1, 3, 1, 3, 1};
};

}  // namespace framize
