#pragma once

#include <string>
#include <vector>

#include "framize/rewrite.hpp"

namespace framize {

/// Catalog of algebra kinds: the BMW algebra and its framization, the
/// Yokonuma-Hecke family, the Temperley-Lieb quotient, singular Hecke
/// algebras and their framization, and the B-type Hecke algebras (quadratic,
/// cyclotomic, generalized) with their framizations.
enum class AlgebraTag {
  BMW,
  FBMW,
  YH,
  HECKE,
  YTL,
  SHECKE,
  FSHECKE,
  HB,
  HB_CYC,
  HB_INF,
  FHB,
  FHB_CYC,
  FHB_INF,
};

struct AlgebraKind {
  AlgebraTag tag;
  int d = 1;  // framing modulus for framized tags
  int r = 1;  // cyclotomic degree for *_CYC tags
};

const char* tag_name(AlgebraTag tag);
AlgebraTag tag_from_name(const std::string& name);
bool tag_is_framized(AlgebraTag tag);

struct PresentationOptions {
  /// Commutation of framing letters past distant tangle generators; not part
  /// of the defining relations, motivated by the tangle picture.
  bool topological_th_commute = false;
  /// Expansion of inverse braid letters through the closed inverse formula.
  bool expand_g_inverse = true;
  int max_steps = 10000;
};

/// Scalar field for a kind: BMW uses (l, m); its framization adds the loop
/// weights y_1..y_{d-1}; the Yokonuma family uses u; Hecke kinds use q, the
/// B-type ones add Q or u_1..u_r.
FieldPtr field_for(const AlgebraKind& kind);

/// Oriented rule list for the kind at the given strand count.
RuleSystem presentation(const AlgebraKind& kind, int n,
                        const PresentationOptions& options = PresentationOptions{});

/// The averaged framing-shift projector on strands i, i+1:
/// (1/d) * sum_s t_i^s t_{i+1}^{d-s}.
Element e_element(const FieldPtr& field, Context ctx, int i);

/// Semidirect normal form of a framed braid word: all framing letters pulled
/// to the far left, accumulated per strand modulo d; the braid part is kept
/// letter for letter.
struct FramedBraidNF {
  std::vector<int> framings;  // size n, entries in 0..d-1
  Word braid;                 // G/Ginv letters only

  friend bool operator==(const FramedBraidNF&, const FramedBraidNF&) = default;
};

FramedBraidNF framed_nf(const Word& w, Context ctx);

/// Compose two normal forms in the semidirect product: braids concatenate and
/// the second braid's permutation acts on where the first part's framings sit.
FramedBraidNF framed_nf_mul(const FramedBraidNF& a, const FramedBraidNF& b, Context ctx);

/// Count of spanning monomials alpha * f * beta before deduplication:
/// B(d, 1) = d and B(d, n) = B(d, n-1)^2 * (d + 1 + d^2).
Int dimension_bound(int d, int n);

/// The spanning set X_n as explicit words: t_n^s (s = 1..d, s = d giving the
/// unit), g_{n-1}, and t_{n-1}^s h_{n-1} t_{n-1}^r (r, s = 1..d).
std::vector<Word> spanning_set(Context ctx);

/// Rewrite a monomial into a combination of alpha * f * beta monomials with
/// f in X_n and alpha, beta over the generators of index <= n-2 plus t_{n-1},
/// following the inductive two-case reduction; inverse letters of index
/// <= n-2 are left unexpanded.  Steps are recorded as (rule, direction).
struct SpanningStep {
  std::string rule;
  bool forward;
  Element after;
};

struct SpanningTrace {
  std::vector<SpanningStep> steps;
  Element final;
  bool exhausted = false;
};

SpanningTrace spanning_reduce(const Word& mono, const RuleSystem& sys);

/// All alpha * f * beta candidates with alpha, beta drawn from the distinct
/// level-(n-1) normal forms, reduced and deduplicated; an empirical upper
/// bound for the dimension.  Guarded to n <= 3, d <= 3.
struct SpanningEnumeration {
  std::vector<Element> elements;   // distinct normal forms, sorted by text
  std::size_t candidates = 0;      // monomials examined at the top level
  std::vector<Word> exhausted;     // monomials whose reduction ran out of steps
};

SpanningEnumeration spanning_enumerate(int d, int n, const RuleSystem& sys);

/// Closed inverse of g_i: (1/(1-m)) g_i - (m/(1-m)) g_i e_i - m h_i + m e_i.
Element g_inverse_formula(const FieldPtr& field, Context ctx, int i);

/// The algebra map killing the framing: framing letters are deleted and every
/// loop weight y_k collapses to the framing-zero value.  The result lives
/// over the (l, m) field.
Element specialize_t_to_one(const Element& a, const FieldPtr& bmw_field);

}  // namespace framize
