#include "framize/presentations.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "framize/print.hpp"

namespace framize {

const char* tag_name(AlgebraTag tag) {
  switch (tag) {
    case AlgebraTag::BMW: return "BMW";
    case AlgebraTag::FBMW: return "FBMW";
    case AlgebraTag::YH: return "YH";
    case AlgebraTag::HECKE: return "HECKE";
    case AlgebraTag::YTL: return "YTL";
    case AlgebraTag::SHECKE: return "SHECKE";
    case AlgebraTag::FSHECKE: return "FSHECKE";
    case AlgebraTag::HB: return "HB";
    case AlgebraTag::HB_CYC: return "HB_CYC";
    case AlgebraTag::HB_INF: return "HB_INF";
    case AlgebraTag::FHB: return "FHB";
    case AlgebraTag::FHB_CYC: return "FHB_CYC";
    case AlgebraTag::FHB_INF: return "FHB_INF";
  }
  return "?";
}

AlgebraTag tag_from_name(const std::string& name) {
  std::string up;
  for (char c : name) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  static const std::map<std::string, AlgebraTag> table = {
      {"BMW", AlgebraTag::BMW},         {"FBMW", AlgebraTag::FBMW},
      {"YH", AlgebraTag::YH},           {"HECKE", AlgebraTag::HECKE},
      {"YTL", AlgebraTag::YTL},         {"SHECKE", AlgebraTag::SHECKE},
      {"FSHECKE", AlgebraTag::FSHECKE}, {"HB", AlgebraTag::HB},
      {"HB_CYC", AlgebraTag::HB_CYC},   {"HB_INF", AlgebraTag::HB_INF},
      {"FHB", AlgebraTag::FHB},         {"FHB_CYC", AlgebraTag::FHB_CYC},
      {"FHB_INF", AlgebraTag::FHB_INF},
  };
  auto it = table.find(up);
  if (it == table.end()) throw std::invalid_argument("unknown algebra tag '" + name + "'");
  return it->second;
}

bool tag_is_framized(AlgebraTag tag) {
  switch (tag) {
    case AlgebraTag::FBMW:
    case AlgebraTag::YH:
    case AlgebraTag::YTL:
    case AlgebraTag::FSHECKE:
    case AlgebraTag::FHB:
    case AlgebraTag::FHB_CYC:
    case AlgebraTag::FHB_INF:
      return true;
    default:
      return false;
  }
}

FieldPtr field_for(const AlgebraKind& kind) {
  std::vector<std::string> names;
  switch (kind.tag) {
    case AlgebraTag::BMW:
      names = {"l", "m"};
      break;
    case AlgebraTag::FBMW:
      names = {"l", "m"};
      for (int k = 1; k <= kind.d - 1; ++k) names.push_back("y" + std::to_string(k));
      break;
    case AlgebraTag::YH:
    case AlgebraTag::YTL:
    case AlgebraTag::FSHECKE:
    case AlgebraTag::FHB_INF:
      names = {"u"};
      break;
    case AlgebraTag::HECKE:
    case AlgebraTag::SHECKE:
    case AlgebraTag::HB_INF:
      names = {"q"};
      break;
    case AlgebraTag::HB:
      names = {"q", "Q"};
      break;
    case AlgebraTag::HB_CYC:
      names = {"q"};
      for (int k = 1; k <= kind.r; ++k) names.push_back("u" + std::to_string(k));
      break;
    case AlgebraTag::FHB:
      names = {"u", "Q"};
      break;
    case AlgebraTag::FHB_CYC:
      names = {"u"};
      for (int k = 1; k <= kind.r; ++k) names.push_back("u" + std::to_string(k));
      break;
  }
  return make_field(std::move(names));
}

Element e_element(const FieldPtr& field, Context ctx, int i) {
  if (i < 1 || i > ctx.n - 1)
    throw std::out_of_range("projector index " + std::to_string(i) + " out of range 1.." +
                            std::to_string(ctx.n - 1));
  Element sum = Element::zero(field, ctx);
  for (int s = 0; s < ctx.d; ++s)
    sum = sum + Element::monomial(field, ctx, {t(i, s), t(i + 1, ctx.d - s)});
  Scalar inv_d = Scalar::rational(field, Rat(1) / ctx.d);
  return sum.scaled(inv_d);
}

namespace {

std::string idx(int i) { return std::to_string(i); }

int transposed(int i, int j) {  // s_i(j)
  if (j == i) return i + 1;
  if (j == i + 1) return i;
  return j;
}

/// Assembles a catalog; every rule is pushed through add_rule, which enforces
/// the orientation invariant against the system order.
struct Builder {
  RuleSystem sys;
  FieldPtr F;
  Context ctx;
  int n;
  int d;

  Builder(std::string name, FieldPtr field, Context c, Alphabet alphabet, int max_steps)
      : sys(std::move(name), field, c, TermOrder(), std::move(alphabet), max_steps),
        F(field),
        ctx(c),
        n(c.n),
        d(c.d) {}

  Scalar sc(const std::string& v) const { return Scalar::variable(F, v); }
  Scalar one() const { return Scalar::one(F); }
  Scalar num(long v) const { return Scalar::integer(F, v); }
  Element unit() const { return Element::unit(F, ctx); }
  Element mono(const Word& w) const { return Element::monomial(F, ctx, w); }
  Element proj(int i) const { return e_element(F, ctx, i); }

  void rule(const std::string& name, const Word& lhs, const Element& rhs,
            const std::string& provenance) {
    sys.add_rule(RewriteRule{name, normalize_word(lhs, d), rhs, provenance});
  }

  void cancels_g() {
    for (int i = 1; i <= n - 1; ++i) {
      rule("cancel(g" + idx(i) + ",G" + idx(i) + ")", {g(i), ginv(i)}, unit(), "defining");
      rule("cancel(G" + idx(i) + ",g" + idx(i) + ")", {ginv(i), g(i)}, unit(), "defining");
    }
  }

  void braid_rules() {
    for (int i = 1; i <= n - 2; ++i)
      rule("braid(" + idx(i) + ")", {g(i), g(i + 1), g(i)},
           mono({g(i + 1), g(i), g(i + 1)}), "defining");
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j)
        rule("g_comm(" + idx(i) + "," + idx(j) + ")", {g(i), g(j)}, mono({g(j), g(i)}),
             "defining");
  }

  // Framing block: t_i^d = 1 is structural; commutation becomes an ascending
  // sort, and framing letters cross braid letters by the strand transposition.
  void framing_rules(bool with_ginv_push) {
    if (d < 2) return;
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i)
        for (int a = 1; a <= d - 1; ++a)
          for (int b = 1; b <= d - 1; ++b)
            rule("t_sort(t" + idx(j) + "^" + idx(a) + ",t" + idx(i) + "^" + idx(b) + ")",
                 {t(j, a), t(i, b)}, mono({t(i, b), t(j, a)}), "defining");
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= d - 1; ++k) {
          rule("t_push(g" + idx(i) + ",t" + idx(j) + "^" + idx(k) + ")", {g(i), t(j, k)},
               mono({t(transposed(i, j), k), g(i)}), "defining");
          if (with_ginv_push)
            rule("t_push(G" + idx(i) + ",t" + idx(j) + "^" + idx(k) + ")", {ginv(i), t(j, k)},
                 mono({t(transposed(i, j), k), ginv(i)}), "derived");
        }
  }

  // Loop weights and framing shifts across the tangle generators.
  void tangle_framing_rules() {
    Scalar y0 = y0_value(F);
    for (int i = 1; i <= n - 1; ++i) {
      rule("hh(" + idx(i) + ")", {h(i), h(i)}, mono({h(i)}).scaled(y0), "defining");
      for (int k = 1; k <= d - 1; ++k) {
        rule("hth(" + idx(i) + "," + idx(k) + ")", {h(i), t(i, k), h(i)},
             mono({h(i)}).scaled(sc("y" + idx(k))), "defining");
        rule("t_shift_l(" + idx(i) + "," + idx(k) + ")", {t(i + 1, k), h(i)},
             mono({t(i, k), h(i)}), "defining");
        rule("t_shift_r(" + idx(i) + "," + idx(k) + ")", {h(i), t(i + 1, k)},
             mono({h(i), t(i, k)}), "defining");
      }
      for (int a = 1; a <= d - 1; ++a) {
        for (int b = 1; b <= d - 1; ++b)
          rule("t_fold(" + idx(i) + "," + idx(a) + "," + idx(b) + ")",
               {h(i), t(i, a), t(i + 1, b)}, mono({h(i), t(i, (a + b) % d)}), "derived");
        rule("tg_fold(" + idx(i) + "," + idx(a) + ")", {h(i), t(i, a), g(i)},
             mono({h(i), t(i, a)}).scaled(sc("l").inverse()), "derived");
      }
    }
  }

  void th_commute_rules() {
    if (d < 2) return;
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n; ++j) {
        if (j == i || j == i + 1) continue;
        for (int k = 1; k <= d - 1; ++k)
          rule("topological-th-commute(h" + idx(i) + ",t" + idx(j) + "^" + idx(k) + ")",
               {h(i), t(j, k)}, mono({t(j, k), h(i)}), "derived");
      }
  }

  // BMW tangle relations shared by the framized and unframized kinds.
  void bmw_tangle_rules() {
    Scalar l = sc("l");
    for (int i = 1; i <= n - 1; ++i) {
      rule("gh(" + idx(i) + ")", {g(i), h(i)}, mono({h(i)}).scaled(l.inverse()), "defining");
      rule("hg(" + idx(i) + ")", {h(i), g(i)}, mono({h(i)}).scaled(l.inverse()), "derived");
    }
    for (int i = 1; i <= n - 1; ++i)
      for (int j : {i - 1, i + 1}) {
        if (j < 1 || j > n - 1) continue;
        rule("hgh(" + idx(i) + "," + idx(j) + ")", {h(i), g(j), h(i)}, mono({h(i)}).scaled(l),
             "defining");
      }
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j)
        rule("h_comm(" + idx(i) + "," + idx(j) + ")", {h(i), h(j)}, mono({h(j), h(i)}),
             "derived");
    for (int i = 1; i <= n - 1; ++i)
      for (int j : {i - 1, i + 1}) {
        if (j < 1 || j > n - 1) continue;
        rule("hhh(" + idx(i) + "," + idx(j) + ")", {h(i), h(j), h(i)}, mono({h(i)}), "derived");
        rule("ggh(" + idx(i) + "," + idx(j) + ")", {g(i), g(j), h(i)}, mono({h(j), h(i)}),
             "derived");
        rule("hgg(" + idx(i) + "," + idx(j) + ")", {h(i), g(j), g(i)}, mono({h(i), h(j)}),
             "derived");
        rule("invhinv(" + idx(i) + "," + idx(j) + ")", {ginv(i), h(j), ginv(i)},
             mono({g(j), h(i), g(j)}), "derived");
        rule("invh(" + idx(i) + "," + idx(j) + ")", {ginv(i), h(j)}, mono({g(j), h(i), h(j)}),
             "derived");
        rule("hinv(" + idx(i) + "," + idx(j) + ")", {h(j), ginv(i)}, mono({h(j), h(i), g(j)}),
             "derived");
      }
  }

  void g_inverse_rules() {
    for (int i = 1; i <= n - 1; ++i)
      rule("g_inverse(" + idx(i) + ")", {ginv(i)}, g_inverse_formula(F, ctx, i), "derived");
  }

  // Quadratic of the BMW framization: g_i^2 = (1-m) - m e_i (g_i - 1) + m l^{-1} h_i.
  void bmw_quadratic() {
    Scalar m = sc("m");
    Scalar l = sc("l");
    for (int i = 1; i <= n - 1; ++i) {
      Element ei = proj(i);
      Element rhs = unit().scaled(one() - m) - (ei * (mono({g(i)}) - unit())).scaled(m) +
                    mono({h(i)}).scaled(m / l);
      rule("quad(" + idx(i) + ")", {g(i), g(i)}, rhs, "defining");
    }
  }

  // Yokonuma quadratic: g_i^2 = 1 + (u-1) e_i (1 - g_i).
  void yokonuma_quadratic() {
    Scalar u = sc("u");
    for (int i = 1; i <= n - 1; ++i) {
      Element ei = proj(i);
      Element rhs = unit() + (ei * (unit() - mono({g(i)}))).scaled(u - one());
      rule("quad(" + idx(i) + ")", {g(i), g(i)}, rhs, "defining");
    }
  }

  // Iwahori-Hecke quadratic: g_i^2 = q + (q-1) g_i.
  void hecke_quadratic() {
    Scalar q = sc("q");
    for (int i = 1; i <= n - 1; ++i)
      rule("quad(" + idx(i) + ")", {g(i), g(i)},
           unit().scaled(q) + mono({g(i)}).scaled(q - one()), "defining");
  }

  // Temperley-Lieb quotient: g_i g_j g_i + g_i g_j + g_j g_i + g_i + g_j + 1 = 0.
  void tl_quotient() {
    for (int i = 1; i <= n - 1; ++i)
      for (int j : {i - 1, i + 1}) {
        if (j < 1 || j > n - 1) continue;
        Element rhs = -(mono({g(i), g(j)}) + mono({g(j), g(i)}) + mono({g(i)}) + mono({g(j)}) +
                        unit());
        rule("tl(" + idx(i) + "," + idx(j) + ")", {g(i), g(j), g(i)}, rhs, "defining");
      }
  }

  // Singular braid commutations and the mixed braid relation.
  void singular_rules() {
    for (int i = 1; i <= n - 1; ++i)
      rule("gtau_comm(" + idx(i) + "," + idx(i) + ")", {tau(i), g(i)}, mono({g(i), tau(i)}),
           "defining");
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n - 1; ++j) {
        if (std::abs(i - j) <= 1) continue;
        rule("gtau_comm(" + idx(i) + "," + idx(j) + ")", {tau(j), g(i)}, mono({g(i), tau(j)}),
             "defining");
      }
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j)
        rule("tau_comm(" + idx(i) + "," + idx(j) + ")", {tau(i), tau(j)}, mono({tau(j), tau(i)}),
             "defining");
    for (int i = 1; i <= n - 1; ++i)
      for (int j : {i - 1, i + 1}) {
        if (j < 1 || j > n - 1) continue;
        rule("tau_braid(" + idx(i) + "," + idx(j) + ")", {tau(j), g(i), g(j)},
             mono({g(i), g(j), tau(i)}), "defining");
      }
  }

  void cancels_T() {
    rule("cancel(T,Tinv)", {bgen(), bginv()}, unit(), "defining");
    rule("cancel(Tinv,T)", {bginv(), bgen()}, unit(), "defining");
  }

  // B-type braid relations for the loop generator T.
  void btype_braid_rules(bool with_framing) {
    if (n >= 2)
      rule("T_braid", {bgen(), g(1), bgen(), g(1)}, mono({g(1), bgen(), g(1), bgen()}),
           "defining");
    for (int i = 2; i <= n - 1; ++i)
      rule("Tg_comm(" + idx(i) + ")", {bgen(), g(i)}, mono({g(i), bgen()}), "defining");
    if (with_framing && d >= 2) {
      // T induces the identity permutation on strands, so it commutes with
      // every framing generator in the semidirect product.
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= d - 1; ++k)
          rule("Tt_comm(t" + idx(j) + "^" + idx(k) + ")", {bgen(), t(j, k)},
               mono({t(j, k), bgen()}), "derived");
    }
  }

  void btype_quadratic() {
    Scalar Q = sc("Q");
    rule("T_quad", {bgen(), bgen()}, mono({bgen()}).scaled(Q - one()) + unit().scaled(Q),
         "defining");
  }

  void cyclotomic_rule(int r) {
    // (T-u_1)...(T-u_r) = 0 read as T^r = sum_k (-1)^{k+1} e_k(u) T^{r-k}.
    std::vector<Scalar> sym(r + 1, Scalar::zero(F));
    sym[0] = one();
    for (int k = 1; k <= r; ++k) {
      Scalar uk = sc("u" + idx(k));
      for (int j = k; j >= 1; --j) sym[j] = sym[j] + sym[j - 1] * uk;
    }
    Word lhs(r, bgen());
    Element rhs = Element::zero(F, ctx);
    for (int k = 1; k <= r; ++k) {
      Word w(r - k, bgen());
      Scalar c = sym[k];
      if (k % 2 == 0) c = -c;
      rhs = rhs + mono(w).scaled(c);
    }
    rule("T_cyclotomic", lhs, rhs, "defining");
  }
};

Alphabet alphabet_for(AlgebraTag tag) {
  Alphabet a;
  a.kinds = {LetterKind::G, LetterKind::Ginv};
  switch (tag) {
    case AlgebraTag::BMW:
      a.kinds.insert(LetterKind::H);
      break;
    case AlgebraTag::FBMW:
      a.kinds.insert(LetterKind::H);
      a.kinds.insert(LetterKind::Tpow);
      break;
    case AlgebraTag::YH:
    case AlgebraTag::YTL:
      a.kinds.insert(LetterKind::Tpow);
      break;
    case AlgebraTag::HECKE:
      break;
    case AlgebraTag::SHECKE:
      a.kinds.insert(LetterKind::Tau);
      break;
    case AlgebraTag::FSHECKE:
      a.kinds.insert(LetterKind::Tau);
      a.kinds.insert(LetterKind::Tpow);
      break;
    case AlgebraTag::HB:
    case AlgebraTag::HB_CYC:
    case AlgebraTag::HB_INF:
      a.kinds.insert(LetterKind::Bgen);
      a.kinds.insert(LetterKind::Bginv);
      break;
    case AlgebraTag::FHB:
    case AlgebraTag::FHB_CYC:
    case AlgebraTag::FHB_INF:
      a.kinds.insert(LetterKind::Bgen);
      a.kinds.insert(LetterKind::Bginv);
      a.kinds.insert(LetterKind::Tpow);
      break;
  }
  return a;
}

}  // namespace

RuleSystem presentation(const AlgebraKind& kind, int n, const PresentationOptions& options) {
  if (n < 1) throw std::invalid_argument("strand count must be at least 1");
  int d = tag_is_framized(kind.tag) ? kind.d : 1;
  if (d < 1) throw std::invalid_argument("framing modulus must be at least 1");
  bool cyclotomic = kind.tag == AlgebraTag::HB_CYC || kind.tag == AlgebraTag::FHB_CYC;
  if (cyclotomic && kind.r < 1) throw std::invalid_argument("cyclotomic degree must be at least 1");

  std::ostringstream name;
  name << tag_name(kind.tag) << "(";
  if (tag_is_framized(kind.tag)) name << "d=" << d << ",";
  if (cyclotomic) name << "r=" << kind.r << ",";
  name << "n=" << n << ")";

  Context ctx{d, n};
  Builder b(name.str(), field_for(kind), ctx, alphabet_for(kind.tag), options.max_steps);

  switch (kind.tag) {
    case AlgebraTag::BMW:
    case AlgebraTag::FBMW:
      b.cancels_g();
      b.bmw_quadratic();
      b.bmw_tangle_rules();
      b.tangle_framing_rules();
      b.framing_rules(true);
      b.braid_rules();
      if (options.topological_th_commute) b.th_commute_rules();
      if (options.expand_g_inverse) b.g_inverse_rules();
      break;
    case AlgebraTag::YH:
      b.cancels_g();
      b.yokonuma_quadratic();
      b.framing_rules(true);
      b.braid_rules();
      break;
    case AlgebraTag::YTL:
      b.cancels_g();
      b.tl_quotient();
      b.yokonuma_quadratic();
      b.framing_rules(true);
      b.braid_rules();
      break;
    case AlgebraTag::HECKE:
      b.cancels_g();
      b.hecke_quadratic();
      b.braid_rules();
      break;
    case AlgebraTag::SHECKE:
      b.cancels_g();
      b.hecke_quadratic();
      b.braid_rules();
      b.singular_rules();
      break;
    case AlgebraTag::FSHECKE:
      b.cancels_g();
      b.yokonuma_quadratic();
      b.framing_rules(true);
      b.braid_rules();
      b.singular_rules();
      break;
    case AlgebraTag::HB:
      b.cancels_g();
      b.cancels_T();
      b.hecke_quadratic();
      b.btype_quadratic();
      b.braid_rules();
      b.btype_braid_rules(false);
      break;
    case AlgebraTag::HB_CYC:
      b.cancels_g();
      b.cancels_T();
      b.hecke_quadratic();
      b.cyclotomic_rule(kind.r);
      b.braid_rules();
      b.btype_braid_rules(false);
      break;
    case AlgebraTag::HB_INF:
      b.cancels_g();
      b.cancels_T();
      b.hecke_quadratic();
      b.braid_rules();
      b.btype_braid_rules(false);
      break;
    case AlgebraTag::FHB:
      b.cancels_g();
      b.cancels_T();
      b.yokonuma_quadratic();
      b.btype_quadratic();
      b.framing_rules(true);
      b.braid_rules();
      b.btype_braid_rules(true);
      break;
    case AlgebraTag::FHB_CYC:
      b.cancels_g();
      b.cancels_T();
      b.yokonuma_quadratic();
      b.cyclotomic_rule(kind.r);
      b.framing_rules(true);
      b.braid_rules();
      b.btype_braid_rules(true);
      break;
    case AlgebraTag::FHB_INF:
      b.cancels_g();
      b.cancels_T();
      b.yokonuma_quadratic();
      b.framing_rules(true);
      b.braid_rules();
      b.btype_braid_rules(true);
      break;
  }
  return b.sys;
}

FramedBraidNF framed_nf(const Word& w, Context ctx) {
  FramedBraidNF nf;
  nf.framings.assign(ctx.n, 0);
  // to_front[j] = strand where t_j lands when pulled left through the braid
  // letters read so far.
  std::vector<int> to_front(ctx.n + 1);
  for (int j = 0; j <= ctx.n; ++j) to_front[j] = j;
  for (const Letter& l : normalize_word(w, ctx.d)) {
    switch (l.kind) {
      case LetterKind::G:
      case LetterKind::Ginv:
        if (l.index < 1 || l.index > ctx.n - 1)
          throw std::out_of_range("braid index out of range in framed word");
        std::swap(to_front[l.index], to_front[l.index + 1]);
        nf.braid.push_back(l);
        break;
      case LetterKind::Tpow:
        nf.framings[to_front[l.index] - 1] =
            mod_exp(nf.framings[to_front[l.index] - 1] + l.exponent, ctx.d);
        break;
      default:
        throw std::invalid_argument("framed normal form expects a word over framing and braid "
                                    "letters only");
    }
  }
  return nf;
}

FramedBraidNF framed_nf_mul(const FramedBraidNF& a, const FramedBraidNF& b, Context ctx) {
  std::vector<int> to_front(ctx.n + 1);
  for (int j = 0; j <= ctx.n; ++j) to_front[j] = j;
  for (const Letter& l : a.braid) std::swap(to_front[l.index], to_front[l.index + 1]);
  FramedBraidNF r;
  r.framings = a.framings;
  for (int j = 1; j <= ctx.n; ++j) {
    int& slot = r.framings[to_front[j] - 1];
    slot = mod_exp(slot + b.framings[j - 1], ctx.d);
  }
  r.braid = a.braid;
  r.braid.insert(r.braid.end(), b.braid.begin(), b.braid.end());
  return r;
}

Int dimension_bound(int d, int n) {
  if (d < 1 || n < 1) throw std::invalid_argument("dimension bound needs d >= 1, n >= 1");
  Int b = d;
  Int factor = Int(d) + 1 + Int(d) * d;
  for (int k = 2; k <= n; ++k) b = b * b * factor;
  return b;
}

std::vector<Word> spanning_set(Context ctx) {
  if (ctx.n < 2) throw std::invalid_argument("the spanning set is defined for n >= 2");
  std::vector<Word> out;
  for (int s = 1; s <= ctx.d; ++s) out.push_back(normalize_word({t(ctx.n, s)}, ctx.d));
  out.push_back({g(ctx.n - 1)});
  for (int s = 1; s <= ctx.d; ++s)
    for (int r = 1; r <= ctx.d; ++r)
      out.push_back(normalize_word({t(ctx.n - 1, s), h(ctx.n - 1), t(ctx.n - 1, r)}, ctx.d));
  return out;
}

Element g_inverse_formula(const FieldPtr& field, Context ctx, int i) {
  Scalar m = Scalar::variable(field, "m");
  Scalar c = (Scalar::one(field) - m).inverse();
  Element gi = Element::monomial(field, ctx, {g(i)});
  Element hi = Element::monomial(field, ctx, {h(i)});
  Element ei = e_element(field, ctx, i);
  return gi.scaled(c) - (gi * ei).scaled(m * c) - hi.scaled(m) + ei.scaled(m);
}

Element specialize_t_to_one(const Element& a, const FieldPtr& bmw_field) {
  Context out_ctx{1, a.context().n};
  Element out = Element::zero(bmw_field, out_ctx);
  const auto& src = *a.field();
  for (const auto& [w, c] : a.terms()) {
    Word stripped;
    for (const Letter& l : w) {
      if (l.kind == LetterKind::Tpow) continue;
      if (l.kind == LetterKind::Bgen || l.kind == LetterKind::Bginv || l.kind == LetterKind::Tau)
        throw std::invalid_argument("specialization is defined on the framized BMW alphabet");
      stripped.push_back(l);
    }
    Scalar coeff = c;
    for (std::size_t v = 0; v < src.size(); ++v) {
      const std::string& name = src.name(v);
      if (name.size() >= 2 && name[0] == 'y')
        coeff = coeff.substitute(v, y0_value(a.field()));
    }
    out.add_term(stripped, coeff.migrate(bmw_field));
  }
  return out;
}

}  // namespace framize
