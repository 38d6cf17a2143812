#include <algorithm>
#include <map>
#include <stdexcept>

#include "framize/presentations.hpp"
#include "framize/print.hpp"

// Spanning-set reduction: rewrite a monomial into combinations of
// alpha * f * beta with f in X_n = {t_n^s, g_{n-1}, t_{n-1}^s h_{n-1} t_{n-1}^r}
// and alpha, beta over the lower-index generators plus t_{n-1}.  The loop
// mirrors the inductive proof: clear the segment between the two rightmost
// top-level letters by commutation moves, then contract the adjacent pair;
// the one genuinely interacting middle pattern is handled by the scripted
// inverse-conjugation chain.  Every step is a named rule applied forward or
// backward as an identity.

namespace framize {

namespace {

// Span of one top-level factor inside a word: a t_n letter, a g_{n-1} /
// Ginv_{n-1} letter, or an h_{n-1} together with its adjacent t_{n-1} framings.
struct Core {
  std::size_t begin;
  std::size_t end;
  char type;  // 'T', 'G', 'I', 'H'
};

bool is_high(const Letter& l, const Context& ctx) {
  switch (l.kind) {
    case LetterKind::Tpow: return l.index == ctx.n;
    case LetterKind::G:
    case LetterKind::Ginv:
    case LetterKind::H: return l.index == ctx.n - 1;
    default: return false;
  }
}

std::vector<Core> find_cores(const Word& w, const Context& ctx) {
  std::vector<Core> cores;
  std::size_t i = 0;
  while (i < w.size()) {
    const Letter& l = w[i];
    if (!is_high(l, ctx)) {
      ++i;
      continue;
    }
    if (l.kind == LetterKind::Tpow) {
      cores.push_back({i, i + 1, 'T'});
      ++i;
    } else if (l.kind == LetterKind::G) {
      cores.push_back({i, i + 1, 'G'});
      ++i;
    } else if (l.kind == LetterKind::Ginv) {
      cores.push_back({i, i + 1, 'I'});
      ++i;
    } else {
      std::size_t b = i, e = i + 1;
      if (b > 0 && w[b - 1].kind == LetterKind::Tpow && w[b - 1].index == ctx.n - 1 &&
          (cores.empty() || cores.back().end <= b - 1))
        b = b - 1;
      if (e < w.size() && w[e].kind == LetterKind::Tpow && w[e].index == ctx.n - 1) e = e + 1;
      cores.push_back({b, e, 'H'});
      i = e;
    }
  }
  return cores;
}

struct Job {
  Word word;
  Scalar coeff;
};

class SpanningEngine {
public:
  SpanningEngine(const RuleSystem& base)
      : ctx_(base.context()),
        work_(presentation(AlgebraKind{AlgebraTag::FBMW, base.context().d}, base.context().n,
                           PresentationOptions{.topological_th_commute = true,
                                               .expand_g_inverse = false,
                                               .max_steps = base.max_steps()})),
        ginv_top_{"g_inverse(" + std::to_string(ctx_.n - 1) + ")",
                  {ginv(ctx_.n - 1)},
                  g_inverse_formula(work_.field(), ctx_, ctx_.n - 1),
                  "derived"} {}

  SpanningTrace run(const Word& mono, int budget) {
    SpanningTrace trace{.steps = {}, .final = Element::zero(work_.field(), ctx_)};
    std::vector<Job> jobs{{normalize_word(mono, ctx_.d), Scalar::one(work_.field())}};
    while (!jobs.empty()) {
      Job job = std::move(jobs.back());
      jobs.pop_back();
      if (budget-- <= 0) {
        trace.exhausted = true;
        trace.final.add_term(job.word, job.coeff);
        for (const Job& rest : jobs) trace.final.add_term(rest.word, rest.coeff);
        return trace;
      }
      step(job, jobs, trace);
    }
    return trace;
  }

private:
  const RewriteRule& named(const std::string& name) const {
    const RewriteRule* r = work_.find_rule(name);
    if (!r) throw std::logic_error("missing catalog rule " + name);
    return *r;
  }

  void apply(Job job, const std::string& rule_name, std::size_t pos, bool forward,
             std::vector<Job>& jobs, SpanningTrace& trace, const RewriteRule* rule = nullptr) {
    const RewriteRule& r = rule ? *rule : named(rule_name);
    Element res = apply_rule_to_word(job.word, r, pos, work_, forward).scaled(job.coeff);
    trace.steps.push_back({rule_name, forward, res});
    for (const auto& [w, c] : res.terms()) jobs.push_back({w, c});
  }

  // Move the letter at `pos` one slot to the left, as a named identity.
  // Only moves that the catalog supports are attempted; returns false when
  // the adjacent pair genuinely interacts.
  bool swap_left(Job& job, std::size_t pos, std::vector<Job>& jobs, SpanningTrace& trace) {
    const Letter a = job.word[pos - 1];
    const Letter b = job.word[pos];
    std::string name;
    bool forward = true;
    if (b.kind == LetterKind::Tpow) {
      if (a.kind == LetterKind::G || a.kind == LetterKind::Ginv) {
        name = "t_push(" + std::string(a.kind == LetterKind::G ? "g" : "G") +
               std::to_string(a.index) + ",t" + std::to_string(b.index) + "^" +
               std::to_string(b.exponent) + ")";
      } else if (a.kind == LetterKind::Tpow) {
        if (a.index > b.index) {
          name = "t_sort(t" + std::to_string(a.index) + "^" + std::to_string(a.exponent) + ",t" +
                 std::to_string(b.index) + "^" + std::to_string(b.exponent) + ")";
        } else {
          name = "t_sort(t" + std::to_string(b.index) + "^" + std::to_string(b.exponent) + ",t" +
                 std::to_string(a.index) + "^" + std::to_string(a.exponent) + ")";
          forward = false;
        }
      } else if (a.kind == LetterKind::H && b.index != a.index && b.index != a.index + 1) {
        name = "topological-th-commute(h" + std::to_string(a.index) + ",t" +
               std::to_string(b.index) + "^" + std::to_string(b.exponent) + ")";
      } else {
        return false;
      }
      apply(job, name, pos - 1, forward, jobs, trace);
      return true;
    }
    return false;
  }

  void step(Job& job, std::vector<Job>& jobs, SpanningTrace& trace) {
    job.word = normalize_word(job.word, ctx_.d);
    auto cores = find_cores(job.word, ctx_);

    // Inverse top letters expand through the closed formula.
    for (const Core& c : cores) {
      if (c.type == 'I') {
        apply(job, ginv_top_.name, c.begin, true, jobs, trace, &ginv_top_);
        return;
      }
    }
    if (cores.size() <= 1) {
      trace.final.add_term(job.word, job.coeff);
      return;
    }

    const Core& c1 = cores[cores.size() - 2];
    const Core& c2 = cores[cores.size() - 1];

    if (c1.end < c2.begin) {
      // Clear the middle: commute its first letter out to the left of c1.
      std::size_t pos = c1.end;
      if (job.word[pos].kind == LetterKind::Tpow) {
        if (swap_left(job, pos, jobs, trace)) return;
      }
      if (hard_case(job, c1, c2, jobs, trace)) return;
      trace.exhausted = true;
      trace.final.add_term(job.word, job.coeff);
      return;
    }

    contract_adjacent(job, c1, c2, jobs, trace);
  }

  // Apply a single-word-result identity on a word, recording the step.
  Word scripted(const Word& w, Scalar& coeff, const std::string& rule_name, std::size_t pos,
                bool forward, SpanningTrace& trace) {
    Element res = apply_rule_to_word(w, named(rule_name), pos, work_, forward);
    if (res.term_count() != 1) throw std::logic_error("scripted step is not a single word");
    const auto& [word, c] = *res.terms().begin();
    trace.steps.push_back({rule_name, forward, res.scaled(coeff)});
    coeff = coeff * c;
    return word;
  }

  std::string tpush_name(char braid_kind, int braid_index, const Letter& frame) const {
    return "t_push(" + std::string(1, braid_kind) + std::to_string(braid_index) + ",t" +
           std::to_string(frame.index) + "^" + std::to_string(frame.exponent) + ")";
  }

  // The paper's interacting middle: g_{n-1} (t^s h_{n-2} t^r | g_{n-2}) g_{n-1}.
  // The framing on the left of h_{n-2} has already been commuted out by the
  // generic move, so the shape here is h_{n-2} with an optional right framing.
  bool hard_case(Job& job, const Core& c1, const Core& c2, std::vector<Job>& jobs,
                 SpanningTrace& trace) {
    const int n = ctx_.n;
    if (c1.type != 'G' || c2.type != 'G') return false;
    std::vector<Letter> mid(job.word.begin() + c1.end, job.word.begin() + c2.begin);
    if (mid.size() == 1 && mid[0] == g(n - 2)) {
      apply(job, "braid(" + std::to_string(n - 2) + ")", c1.begin, false, jobs, trace);
      return true;
    }
    bool plain = mid.size() == 1 && mid[0] == h(n - 2);
    bool framed = mid.size() == 2 && mid[0] == h(n - 2) && mid[1].kind == LetterKind::Tpow &&
                  mid[1].index == n - 2;
    if (!plain && !framed) return false;

    Word w = job.word;
    Scalar coeff = job.coeff;
    std::size_t p = c1.begin;
    if (framed) {
      // move t_{n-2}^r rightward across the closing g_{n-1}
      w = scripted(w, coeff, tpush_name('g', n - 1, mid[1]), p + 2, false, trace);
    }
    // [g_{n-1}, h_{n-2}, g_{n-1}] -> [Ginv_{n-2}, h_{n-1}, Ginv_{n-2}]
    w = scripted(w, coeff, "invhinv(" + std::to_string(n - 2) + "," + std::to_string(n - 1) + ")",
                 p, false, trace);
    // pull the outer framings back through the inverse letters
    if (p > 0 && w[p - 1].kind == LetterKind::Tpow && w[p - 1].index == n - 2)
      w = scripted(w, coeff, tpush_name('G', n - 2, t(n - 1, w[p - 1].exponent)), p - 1, false,
                   trace);
    std::size_t after = p + 3;
    if (after < w.size() && w[after].kind == LetterKind::Tpow && w[after].index == n - 2)
      w = scripted(w, coeff, tpush_name('G', n - 2, w[after]), after - 1, true, trace);
    jobs.push_back({w, coeff});
    return true;
  }

  void contract_adjacent(Job& job, const Core& c1, const Core& c2, std::vector<Job>& jobs,
                         SpanningTrace& trace) {
    const int n = ctx_.n;
    const Word& w = job.word;
    auto tpush = [&](const Letter& braid, const Letter& frame) {
      return "t_push(" + std::string(braid.kind == LetterKind::G ? "g" : "G") +
             std::to_string(braid.index) + ",t" + std::to_string(frame.index) + "^" +
             std::to_string(frame.exponent) + ")";
    };
    switch (c1.type) {
      case 'T': {
        const Letter tn = w[c1.begin];
        if (c2.type == 'G') {
          // t_n^s g_{n-1} = g_{n-1} t_{n-1}^s
          apply(job, tpush(w[c2.begin], t(n - 1, tn.exponent)), c1.begin, false, jobs, trace);
        } else {  // 'H'
          const Letter first = w[c2.begin];
          if (first.kind == LetterKind::Tpow) {
            apply(job,
                  "t_sort(t" + std::to_string(n) + "^" + std::to_string(tn.exponent) + ",t" +
                      std::to_string(n - 1) + "^" + std::to_string(first.exponent) + ")",
                  c1.begin, true, jobs, trace);
          } else {
            apply(job,
                  "t_shift_l(" + std::to_string(n - 1) + "," + std::to_string(tn.exponent) + ")",
                  c1.begin, true, jobs, trace);
          }
        }
        return;
      }
      case 'G': {
        if (c2.type == 'T') {
          apply(job, tpush(w[c1.begin], w[c2.begin]), c1.begin, true, jobs, trace);
        } else if (c2.type == 'G') {
          apply(job, "quad(" + std::to_string(n - 1) + ")", c1.begin, true, jobs, trace);
        } else {  // 'H'
          const Letter first = w[c2.begin];
          if (first.kind == LetterKind::Tpow) {
            apply(job, tpush(w[c1.begin], first), c1.begin, true, jobs, trace);
          } else {
            apply(job, "gh(" + std::to_string(n - 1) + ")", c1.begin, true, jobs, trace);
          }
        }
        return;
      }
      case 'H': {
        const Letter last = w[c1.end - 1];
        bool framed = last.kind == LetterKind::Tpow;
        if (c2.type == 'G') {
          if (framed)
            apply(job,
                  "tg_fold(" + std::to_string(n - 1) + "," + std::to_string(last.exponent) + ")",
                  c1.end - 2, true, jobs, trace);
          else
            apply(job, "hg(" + std::to_string(n - 1) + ")", c1.end - 1, true, jobs, trace);
        } else if (c2.type == 'T') {
          if (framed)
            apply(job,
                  "t_fold(" + std::to_string(n - 1) + "," + std::to_string(last.exponent) + "," +
                      std::to_string(w[c2.begin].exponent) + ")",
                  c1.end - 2, true, jobs, trace);
          else
            apply(job,
                  "t_shift_r(" + std::to_string(n - 1) + "," +
                      std::to_string(w[c2.begin].exponent) + ")",
                  c1.end - 1, true, jobs, trace);
        } else {  // 'H'
          // juncture is [h, t^k, h] or [h, h]
          if (framed)
            apply(job,
                  "hth(" + std::to_string(n - 1) + "," + std::to_string(last.exponent) + ")",
                  c1.end - 2, true, jobs, trace);
          else
            apply(job, "hh(" + std::to_string(n - 1) + ")", c1.end - 1, true, jobs, trace);
        }
        return;
      }
      default:
        trace.exhausted = true;
        trace.final.add_term(job.word, job.coeff);
        return;
    }
  }

  Context ctx_;
  RuleSystem work_;
  RewriteRule ginv_top_;
};

}  // namespace

SpanningTrace spanning_reduce(const Word& mono, const RuleSystem& sys) {
  if (sys.name().rfind("FBMW", 0) != 0)
    throw std::invalid_argument("spanning reduction is defined for FBMW systems");
  if (!sys.alphabet().contains(normalize_word(mono, sys.context().d), sys.context()))
    throw std::invalid_argument("monomial leaves the system alphabet");
  if (sys.context().n < 2)
    throw std::invalid_argument("spanning reduction needs n >= 2");
  SpanningEngine engine(sys);
  return engine.run(mono, sys.max_steps());
}

SpanningEnumeration spanning_enumerate(int d, int n, const RuleSystem& sys) {
  if (d < 1 || d > 3 || n < 1 || n > 3)
    throw std::invalid_argument("spanning enumeration is guarded to 1 <= d <= 3, 1 <= n <= 3");
  if (!(sys.context() == Context{d, n}))
    throw std::invalid_argument("system context does not match (d, n)");

  SpanningEnumeration out;
  std::vector<Word> level;
  for (int a = 0; a <= d - 1; ++a) level.push_back(normalize_word({t(1, a)}, d));

  auto reduce_distinct = [&](const std::vector<Word>& candidates) {
    std::map<std::string, Element> distinct;
    for (const Word& w : candidates) {
      ReductionTrace tr = reduce(Element::monomial(sys.field(), sys.context(), w), sys);
      if (tr.exhausted) {
        out.exhausted.push_back(w);
        continue;
      }
      distinct.emplace(element_to_string(tr.final, sys.order()), tr.final);
    }
    return distinct;
  };

  if (n == 1) {
    auto distinct = reduce_distinct(level);
    out.candidates = level.size();
    for (auto& [k, e] : distinct) out.elements.push_back(e);
    return out;
  }

  for (int k = 2; k <= n; ++k) {
    std::vector<Word> candidates;
    for (const Word& alpha : level)
      for (const Word& f : spanning_set(Context{d, k}))
        for (const Word& beta : level)
          candidates.push_back(concat(concat(alpha, f, d), beta, d));
    out.candidates = candidates.size();
    auto distinct = reduce_distinct(candidates);
    std::vector<Word> next;
    std::map<std::string, Word> seen;
    for (auto& [key, e] : distinct) {
      if (k == n) {
        out.elements.push_back(e);
      } else {
        for (const auto& [w, c] : e.terms()) seen.emplace(word_to_string(w), w);
      }
    }
    for (auto& [key, w] : seen) next.push_back(w);
    if (k < n) level = std::move(next);
  }
  return out;
}

}  // namespace framize
