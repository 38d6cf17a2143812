#include "framize/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "framize/presentations.hpp"

namespace framize {

namespace {

enum class Tok { Integer, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Tok::Integer, src.substr(start, i - start), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isalpha(static_cast<unsigned char>(src[i]))) ++i;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Tok::Name, src.substr(start, i - start), start});
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({k, src.substr(i, 1), i});
    ++i;
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

std::optional<Scalar> as_scalar(const Element& e) {
  if (e.is_zero()) return Scalar::zero(e.field());
  if (e.term_count() == 1 && e.terms().begin()->first.empty()) return e.terms().begin()->second;
  return std::nullopt;
}

class Parser {
public:
  Parser(const std::string& src, FieldPtr field, Context ctx, bool scalars_only)
      : tokens_(lex(src)), field_(std::move(field)), ctx_(ctx), scalars_only_(scalars_only) {}

  Element parse() {
    Element e = element();
    expect(Tok::End, "end of input");
    return e;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_++]; }
  void expect(Tok k, const char* what) {
    if (peek().kind != k) throw ParseError(std::string("expected ") + what, peek().pos);
    ++pos_;
  }

  Element element() {
    bool neg = false;
    if (peek().kind == Tok::Minus) {
      ++pos_;
      neg = true;
    }
    Element acc = term();
    if (neg) acc = -acc;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = next().kind == Tok::Minus;
      Element rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  Element term() {
    Element acc = factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      Token op = next();
      Element rhs = factor();
      if (op.kind == Tok::Star) {
        acc = acc * rhs;
      } else {
        auto s = as_scalar(rhs);
        if (!s) throw ParseError("division requires a scalar divisor", op.pos);
        if (s->is_zero()) throw ParseError("division by zero", op.pos);
        acc = acc.scaled(s->inverse());
      }
    }
    return acc;
  }

  Element factor() {
    Element base = atom();
    while (peek().kind == Tok::Caret) {
      Token op = next();
      bool neg = false;
      if (peek().kind == Tok::Minus) {
        ++pos_;
        neg = true;
      }
      if (peek().kind != Tok::Integer) throw ParseError("expected integer exponent", peek().pos);
      int k = std::stoi(next().text);
      if (neg) k = -k;
      base = power(base, k, op.pos);
    }
    return base;
  }

  Element power(const Element& base, int k, std::size_t pos) {
    // Framing letters take exponents modulo d.
    if (base.term_count() == 1 && base.terms().begin()->second.is_one()) {
      const Word& w = base.terms().begin()->first;
      if (w.size() == 1 && w[0].kind == LetterKind::Tpow) {
        Word p{t(w[0].index, mod_exp(w[0].exponent * k, ctx_.d))};
        return Element::monomial(field_, ctx_, p);
      }
    }
    if (k >= 0) return base.pow(k);
    auto s = as_scalar(base);
    if (!s) throw ParseError("negative exponent on a non-framing generator", pos);
    if (s->is_zero()) throw ParseError("negative power of zero", pos);
    return Element::from_scalar(ctx_, s->pow(k));
  }

  Element atom() {
    Token tk = next();
    switch (tk.kind) {
      case Tok::Integer:
        return Element::from_scalar(ctx_, Scalar::integer(field_, Int(tk.text)));
      case Tok::LParen: {
        Element e = element();
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::Name:
        return name(tk);
      default:
        throw ParseError("expected a value", tk.pos);
    }
  }

  Element name(const Token& tk) {
    const std::string& s = tk.text;
    std::size_t split = 0;
    while (split < s.size() && std::isalpha(static_cast<unsigned char>(s[split]))) ++split;
    std::string head = s.substr(0, split);
    std::string digits = s.substr(split);

    auto index = [&]() {
      if (digits.empty()) throw ParseError("generator '" + head + "' needs an index", tk.pos);
      return std::stoi(digits);
    };
    auto check_range = [&](int i, int lo, int hi, const char* what) {
      if (i < lo || i > hi)
        throw ParseError(std::string(what) + " index " + std::to_string(i) + " out of range " +
                             std::to_string(lo) + ".." + std::to_string(hi),
                         tk.pos);
    };

    auto letter_elem = [&](Letter l) {
      if (scalars_only_) throw ParseError("generator letter in a scalar expression", tk.pos);
      return Element::monomial(field_, ctx_, {l});
    };

    if (head == "g" || head == "G" || head == "h") {
      int i = index();
      check_range(i, 1, ctx_.n - 1, head == "h" ? "tangle generator" : "braid generator");
      LetterKind k = head == "g" ? LetterKind::G : head == "G" ? LetterKind::Ginv : LetterKind::H;
      return letter_elem({k, i, 0});
    }
    if (head == "t" && !digits.empty()) {
      int i = std::stoi(digits);
      check_range(i, 1, ctx_.n, "framing generator");
      if (ctx_.d == 1) return Element::unit(field_, ctx_);
      return letter_elem(t(i, 1));
    }
    if (head == "tau") {
      int i = index();
      check_range(i, 1, ctx_.n - 1, "singular generator");
      return letter_elem(tau(i));
    }
    if (s == "T") return letter_elem(bgen());
    if (s == "Tinv") return letter_elem(bginv());
    if (head == "e" && !digits.empty()) {
      int i = std::stoi(digits);
      check_range(i, 1, ctx_.n - 1, "projector");
      if (scalars_only_) throw ParseError("projector in a scalar expression", tk.pos);
      return e_element(field_, ctx_, i);
    }
    if (s == "y0") return Element::from_scalar(ctx_, y0_value(field_));
    if (auto idx = field_->index_of(s))
      return Element::from_scalar(ctx_, Scalar::from_poly(Poly::variable(field_, *idx)));
    throw ParseError("unknown name '" + s + "'", tk.pos);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  FieldPtr field_;
  Context ctx_;
  bool scalars_only_;
};

}  // namespace

Element parse_element(const std::string& src, const FieldPtr& field, Context ctx) {
  return Parser(src, field, ctx, false).parse();
}

Scalar parse_scalar(const std::string& src, const FieldPtr& field) {
  Element e = Parser(src, field, Context{1, 2}, true).parse();
  if (e.is_zero()) return Scalar::zero(field);
  return e.terms().begin()->second;
}

Scalar substitute_y0(const std::string& src, const FieldPtr& field) {
  return parse_scalar(src, field);
}

Word parse_word(const std::string& src, const FieldPtr& field, Context ctx) {
  Element e = parse_element(src, field, ctx);
  if (e.term_count() != 1 || !e.terms().begin()->second.is_one())
    throw ParseError("expected a single monomial with coefficient one", 0);
  return e.terms().begin()->first;
}

}  // namespace framize
