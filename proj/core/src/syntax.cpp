#include "plqo/syntax.hpp"

#include "plqo/errors.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <vector>

namespace plqo {

namespace {

enum class Tok {
  End, LParen, RParen, Bang, Amp, Bar, Arrow, Iff,
  Eq, Lt, Le, Gt, Ge, Plus, Minus, Star, Slash,
  Int, Sym, Var, True, False, Obs, Prob,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::size_t len) {
    out.push_back({k, std::string(s.substr(i, len)), line, col});
    i += len;
    col += len;
  };
  while (i < s.size()) {
    const char c = s[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    auto next_is = [&](std::string_view lit) { return s.substr(i, lit.size()) == lit; };
    if (next_is("<->")) { push(Tok::Iff, 3); continue; }
    if (next_is("<=")) { push(Tok::Le, 2); continue; }
    if (next_is(">=")) { push(Tok::Ge, 2); continue; }
    if (next_is("->")) { push(Tok::Arrow, 2); continue; }
    switch (c) {
      case '(': push(Tok::LParen, 1); continue;
      case ')': push(Tok::RParen, 1); continue;
      case '!': push(Tok::Bang, 1); continue;
      case '&': push(Tok::Amp, 1); continue;
      case '|': push(Tok::Bar, 1); continue;
      case '=': push(Tok::Eq, 1); continue;
      case '<': push(Tok::Lt, 1); continue;
      case '>': push(Tok::Gt, 1); continue;
      case '+': push(Tok::Plus, 1); continue;
      case '-': push(Tok::Minus, 1); continue;
      case '*': push(Tok::Star, 1); continue;
      case '/': push(Tok::Slash, 1); continue;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      push(Tok::Int, j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
      std::string_view word = s.substr(i, j - i);
      auto indexed = [&](char head) {
        if (word.size() < 2 || word[0] != head) return false;
        for (char d : word.substr(1))
          if (!std::isdigit(static_cast<unsigned char>(d))) return false;
        return true;
      };
      Tok k;
      if (word == "T") k = Tok::True;
      else if (word == "F") k = Tok::False;
      else if (word == "O") k = Tok::Obs;
      else if (word == "P") k = Tok::Prob;
      else if (indexed('B')) k = Tok::Sym;
      else if (indexed('x')) k = Tok::Var;
      else
        throw ParseError(line, col, {"B<k>", "x<k>", "T", "F", "O", "P"},
                         "identifier '" + std::string(word) + "'");
      push(k, j - i);
      continue;
    }
    throw ParseError(line, col, {}, "character '" + std::string(1, c) + "'");
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

const std::vector<std::string> kBinaryOps = {"&", "|", "->", "<->"};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  PropFormula prop_formula() { return iff<PropFormula>([this] { return prop_primary(); }); }
  PlqoFormula plqo_formula() { return iff<PlqoFormula>([this] { return plqo_primary(); }); }

  RcofTerm term() {
    RcofTerm acc = mterm();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = take().kind == Tok::Minus;
      RcofTerm rhs = mterm();
      acc = minus ? RcofTerm::sub(acc, rhs) : RcofTerm::add(acc, rhs);
    }
    return acc;
  }

  void finish(std::vector<std::string> expected) {
    if (peek().kind != Tok::End) fail(std::move(expected));
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(t.line, t.column, std::move(expected),
                     t.kind == Tok::End ? "end of input" : "'" + t.text + "'");
  }

  void expect(Tok k, const char* shown) {
    if (peek().kind != k) fail({shown});
    take();
  }

  template <class F, class Prim>
  F iff(const Prim& prim) {
    F acc = impl<F>(prim);
    while (peek().kind == Tok::Iff) {
      take();
      acc = F::iff(acc, impl<F>(prim));
    }
    return acc;
  }

  template <class F, class Prim>
  F impl(const Prim& prim) {
    F lhs = disj<F>(prim);
    if (peek().kind != Tok::Arrow) return lhs;
    take();
    return F::impl(lhs, impl<F>(prim));
  }

  template <class F, class Prim>
  F disj(const Prim& prim) {
    F acc = conj<F>(prim);
    while (peek().kind == Tok::Bar) {
      take();
      acc = F::disj(acc, conj<F>(prim));
    }
    return acc;
  }

  template <class F, class Prim>
  F conj(const Prim& prim) {
    F acc = unary<F>(prim);
    while (peek().kind == Tok::Amp) {
      take();
      acc = F::conj(acc, unary<F>(prim));
    }
    return acc;
  }

  template <class F, class Prim>
  F unary(const Prim& prim) {
    if (peek().kind == Tok::Bang) {
      take();
      return F::neg(unary<F>(prim));
    }
    return prim();
  }

  PropFormula prop_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::True: take(); return PropFormula::verum();
      case Tok::False: take(); return PropFormula::falsum();
      case Tok::Sym: {
        take();
        return PropFormula::atom(index_of(t));
      }
      case Tok::LParen: {
        take();
        PropFormula inner = prop_formula();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default: fail({"B<k>", "T", "F", "!", "("});
    }
  }

  PlqoFormula plqo_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Obs: {
        take();
        expect(Tok::LParen, "'('");
        PropFormula alpha = prop_formula();
        expect(Tok::RParen, "')'");
        return PlqoFormula::obs(std::move(alpha));
      }
      case Tok::Prob: {
        take();
        expect(Tok::LParen, "'('");
        PropFormula alpha = prop_formula();
        expect(Tok::RParen, "')'");
        const Tok cmp = peek().kind;
        if (cmp != Tok::Eq && cmp != Tok::Lt && cmp != Tok::Le && cmp != Tok::Gt &&
            cmp != Tok::Ge)
          fail({"=", "<", "<=", ">", ">="});
        take();
        RcofTerm p = term();
        switch (cmp) {
          case Tok::Eq: return PlqoFormula::prob(std::move(alpha), Cmp::Eq, std::move(p));
          case Tok::Lt: return PlqoFormula::prob(std::move(alpha), Cmp::Lt, std::move(p));
          case Tok::Le: return PlqoFormula::prob_le(std::move(alpha), std::move(p));
          case Tok::Gt: return PlqoFormula::prob_gt(std::move(alpha), std::move(p));
          default: return PlqoFormula::prob_ge(std::move(alpha), std::move(p));
        }
      }
      case Tok::LParen: {
        take();
        PlqoFormula inner = plqo_formula();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default: fail({"O(", "P(", "!", "("});
    }
  }

  RcofTerm mterm() {
    RcofTerm acc = factor();
    while (peek().kind == Tok::Star) {
      take();
      acc = RcofTerm::mul(acc, factor());
    }
    return acc;
  }

  RcofTerm factor() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Minus: take(); return RcofTerm::neg(factor());
      case Tok::Var: take(); return RcofTerm::var(index_of(t));
      case Tok::Int: {
        take();
        const std::uint64_t n = integer(t);
        if (peek().kind != Tok::Slash) return RcofTerm::numeral(n);
        take();
        if (peek().kind != Tok::Int) fail({"integer"});
        return RcofTerm::fraction(n, integer(take()));
      }
      case Tok::LParen: {
        take();
        RcofTerm inner = term();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default: fail({"integer", "x<k>", "-", "("});
    }
  }

  static std::uint64_t integer(const Token& t) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
      throw ParseError(t.line, t.column, {"integer below 2^64"}, "'" + t.text + "'");
    return v;
  }

  static unsigned index_of(const Token& t) {
    unsigned v = 0;
    const char* b = t.text.data() + 1;
    const char* e = t.text.data() + t.text.size();
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e)
      throw ParseError(t.line, t.column, {"index below 2^32"}, "'" + t.text + "'");
    return v;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Binding strength of printed constructs; higher binds tighter.
enum Level : int { kIff = 0, kImpl = 1, kOr = 2, kAnd = 3, kNot = 4, kPrimary = 5 };

std::string paren_if(bool cond, std::string s) { return cond ? "(" + s + ")" : s; }

struct Printed {
  std::string text;
  int level;
};

// Shared connective printer; `leaf` handles kinds it recognises (atoms and
// derived primaries) and returns false otherwise.
template <class F, class Leaf>
class ConnectivePrinter {
 public:
  ConnectivePrinter(const Leaf& leaf, bool compact) : leaf_(leaf), compact_(compact) {}

  Printed print(const F& f) const {
    Printed out;
    if (leaf_(f, out)) return out;
    if (f.kind() == F::Kind::Neg) {
      const F& c = f.child();
      if (c.kind() == F::Kind::Impl) {
        const F& a = c.left();
        const F& nb = c.right();
        if (nb.kind() == F::Kind::Neg) {
          const F& b = nb.child();
          if (a.kind() == F::Kind::Impl && b.kind() == F::Kind::Impl && a.left() == b.right() &&
              a.right() == b.left())
            return binary(a.left(), a.right(), "<->", kIff, false);
          return binary(a, b, "&", kAnd, false);
        }
      }
      return {"!" + at_least(c, kNot), kNot};
    }
    const F& a = f.left();
    if (a.kind() == F::Kind::Neg) return binary(a.child(), f.right(), "|", kOr, false);
    return binary(a, f.right(), "->", kImpl, true);
  }

 private:
  std::string at_least(const F& f, int level) const {
    Printed p = print(f);
    return paren_if(p.level < level, std::move(p.text));
  }

  Printed binary(const F& l, const F& r, const char* op, int level, bool right_assoc) const {
    const std::string sep = compact_ ? op : std::string(" ") + op + " ";
    std::string ls = at_least(l, right_assoc ? level + 1 : level);
    std::string rs = at_least(r, right_assoc ? level : level + 1);
    return {ls + sep + rs, level};
  }

  const Leaf& leaf_;
  bool compact_;
};

}  // namespace

PropFormula parse_prop(std::string_view text) {
  Parser p(text);
  PropFormula f = p.prop_formula();
  std::vector<std::string> expected = kBinaryOps;
  expected.push_back("end of input");
  p.finish(expected);
  return f;
}

PlqoFormula parse_plqo(std::string_view text) {
  Parser p(text);
  PlqoFormula f = p.plqo_formula();
  std::vector<std::string> expected = kBinaryOps;
  expected.push_back("end of input");
  p.finish(expected);
  return f;
}

RcofTerm parse_term(std::string_view text) {
  Parser p(text);
  RcofTerm t = p.term();
  p.finish({"+", "-", "*", "end of input"});
  return t;
}

std::string print_prop(const PropFormula& alpha, bool compact) {
  auto leaf = [](const PropFormula& f, Printed& out) {
    switch (f.kind()) {
      case PropFormula::Kind::Verum: out = {"T", kPrimary}; return true;
      case PropFormula::Kind::Atom: out = {to_string(f.symbol()), kPrimary}; return true;
      case PropFormula::Kind::Neg:
        if (f.child().kind() == PropFormula::Kind::Verum) {
          out = {"F", kPrimary};
          return true;
        }
        return false;
      default: return false;
    }
  };
  return ConnectivePrinter<PropFormula, decltype(leaf)>(leaf, compact).print(alpha).text;
}

namespace {

// Term levels: sum < product < unary < atom.
enum TermLevel : int { kSum = 0, kProduct = 1, kUnary = 2, kAtom = 3 };

Printed print_term_rec(const RcofTerm& p) {
  using K = RcofTerm::Kind;
  switch (p.kind()) {
    case K::Zero: return {"0", kAtom};
    case K::One: return {"1", kAtom};
    case K::Numeral: return {std::to_string(p.numerator()), kAtom};
    case K::Fraction:
      return {std::to_string(p.numerator()) + "/" + std::to_string(p.denominator()), kUnary};
    case K::NumVar: return {"x" + std::to_string(p.var_index()), kAtom};
    case K::Neg: {
      Printed c = print_term_rec(p.child());
      // Fractions read as a single factor after a minus sign.
      const bool bare = c.level == kAtom || p.child().kind() == K::Fraction;
      return {"-" + paren_if(!bare, c.text), kUnary};
    }
    case K::Add: {
      Printed l = print_term_rec(p.left());
      if (p.right().kind() == K::Neg) {
        Printed r = print_term_rec(p.right().child());
        return {l.text + " - " + paren_if(r.level <= kSum, r.text), kSum};
      }
      Printed r = print_term_rec(p.right());
      return {l.text + " + " + paren_if(r.level <= kSum, r.text), kSum};
    }
    case K::Mul: {
      Printed l = print_term_rec(p.left());
      Printed r = print_term_rec(p.right());
      return {paren_if(l.level < kProduct, l.text) + " * " +
                  paren_if(r.level <= kProduct, r.text),
              kProduct};
    }
  }
  return {"", kAtom};
}

const char* cmp_text(Cmp c) { return c == Cmp::Eq ? "=" : "<"; }

std::string prob_text(const PropFormula& alpha, const char* cmp, const RcofTerm& p) {
  return "P(" + print_prop(alpha) + ") " + cmp + " " + print_term(p);
}

// Impl(!(P(a) = p), P(a) < p), the expansion of P(a) <= p.
bool match_le(const PlqoFormula& f, const PlqoFormula*& eq) {
  using K = PlqoFormula::Kind;
  if (f.kind() != K::Impl || f.left().kind() != K::Neg) return false;
  const PlqoFormula& e = f.left().child();
  const PlqoFormula& l = f.right();
  if (e.kind() != K::Prob || l.kind() != K::Prob || e.cmp() != Cmp::Eq || l.cmp() != Cmp::Lt)
    return false;
  if (!(e.alpha() == l.alpha()) || !(e.term() == l.term())) return false;
  eq = &e;
  return true;
}

Printed print_expanded(const PlqoFormula& f) {
  using K = PlqoFormula::Kind;
  switch (f.kind()) {
    case K::Obs: return {"O(" + print_prop(f.alpha()) + ")", kPrimary};
    case K::Prob: return {prob_text(f.alpha(), cmp_text(f.cmp()), f.term()), kPrimary};
    case K::Neg: {
      Printed c = print_expanded(f.child());
      return {paren_if(c.level <= kImpl, c.text) + " -> P(T) < 1", kImpl};
    }
    case K::Impl: {
      Printed l = print_expanded(f.left());
      Printed r = print_expanded(f.right());
      return {paren_if(l.level <= kImpl, l.text) + " -> " + paren_if(r.level < kImpl, r.text),
              kImpl};
    }
  }
  return {"", kPrimary};
}

}  // namespace

std::string print_term(const RcofTerm& p) { return print_term_rec(p).text; }

std::string print_plqo(const PlqoFormula& phi, const PrintOptions& options) {
  if (options.expand_negation) return print_expanded(phi).text;
  auto leaf = [](const PlqoFormula& f, Printed& out) {
    using K = PlqoFormula::Kind;
    const PlqoFormula* eq = nullptr;
    switch (f.kind()) {
      case K::Obs: out = {"O(" + print_prop(f.alpha()) + ")", kPrimary}; return true;
      case K::Prob:
        out = {prob_text(f.alpha(), cmp_text(f.cmp()), f.term()), kPrimary};
        return true;
      case K::Neg: {
        const PlqoFormula& c = f.child();
        if (c.kind() == K::Prob && c.cmp() == Cmp::Lt) {
          out = {prob_text(c.alpha(), ">=", c.term()), kPrimary};
          return true;
        }
        if (match_le(c, eq)) {
          out = {prob_text(eq->alpha(), ">", eq->term()), kPrimary};
          return true;
        }
        return false;
      }
      case K::Impl:
        if (match_le(f, eq)) {
          out = {prob_text(eq->alpha(), "<=", eq->term()), kPrimary};
          return true;
        }
        return false;
    }
    return false;
  };
  return ConnectivePrinter<PlqoFormula, decltype(leaf)>(leaf, false).print(phi).text;
}

}  // namespace plqo
