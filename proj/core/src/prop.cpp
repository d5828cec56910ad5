#include "plqo/prop.hpp"

#include "plqo/errors.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

namespace plqo {

std::string to_string(PropSymbol s) { return "B" + std::to_string(s.index); }

PropFormula PropFormula::verum() {
  static const PropFormula t(std::make_shared<const Node>(Node{Kind::Verum, {}, {}}));
  return t;
}

PropFormula PropFormula::falsum() { return neg(verum()); }

PropFormula PropFormula::atom(unsigned index) {
  return PropFormula(std::make_shared<const Node>(Node{Kind::Atom, PropSymbol{index}, {}}));
}

PropFormula PropFormula::neg(PropFormula a) {
  return PropFormula(std::make_shared<const Node>(Node{Kind::Neg, {}, {std::move(a)}}));
}

PropFormula PropFormula::impl(PropFormula a, PropFormula b) {
  return PropFormula(
      std::make_shared<const Node>(Node{Kind::Impl, {}, {std::move(a), std::move(b)}}));
}

PropFormula PropFormula::conj(PropFormula a, PropFormula b) {
  return neg(impl(std::move(a), neg(std::move(b))));
}

PropFormula PropFormula::disj(PropFormula a, PropFormula b) {
  return impl(neg(std::move(a)), std::move(b));
}

PropFormula PropFormula::iff(PropFormula a, PropFormula b) {
  return conj(impl(a, b), impl(b, a));
}

namespace {

void collect_symbols(const PropFormula& f, SymbolSet& out) {
  switch (f.kind()) {
    case PropFormula::Kind::Verum: return;
    case PropFormula::Kind::Atom: out.insert(f.symbol()); return;
    case PropFormula::Kind::Neg: collect_symbols(f.child(), out); return;
    case PropFormula::Kind::Impl:
      collect_symbols(f.left(), out);
      collect_symbols(f.right(), out);
      return;
  }
}

using BitIndex = std::unordered_map<unsigned, unsigned>;

bool eval_bits(const PropFormula& f, const BitIndex& bits, std::uint64_t row) {
  switch (f.kind()) {
    case PropFormula::Kind::Verum: return true;
    case PropFormula::Kind::Atom: return (row >> bits.at(f.symbol().index)) & 1U;
    case PropFormula::Kind::Neg: return !eval_bits(f.child(), bits, row);
    case PropFormula::Kind::Impl:
      return !eval_bits(f.left(), bits, row) || eval_bits(f.right(), bits, row);
  }
  return false;
}

void check_budget(std::size_t n, unsigned budget) {
  if (n > budget)
    throw Error(ErrorCode::BudgetExceeded, "formula has " + std::to_string(n) +
                                               " symbols, budget is " + std::to_string(budget));
}

std::vector<PropSymbol> ordered(const SymbolSet& s) { return {s.begin(), s.end()}; }

}  // namespace

SymbolSet PropFormula::symbols() const {
  SymbolSet out;
  collect_symbols(*this, out);
  return out;
}

bool operator==(const PropFormula& a, const PropFormula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case PropFormula::Kind::Verum: return true;
    case PropFormula::Kind::Atom: return a.symbol() == b.symbol();
    case PropFormula::Kind::Neg: return a.child() == b.child();
    case PropFormula::Kind::Impl: return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

bool Valuation::at(PropSymbol s) const {
  auto it = map_.find(s);
  if (it == map_.end())
    throw Error(ErrorCode::MissingSymbol, "valuation does not assign " + to_string(s));
  return it->second;
}

SymbolSet Valuation::domain() const {
  SymbolSet out;
  for (const auto& [s, _] : map_) out.insert(s);
  return out;
}

bool eval(const PropFormula& alpha, const Valuation& v) {
  switch (alpha.kind()) {
    case PropFormula::Kind::Verum: return true;
    case PropFormula::Kind::Atom: return v.at(alpha.symbol());
    case PropFormula::Kind::Neg: return !eval(alpha.child(), v);
    case PropFormula::Kind::Impl: {
      // Both sides are evaluated so a missing symbol is always reported.
      bool l = eval(alpha.left(), v);
      bool r = eval(alpha.right(), v);
      return !l || r;
    }
  }
  return false;
}

std::vector<bool> truth_table(const PropFormula& alpha, const std::vector<PropSymbol>& order,
                              unsigned budget) {
  check_budget(order.size(), budget);
  BitIndex bits;
  for (unsigned i = 0; i < order.size(); ++i) bits[order[i].index] = i;
  for (auto s : alpha.symbols())
    if (!bits.count(s.index))
      throw Error(ErrorCode::MissingSymbol, "truth table order lacks " + to_string(s));
  const std::uint64_t rows = std::uint64_t{1} << order.size();
  std::vector<bool> table(rows);
  for (std::uint64_t r = 0; r < rows; ++r) table[r] = eval_bits(alpha, bits, r);
  return table;
}

bool is_tautology(const PropFormula& alpha, unsigned budget) {
  auto table = truth_table(alpha, ordered(alpha.symbols()), budget);
  return std::all_of(table.begin(), table.end(), [](bool b) { return b; });
}

SymbolSet AnfPoly::variables() const {
  SymbolSet out;
  for (const auto& m : monomials) out.insert(m.begin(), m.end());
  return out;
}

bool AnfPoly::eval(const Valuation& v) const {
  bool acc = false;
  for (const auto& m : monomials) {
    bool term = true;
    for (auto s : m) term = term && v.at(s);
    acc ^= term;
  }
  return acc;
}

std::string AnfPoly::to_string() const {
  if (monomials.empty()) return "0";
  std::string out;
  for (const auto& m : monomials) {
    if (!out.empty()) out += " + ";
    if (m.empty()) {
      out += "1";
      continue;
    }
    bool first = true;
    for (auto s : m) {
      if (!first) out += "*";
      out += plqo::to_string(s);
      first = false;
    }
  }
  return out;
}

AnfPoly anf(const PropFormula& alpha, unsigned budget) {
  auto order = ordered(alpha.symbols());
  auto table = truth_table(alpha, order, budget);
  // Moebius transform over GF(2): coefficient of monomial S is the XOR of the
  // table over all subsets of S.
  std::vector<std::uint8_t> coeff(table.begin(), table.end());
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t r = 0; r < coeff.size(); ++r)
      if (r & bit) coeff[r] ^= coeff[r ^ bit];
  }
  AnfPoly poly;
  for (std::size_t r = 0; r < coeff.size(); ++r) {
    if (!coeff[r]) continue;
    SymbolSet mono;
    for (std::size_t i = 0; i < n; ++i)
      if (r & (std::size_t{1} << i)) mono.insert(order[i]);
    poly.monomials.insert(std::move(mono));
  }
  return poly;
}

SymbolSet essential_symbols(const PropFormula& alpha, unsigned budget) {
  return anf(alpha, budget).variables();
}

SymbolSet essential_symbols_bruteforce(const PropFormula& alpha, unsigned budget) {
  auto order = ordered(alpha.symbols());
  auto table = truth_table(alpha, order, budget);
  SymbolSet out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t r = 0; r < table.size(); ++r) {
      if (!(r & bit) && table[r] != table[r | bit]) {
        out.insert(order[i]);
        break;
      }
    }
  }
  return out;
}

PropFormula phi_A_U(const SymbolSet& a, const SymbolSet& u) {
  if (!std::includes(a.begin(), a.end(), u.begin(), u.end()))
    throw Error(ErrorCode::UNotSubset, "U is not a subset of A");
  if (a.empty()) return PropFormula::verum();
  std::optional<PropFormula> acc;
  for (auto s : a) {
    auto lit = u.count(s) ? PropFormula::atom(s) : PropFormula::neg(PropFormula::atom(s));
    acc = acc ? PropFormula::conj(*acc, lit) : lit;
  }
  return *acc;
}

}  // namespace plqo
