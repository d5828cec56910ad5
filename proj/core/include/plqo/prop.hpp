#pragma once

// Classical propositional formulas over the symbols B0, B1, ... built from
// verum, negation and implication. Conjunction, disjunction, equivalence and
// falsum are builders that expand into the primitive connectives.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace plqo {

struct PropSymbol {
  unsigned index = 0;

  friend auto operator<=>(const PropSymbol&, const PropSymbol&) = default;
};

std::string to_string(PropSymbol s);

using SymbolSet = std::set<PropSymbol>;

/// Operations that enumerate valuations refuse formulas with more symbols.
inline constexpr unsigned kDefaultSymbolBudget = 16;

class PropFormula {
 public:
  enum class Kind : std::uint8_t { Verum, Atom, Neg, Impl };

  static PropFormula verum();
  static PropFormula falsum();
  static PropFormula atom(unsigned index);
  static PropFormula atom(PropSymbol s) { return atom(s.index); }
  static PropFormula neg(PropFormula a);
  static PropFormula impl(PropFormula a, PropFormula b);
  static PropFormula conj(PropFormula a, PropFormula b);
  static PropFormula disj(PropFormula a, PropFormula b);
  static PropFormula iff(PropFormula a, PropFormula b);

  Kind kind() const noexcept { return node_->kind; }
  PropSymbol symbol() const noexcept { return node_->symbol; }
  const PropFormula& child() const { return node_->children[0]; }
  const PropFormula& left() const { return node_->children[0]; }
  const PropFormula& right() const { return node_->children[1]; }

  /// B_alpha: the symbols occurring in the formula.
  SymbolSet symbols() const;

  friend bool operator==(const PropFormula& a, const PropFormula& b);

 private:
  struct Node {
    Kind kind;
    PropSymbol symbol;
    std::vector<PropFormula> children;
  };

  explicit PropFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// A finite map from symbols to truth values.
class Valuation {
 public:
  Valuation() = default;
  Valuation(std::initializer_list<std::pair<const PropSymbol, bool>> init) : map_(init) {}

  void set(PropSymbol s, bool value) { map_[s] = value; }
  bool contains(PropSymbol s) const { return map_.count(s) != 0; }
  /// Throws MissingSymbol when `s` is outside the domain.
  bool at(PropSymbol s) const;
  SymbolSet domain() const;

 private:
  std::map<PropSymbol, bool> map_;
};

bool eval(const PropFormula& alpha, const Valuation& v);

/// Truth table of `alpha` over `order`: bit i of the row index is the value of
/// order[i]. Every symbol of alpha must appear in `order`.
std::vector<bool> truth_table(const PropFormula& alpha, const std::vector<PropSymbol>& order,
                              unsigned budget = kDefaultSymbolBudget);

bool is_tautology(const PropFormula& alpha, unsigned budget = kDefaultSymbolBudget);

/// Multilinear polynomial over GF(2); each monomial is a set of symbols and the
/// empty monomial is the constant 1.
struct AnfPoly {
  std::set<SymbolSet> monomials;

  SymbolSet variables() const;
  bool eval(const Valuation& v) const;
  std::string to_string() const;

  friend bool operator==(const AnfPoly&, const AnfPoly&) = default;
};

AnfPoly anf(const PropFormula& alpha, unsigned budget = kDefaultSymbolBudget);

/// eB_alpha, read off the algebraic normal form.
SymbolSet essential_symbols(const PropFormula& alpha, unsigned budget = kDefaultSymbolBudget);

/// Reference implementation: flips each symbol under every valuation.
SymbolSet essential_symbols_bruteforce(const PropFormula& alpha,
                                       unsigned budget = kDefaultSymbolBudget);

/// The conjunction identifying the valuation on `a` that is true exactly on `u`,
/// conjuncts in ascending symbol order, left-nested. Verum when `a` is empty.
PropFormula phi_A_U(const SymbolSet& a, const SymbolSet& u);

}  // namespace plqo
