#pragma once

// Abstract syntax of PLQO formulas: observability atoms O(alpha), probability
// atoms P(alpha) cmp p over closed-field terms, negation and implication.

#include "plqo/prop.hpp"
#include "plqo/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace plqo {

/// Terms of the ordered-field language. Numerals and fractions are kept as
/// nodes so that the printed form round-trips through the parser.
class RcofTerm {
 public:
  enum class Kind : std::uint8_t { Zero, One, Numeral, Fraction, NumVar, Neg, Add, Mul };

  static RcofTerm zero();
  static RcofTerm one();
  /// 0 and 1 map to Zero and One; larger values to a Numeral node.
  static RcofTerm numeral(std::uint64_t n);
  /// m^-1, written 1/m.
  static RcofTerm inverse_numeral(std::uint64_t m);
  /// m^-1 * n, written n/m. Throws DivisionByZero when m == 0.
  static RcofTerm fraction(std::uint64_t n, std::uint64_t m);
  static RcofTerm var(unsigned k);
  static RcofTerm neg(RcofTerm a);
  static RcofTerm add(RcofTerm a, RcofTerm b);
  static RcofTerm sub(RcofTerm a, RcofTerm b) { return add(std::move(a), neg(std::move(b))); }
  static RcofTerm mul(RcofTerm a, RcofTerm b);

  Kind kind() const noexcept { return node_->kind; }
  std::uint64_t numerator() const noexcept { return node_->num; }
  std::uint64_t denominator() const noexcept { return node_->den; }
  unsigned var_index() const noexcept { return static_cast<unsigned>(node_->num); }
  const RcofTerm& child() const { return node_->children[0]; }
  const RcofTerm& left() const { return node_->children[0]; }
  const RcofTerm& right() const { return node_->children[1]; }

  bool closed() const;
  std::set<unsigned> variables() const;

  friend bool operator==(const RcofTerm& a, const RcofTerm& b);

 private:
  struct Node {
    Kind kind;
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    std::vector<RcofTerm> children;
  };
  explicit RcofTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

/// Values for the numeric variables x_k; unmentioned variables are 0.
struct Assignment {
  std::map<unsigned, Rational> numeric;

  Rational get(unsigned k) const;
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

Rational eval_term(const RcofTerm& p, const Assignment& rho);

/// c_0 + sum c_k x_k. Throws UnsupportedNonlinear for products of two
/// variable-bearing subterms.
struct LinearTerm {
  Rational constant;
  std::map<unsigned, Rational> coeffs;
};
LinearTerm linearize(const RcofTerm& p);

enum class Cmp : std::uint8_t { Eq, Lt };

class PlqoFormula {
 public:
  enum class Kind : std::uint8_t { Obs, Prob, Neg, Impl };

  static PlqoFormula obs(PropFormula alpha);
  static PlqoFormula prob(PropFormula alpha, Cmp cmp, RcofTerm p);
  static PlqoFormula neg(PlqoFormula a);
  static PlqoFormula impl(PlqoFormula a, PlqoFormula b);
  static PlqoFormula conj(PlqoFormula a, PlqoFormula b);
  static PlqoFormula disj(PlqoFormula a, PlqoFormula b);
  static PlqoFormula iff(PlqoFormula a, PlqoFormula b);
  /// P(alpha) <= p, expanded to (P(alpha) = p) | (P(alpha) < p).
  static PlqoFormula prob_le(PropFormula alpha, RcofTerm p);
  /// P(alpha) >= p, expanded to !(P(alpha) < p).
  static PlqoFormula prob_ge(PropFormula alpha, RcofTerm p);
  /// P(alpha) > p, expanded to !(P(alpha) <= p).
  static PlqoFormula prob_gt(PropFormula alpha, RcofTerm p);

  Kind kind() const noexcept { return node_->kind; }
  bool is_atom() const noexcept { return kind() == Kind::Obs || kind() == Kind::Prob; }
  const PropFormula& alpha() const { return *node_->alpha; }
  Cmp cmp() const noexcept { return node_->cmp; }
  const RcofTerm& term() const { return *node_->term; }
  const PlqoFormula& child() const { return node_->children[0]; }
  const PlqoFormula& left() const { return node_->children[0]; }
  const PlqoFormula& right() const { return node_->children[1]; }

  friend bool operator==(const PlqoFormula& a, const PlqoFormula& b);

 private:
  struct Node {
    Kind kind;
    std::shared_ptr<const PropFormula> alpha;
    Cmp cmp = Cmp::Eq;
    std::shared_ptr<const RcofTerm> term;
    std::vector<PlqoFormula> children;
  };
  explicit PlqoFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

/// A signed atom.
struct PlqoLiteral {
  bool positive = true;
  PlqoFormula atom;

  PlqoLiteral negated() const { return {!positive, atom}; }
  PlqoFormula formula() const { return positive ? atom : PlqoFormula::neg(atom); }
  friend bool operator==(const PlqoLiteral&, const PlqoLiteral&) = default;
};

/// Distinct atoms of a formula, in order of first occurrence (left to right).
std::vector<PlqoFormula> atoms(const PlqoFormula& phi);

/// Evaluates the connective skeleton given a truth value for each atom of
/// `atom_list` (same order as `values`).
bool eval_skeleton(const PlqoFormula& phi, const std::vector<PlqoFormula>& atom_list,
                   const std::vector<bool>& values);

/// True when the formula is a tautology when its atoms are read as
/// independent propositional letters.
bool is_skeleton_tautology(const PlqoFormula& phi, unsigned budget = kDefaultSymbolBudget + 4);

using Conjunction = std::vector<PlqoLiteral>;

struct DnfBudget {
  unsigned max_atoms = 16;
  std::size_t max_disjuncts = std::size_t{1} << 16;
};

/// Disjunctive normal form over atoms-as-letters. Contradictory disjuncts are
/// dropped, duplicates and subsumed disjuncts removed. Literals inside a
/// disjunct follow first-occurrence order of their atoms in phi.
std::vector<Conjunction> nnf_dnf_literals(const PlqoFormula& phi, const DnfBudget& budget = {});

/// Left-nested conjunction of the literals; requires a non-empty list.
PlqoFormula conjunction_formula(const Conjunction& lits);

/// Union of B_alpha over every atom.
SymbolSet b_phi(const PlqoFormula& phi);

/// The classical formulas alpha of probability atoms, deduplicated
/// syntactically, in first-occurrence order.
std::vector<PropFormula> prob_formulas(const PlqoFormula& phi);

}  // namespace plqo
