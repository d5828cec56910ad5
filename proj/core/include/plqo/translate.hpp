#pragma once

// Translation of PLQO formulas into linear constraint systems over the
// variables of constraints.hpp.

#include "plqo/constraints.hpp"
#include "plqo/plqo.hpp"

#include <memory>
#include <string>
#include <vector>

namespace plqo {

/// x_{A'} = 0 for every 2-subset A' of A, in lexicographic order.
ConstraintSet q_obs(const SymbolSet& a);

enum class MarginalMode : std::uint8_t {
  /// Marginal equations for every A' subset of A.
  Full,
  /// Only A' among the symbol sets of Delta and the 2-subsets of A.
  Restricted,
};

struct AdamsOptions {
  MarginalMode marginals = MarginalMode::Full;
  unsigned max_symbols = 12;
};

/// The probability-distribution system over valuations on A, in this order:
/// mass bounds 0 <= m_U <= 1, the unit sum, marginal equations, x_{A'} >= 0 for
/// 2-subsets, and one defining equation per distinct member of Delta.
/// Throws BudgetExceeded when |A| > max_symbols and MissingSymbol when some
/// member of Delta mentions a symbol outside A.
ConstraintSet q_adams(const SymbolSet& a, const std::vector<PropFormula>& delta,
                      const AdamsOptions& options = {});

/// The mass variable x_{phi_A^U}.
RcofVar mass_var(const SymbolSet& a, const SymbolSet& u);

/// Linear form of a closed-field term; numeric variables become xn[k].
LinExpr term_expr(const RcofTerm& p);

ConstraintSet translate_atom(const PlqoFormula& atom);
DisjunctiveConstraintSet translate_literal(const PlqoLiteral& lit);

/// Constraint-level formula tree mirroring the connectives of the source.
class RcofFormula {
 public:
  enum class Kind : std::uint8_t { Conj, Neg, Impl };

  static RcofFormula conj(ConstraintSet cs);
  static RcofFormula neg(RcofFormula a);
  static RcofFormula impl(RcofFormula a, RcofFormula b);

  Kind kind() const noexcept { return node_->kind; }
  const ConstraintSet& constraints() const { return node_->cs; }
  const RcofFormula& child() const { return node_->children[0]; }
  const RcofFormula& left() const { return node_->children[0]; }
  const RcofFormula& right() const { return node_->children[1]; }

  bool holds(const Witness& w) const;
  /// Conjunctions as `{c1; c2}`, `{}` for the empty one.
  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    ConstraintSet cs;
    std::vector<RcofFormula> children;
  };
  explicit RcofFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

RcofFormula translate_formula(const PlqoFormula& phi);

}  // namespace plqo
