#pragma once

// Linear constraints over the tagged variables of the real-field translation:
// numeric variables x_k, probability variables x_alpha and pair variables
// x_{Bi,Bj}.

#include "plqo/prop.hpp"
#include "plqo/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace plqo {

class RcofVar {
 public:
  enum class Kind : std::uint8_t { Numeric, ProbOf, Pair };

  static RcofVar numeric(unsigned k);
  /// Keyed by the compact printed form of alpha.
  static RcofVar prob_of(const PropFormula& alpha);
  static RcofVar prob_of_key(std::string key);
  /// Unordered; throws Internal when a == b.
  static RcofVar pair(PropSymbol a, PropSymbol b);

  Kind kind() const noexcept { return kind_; }
  unsigned index() const noexcept { return index_; }
  const std::string& key() const noexcept { return key_; }
  PropSymbol first() const noexcept { return a_; }
  PropSymbol second() const noexcept { return b_; }

  /// `xn[3]`, `x[B1&!B2]`, `xp[B1,B2]`.
  std::string to_string() const;

  friend auto operator<=>(const RcofVar&, const RcofVar&) = default;

 private:
  Kind kind_ = Kind::Numeric;
  unsigned index_ = 0;
  std::string key_;
  PropSymbol a_;
  PropSymbol b_;
};

/// Values for translation variables; absent variables read as 0.
using Witness = std::map<RcofVar, Rational>;

Rational value_of(const Witness& w, const RcofVar& v);

/// c + sum coeffs[v] * v.
struct LinExpr {
  Rational constant;
  std::map<RcofVar, Rational> coeffs;

  static LinExpr of(const RcofVar& v, Rational c = 1);
  static LinExpr constant_of(Rational c);

  LinExpr& operator+=(const LinExpr& o);
  LinExpr& operator-=(const LinExpr& o);
  LinExpr& operator*=(const Rational& c);
  Rational eval(const Witness& w) const;
};

enum class CmpOp : std::uint8_t { Eq, Lt, Le, Gt, Ge };

/// sum lhs[v] * v REL rhs with REL in {=, <, <=}; zero coefficients are absent.
class LinConstraint {
 public:
  enum class Rel : std::uint8_t { Eq, Lt, Le };

  /// Normal form of `l op r`: variables move left, constants right, and > or >=
  /// become < or <= by negation.
  static LinConstraint compare(const LinExpr& l, CmpOp op, const LinExpr& r);

  const std::map<RcofVar, Rational>& lhs() const noexcept { return lhs_; }
  Rel rel() const noexcept { return rel_; }
  const Rational& rhs() const noexcept { return rhs_; }

  bool holds(const Witness& w) const;
  std::string to_string() const;

  friend bool operator==(const LinConstraint&, const LinConstraint&) = default;

 private:
  std::map<RcofVar, Rational> lhs_;
  Rel rel_ = Rel::Eq;
  Rational rhs_;
};

/// Conjunction. Kept as a list in generation order; duplicates are allowed so
/// generated systems have predictable sizes.
struct ConstraintSet {
  std::vector<LinConstraint> constraints;

  void add(LinConstraint c) { constraints.push_back(std::move(c)); }
  void append(const ConstraintSet& o);
  std::size_t size() const noexcept { return constraints.size(); }
  bool empty() const noexcept { return constraints.empty(); }
  bool holds(const Witness& w) const;
  std::vector<RcofVar> variables() const;
  /// One constraint per line.
  std::string to_string() const;
};

/// Disjunction of conjunctions; no disjuncts means false.
struct DisjunctiveConstraintSet {
  std::vector<ConstraintSet> disjuncts;

  bool holds(const Witness& w) const;
  std::string to_string() const;
};

/// not(c) as a disjunction of single constraints.
DisjunctiveConstraintSet negate(const LinConstraint& c);
/// not(c1 and ... and cn) as a disjunction.
DisjunctiveConstraintSet negate(const ConstraintSet& cs);

}  // namespace plqo
