#pragma once

// Exact feasibility of conjunctions of linear constraints over the rationals,
// strict inequalities included. General simplex with Bland's rule over values
// c + k*delta, delta a positive infinitesimal.

#include "plqo/constraints.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace plqo {

/// c + k*delta, ordered lexicographically.
struct DeltaRational {
  Rational c;
  Rational k;

  friend DeltaRational operator+(const DeltaRational& a, const DeltaRational& b) {
    return {a.c + b.c, a.k + b.k};
  }
  friend DeltaRational operator-(const DeltaRational& a, const DeltaRational& b) {
    return {a.c - b.c, a.k - b.k};
  }
  friend DeltaRational operator*(const Rational& s, const DeltaRational& a) {
    return {s * a.c, s * a.k};
  }
  friend bool operator==(const DeltaRational& a, const DeltaRational& b) {
    return a.c == b.c && a.k == b.k;
  }
  friend bool operator<(const DeltaRational& a, const DeltaRational& b) {
    return a.c < b.c || (a.c == b.c && a.k < b.k);
  }
  friend bool operator<=(const DeltaRational& a, const DeltaRational& b) { return !(b < a); }
};

struct FeasibilityResult {
  bool feasible = false;
  /// Exact point satisfying every constraint; one entry per variable seen.
  Witness witness;
};

/// Single-use solver instance; not shared between threads.
class LraSolver {
 public:
  void add(const LinConstraint& c);
  void add(const ConstraintSet& cs);

  /// Decides the constraints added so far. A feasible witness is re-checked by
  /// substitution; a failed check throws Internal.
  FeasibilityResult check();

  /// Plain-text tableau, bounds and current values.
  std::string dump() const;

  std::size_t pivots() const noexcept { return pivots_; }

 private:
  struct Var {
    std::optional<DeltaRational> lower;
    std::optional<DeltaRational> upper;
    DeltaRational value;
    bool basic = false;
    std::size_t row = 0;
  };

  std::size_t column(const RcofVar& v);
  void tighten_lower(std::size_t x, const DeltaRational& b);
  void tighten_upper(std::size_t x, const DeltaRational& b);
  bool search();
  void update(std::size_t x, const DeltaRational& v);
  void pivot_and_update(std::size_t basic, std::size_t nonbasic, const DeltaRational& v);
  Witness concrete_witness() const;

  std::vector<LinConstraint> input_;
  std::map<RcofVar, std::size_t> columns_;
  std::vector<RcofVar> names_;
  std::vector<Var> vars_;
  // rows_[r]: basic variable rows_owner_[r] equals sum coeff * nonbasic.
  std::vector<std::map<std::size_t, Rational>> rows_;
  std::vector<std::size_t> row_owner_;
  bool trivially_infeasible_ = false;
  bool checked_ = false;
  std::size_t pivots_ = 0;
};

FeasibilityResult feasible(const ConstraintSet& cs);

/// True iff premise and d is infeasible for every disjunct d, i.e. the
/// universally closed implication from the premise to the negation of
/// `negated_conclusion` holds over the reals.
bool check_implication(const ConstraintSet& premise,
                       const DisjunctiveConstraintSet& negated_conclusion);

/// Convenience form taking the conclusion itself.
bool implies(const ConstraintSet& premise, const ConstraintSet& conclusion);

}  // namespace plqo
