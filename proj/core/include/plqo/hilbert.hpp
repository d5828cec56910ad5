#pragma once

// Finite-dimensional quantum structures: a unit state and one projector per
// propositional symbol. Compatibility is commutation of projectors; Prob is
// the sum of projector-product expectations over satisfying valuations.
//
// Everything is templated on the scalar type: ComplexScalar (exact, the
// default) or std::complex<double> (tolerance mode).

#include "plqo/matrix.hpp"
#include "plqo/plqo.hpp"
#include "plqo/prop.hpp"

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace plqo {

inline constexpr double kDefaultTolerance = 1e-9;

/// A propositional quantum variable, carried by its up-projector.
template <class S>
class BasicPqv {
 public:
  using Traits = ScalarTraits<S>;

  /// Throws InvalidStructure unless `up` is square, Hermitian and idempotent.
  explicit BasicPqv(Matrix<S> up, double tol = kDefaultTolerance) : up_(std::move(up)) {
    if (up_.rows() != up_.cols() || up_.rows() == 0)
      throw Error(ErrorCode::InvalidStructure, "projector must be a non-empty square matrix");
    if (!up_.approx_equal(up_.adjoint(), tol))
      throw Error(ErrorCode::InvalidStructure, "projector is not Hermitian");
    if (!(up_ * up_).approx_equal(up_, tol))
      throw Error(ErrorCode::InvalidStructure, "projector is not idempotent");
    down_ = Matrix<S>::identity(up_.rows()) - up_;
  }

  std::size_t dim() const noexcept { return up_.rows(); }
  const Matrix<S>& up_projector() const noexcept { return up_; }
  /// Identity minus the up-projector.
  const Matrix<S>& down_projector() const noexcept { return down_; }

 private:
  Matrix<S> up_;
  Matrix<S> down_;
};

template <class S>
class BasicStructure {
 public:
  using Traits = ScalarTraits<S>;
  using Real = typename Traits::Real;

  /// Throws DimMismatch when a projector size differs from the state length and
  /// InvalidStructure when the state is not a unit vector.
  BasicStructure(std::vector<S> state, std::map<PropSymbol, BasicPqv<S>> pqvs,
                 double tol = kDefaultTolerance)
      : state_(std::move(state)), pqvs_(std::move(pqvs)), tol_(tol) {
    if (state_.empty()) throw Error(ErrorCode::InvalidStructure, "state vector is empty");
    for (const auto& [s, p] : pqvs_)
      if (p.dim() != state_.size())
        throw Error(ErrorCode::DimMismatch, to_string(s) + " has a projector of dimension " +
                                                std::to_string(p.dim()) + ", state has " +
                                                std::to_string(state_.size()));
    const S norm = inner(state_, state_);
    if (!Traits::is_zero(norm - Traits::from_rational(1), tol_))
      throw Error(ErrorCode::InvalidStructure, "state vector is not a unit vector");
  }

  std::size_t dim() const noexcept { return state_.size(); }
  const std::vector<S>& state() const noexcept { return state_; }
  const std::map<PropSymbol, BasicPqv<S>>& pqvs() const noexcept { return pqvs_; }
  double tolerance() const noexcept { return tol_; }
  bool has(PropSymbol s) const { return pqvs_.count(s) != 0; }

  /// Throws MissingSymbol for unmapped symbols.
  const BasicPqv<S>& pqv(PropSymbol s) const {
    auto it = pqvs_.find(s);
    if (it == pqvs_.end())
      throw Error(ErrorCode::MissingSymbol, to_string(s) + " has no quantum variable");
    return it->second;
  }

 private:
  std::vector<S> state_;
  std::map<PropSymbol, BasicPqv<S>> pqvs_;
  double tol_;
};

using Pqv = BasicPqv<ComplexScalar>;
using QuantumStructure = BasicStructure<ComplexScalar>;
using FloatPqv = BasicPqv<std::complex<double>>;
using FloatStructure = BasicStructure<std::complex<double>>;

/// Which symbols of alpha Prob ranges over.
enum class FamilyMode : std::uint8_t {
  /// Essential symbols only; Prob depends on the truth table alone.
  Essential,
  /// All of B_alpha; incompatibility among them is an error.
  Strict,
};

template <class S>
Matrix<S> commutator(const BasicPqv<S>& a, const BasicPqv<S>& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimMismatch, "projectors differ in dimension");
  return a.up_projector() * b.up_projector() - b.up_projector() * a.up_projector();
}

template <class S>
bool compatible(const BasicPqv<S>& a, const BasicPqv<S>& b, double tol = kDefaultTolerance) {
  return commutator(a, b).is_zero(tol);
}

/// Pairwise compatibility of the quantum variables of `family`.
template <class S>
bool compatible_family(const BasicStructure<S>& I, const SymbolSet& family) {
  std::vector<const BasicPqv<S>*> ps;
  for (const auto& s : family) ps.push_back(&I.pqv(s));
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      if (!compatible(*ps[i], *ps[j], I.tolerance())) return false;
  return true;
}

template <class S>
bool is_observable(const BasicStructure<S>& I, const PropFormula& alpha) {
  return compatible_family(I, essential_symbols(alpha));
}

/// <psi| Q_k ... Q_1 |psi> where Q_i is the up- or down-projector of order[i]
/// according to values[i]; order[0] is applied first.
template <class S>
S joint_probability(const BasicStructure<S>& I, const std::vector<PropSymbol>& order,
                    const std::vector<bool>& values) {
  if (order.size() != values.size())
    throw Error(ErrorCode::Internal, "joint probability needs one value per symbol");
  std::vector<S> v = I.state();
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& p = I.pqv(order[i]);
    v = (values[i] ? p.up_projector() : p.down_projector()).apply(v);
  }
  return inner(I.state(), v);
}

/// Prob_I(alpha), projectors applied in ascending symbol order. Throws
/// IncompatibleFamily when the family selected by `mode` is not compatible.
template <class S>
typename ScalarTraits<S>::Real prob(const BasicStructure<S>& I, const PropFormula& alpha,
                                    FamilyMode mode = FamilyMode::Essential) {
  using Traits = ScalarTraits<S>;
  const SymbolSet all = alpha.symbols();
  const SymbolSet family = mode == FamilyMode::Essential ? essential_symbols(alpha) : all;
  if (!compatible_family(I, family))
    throw Error(ErrorCode::IncompatibleFamily,
                "probability requested for a formula whose quantum variables are incompatible");
  const std::vector<PropSymbol> order(family.begin(), family.end());
  if (order.size() > kDefaultSymbolBudget)
    throw Error(ErrorCode::BudgetExceeded, "too many symbols for probability evaluation");
  // Symbols outside the family cannot change alpha's value; fix them to 0.
  Valuation v;
  for (const auto& s : all) v.set(s, false);
  std::vector<bool> values(order.size());
  S total{};
  const std::uint64_t rows = std::uint64_t{1} << order.size();
  for (std::uint64_t r = 0; r < rows; ++r) {
    for (std::size_t i = 0; i < order.size(); ++i) {
      values[i] = (r >> i) & 1U;
      v.set(order[i], values[i]);
    }
    if (eval(alpha, v)) total += joint_probability(I, order, values);
  }
  if (!Traits::is_real(total, I.tolerance()))
    throw Error(ErrorCode::Internal, "probability of a compatible family is not real");
  return Traits::real(total);
}

template <class S>
bool satisfies(const BasicStructure<S>& I, const Assignment& rho, const PlqoFormula& phi,
               FamilyMode mode = FamilyMode::Essential) {
  using Traits = ScalarTraits<S>;
  switch (phi.kind()) {
    case PlqoFormula::Kind::Obs: return is_observable(I, phi.alpha());
    case PlqoFormula::Kind::Prob: {
      if (!is_observable(I, phi.alpha())) return false;
      const auto p = prob(I, phi.alpha(), mode);
      const int c = Traits::compare(p, eval_term(phi.term(), rho), I.tolerance());
      return phi.cmp() == Cmp::Eq ? c == 0 : c < 0;
    }
    case PlqoFormula::Kind::Neg: return !satisfies(I, rho, phi.child(), mode);
    case PlqoFormula::Kind::Impl:
      return !satisfies(I, rho, phi.left(), mode) || satisfies(I, rho, phi.right(), mode);
  }
  return false;
}

struct AdamsViolation {
  std::string principle;
  std::string detail;
};

struct AdamsReport {
  std::size_t checks = 0;
  std::vector<AdamsViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Range, tautology, monotonicity and finite additivity of Prob_I on every
/// sample pair (alpha, beta). Requires all quantum variables pairwise
/// compatible; throws IncompatibleFamily otherwise.
template <class S>
AdamsReport adams_check(const BasicStructure<S>& I,
                        const std::vector<std::pair<PropFormula, PropFormula>>& samples) {
  using Traits = ScalarTraits<S>;
  SymbolSet everything;
  for (const auto& [s, p] : I.pqvs()) everything.insert(s);
  if (!compatible_family(I, everything))
    throw Error(ErrorCode::IncompatibleFamily, "structure has incompatible quantum variables");

  const double tol = I.tolerance();
  AdamsReport report;
  auto fail = [&](const char* principle, std::string detail) {
    report.violations.push_back({principle, std::move(detail)});
  };
  auto range = [&](const PropFormula& f) {
    const auto p = prob(I, f);
    ++report.checks;
    if (Traits::compare(p, Rational(0), tol) < 0 || Traits::compare(p, Rational(1), tol) > 0)
      fail("P1", "probability outside [0, 1]: " + Traits::to_string(p));
    return p;
  };
  for (const auto& [alpha, beta] : samples) {
    const auto pa = range(alpha);
    const auto pb = range(beta);
    for (const auto* f : {&alpha, &beta}) {
      if (!is_tautology(*f)) continue;
      ++report.checks;
      if (Traits::compare(prob(I, *f), Rational(1), tol) != 0)
        fail("P2", "tautology with probability below 1");
    }
    if (is_tautology(PropFormula::impl(alpha, beta))) {
      ++report.checks;
      if (Traits::compare(pa, pb, tol) > 0) fail("P3", "consequence has smaller probability");
    }
    if (is_tautology(PropFormula::neg(PropFormula::conj(beta, alpha)))) {
      ++report.checks;
      const auto pd = prob(I, PropFormula::disj(beta, alpha));
      if (Traits::compare(pd, pa + pb, tol) != 0)
        fail("P4", "exclusive disjunction is not additive");
    }
  }
  return report;
}

}  // namespace plqo
