#pragma once

// Generic structures over an ordered symbol list B': one basis vector per
// valuation plus a two-dimensional block (ovl, udl) per declared incompatible
// pair, and the map from constraint witnesses to such structures.

#include "plqo/constraints.hpp"
#include "plqo/hilbert.hpp"
#include "plqo/translate.hpp"

#include <utility>
#include <vector>

namespace plqo {

struct GenericModelSpec {
  /// Bit s of a valuation code is the value of symbols[s].
  std::vector<PropSymbol> symbols;
  /// Unordered pairs; normalized to (smaller, larger), sorted and deduplicated.
  std::vector<std::pair<PropSymbol, PropSymbol>> nc;
  /// One non-negative mass per valuation code, summing to 1.
  std::vector<Rational> masses;

  /// Throws SpecInvalid on any violated invariant.
  void validate() const;
  /// Copy with nc normalized.
  GenericModelSpec normalized() const;
};

/// Dimension 2^|symbols| + 2|nc|. Valuation vector k carries amplitude
/// sqrt(masses[k]); block vectors carry 0.
QuantumStructure build_generic(const GenericModelSpec& spec);

/// Up-projector of `s` in the generic structure.
Matrix<ComplexScalar> generic_projector(const GenericModelSpec& spec, PropSymbol s);

/// The observable of `s`: +1 on valuation vectors where s holds, -1 where it
/// fails, and on each incompatibility block the reflection whose +1
/// eigenspace is the block part of the up-projector.
Matrix<ComplexScalar> build_observable(const GenericModelSpec& spec, PropSymbol s);

/// P_a P_b - P_b P_a.
Matrix<ComplexScalar> commutator_witness(const QuantumStructure& I, PropSymbol a, PropSymbol b);

struct ModelWithAssignment {
  GenericModelSpec spec;
  QuantumStructure structure;
  Assignment assignment;
};

/// Builds the structure over the ascending symbols of phi from the mass and
/// pair variables of `w`, and the assignment from its numeric variables.
/// Throws WitnessIncomplete when `w` lacks a mass variable or violates the
/// distribution system; asserts that the structure satisfies phi exactly when
/// the witness satisfies the translation of phi.
ModelWithAssignment model_from_witness(const PlqoFormula& phi, const Witness& w,
                                       const AdamsOptions& options = {});

}  // namespace plqo
