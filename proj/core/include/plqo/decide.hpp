#pragma once

// Validity, satisfiability and finite entailment for PLQO formulas with
// linear terms. Valid verdicts carry proofs; invalid ones carry generic
// countermodels that have been re-checked against the exact semantics.

#include "plqo/genmodel.hpp"
#include "plqo/proof.hpp"
#include "plqo/translate.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace plqo {

struct DecideOptions {
  AdamsOptions adams;
  DnfBudget dnf;
  /// Check the disjuncts of the negated formula concurrently. The reported
  /// countermodel is the same as in sequential mode.
  bool parallel = false;
  /// Try a single RR step before the general case split.
  bool direct_rr = true;
};

struct Countermodel {
  GenericModelSpec spec;
  QuantumStructure structure;
  Assignment assignment;
  Witness witness;
};

struct Verdict {
  bool valid = false;
  std::optional<Proof> proof;
  std::optional<Countermodel> countermodel;
};

/// Splits (b1 & ... & bk) -> b, or a bare literal b (k = 0), into its literals.
std::optional<std::pair<Conjunction, PlqoLiteral>> rr_shape(const PlqoFormula& phi);

/// The RR side condition for `phi` when it holds; nullopt when phi is not of
/// RR shape or some branch is feasible.
std::optional<SideCondition> rr_side_condition(const PlqoFormula& phi,
                                               const DecideOptions& options = {});

Verdict check_valid(const PlqoFormula& phi, const DecideOptions& options = {});

/// Decides gamma |= phi through (g1 & ... & gn) -> phi. Valid proofs start with
/// one HYP line per premise and end with phi.
Verdict check_entail(const std::vector<PlqoFormula>& gamma, const PlqoFormula& phi,
                     const DecideOptions& options = {});

struct SatResult {
  bool satisfiable = false;
  /// A verified model of phi when satisfiable.
  std::optional<Countermodel> model;
  /// A proof of !phi when unsatisfiable.
  std::optional<Proof> refutation;
};

SatResult check_sat(const PlqoFormula& phi, const DecideOptions& options = {});

enum class Schema : std::uint8_t {
  /// |- O(a1) <-> O(a2) for classically equivalent a1, a2.
  ObsEquivalence,
  /// O(a) |- P(a) >= 0.
  ObsProbNonnegative,
  /// |- O(T).
  ObsVerum,
};

/// Fixed-shape derivations. Arguments: ObsEquivalence takes a1, a2 (default
/// B1 & B2, B2 & B1); ObsProbNonnegative takes a (default B1 & B2); ObsVerum
/// takes none. Throws SchemaPreconditionFailed when a1 <-> a2 is not a
/// tautology or a side condition fails.
Proof derive_schema(Schema schema, const std::vector<PropFormula>& args = {},
                    const DecideOptions& options = {});

/// Validity of O(alpha) -> P(alpha) = 1.
bool conservativeness_check(const PropFormula& alpha, const DecideOptions& options = {});

struct ProofCheck {
  bool ok = true;
  std::vector<std::string> errors;
};

/// Re-checks every line independently: HYP membership, RCOF by re-solving the
/// side condition, RR against its cited RCOF line, TT by truth tables over
/// atoms, MP by shape.
ProofCheck check_proof(const Proof& proof, const std::vector<PlqoFormula>& hypotheses = {},
                       const DecideOptions& options = {});

}  // namespace plqo
