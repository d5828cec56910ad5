#pragma once

// Proof objects: numbered lines justified by HYP, RCOF (a verified
// real-field side condition), RR, TT or MP.

#include "plqo/constraints.hpp"
#include "plqo/plqo.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace plqo {

enum class Rule : std::uint8_t { Hyp, Rcof, Rr, Tt, Mp };

const char* rule_name(Rule r) noexcept;

/// The real-field sentence behind an RR step: the distribution system over
/// B and Delta of `rr_formula`, conjoined with the translated antecedent
/// literals, implies the translated conclusion literal.
struct SideCondition {
  PlqoFormula rr_formula;
  SymbolSet symbols;
  std::vector<PropFormula> delta;
  ConstraintSet premise;
  /// Number of case-split branches found infeasible.
  std::size_t branches = 0;

  std::string sentence() const;
};

struct ProofLine {
  Rule rule = Rule::Tt;
  /// Absent on RCOF lines, which stand for side_conditions[*side_condition].
  std::optional<PlqoFormula> formula;
  std::optional<std::size_t> side_condition;
  /// 1-based line numbers.
  std::vector<std::size_t> refs;
};

class Proof {
 public:
  const std::vector<ProofLine>& lines() const noexcept { return lines_; }
  const std::vector<SideCondition>& side_conditions() const noexcept { return side_conditions_; }
  std::size_t size() const noexcept { return lines_.size(); }

  /// Each returns the 1-based number of the (last) added line.
  std::size_t add_hyp(PlqoFormula phi);
  /// Adds the RCOF line for `sc` followed by the RR line citing it.
  std::size_t add_rr(SideCondition sc);
  std::size_t add_tt(PlqoFormula phi);
  /// From line i (A) and line j (A -> B) derives B; throws Internal on a shape
  /// mismatch.
  std::size_t add_mp(std::size_t i, std::size_t j);
  /// Appends all lines of `other`, renumbering its references.
  std::size_t append(const Proof& other);

  /// Formula of the last line; throws Internal for an empty proof.
  const PlqoFormula& conclusion() const;

  /// `n  formula  JUSTIFICATION` per line, then the side conditions.
  std::string to_text() const;
  nlohmann::json to_json() const;

 private:
  std::vector<ProofLine> lines_;
  std::vector<SideCondition> side_conditions_;
};

}  // namespace plqo
