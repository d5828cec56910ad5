#pragma once

// JSON form of structures, generic shorthands and assignments.
//
//   {"dim": n, "state": [[re, im], ...], "pqvs": {"B1": [[[re, im], ...], ...]}}
//   {"generic": {"symbols": [...], "nc": [[..., ...]], "masses": [...]},
//    "assignment": {"x1": "1/2"}}
//
// Scalars are rational strings, radical strings such as "1/2*sqrt(2)", JSON
// integers, or JSON floats. Any float switches the file to tolerance mode.

#include "plqo/genmodel.hpp"
#include "plqo/hilbert.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace plqo {

/// Parses `B<k>`; throws Parse otherwise.
PropSymbol parse_symbol(const std::string& text);

struct LoadedStructure {
  std::optional<GenericModelSpec> generic;
  /// Set in exact mode.
  std::optional<QuantumStructure> exact;
  /// Set in tolerance mode.
  std::optional<FloatStructure> approx;
  /// Present when the file carries an "assignment" object.
  std::optional<Assignment> assignment;

  bool is_float() const noexcept { return approx.has_value(); }
};

/// Throws InvalidStructure, DimMismatch, SpecInvalid or Parse on bad input.
LoadedStructure structure_from_json(const nlohmann::json& j, bool force_float = false,
                                    double tol = kDefaultTolerance);
LoadedStructure load_structure_file(const std::string& path, bool force_float = false,
                                    double tol = kDefaultTolerance);

FloatStructure to_float(const QuantumStructure& I, double tol = kDefaultTolerance);

nlohmann::json structure_to_json(const QuantumStructure& I);
nlohmann::json generic_to_json(const GenericModelSpec& spec);
nlohmann::json assignment_to_json(const Assignment& rho);
Assignment assignment_from_json(const nlohmann::json& j);
Assignment load_assignment_file(const std::string& path);

/// Throws Io when the file cannot be read or parsed as JSON.
nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace plqo
