#include "plqo_cli/cli.hpp"

#include "plqo/decide.hpp"
#include "plqo/errors.hpp"
#include "plqo/structure_io.hpp"
#include "plqo/syntax.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace plqo::cli {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kUnsupported = 3;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded:
    case ErrorCode::UnsupportedNonlinear:
    case ErrorCode::IncompatibleFamily: return kUnsupported;
    default: return kUsage;
  }
}

// Inline text, or the contents of a file when written as @path.
std::string resolve(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw Error(ErrorCode::Io, "cannot open " + arg.substr(1));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Common {
  bool json = false;
  bool restricted = false;
  bool parallel = false;
  bool verbose = false;
  unsigned budget = 0;
  bool float_mode = false;
  double tol = kDefaultTolerance;
};

DecideOptions decide_options(const Common& c) {
  DecideOptions o;
  if (c.restricted) o.adams.marginals = MarginalMode::Restricted;
  o.parallel = c.parallel;
  unsigned budget = c.budget;
  if (budget == 0)
    if (const char* env = std::getenv("PLQO_BUDGET_SYMBOLS")) {
      try {
        budget = static_cast<unsigned>(std::stoul(env));
      } catch (const std::exception&) {
        throw Error(ErrorCode::Parse, "PLQO_BUDGET_SYMBOLS must be a positive integer");
      }
      if (budget == 0) throw Error(ErrorCode::Parse, "PLQO_BUDGET_SYMBOLS must be positive");
    }
  if (budget) o.adams.max_symbols = budget;
  return o;
}

std::string nc_text(const GenericModelSpec& spec) {
  std::string out = "[";
  for (std::size_t i = 0; i < spec.nc.size(); ++i) {
    if (i) out += ", ";
    out += "(" + to_string(spec.nc[i].first) + "," + to_string(spec.nc[i].second) + ")";
  }
  return out + "]";
}

nlohmann::json model_json(const Countermodel& m) {
  nlohmann::json j = generic_to_json(m.spec);
  j["assignment"] = assignment_to_json(m.assignment);
  return j;
}

void describe_model(std::ostream& out, const Countermodel& m) {
  out << "symbols:";
  for (const auto& s : m.spec.symbols) out << " " << to_string(s);
  out << "\nnc: " << nc_text(m.spec) << "\nmasses:";
  for (const auto& q : m.spec.masses) out << " " << to_string(q);
  out << "\ndim: " << m.structure.dim() << "\n";
  if (!m.assignment.numeric.empty()) {
    out << "assignment:";
    for (const auto& [k, q] : m.assignment.numeric) out << " x" << k << "=" << to_string(q);
    out << "\n";
  }
}

void print_proof(std::ostream& out, const Proof& p, const Common& c) {
  if (c.json) {
    out << p.to_json().dump(2) << "\n";
    return;
  }
  out << p.to_text();
  if (!c.verbose) return;
  for (std::size_t i = 0; i < p.side_conditions().size(); ++i) {
    const SideCondition& sc = p.side_conditions()[i];
    out << "side condition " << i + 1 << " sentence: " << sc.sentence() << "\n"
        << sc.premise.to_string();
  }
}

int report_verdict(std::ostream& out, const Verdict& v, const Common& c, const std::string& path) {
  if (!v.valid) write_json_file(path, model_json(*v.countermodel));
  if (c.json) {
    nlohmann::json j{{"verdict", v.valid ? "VALID" : "INVALID"}};
    if (v.valid) j["proof"] = v.proof->to_json();
    else j["countermodel"] = path;
    out << j.dump(2) << "\n";
    return v.valid ? kOk : kNegative;
  }
  if (v.valid) {
    out << "VALID\n";
    print_proof(out, *v.proof, c);
    return kOk;
  }
  out << "INVALID\n";
  describe_model(out, *v.countermodel);
  out << "countermodel: " << path << "\n";
  return kNegative;
}

std::string symbol_set_text(const SymbolSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& x : s) {
    if (!first) out += ",";
    out += to_string(x);
    first = false;
  }
  return out + "}";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decision procedures for the probabilistic logic of quantum observations"};
  app.require_subcommand(1);
  Common c;
  app.add_flag("--json", c.json, "Print verdicts and proofs as JSON");
  app.add_flag("--restricted-marginals", c.restricted,
               "Generate marginal equations only for formula supports and symbol pairs");
  app.add_flag("--parallel", c.parallel, "Check normal-form disjuncts concurrently");
  app.add_flag("-v,--verbose", c.verbose, "Print side-condition sentences and constraint systems");
  app.add_option("--budget", c.budget, "Symbol budget (overrides PLQO_BUDGET_SYMBOLS)")
      ->check(CLI::PositiveNumber);

  std::string formula;
  std::string output;

  auto* check = app.add_subcommand("check", "Decide validity; prints a proof or a countermodel");
  check->add_option("formula", formula, "Formula or @file")->required();
  check->add_option("-o,--output", output, "Countermodel file")->default_str("countermodel.json");

  auto* sat = app.add_subcommand("sat", "Decide satisfiability; writes a model when one exists");
  sat->add_option("formula", formula, "Formula or @file")->required();
  sat->add_option("-o,--output", output, "Model file")->default_str("model.json");

  std::vector<std::string> premises;
  std::string conclusion;
  auto* entail = app.add_subcommand("entail", "Decide entailment from finitely many premises");
  entail->add_option("--premise", premises, "Premise formula or @file (repeatable)");
  entail->add_option("--conclusion", conclusion, "Conclusion formula or @file")->required();
  entail->add_option("-o,--output", output, "Countermodel file")->default_str("countermodel.json");

  std::string model_path;
  std::string assign_path;
  std::string prob_alpha;
  auto* evalc = app.add_subcommand("eval", "Evaluate a formula or probability in a structure");
  evalc->add_option("--model", model_path, "Structure file")->required();
  evalc->add_option("--assign", assign_path, "Assignment file");
  evalc->add_option("--formula", formula, "Formula or @file");
  evalc->add_option("--prob", prob_alpha, "Classical formula whose probability to print");
  evalc->add_flag("--float", c.float_mode, "Use floating-point tolerance mode");
  evalc->add_option("--tol", c.tol, "Tolerance in floating-point mode");

  std::vector<std::string> symbols;
  std::vector<std::string> nc;
  std::vector<std::string> masses;
  auto* genmodel = app.add_subcommand("genmodel", "Write a generic structure file");
  genmodel->add_option("--symbols", symbols, "Ordered symbols, e.g. B1 B2")->required();
  genmodel->add_option("--nc", nc, "Incompatible pair written B1,B2 (repeatable)");
  genmodel->add_option("--masses", masses, "One rational mass per valuation code")->required();
  genmodel->add_option("-o,--output", output, "Output file (default: standard output)");

  auto* translate = app.add_subcommand("translate", "Print the constraint translation");
  translate->add_option("formula", formula, "Formula or @file")->required();

  std::string alpha;
  auto* essential = app.add_subcommand("essential", "Print the essential symbols");
  essential->add_option("alpha", alpha, "Classical formula or @file")->required();
  auto* anfc = app.add_subcommand("anf", "Print the algebraic normal form");
  anfc->add_option("alpha", alpha, "Classical formula or @file")->required();

  std::string schema;
  std::vector<std::string> schema_args;
  auto* prove = app.add_subcommand("prove", "Emit a fixed-shape derivation");
  prove->add_option("--schema", schema,
                    "fig1: O(a1) <-> O(a2); fig2: O(a) |- P(a) >= 0; obs_taut: O(T)")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "obs_taut"}));
  prove->add_option("--arg", schema_args, "Classical formula argument (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error[USAGE]: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const DecideOptions opts = decide_options(c);
    if (output.empty()) {
      if (*check || *entail) output = "countermodel.json";
      else if (*sat) output = "model.json";
    }

    if (*check) {
      const PlqoFormula phi = parse_plqo(resolve(formula));
      return report_verdict(out, check_valid(phi, opts), c, output);
    }

    if (*sat) {
      const PlqoFormula phi = parse_plqo(resolve(formula));
      SatResult r = check_sat(phi, opts);
      if (r.satisfiable) write_json_file(output, model_json(*r.model));
      if (c.json) {
        nlohmann::json j{{"verdict", r.satisfiable ? "SAT" : "UNSAT"}};
        if (r.satisfiable) j["model"] = output;
        else j["refutation"] = r.refutation->to_json();
        out << j.dump(2) << "\n";
        return r.satisfiable ? kOk : kNegative;
      }
      if (!r.satisfiable) {
        out << "UNSAT\n";
        print_proof(out, *r.refutation, c);
        return kNegative;
      }
      out << "SAT\n";
      describe_model(out, *r.model);
      out << "model: " << output << "\n";
      return kOk;
    }

    if (*entail) {
      std::vector<PlqoFormula> gamma;
      for (const auto& p : premises) gamma.push_back(parse_plqo(resolve(p)));
      const PlqoFormula phi = parse_plqo(resolve(conclusion));
      return report_verdict(out, check_entail(gamma, phi, opts), c, output);
    }

    if (*evalc) {
      if (formula.empty() && prob_alpha.empty())
        throw Error(ErrorCode::Parse, "eval needs --formula or --prob");
      LoadedStructure s = load_structure_file(model_path, c.float_mode, c.tol);
      Assignment rho;
      if (!assign_path.empty()) rho = load_assignment_file(assign_path);
      else if (s.assignment) rho = *s.assignment;
      if (!prob_alpha.empty()) {
        const PropFormula a = parse_prop(resolve(prob_alpha));
        const std::string value = s.is_float() ? std::to_string(prob(*s.approx, a))
                                               : prob(*s.exact, a).to_string();
        out << "P(" << print_prop(a) << ") = " << value << "\n";
      }
      if (formula.empty()) return kOk;
      const PlqoFormula phi = parse_plqo(resolve(formula));
      const bool holds =
          s.is_float() ? satisfies(*s.approx, rho, phi) : satisfies(*s.exact, rho, phi);
      out << (holds ? "TRUE" : "FALSE") << "\n";
      return holds ? kOk : kNegative;
    }

    if (*genmodel) {
      GenericModelSpec spec;
      for (const auto& s : symbols) spec.symbols.push_back(parse_symbol(s));
      for (const auto& p : nc) {
        const auto comma = p.find(',');
        if (comma == std::string::npos)
          throw Error(ErrorCode::SpecInvalid, "incompatible pair must be written B1,B2");
        spec.nc.emplace_back(parse_symbol(p.substr(0, comma)), parse_symbol(p.substr(comma + 1)));
      }
      for (const auto& m : masses) spec.masses.push_back(parse_rational(m));
      const QuantumStructure I = build_generic(spec);
      const nlohmann::json j = generic_to_json(spec);
      if (output.empty()) {
        out << j.dump(2) << "\n";
      } else {
        write_json_file(output, j);
        out << "wrote " << output << " (dim " << I.dim() << ")\n";
      }
      return kOk;
    }

    if (*translate) {
      const PlqoFormula phi = parse_plqo(resolve(formula));
      const SymbolSet b = b_phi(phi);
      const auto delta = prob_formulas(phi);
      out << "# distribution over " << symbol_set_text(b) << "\n";
      out << q_adams(b, delta, opts.adams).to_string();
      const auto as = atoms(phi);
      for (std::size_t i = 0; i < as.size(); ++i) {
        out << "# atom " << i + 1 << ": " << print_plqo(as[i]) << "\n";
        out << translate_atom(as[i]).to_string();
      }
      out << "# formula\n" << translate_formula(phi).to_string() << "\n";
      return kOk;
    }

    if (*essential) {
      out << symbol_set_text(essential_symbols(parse_prop(resolve(alpha)))) << "\n";
      return kOk;
    }

    if (*anfc) {
      out << anf(parse_prop(resolve(alpha))).to_string() << "\n";
      return kOk;
    }

    if (*prove) {
      std::vector<PropFormula> args;
      for (const auto& a : schema_args) args.push_back(parse_prop(resolve(a)));
      const Schema s = schema == "fig1"   ? Schema::ObsEquivalence
                       : schema == "fig2" ? Schema::ObsProbNonnegative
                                          : Schema::ObsVerum;
      print_proof(out, derive_schema(s, args, opts), c);
      return kOk;
    }
  } catch (const Error& e) {
    err << "error[" << error_tag(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error[INTERNAL]: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace plqo::cli
