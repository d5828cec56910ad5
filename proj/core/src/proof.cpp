#include "plqo/proof.hpp"

#include "plqo/errors.hpp"
#include "plqo/syntax.hpp"

#include <algorithm>

namespace plqo {

const char* rule_name(Rule r) noexcept {
  switch (r) {
    case Rule::Hyp: return "HYP";
    case Rule::Rcof: return "RCOF";
    case Rule::Rr: return "RR";
    case Rule::Tt: return "TT";
    case Rule::Mp: return "MP";
  }
  return "?";
}

namespace {

std::string symbol_list(const SymbolSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& x : s) {
    if (!first) out += ",";
    out += to_string(x);
    first = false;
  }
  return out + "}";
}

std::string delta_list(const std::vector<PropFormula>& d) {
  std::string out = "{";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ", ";
    out += print_prop(d[i]);
  }
  return out + "}";
}

// Antecedent literals and conclusion of an RR formula, read structurally.
void split_rr(const PlqoFormula& phi, std::vector<PlqoFormula>& antecedents,
              std::optional<PlqoFormula>& conclusion) {
  using K = PlqoFormula::Kind;
  auto is_literal = [](const PlqoFormula& f) {
    return f.is_atom() || (f.kind() == K::Neg && f.child().is_atom());
  };
  if (is_literal(phi)) {
    conclusion = phi;
    return;
  }
  if (phi.kind() != K::Impl) return;
  std::vector<PlqoFormula> stack;
  PlqoFormula c = phi.left();
  while (!is_literal(c)) {
    if (c.kind() != K::Neg || c.child().kind() != K::Impl ||
        c.child().right().kind() != K::Neg)
      return;
    stack.push_back(c.child().right().child());
    c = c.child().left();
  }
  antecedents.push_back(c);
  antecedents.insert(antecedents.end(), stack.rbegin(), stack.rend());
  conclusion = phi.right();
}

}  // namespace

std::string SideCondition::sentence() const {
  std::vector<PlqoFormula> ante;
  std::optional<PlqoFormula> concl;
  split_rr(rr_formula, ante, concl);
  std::string premise_text = "Q[" + symbol_list(symbols) + ";" + delta_list(delta) + "]";
  if (!ante.empty()) {
    premise_text = "(" + premise_text;
    for (const auto& a : ante) premise_text += " & tr(" + print_plqo(a) + ")";
    premise_text += ")";
  }
  const std::string concl_text = concl ? "tr(" + print_plqo(*concl) + ")" : "?";
  return "forall(" + premise_text + " -> " + concl_text + ")";
}

std::size_t Proof::add_hyp(PlqoFormula phi) {
  lines_.push_back({Rule::Hyp, std::move(phi), std::nullopt, {}});
  return lines_.size();
}

std::size_t Proof::add_rr(SideCondition sc) {
  PlqoFormula f = sc.rr_formula;
  side_conditions_.push_back(std::move(sc));
  lines_.push_back({Rule::Rcof, std::nullopt, side_conditions_.size() - 1, {}});
  const std::size_t rcof = lines_.size();
  lines_.push_back({Rule::Rr, std::move(f), std::nullopt, {rcof}});
  return lines_.size();
}

std::size_t Proof::add_tt(PlqoFormula phi) {
  lines_.push_back({Rule::Tt, std::move(phi), std::nullopt, {}});
  return lines_.size();
}

std::size_t Proof::add_mp(std::size_t i, std::size_t j) {
  if (i == 0 || j == 0 || i > lines_.size() || j > lines_.size())
    throw Error(ErrorCode::Internal, "MP cites a missing line");
  const auto& a = lines_[i - 1].formula;
  const auto& ab = lines_[j - 1].formula;
  if (!a || !ab || ab->kind() != PlqoFormula::Kind::Impl || !(ab->left() == *a))
    throw Error(ErrorCode::Internal, "MP premises do not match");
  lines_.push_back({Rule::Mp, ab->right(), std::nullopt, {i, j}});
  return lines_.size();
}

std::size_t Proof::append(const Proof& other) {
  const std::size_t line_offset = lines_.size();
  const std::size_t sc_offset = side_conditions_.size();
  side_conditions_.insert(side_conditions_.end(), other.side_conditions_.begin(),
                          other.side_conditions_.end());
  for (ProofLine l : other.lines_) {
    for (auto& r : l.refs) r += line_offset;
    if (l.side_condition) *l.side_condition += sc_offset;
    lines_.push_back(std::move(l));
  }
  return lines_.size();
}

const PlqoFormula& Proof::conclusion() const {
  if (lines_.empty() || !lines_.back().formula)
    throw Error(ErrorCode::Internal, "proof has no concluding formula");
  return *lines_.back().formula;
}

namespace {

std::string justification(const ProofLine& l) {
  std::string out = rule_name(l.rule);
  for (std::size_t k = 0; k < l.refs.size(); ++k)
    out += (k ? "," : " ") + std::to_string(l.refs[k]);
  return out;
}

std::string line_text(const Proof& p, const ProofLine& l) {
  if (l.formula) return print_plqo(*l.formula);
  return p.side_conditions()[*l.side_condition].sentence();
}

}  // namespace

std::string Proof::to_text() const {
  const std::size_t width = std::to_string(lines_.size()).size();
  std::string out;
  for (std::size_t n = 0; n < lines_.size(); ++n) {
    std::string num = std::to_string(n + 1);
    out += std::string(width - num.size(), ' ') + num + "  " + line_text(*this, lines_[n]) + "  " +
           justification(lines_[n]) + "\n";
  }
  for (std::size_t k = 0; k < side_conditions_.size(); ++k) {
    const auto& sc = side_conditions_[k];
    out += "side condition " + std::to_string(k + 1) + ": " + std::to_string(sc.premise.size()) +
           " premise constraints, " + std::to_string(sc.branches) +
           " branch(es), all infeasible\n";
  }
  return out;
}

nlohmann::json Proof::to_json() const {
  using nlohmann::json;
  json lines = json::array();
  for (std::size_t n = 0; n < lines_.size(); ++n) {
    const auto& l = lines_[n];
    json j;
    j["n"] = n + 1;
    j["rule"] = rule_name(l.rule);
    j["refs"] = l.refs;
    j["formula"] = line_text(*this, l);
    if (l.side_condition) j["side_condition"] = *l.side_condition + 1;
    lines.push_back(j);
  }
  json scs = json::array();
  for (std::size_t k = 0; k < side_conditions_.size(); ++k) {
    const auto& sc = side_conditions_[k];
    json premise = json::array();
    for (const auto& c : sc.premise.constraints) premise.push_back(c.to_string());
    scs.push_back({{"id", k + 1},
                   {"rr_formula", print_plqo(sc.rr_formula)},
                   {"sentence", sc.sentence()},
                   {"premise", premise},
                   {"branches", sc.branches},
                   {"result", "infeasible"}});
  }
  return {{"lines", lines}, {"side_conditions", scs}};
}

}  // namespace plqo
