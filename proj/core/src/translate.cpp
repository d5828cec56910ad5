#include "plqo/translate.hpp"

#include "plqo/errors.hpp"

#include <algorithm>
#include <set>

namespace plqo {

namespace {

std::vector<PropSymbol> ordered(const SymbolSet& s) { return {s.begin(), s.end()}; }

// Subset of `syms` selected by the bits of `mask`; bit i is syms[i].
SymbolSet subset_of(const std::vector<PropSymbol>& syms, std::uint64_t mask) {
  SymbolSet out;
  for (std::size_t i = 0; i < syms.size(); ++i)
    if ((mask >> i) & 1U) out.insert(syms[i]);
  return out;
}

ConstraintSet single(LinConstraint c) {
  ConstraintSet s;
  s.add(std::move(c));
  return s;
}

// Disjuncts x_{A'} > 0 for the 2-subsets of eB_alpha.
std::vector<ConstraintSet> unobservable_cases(const PropFormula& alpha) {
  std::vector<ConstraintSet> out;
  const auto eb = ordered(essential_symbols(alpha));
  for (std::size_t i = 0; i < eb.size(); ++i)
    for (std::size_t j = i + 1; j < eb.size(); ++j)
      out.push_back(single(LinConstraint::compare(LinExpr::of(RcofVar::pair(eb[i], eb[j])),
                                                  CmpOp::Gt, LinExpr{})));
  return out;
}

}  // namespace

ConstraintSet q_obs(const SymbolSet& a) {
  ConstraintSet out;
  const auto syms = ordered(a);
  for (std::size_t i = 0; i < syms.size(); ++i)
    for (std::size_t j = i + 1; j < syms.size(); ++j)
      out.add(LinConstraint::compare(LinExpr::of(RcofVar::pair(syms[i], syms[j])), CmpOp::Eq,
                                     LinExpr{}));
  return out;
}

RcofVar mass_var(const SymbolSet& a, const SymbolSet& u) {
  return RcofVar::prob_of(phi_A_U(a, u));
}

ConstraintSet q_adams(const SymbolSet& a, const std::vector<PropFormula>& delta,
                      const AdamsOptions& options) {
  if (a.size() > options.max_symbols)
    throw Error(ErrorCode::BudgetExceeded, "constraint system over " + std::to_string(a.size()) +
                                               " symbols exceeds the budget of " +
                                               std::to_string(options.max_symbols));
  for (const auto& d : delta)
    for (const auto& s : d.symbols())
      if (!a.count(s))
        throw Error(ErrorCode::MissingSymbol,
                    to_string(s) + " occurs in a probability formula but not in the symbol set");

  const auto syms = ordered(a);
  const std::uint64_t full = std::uint64_t{1} << syms.size();
  std::vector<RcofVar> masses;
  masses.reserve(full);
  for (std::uint64_t m = 0; m < full; ++m) masses.push_back(mass_var(a, subset_of(syms, m)));

  ConstraintSet out;
  const LinExpr zero;
  const LinExpr one = LinExpr::constant_of(1);
  for (const auto& x : masses) {
    out.add(LinConstraint::compare(LinExpr::of(x), CmpOp::Ge, zero));
    out.add(LinConstraint::compare(LinExpr::of(x), CmpOp::Le, one));
  }
  LinExpr total;
  for (const auto& x : masses) total += LinExpr::of(x);
  out.add(LinConstraint::compare(total, CmpOp::Eq, one));

  // Marginal equations, one per (A', U') with U' subset of A'.
  std::vector<std::uint64_t> marginal_sets;
  if (options.marginals == MarginalMode::Full) {
    for (std::uint64_t m = 0; m < full; ++m) marginal_sets.push_back(m);
  } else {
    std::set<std::uint64_t> chosen;
    for (const auto& d : delta) {
      std::uint64_t m = 0;
      for (const auto& s : d.symbols())
        m |= std::uint64_t{1}
             << static_cast<std::size_t>(std::find(syms.begin(), syms.end(), s) - syms.begin());
      chosen.insert(m);
    }
    for (std::size_t i = 0; i < syms.size(); ++i)
      for (std::size_t j = i + 1; j < syms.size(); ++j)
        chosen.insert((std::uint64_t{1} << i) | (std::uint64_t{1} << j));
    marginal_sets.assign(chosen.begin(), chosen.end());
  }
  for (std::uint64_t sub : marginal_sets) {
    const SymbolSet a_sub = subset_of(syms, sub);
    // Enumerate U' subset of A' as submasks of `sub`, ascending.
    std::vector<std::uint64_t> submasks;
    for (std::uint64_t s = sub;; s = (s - 1) & sub) {
      submasks.push_back(s);
      if (s == 0) break;
    }
    std::reverse(submasks.begin(), submasks.end());
    for (std::uint64_t usub : submasks) {
      LinExpr sum;
      for (std::uint64_t m = 0; m < full; ++m)
        if ((m & sub) == usub) sum += LinExpr::of(masses[m]);
      out.add(LinConstraint::compare(LinExpr::of(mass_var(a_sub, subset_of(syms, usub))),
                                     CmpOp::Eq, sum));
    }
  }

  for (std::size_t i = 0; i < syms.size(); ++i)
    for (std::size_t j = i + 1; j < syms.size(); ++j)
      out.add(
          LinConstraint::compare(LinExpr::of(RcofVar::pair(syms[i], syms[j])), CmpOp::Ge, zero));

  std::set<RcofVar> seen;
  for (const auto& d : delta) {
    const RcofVar xd = RcofVar::prob_of(d);
    if (!seen.insert(xd).second) continue;
    const SymbolSet bd = d.symbols();
    const auto bsyms = ordered(bd);
    const auto table = truth_table(d, bsyms, options.max_symbols);
    LinExpr sum;
    for (std::uint64_t row = 0; row < table.size(); ++row)
      if (table[row]) sum += LinExpr::of(mass_var(bd, subset_of(bsyms, row)));
    out.add(LinConstraint::compare(LinExpr::of(xd), CmpOp::Eq, sum));
  }
  return out;
}

LinExpr term_expr(const RcofTerm& p) {
  const LinearTerm t = linearize(p);
  LinExpr e = LinExpr::constant_of(t.constant);
  for (const auto& [k, c] : t.coeffs) e += LinExpr::of(RcofVar::numeric(k), c);
  return e;
}

ConstraintSet translate_atom(const PlqoFormula& atom) {
  if (!atom.is_atom()) throw Error(ErrorCode::Internal, "translate_atom expects an atom");
  ConstraintSet out = q_obs(essential_symbols(atom.alpha()));
  if (atom.kind() == PlqoFormula::Kind::Prob)
    out.add(LinConstraint::compare(LinExpr::of(RcofVar::prob_of(atom.alpha())),
                                   atom.cmp() == Cmp::Eq ? CmpOp::Eq : CmpOp::Lt,
                                   term_expr(atom.term())));
  return out;
}

DisjunctiveConstraintSet translate_literal(const PlqoLiteral& lit) {
  DisjunctiveConstraintSet out;
  if (lit.positive) {
    out.disjuncts.push_back(translate_atom(lit.atom));
    return out;
  }
  const PlqoFormula& atom = lit.atom;
  out.disjuncts = unobservable_cases(atom.alpha());
  if (atom.kind() == PlqoFormula::Kind::Obs) return out;
  const LinExpr x = LinExpr::of(RcofVar::prob_of(atom.alpha()));
  const LinExpr p = term_expr(atom.term());
  if (atom.cmp() == Cmp::Eq) {
    out.disjuncts.push_back(single(LinConstraint::compare(x, CmpOp::Lt, p)));
    out.disjuncts.push_back(single(LinConstraint::compare(x, CmpOp::Gt, p)));
  } else {
    out.disjuncts.push_back(single(LinConstraint::compare(x, CmpOp::Ge, p)));
  }
  return out;
}

RcofFormula RcofFormula::conj(ConstraintSet cs) {
  return RcofFormula(std::make_shared<const Node>(Node{Kind::Conj, std::move(cs), {}}));
}

RcofFormula RcofFormula::neg(RcofFormula a) {
  return RcofFormula(std::make_shared<const Node>(Node{Kind::Neg, {}, {std::move(a)}}));
}

RcofFormula RcofFormula::impl(RcofFormula a, RcofFormula b) {
  return RcofFormula(
      std::make_shared<const Node>(Node{Kind::Impl, {}, {std::move(a), std::move(b)}}));
}

bool RcofFormula::holds(const Witness& w) const {
  switch (kind()) {
    case Kind::Conj: return constraints().holds(w);
    case Kind::Neg: return !child().holds(w);
    case Kind::Impl: return !left().holds(w) || right().holds(w);
  }
  return false;
}

std::string RcofFormula::to_string() const {
  switch (kind()) {
    case Kind::Conj: {
      std::string out = "{";
      for (std::size_t i = 0; i < constraints().size(); ++i) {
        if (i) out += "; ";
        out += constraints().constraints[i].to_string();
      }
      return out + "}";
    }
    case Kind::Neg: return "!" + child().to_string();
    case Kind::Impl: return "(" + left().to_string() + " -> " + right().to_string() + ")";
  }
  return "";
}

RcofFormula translate_formula(const PlqoFormula& phi) {
  switch (phi.kind()) {
    case PlqoFormula::Kind::Obs:
    case PlqoFormula::Kind::Prob: return RcofFormula::conj(translate_atom(phi));
    case PlqoFormula::Kind::Neg: return RcofFormula::neg(translate_formula(phi.child()));
    case PlqoFormula::Kind::Impl:
      return RcofFormula::impl(translate_formula(phi.left()), translate_formula(phi.right()));
  }
  throw Error(ErrorCode::Internal, "unreachable formula kind");
}

}  // namespace plqo
