#include "plqo/plqo.hpp"

#include "plqo/errors.hpp"

#include <algorithm>

namespace plqo {

// ---- terms ---------------------------------------------------------------

RcofTerm RcofTerm::zero() {
  return RcofTerm(std::make_shared<const Node>(Node{Kind::Zero, 0, 1, {}}));
}

RcofTerm RcofTerm::one() {
  return RcofTerm(std::make_shared<const Node>(Node{Kind::One, 0, 1, {}}));
}

RcofTerm RcofTerm::numeral(std::uint64_t n) {
  if (n == 0) return zero();
  if (n == 1) return one();
  return RcofTerm(std::make_shared<const Node>(Node{Kind::Numeral, n, 1, {}}));
}

RcofTerm RcofTerm::inverse_numeral(std::uint64_t m) { return fraction(1, m); }

RcofTerm RcofTerm::fraction(std::uint64_t n, std::uint64_t m) {
  if (m == 0) throw Error(ErrorCode::DivisionByZero, "fraction with zero denominator");
  return RcofTerm(std::make_shared<const Node>(Node{Kind::Fraction, n, m, {}}));
}

RcofTerm RcofTerm::var(unsigned k) {
  return RcofTerm(std::make_shared<const Node>(Node{Kind::NumVar, k, 1, {}}));
}

RcofTerm RcofTerm::neg(RcofTerm a) {
  return RcofTerm(std::make_shared<const Node>(Node{Kind::Neg, 0, 1, {std::move(a)}}));
}

RcofTerm RcofTerm::add(RcofTerm a, RcofTerm b) {
  return RcofTerm(
      std::make_shared<const Node>(Node{Kind::Add, 0, 1, {std::move(a), std::move(b)}}));
}

RcofTerm RcofTerm::mul(RcofTerm a, RcofTerm b) {
  return RcofTerm(
      std::make_shared<const Node>(Node{Kind::Mul, 0, 1, {std::move(a), std::move(b)}}));
}

std::set<unsigned> RcofTerm::variables() const {
  std::set<unsigned> out;
  switch (kind()) {
    case Kind::NumVar: out.insert(var_index()); break;
    case Kind::Neg: out = child().variables(); break;
    case Kind::Add:
    case Kind::Mul: {
      out = left().variables();
      auto r = right().variables();
      out.insert(r.begin(), r.end());
      break;
    }
    default: break;
  }
  return out;
}

bool RcofTerm::closed() const { return variables().empty(); }

bool operator==(const RcofTerm& a, const RcofTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case RcofTerm::Kind::Zero:
    case RcofTerm::Kind::One: return true;
    case RcofTerm::Kind::Numeral:
    case RcofTerm::Kind::Fraction:
    case RcofTerm::Kind::NumVar:
      return a.node_->num == b.node_->num && a.node_->den == b.node_->den;
    case RcofTerm::Kind::Neg: return a.child() == b.child();
    case RcofTerm::Kind::Add:
    case RcofTerm::Kind::Mul: return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

Rational Assignment::get(unsigned k) const {
  auto it = numeric.find(k);
  return it == numeric.end() ? Rational(0) : it->second;
}

namespace {

Rational from_u64(std::uint64_t v) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return Rational(z);
}

}  // namespace

Rational eval_term(const RcofTerm& p, const Assignment& rho) {
  switch (p.kind()) {
    case RcofTerm::Kind::Zero: return 0;
    case RcofTerm::Kind::One: return 1;
    case RcofTerm::Kind::Numeral: return from_u64(p.numerator());
    case RcofTerm::Kind::Fraction: {
      Rational q(from_u64(p.numerator()) / from_u64(p.denominator()));
      q.canonicalize();
      return q;
    }
    case RcofTerm::Kind::NumVar: return rho.get(p.var_index());
    case RcofTerm::Kind::Neg: return -eval_term(p.child(), rho);
    case RcofTerm::Kind::Add: return eval_term(p.left(), rho) + eval_term(p.right(), rho);
    case RcofTerm::Kind::Mul: return eval_term(p.left(), rho) * eval_term(p.right(), rho);
  }
  return 0;
}

namespace {

LinearTerm scale(LinearTerm t, const Rational& c) {
  t.constant *= c;
  for (auto it = t.coeffs.begin(); it != t.coeffs.end();) {
    it->second *= c;
    it = it->second == 0 ? t.coeffs.erase(it) : std::next(it);
  }
  return t;
}

}  // namespace

LinearTerm linearize(const RcofTerm& p) {
  switch (p.kind()) {
    case RcofTerm::Kind::NumVar: {
      LinearTerm t;
      t.coeffs[p.var_index()] = 1;
      return t;
    }
    case RcofTerm::Kind::Neg: return scale(linearize(p.child()), -1);
    case RcofTerm::Kind::Add: {
      LinearTerm l = linearize(p.left());
      LinearTerm r = linearize(p.right());
      l.constant += r.constant;
      for (auto& [k, c] : r.coeffs) {
        l.coeffs[k] += c;
        if (l.coeffs[k] == 0) l.coeffs.erase(k);
      }
      return l;
    }
    case RcofTerm::Kind::Mul: {
      LinearTerm l = linearize(p.left());
      LinearTerm r = linearize(p.right());
      if (!l.coeffs.empty() && !r.coeffs.empty())
        throw Error(ErrorCode::UnsupportedNonlinear,
                    "product of two variable-bearing terms is outside the linear fragment");
      return l.coeffs.empty() ? scale(std::move(r), l.constant) : scale(std::move(l), r.constant);
    }
    default: {
      LinearTerm t;
      t.constant = eval_term(p, {});
      return t;
    }
  }
}

// ---- formulas ------------------------------------------------------------

PlqoFormula PlqoFormula::obs(PropFormula alpha) {
  return PlqoFormula(std::make_shared<const Node>(
      Node{Kind::Obs, std::make_shared<const PropFormula>(std::move(alpha)), Cmp::Eq, nullptr, {}}));
}

PlqoFormula PlqoFormula::prob(PropFormula alpha, Cmp cmp, RcofTerm p) {
  return PlqoFormula(std::make_shared<const Node>(
      Node{Kind::Prob, std::make_shared<const PropFormula>(std::move(alpha)), cmp,
           std::make_shared<const RcofTerm>(std::move(p)), {}}));
}

PlqoFormula PlqoFormula::neg(PlqoFormula a) {
  return PlqoFormula(
      std::make_shared<const Node>(Node{Kind::Neg, nullptr, Cmp::Eq, nullptr, {std::move(a)}}));
}

PlqoFormula PlqoFormula::impl(PlqoFormula a, PlqoFormula b) {
  return PlqoFormula(std::make_shared<const Node>(
      Node{Kind::Impl, nullptr, Cmp::Eq, nullptr, {std::move(a), std::move(b)}}));
}

PlqoFormula PlqoFormula::conj(PlqoFormula a, PlqoFormula b) {
  return neg(impl(std::move(a), neg(std::move(b))));
}

PlqoFormula PlqoFormula::disj(PlqoFormula a, PlqoFormula b) {
  return impl(neg(std::move(a)), std::move(b));
}

PlqoFormula PlqoFormula::iff(PlqoFormula a, PlqoFormula b) {
  return conj(impl(a, b), impl(b, a));
}

PlqoFormula PlqoFormula::prob_le(PropFormula alpha, RcofTerm p) {
  return disj(prob(alpha, Cmp::Eq, p), prob(alpha, Cmp::Lt, p));
}

PlqoFormula PlqoFormula::prob_ge(PropFormula alpha, RcofTerm p) {
  return neg(prob(std::move(alpha), Cmp::Lt, std::move(p)));
}

PlqoFormula PlqoFormula::prob_gt(PropFormula alpha, RcofTerm p) {
  return neg(prob_le(std::move(alpha), std::move(p)));
}

bool operator==(const PlqoFormula& a, const PlqoFormula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case PlqoFormula::Kind::Obs: return a.alpha() == b.alpha();
    case PlqoFormula::Kind::Prob:
      return a.cmp() == b.cmp() && a.alpha() == b.alpha() && a.term() == b.term();
    case PlqoFormula::Kind::Neg: return a.child() == b.child();
    case PlqoFormula::Kind::Impl: return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

namespace {

void collect_atoms(const PlqoFormula& phi, std::vector<PlqoFormula>& out) {
  if (phi.is_atom()) {
    if (std::find(out.begin(), out.end(), phi) == out.end()) out.push_back(phi);
    return;
  }
  if (phi.kind() == PlqoFormula::Kind::Neg) {
    collect_atoms(phi.child(), out);
    return;
  }
  collect_atoms(phi.left(), out);
  collect_atoms(phi.right(), out);
}

std::size_t atom_position(const std::vector<PlqoFormula>& list, const PlqoFormula& atom) {
  return static_cast<std::size_t>(std::find(list.begin(), list.end(), atom) - list.begin());
}

}  // namespace

std::vector<PlqoFormula> atoms(const PlqoFormula& phi) {
  std::vector<PlqoFormula> out;
  collect_atoms(phi, out);
  return out;
}

bool eval_skeleton(const PlqoFormula& phi, const std::vector<PlqoFormula>& atom_list,
                   const std::vector<bool>& values) {
  switch (phi.kind()) {
    case PlqoFormula::Kind::Obs:
    case PlqoFormula::Kind::Prob: {
      auto pos = atom_position(atom_list, phi);
      if (pos >= atom_list.size())
        throw Error(ErrorCode::Internal, "atom missing from skeleton assignment");
      return values[pos];
    }
    case PlqoFormula::Kind::Neg: return !eval_skeleton(phi.child(), atom_list, values);
    case PlqoFormula::Kind::Impl:
      return !eval_skeleton(phi.left(), atom_list, values) ||
             eval_skeleton(phi.right(), atom_list, values);
  }
  return false;
}

bool is_skeleton_tautology(const PlqoFormula& phi, unsigned budget) {
  auto list = atoms(phi);
  if (list.size() > budget)
    throw Error(ErrorCode::BudgetExceeded,
                "formula has " + std::to_string(list.size()) + " distinct atoms");
  std::vector<bool> values(list.size());
  const std::uint64_t rows = std::uint64_t{1} << list.size();
  for (std::uint64_t r = 0; r < rows; ++r) {
    for (std::size_t i = 0; i < list.size(); ++i) values[i] = (r >> i) & 1U;
    if (!eval_skeleton(phi, list, values)) return false;
  }
  return true;
}

namespace {

// Literals are encoded as (atom position, polarity) while distributing.
using Lit = std::pair<std::size_t, bool>;
using Clause = std::vector<Lit>;

struct DnfBuilder {
  const std::vector<PlqoFormula>& atom_list;
  const DnfBudget& budget;

  std::vector<Clause> build(const PlqoFormula& phi, bool positive) const {
    switch (phi.kind()) {
      case PlqoFormula::Kind::Obs:
      case PlqoFormula::Kind::Prob:
        return {Clause{{atom_position(atom_list, phi), positive}}};
      case PlqoFormula::Kind::Neg: return build(phi.child(), !positive);
      case PlqoFormula::Kind::Impl:
        if (positive) {
          auto out = build(phi.left(), false);
          auto r = build(phi.right(), true);
          out.insert(out.end(), r.begin(), r.end());
          return simplify(std::move(out));
        }
        return product(build(phi.left(), true), build(phi.right(), false));
    }
    return {};
  }

  std::vector<Clause> product(const std::vector<Clause>& a, const std::vector<Clause>& b) const {
    std::vector<Clause> out;
    for (const auto& ca : a) {
      for (const auto& cb : b) {
        Clause merged = ca;
        bool contradictory = false;
        for (const auto& lit : cb) {
          if (std::find(merged.begin(), merged.end(), Lit{lit.first, !lit.second}) != merged.end()) {
            contradictory = true;
            break;
          }
          if (std::find(merged.begin(), merged.end(), lit) == merged.end()) merged.push_back(lit);
        }
        if (contradictory) continue;
        out.push_back(std::move(merged));
        if (out.size() > budget.max_disjuncts)
          throw Error(ErrorCode::BudgetExceeded, "DNF exceeds the disjunct budget");
      }
    }
    return simplify(std::move(out));
  }

  static bool subset(const Clause& small, const Clause& big) {
    return std::all_of(small.begin(), small.end(), [&](const Lit& l) {
      return std::find(big.begin(), big.end(), l) != big.end();
    });
  }

  // Removes duplicates and disjuncts subsumed by a smaller one.
  static std::vector<Clause> simplify(std::vector<Clause> clauses) {
    std::vector<bool> keep(clauses.size(), true);
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      for (std::size_t j = 0; j < clauses.size() && keep[i]; ++j) {
        if (i == j || !subset(clauses[j], clauses[i])) continue;
        // clauses[j] subsumes clauses[i]; keep the earlier of two equal ones.
        keep[i] = !(clauses[j].size() < clauses[i].size() || j < i);
      }
    }
    std::vector<Clause> out;
    for (std::size_t i = 0; i < clauses.size(); ++i)
      if (keep[i]) out.push_back(std::move(clauses[i]));
    return out;
  }
};

}  // namespace

std::vector<Conjunction> nnf_dnf_literals(const PlqoFormula& phi, const DnfBudget& budget) {
  auto list = atoms(phi);
  if (list.size() > budget.max_atoms)
    throw Error(ErrorCode::BudgetExceeded, "formula has " + std::to_string(list.size()) +
                                               " distinct atoms, budget is " +
                                               std::to_string(budget.max_atoms));
  DnfBuilder builder{list, budget};
  auto clauses = builder.build(phi, true);
  std::vector<Conjunction> out;
  out.reserve(clauses.size());
  for (auto& clause : clauses) {
    std::sort(clause.begin(), clause.end());
    Conjunction conj;
    for (const auto& [pos, positive] : clause) conj.push_back({positive, list[pos]});
    out.push_back(std::move(conj));
  }
  return out;
}

PlqoFormula conjunction_formula(const Conjunction& lits) {
  if (lits.empty()) throw Error(ErrorCode::Internal, "empty conjunction has no formula");
  PlqoFormula acc = lits.front().formula();
  for (std::size_t i = 1; i < lits.size(); ++i) acc = PlqoFormula::conj(acc, lits[i].formula());
  return acc;
}

SymbolSet b_phi(const PlqoFormula& phi) {
  SymbolSet out;
  for (const auto& a : atoms(phi)) {
    auto s = a.alpha().symbols();
    out.insert(s.begin(), s.end());
  }
  return out;
}

std::vector<PropFormula> prob_formulas(const PlqoFormula& phi) {
  std::vector<PropFormula> out;
  for (const auto& a : atoms(phi))
    if (a.kind() == PlqoFormula::Kind::Prob &&
        std::find(out.begin(), out.end(), a.alpha()) == out.end())
      out.push_back(a.alpha());
  return out;
}

}  // namespace plqo
