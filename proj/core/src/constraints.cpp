#include "plqo/constraints.hpp"

#include "plqo/errors.hpp"
#include "plqo/syntax.hpp"

#include <set>
#include <sstream>

namespace plqo {

RcofVar RcofVar::numeric(unsigned k) {
  RcofVar v;
  v.kind_ = Kind::Numeric;
  v.index_ = k;
  return v;
}

RcofVar RcofVar::prob_of(const PropFormula& alpha) { return prob_of_key(print_prop(alpha, true)); }

RcofVar RcofVar::prob_of_key(std::string key) {
  RcofVar v;
  v.kind_ = Kind::ProbOf;
  v.key_ = std::move(key);
  return v;
}

RcofVar RcofVar::pair(PropSymbol a, PropSymbol b) {
  if (a == b) throw Error(ErrorCode::Internal, "pair variable needs two distinct symbols");
  RcofVar v;
  v.kind_ = Kind::Pair;
  v.a_ = std::min(a, b);
  v.b_ = std::max(a, b);
  return v;
}

std::string RcofVar::to_string() const {
  switch (kind_) {
    case Kind::Numeric: return "xn[" + std::to_string(index_) + "]";
    case Kind::ProbOf: return "x[" + key_ + "]";
    case Kind::Pair: return "xp[" + plqo::to_string(a_) + "," + plqo::to_string(b_) + "]";
  }
  return "";
}

Rational value_of(const Witness& w, const RcofVar& v) {
  auto it = w.find(v);
  return it == w.end() ? Rational(0) : it->second;
}

LinExpr LinExpr::of(const RcofVar& v, Rational c) {
  LinExpr e;
  if (c != 0) e.coeffs[v] = std::move(c);
  return e;
}

LinExpr LinExpr::constant_of(Rational c) {
  LinExpr e;
  e.constant = std::move(c);
  return e;
}

LinExpr& LinExpr::operator+=(const LinExpr& o) {
  constant += o.constant;
  for (const auto& [v, c] : o.coeffs) {
    Rational& slot = coeffs[v];
    slot += c;
    if (slot == 0) coeffs.erase(v);
  }
  return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& o) {
  LinExpr neg = o;
  neg *= -1;
  return *this += neg;
}

LinExpr& LinExpr::operator*=(const Rational& c) {
  constant *= c;
  if (c == 0) {
    coeffs.clear();
    return *this;
  }
  for (auto& [v, k] : coeffs) k *= c;
  return *this;
}

Rational LinExpr::eval(const Witness& w) const {
  Rational acc = constant;
  for (const auto& [v, c] : coeffs) acc += c * value_of(w, v);
  return acc;
}

LinConstraint LinConstraint::compare(const LinExpr& l, CmpOp op, const LinExpr& r) {
  LinExpr d = l;
  d -= r;
  if (op == CmpOp::Gt || op == CmpOp::Ge) d *= -1;
  LinConstraint c;
  c.lhs_ = std::move(d.coeffs);
  c.rhs_ = -d.constant;
  switch (op) {
    case CmpOp::Eq: c.rel_ = Rel::Eq; break;
    case CmpOp::Lt:
    case CmpOp::Gt: c.rel_ = Rel::Lt; break;
    case CmpOp::Le:
    case CmpOp::Ge: c.rel_ = Rel::Le; break;
  }
  return c;
}

bool LinConstraint::holds(const Witness& w) const {
  Rational acc = 0;
  for (const auto& [v, c] : lhs_) acc += c * value_of(w, v);
  switch (rel_) {
    case Rel::Eq: return acc == rhs_;
    case Rel::Lt: return acc < rhs_;
    case Rel::Le: return acc <= rhs_;
  }
  return false;
}

std::string LinConstraint::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, c] : lhs_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1) os << plqo::to_string(mag) << "*";
    os << v.to_string();
    first = false;
  }
  if (first) os << "0";
  switch (rel_) {
    case Rel::Eq: os << " = "; break;
    case Rel::Lt: os << " < "; break;
    case Rel::Le: os << " <= "; break;
  }
  os << plqo::to_string(rhs_);
  return os.str();
}

void ConstraintSet::append(const ConstraintSet& o) {
  constraints.insert(constraints.end(), o.constraints.begin(), o.constraints.end());
}

bool ConstraintSet::holds(const Witness& w) const {
  for (const auto& c : constraints)
    if (!c.holds(w)) return false;
  return true;
}

std::vector<RcofVar> ConstraintSet::variables() const {
  std::set<RcofVar> vars;
  for (const auto& c : constraints)
    for (const auto& [v, k] : c.lhs()) vars.insert(v);
  return {vars.begin(), vars.end()};
}

std::string ConstraintSet::to_string() const {
  std::string out;
  for (const auto& c : constraints) out += c.to_string() + "\n";
  return out;
}

bool DisjunctiveConstraintSet::holds(const Witness& w) const {
  for (const auto& d : disjuncts)
    if (d.holds(w)) return true;
  return false;
}

std::string DisjunctiveConstraintSet::to_string() const {
  if (disjuncts.empty()) return "false\n";
  std::string out;
  for (std::size_t i = 0; i < disjuncts.size(); ++i) {
    out += "case " + std::to_string(i + 1) + ":\n";
    for (const auto& c : disjuncts[i].constraints) out += "  " + c.to_string() + "\n";
  }
  return out;
}

DisjunctiveConstraintSet negate(const LinConstraint& c) {
  LinExpr l;
  for (const auto& [v, k] : c.lhs()) l += LinExpr::of(v, k);
  const LinExpr r = LinExpr::constant_of(c.rhs());
  auto single = [](LinConstraint x) {
    ConstraintSet s;
    s.add(std::move(x));
    return s;
  };
  DisjunctiveConstraintSet out;
  switch (c.rel()) {
    case LinConstraint::Rel::Eq:
      out.disjuncts.push_back(single(LinConstraint::compare(l, CmpOp::Lt, r)));
      out.disjuncts.push_back(single(LinConstraint::compare(l, CmpOp::Gt, r)));
      break;
    case LinConstraint::Rel::Lt:
      out.disjuncts.push_back(single(LinConstraint::compare(l, CmpOp::Ge, r)));
      break;
    case LinConstraint::Rel::Le:
      out.disjuncts.push_back(single(LinConstraint::compare(l, CmpOp::Gt, r)));
      break;
  }
  return out;
}

DisjunctiveConstraintSet negate(const ConstraintSet& cs) {
  DisjunctiveConstraintSet out;
  for (const auto& c : cs.constraints) {
    auto n = negate(c);
    out.disjuncts.insert(out.disjuncts.end(), n.disjuncts.begin(), n.disjuncts.end());
  }
  return out;
}

}  // namespace plqo
