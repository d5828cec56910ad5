#include "plqo/lra.hpp"

#include "plqo/errors.hpp"

#include <sstream>

namespace plqo {

namespace {

DeltaRational exact(const Rational& c) { return {c, 0}; }

std::string show(const DeltaRational& d) {
  if (d.k == 0) return to_string(d.c);
  return to_string(d.c) + (d.k < 0 ? " - " : " + ") + to_string(abs(d.k)) + "d";
}

}  // namespace

std::size_t LraSolver::column(const RcofVar& v) {
  auto [it, inserted] = columns_.try_emplace(v, vars_.size());
  if (inserted) {
    vars_.push_back({});
    names_.push_back(v);
  }
  return it->second;
}

void LraSolver::tighten_lower(std::size_t x, const DeltaRational& b) {
  auto& lo = vars_[x].lower;
  if (!lo || *lo < b) lo = b;
}

void LraSolver::tighten_upper(std::size_t x, const DeltaRational& b) {
  auto& up = vars_[x].upper;
  if (!up || b < *up) up = b;
}

void LraSolver::add(const LinConstraint& c) {
  if (checked_) throw Error(ErrorCode::Internal, "solver instance already used");
  input_.push_back(c);
  const auto& lhs = c.lhs();
  const Rational& rhs = c.rhs();
  const auto rel = c.rel();
  if (lhs.empty()) {
    const bool ok = rel == LinConstraint::Rel::Eq   ? rhs == 0
                    : rel == LinConstraint::Rel::Lt ? 0 < rhs
                                                    : 0 <= rhs;
    if (!ok) trivially_infeasible_ = true;
    return;
  }
  std::size_t x;
  Rational scale = 1;
  if (lhs.size() == 1) {
    x = column(lhs.begin()->first);
    scale = lhs.begin()->second;
  } else {
    for (const auto& [v, k] : lhs) column(v);
    x = vars_.size();
    vars_.push_back({});
    names_.push_back(RcofVar::prob_of_key("#slack" + std::to_string(rows_.size())));
    std::map<std::size_t, Rational> row;
    for (const auto& [v, k] : lhs) {
      const std::size_t col = columns_.at(v);
      if (vars_[col].basic) {
        // Substitute the defining row of an already basic variable.
        for (const auto& [n, a] : rows_[vars_[col].row]) {
          Rational& slot = row[n];
          slot += k * a;
          if (slot == 0) row.erase(n);
        }
      } else {
        Rational& slot = row[col];
        slot += k;
        if (slot == 0) row.erase(col);
      }
    }
    vars_[x].basic = true;
    vars_[x].row = rows_.size();
    rows_.push_back(std::move(row));
    row_owner_.push_back(x);
  }
  // scale * x REL rhs.
  const Rational bound = rhs / scale;
  const bool flipped = scale < 0;
  switch (rel) {
    case LinConstraint::Rel::Eq:
      tighten_lower(x, exact(bound));
      tighten_upper(x, exact(bound));
      break;
    case LinConstraint::Rel::Lt:
      if (flipped) tighten_lower(x, {bound, 1});
      else tighten_upper(x, {bound, -1});
      break;
    case LinConstraint::Rel::Le:
      if (flipped) tighten_lower(x, exact(bound));
      else tighten_upper(x, exact(bound));
      break;
  }
}

void LraSolver::add(const ConstraintSet& cs) {
  for (const auto& c : cs.constraints) add(c);
}

void LraSolver::update(std::size_t x, const DeltaRational& v) {
  const DeltaRational diff = v - vars_[x].value;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    auto it = rows_[r].find(x);
    if (it != rows_[r].end()) {
      Var& b = vars_[row_owner_[r]];
      b.value = b.value + it->second * diff;
    }
  }
  vars_[x].value = v;
}

void LraSolver::pivot_and_update(std::size_t xb, std::size_t xn, const DeltaRational& v) {
  ++pivots_;
  const std::size_t r = vars_[xb].row;
  const Rational a = rows_[r].at(xn);
  const DeltaRational theta = Rational(1 / a) * (v - vars_[xb].value);
  vars_[xb].value = v;
  vars_[xn].value = vars_[xn].value + theta;
  for (std::size_t q = 0; q < rows_.size(); ++q) {
    if (q == r) continue;
    auto it = rows_[q].find(xn);
    if (it != rows_[q].end()) {
      Var& b = vars_[row_owner_[q]];
      b.value = b.value + it->second * theta;
    }
  }

  // Row r: xb = a*xn + rest  =>  xn = xb/a - rest/a.
  std::map<std::size_t, Rational> solved;
  const Rational inv = 1 / a;
  for (const auto& [n, c] : rows_[r])
    if (n != xn) solved[n] = -c * inv;
  solved[xb] = inv;

  for (std::size_t q = 0; q < rows_.size(); ++q) {
    if (q == r) continue;
    auto it = rows_[q].find(xn);
    if (it == rows_[q].end()) continue;
    const Rational k = it->second;
    rows_[q].erase(it);
    for (const auto& [n, c] : solved) {
      Rational& slot = rows_[q][n];
      slot += k * c;
      if (slot == 0) rows_[q].erase(n);
    }
  }
  rows_[r] = std::move(solved);
  row_owner_[r] = xn;
  vars_[xn].basic = true;
  vars_[xn].row = r;
  vars_[xb].basic = false;
}

bool LraSolver::search() {
  for (;;) {
    // Bland: smallest violating basic variable.
    std::size_t xi = vars_.size();
    for (std::size_t x = 0; x < vars_.size(); ++x) {
      const Var& v = vars_[x];
      if (!v.basic) continue;
      if ((v.lower && v.value < *v.lower) || (v.upper && *v.upper < v.value)) {
        xi = x;
        break;
      }
    }
    if (xi == vars_.size()) return true;

    const Var& bi = vars_[xi];
    const bool raise = bi.lower && bi.value < *bi.lower;
    const auto& row = rows_[bi.row];
    std::size_t xj = vars_.size();
    for (const auto& [n, a] : row) {
      const Var& v = vars_[n];
      const bool can_increase = !v.upper || v.value < *v.upper;
      const bool can_decrease = !v.lower || *v.lower < v.value;
      const bool ok = raise ? ((a > 0 && can_increase) || (a < 0 && can_decrease))
                            : ((a < 0 && can_increase) || (a > 0 && can_decrease));
      if (ok && n < xj) xj = n;
    }
    if (xj == vars_.size()) return false;
    pivot_and_update(xi, xj, raise ? *bi.lower : *bi.upper);
  }
}

Witness LraSolver::concrete_witness() const {
  // Largest delta in (0, 1] keeping every bound: a pair c1 + k1 d <= c2 + k2 d
  // with c1 < c2 and k1 > k2 needs d <= (c2 - c1) / (k1 - k2).
  Rational delta = 1;
  auto limit = [&](const DeltaRational& lo, const DeltaRational& hi) {
    if (lo.c < hi.c && lo.k > hi.k) {
      Rational cap = (hi.c - lo.c) / (lo.k - hi.k);
      if (cap < delta) delta = cap;
    }
  };
  for (const auto& v : vars_) {
    if (v.lower) limit(*v.lower, v.value);
    if (v.upper) limit(v.value, *v.upper);
  }
  Witness w;
  for (const auto& [name, col] : columns_) {
    const DeltaRational& d = vars_[col].value;
    w[name] = d.c + d.k * delta;
  }
  return w;
}

FeasibilityResult LraSolver::check() {
  if (checked_) throw Error(ErrorCode::Internal, "solver instance already used");
  checked_ = true;
  if (trivially_infeasible_) return {};
  for (const auto& v : vars_)
    if (v.lower && v.upper && *v.upper < *v.lower) return {};

  // Nonbasic variables start at 0 clamped into their bounds.
  for (std::size_t x = 0; x < vars_.size(); ++x) {
    if (vars_[x].basic) continue;
    DeltaRational start{0, 0};
    if (vars_[x].lower && start < *vars_[x].lower) start = *vars_[x].lower;
    if (vars_[x].upper && *vars_[x].upper < start) start = *vars_[x].upper;
    update(x, start);
  }
  if (!search()) return {};

  FeasibilityResult out;
  out.feasible = true;
  out.witness = concrete_witness();
  for (const auto& c : input_)
    if (!c.holds(out.witness))
      throw Error(ErrorCode::Internal, "simplex witness violates " + c.to_string());
  return out;
}

std::string LraSolver::dump() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    os << names_[row_owner_[r]].to_string() << " =";
    for (const auto& [n, a] : rows_[r]) os << " " << to_string(a) << "*" << names_[n].to_string();
    os << "\n";
  }
  for (std::size_t x = 0; x < vars_.size(); ++x) {
    const Var& v = vars_[x];
    os << names_[x].to_string() << (v.basic ? " [basic] " : " ")
       << (v.lower ? show(*v.lower) : "-inf") << " <= " << show(v.value)
       << " <= " << (v.upper ? show(*v.upper) : "+inf") << "\n";
  }
  return os.str();
}

FeasibilityResult feasible(const ConstraintSet& cs) {
  LraSolver s;
  s.add(cs);
  return s.check();
}

bool check_implication(const ConstraintSet& premise,
                       const DisjunctiveConstraintSet& negated_conclusion) {
  for (const auto& d : negated_conclusion.disjuncts) {
    LraSolver s;
    s.add(premise);
    s.add(d);
    if (s.check().feasible) return false;
  }
  return true;
}

bool implies(const ConstraintSet& premise, const ConstraintSet& conclusion) {
  return check_implication(premise, negate(conclusion));
}

}  // namespace plqo
