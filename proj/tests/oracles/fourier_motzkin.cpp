#include "fourier_motzkin.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace oracle {

namespace {

bool ground_holds(Rel rel, const mpq_class& rhs) {
  switch (rel) {
    case Rel::Eq: return rhs == 0;
    case Rel::Le: return rhs >= 0;
    case Rel::Lt: return rhs > 0;
  }
  return false;
}

// Scales so the first nonzero coefficient has magnitude one; keeps direction.
void normalize(Row& r) {
  for (const auto& c : r.coeffs) {
    if (c == 0) continue;
    const mpq_class s = abs(c);
    for (auto& d : r.coeffs) d /= s;
    r.rhs /= s;
    return;
  }
}

// Keeps, per coefficient vector, only the tightest inequality; equalities
// are kept verbatim. Returns false when a ground row is violated.
bool reduce(std::vector<Row>& rows) {
  std::map<std::vector<mpq_class>, Row> tightest;
  std::vector<Row> out;
  for (auto& r : rows) {
    normalize(r);
    const bool ground = std::all_of(r.coeffs.begin(), r.coeffs.end(),
                                    [](const mpq_class& c) { return c == 0; });
    if (ground) {
      if (!ground_holds(r.rel, r.rhs)) return false;
      continue;
    }
    if (r.rel == Rel::Eq) {
      out.push_back(r);
      continue;
    }
    auto [it, fresh] = tightest.emplace(r.coeffs, r);
    if (fresh) continue;
    Row& t = it->second;
    if (r.rhs < t.rhs || (r.rhs == t.rhs && r.rel == Rel::Lt)) t = r;
  }
  for (auto& [k, r] : tightest) out.push_back(std::move(r));
  rows.swap(out);
  return true;
}

}  // namespace

bool fm_feasible(std::vector<Row> rows, std::size_t nvars) {
  std::vector<bool> done(nvars, false);
  for (std::size_t step = 0; step < nvars; ++step) {
    if (!reduce(rows)) return false;
    // Substitute an equality when one exists.
    auto eq = std::find_if(rows.begin(), rows.end(), [](const Row& r) { return r.rel == Rel::Eq; });
    if (eq != rows.end()) {
      std::size_t v = 0;
      while (eq->coeffs[v] == 0) ++v;
      const Row pivot = *eq;
      rows.erase(eq);
      for (auto& r : rows) {
        if (r.coeffs[v] == 0) continue;
        const mpq_class f = r.coeffs[v] / pivot.coeffs[v];
        for (std::size_t i = 0; i < nvars; ++i) r.coeffs[i] -= f * pivot.coeffs[i];
        r.rhs -= f * pivot.rhs;
      }
      done[v] = true;
      continue;
    }
    // Otherwise eliminate the variable producing the fewest combinations.
    std::size_t v = nvars;
    std::size_t best = 0;
    for (std::size_t c = 0; c < nvars; ++c) {
      if (done[c]) continue;
      std::size_t up = 0;
      std::size_t lo = 0;
      for (const auto& r : rows) {
        if (r.coeffs[c] > 0) ++up;
        if (r.coeffs[c] < 0) ++lo;
      }
      if (v == nvars || up * lo < best) {
        v = c;
        best = up * lo;
      }
    }
    if (v == nvars) break;
    done[v] = true;
    std::vector<Row> upper;
    std::vector<Row> lower;
    std::vector<Row> rest;
    for (auto& r : rows) {
      if (r.coeffs[v] > 0) upper.push_back(r);
      else if (r.coeffs[v] < 0) lower.push_back(r);
      else rest.push_back(r);
    }
    for (const auto& u : upper)
      for (const auto& l : lower) {
        const mpq_class fu = -l.coeffs[v];
        const mpq_class fl = u.coeffs[v];
        Row c;
        c.coeffs.resize(nvars);
        for (std::size_t i = 0; i < nvars; ++i) c.coeffs[i] = fu * u.coeffs[i] + fl * l.coeffs[i];
        c.coeffs[v] = 0;
        c.rhs = fu * u.rhs + fl * l.rhs;
        c.rel = (u.rel == Rel::Lt || l.rel == Rel::Lt) ? Rel::Lt : Rel::Le;
        rest.push_back(std::move(c));
      }
    rows.swap(rest);
  }
  if (!reduce(rows)) return false;
  for (const auto& r : rows)
    if (!ground_holds(r.rel, r.rhs)) return false;
  return true;
}

bool satisfies(const std::vector<Row>& rows, const std::vector<mpq_class>& point) {
  for (const auto& r : rows) {
    mpq_class lhs = 0;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) lhs += r.coeffs[i] * point.at(i);
    const bool ok = r.rel == Rel::Eq ? lhs == r.rhs : r.rel == Rel::Le ? lhs <= r.rhs : lhs < r.rhs;
    if (!ok) return false;
  }
  return true;
}

}  // namespace oracle
