#pragma once

#include "plqo/genmodel.hpp"
#include "plqo/plqo.hpp"
#include "plqo/prop.hpp"
#include "plqo/translate.hpp"

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

namespace plqo::testing {

// Evaluates alpha with bit i of `code` giving the value of order[i].
inline bool eval_code(const PropFormula& a, const std::vector<PropSymbol>& order,
                      std::uint64_t code) {
  using K = PropFormula::Kind;
  switch (a.kind()) {
    case K::Verum: return true;
    case K::Atom:
      for (std::size_t i = 0; i < order.size(); ++i)
        if (order[i] == a.symbol()) return (code >> i) & 1U;
      throw std::logic_error("symbol outside order");
    case K::Neg: return !eval_code(a.child(), order, code);
    case K::Impl: return !eval_code(a.left(), order, code) || eval_code(a.right(), order, code);
  }
  return false;
}

// ANF monomials as bitmasks over `order`, by the Moebius transform.
inline std::set<std::uint64_t> anf_masks(const PropFormula& a,
                                         const std::vector<PropSymbol>& order) {
  const std::uint64_t n = std::uint64_t{1} << order.size();
  std::vector<int> f(n);
  for (std::uint64_t c = 0; c < n; ++c) f[c] = eval_code(a, order, c) ? 1 : 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::uint64_t c = 0; c < n; ++c)
      if ((c >> i) & 1U) f[c] ^= f[c ^ (std::uint64_t{1} << i)];
  std::set<std::uint64_t> out;
  for (std::uint64_t c = 0; c < n; ++c)
    if (f[c]) out.insert(c);
  return out;
}

// The witness a generic structure induces on the translation of phi:
// valuation masses, formula probabilities as mass sums, incompatibility flags.
inline Witness witness_of(const PlqoFormula& phi, const GenericModelSpec& spec,
                          const Assignment& rho) {
  Witness w;
  const std::vector<PropSymbol> order = spec.symbols;
  const std::uint64_t n = std::uint64_t{1} << order.size();
  auto mass_of_marginal = [&](const SymbolSet& sub, std::uint64_t usub_in_order) {
    Rational total = 0;
    std::uint64_t submask = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
      if (sub.count(order[i])) submask |= std::uint64_t{1} << i;
    for (std::uint64_t c = 0; c < n; ++c)
      if ((c & submask) == usub_in_order) total += spec.masses[c];
    return total;
  };
  for (std::uint64_t sub = 0; sub < n; ++sub) {
    SymbolSet a_sub;
    for (std::size_t i = 0; i < order.size(); ++i)
      if ((sub >> i) & 1U) a_sub.insert(order[i]);
    for (std::uint64_t u = 0; u < n; ++u) {
      if ((u & sub) != u) continue;
      SymbolSet uset;
      for (std::size_t i = 0; i < order.size(); ++i)
        if ((u >> i) & 1U) uset.insert(order[i]);
      w[mass_var(a_sub, uset)] = mass_of_marginal(a_sub, u);
    }
  }
  for (const auto& d : prob_formulas(phi)) {
    Rational total = 0;
    for (std::uint64_t c = 0; c < n; ++c)
      if (eval_code(d, order, c)) total += spec.masses[c];
    w[RcofVar::prob_of(d)] = total;
  }
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      bool in = false;
      for (const auto& [x, y] : spec.nc)
        in = in || (x == order[i] && y == order[j]) || (x == order[j] && y == order[i]);
      w[RcofVar::pair(order[i], order[j])] = in ? 1 : 0;
    }
  for (const auto& [k, q] : rho.numeric) w[RcofVar::numeric(k)] = q;
  return w;
}

}  // namespace plqo::testing
