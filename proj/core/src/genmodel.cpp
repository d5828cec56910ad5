#include "plqo/genmodel.hpp"

#include "plqo/errors.hpp"

#include <algorithm>
#include <set>

namespace plqo {

namespace {

std::size_t position(const std::vector<PropSymbol>& syms, PropSymbol s) {
  return static_cast<std::size_t>(std::find(syms.begin(), syms.end(), s) - syms.begin());
}

const Rational kHalf(1, 2);

}  // namespace

GenericModelSpec GenericModelSpec::normalized() const {
  GenericModelSpec out = *this;
  for (auto& [a, b] : out.nc)
    if (b < a) std::swap(a, b);
  std::sort(out.nc.begin(), out.nc.end());
  out.nc.erase(std::unique(out.nc.begin(), out.nc.end()), out.nc.end());
  return out;
}

void GenericModelSpec::validate() const {
  std::set<PropSymbol> seen(symbols.begin(), symbols.end());
  if (seen.size() != symbols.size())
    throw Error(ErrorCode::SpecInvalid, "symbol list contains duplicates");
  if (symbols.size() > kDefaultSymbolBudget)
    throw Error(ErrorCode::BudgetExceeded, "too many symbols for a generic structure");
  for (const auto& [a, b] : nc) {
    if (a == b) throw Error(ErrorCode::SpecInvalid, "incompatible pair repeats " + to_string(a));
    if (!seen.count(a) || !seen.count(b))
      throw Error(ErrorCode::SpecInvalid, "incompatible pair mentions an unlisted symbol");
  }
  const std::size_t expected = std::size_t{1} << symbols.size();
  if (masses.size() != expected)
    throw Error(ErrorCode::SpecInvalid, "expected " + std::to_string(expected) + " masses, got " +
                                            std::to_string(masses.size()));
  Rational total = 0;
  for (const auto& m : masses) {
    if (m < 0) throw Error(ErrorCode::SpecInvalid, "negative mass " + to_string(m));
    total += m;
  }
  if (total != 1) throw Error(ErrorCode::SpecInvalid, "masses sum to " + to_string(total));
}

Matrix<ComplexScalar> generic_projector(const GenericModelSpec& raw, PropSymbol s) {
  const GenericModelSpec spec = raw.normalized();
  const std::size_t bit = position(spec.symbols, s);
  if (bit == spec.symbols.size())
    throw Error(ErrorCode::MissingSymbol, to_string(s) + " is not a symbol of the structure");
  const std::size_t nval = std::size_t{1} << spec.symbols.size();
  const std::size_t dim = nval + 2 * spec.nc.size();
  Matrix<ComplexScalar> p(dim, dim);
  for (std::size_t k = 0; k < nval; ++k)
    if ((k >> bit) & 1U) p(k, k) = 1;
  for (std::size_t t = 0; t < spec.nc.size(); ++t) {
    const std::size_t ovl = nval + 2 * t;
    const std::size_t udl = ovl + 1;
    const auto& [first, second] = spec.nc[t];
    if (s == first) {
      // Projector onto (ovl + udl)/sqrt(2).
      p(ovl, ovl) = kHalf;
      p(ovl, udl) = kHalf;
      p(udl, ovl) = kHalf;
      p(udl, udl) = kHalf;
    } else if (s == second) {
      p(udl, udl) = 1;
    } else {
      p(ovl, ovl) = 1;
      p(udl, udl) = 1;
    }
  }
  return p;
}

Matrix<ComplexScalar> build_observable(const GenericModelSpec& spec, PropSymbol s) {
  const Matrix<ComplexScalar> p = generic_projector(spec, s);
  const std::size_t dim = p.rows();
  const std::size_t nval = std::size_t{1} << spec.symbols.size();
  const std::size_t bit = position(spec.symbols, s);
  Matrix<ComplexScalar> o(dim, dim);
  // Valuation part: +|v_k><v_k| where s holds, -|v_k><v_k| where it fails.
  for (std::size_t k = 0; k < nval; ++k) o(k, k) = ((k >> bit) & 1U) ? 1 : -1;
  // Block part: 2P - I restricted to the incompatibility blocks.
  for (std::size_t r = nval; r < dim; ++r)
    for (std::size_t c = nval; c < dim; ++c) {
      ComplexScalar v = ComplexScalar(2) * p(r, c);
      if (r == c) v -= ComplexScalar(1);
      o(r, c) = v;
    }
  return o;
}

QuantumStructure build_generic(const GenericModelSpec& raw) {
  raw.validate();
  const GenericModelSpec spec = raw.normalized();
  const std::size_t nval = std::size_t{1} << spec.symbols.size();
  const std::size_t dim = nval + 2 * spec.nc.size();
  std::vector<ComplexScalar> state(dim);
  for (std::size_t k = 0; k < nval; ++k) state[k] = RadicalScalar::sqrt(spec.masses[k]);
  std::map<PropSymbol, Pqv> pqvs;
  for (const auto& s : spec.symbols) pqvs.emplace(s, Pqv(generic_projector(spec, s)));
  return QuantumStructure(std::move(state), std::move(pqvs));
}

Matrix<ComplexScalar> commutator_witness(const QuantumStructure& I, PropSymbol a, PropSymbol b) {
  return commutator(I.pqv(a), I.pqv(b));
}

ModelWithAssignment model_from_witness(const PlqoFormula& phi, const Witness& w,
                                       const AdamsOptions& options) {
  const SymbolSet b = b_phi(phi);
  const std::vector<PropSymbol> syms(b.begin(), b.end());
  GenericModelSpec spec;
  spec.symbols = syms;
  const std::size_t nval = std::size_t{1} << syms.size();
  for (std::size_t k = 0; k < nval; ++k) {
    SymbolSet u;
    for (std::size_t s = 0; s < syms.size(); ++s)
      if ((k >> s) & 1U) u.insert(syms[s]);
    const RcofVar x = mass_var(b, u);
    auto it = w.find(x);
    if (it == w.end())
      throw Error(ErrorCode::WitnessIncomplete, "witness has no value for " + x.to_string());
    spec.masses.push_back(it->second);
  }
  if (!q_adams(b, prob_formulas(phi), options).holds(w))
    throw Error(ErrorCode::WitnessIncomplete,
                "witness does not satisfy the distribution constraints");
  for (std::size_t i = 0; i < syms.size(); ++i)
    for (std::size_t j = i + 1; j < syms.size(); ++j)
      if (value_of(w, RcofVar::pair(syms[i], syms[j])) > 0) spec.nc.emplace_back(syms[i], syms[j]);

  Assignment rho;
  for (const auto& [v, q] : w)
    if (v.kind() == RcofVar::Kind::Numeric) rho.numeric[v.index()] = q;

  QuantumStructure I = build_generic(spec);
  const bool semantic = satisfies(I, rho, phi);
  const bool syntactic = translate_formula(phi).holds(w);
  if (semantic != syntactic)
    throw Error(ErrorCode::Internal,
                "generic structure disagrees with the witness on the translated formula");
  return {std::move(spec), std::move(I), std::move(rho)};
}

}  // namespace plqo
