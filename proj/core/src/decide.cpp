#include "plqo/decide.hpp"

#include "plqo/errors.hpp"
#include "plqo/lra.hpp"
#include "plqo/syntax.hpp"

#include <future>

namespace plqo {

namespace {

using K = PlqoFormula::Kind;

bool is_literal(const PlqoFormula& f) {
  return f.is_atom() || (f.kind() == K::Neg && f.child().is_atom());
}

PlqoLiteral as_literal(const PlqoFormula& f) {
  return f.is_atom() ? PlqoLiteral{true, f} : PlqoLiteral{false, f.child()};
}

// Left-nested conjunction a & b is !(a -> !b).
bool flatten_conj(const PlqoFormula& f, Conjunction& out) {
  if (is_literal(f)) {
    out.push_back(as_literal(f));
    return true;
  }
  if (f.kind() != K::Neg || f.child().kind() != K::Impl || f.child().right().kind() != K::Neg)
    return false;
  const PlqoFormula& b = f.child().right().child();
  if (!is_literal(b) || !flatten_conj(f.child().left(), out)) return false;
  out.push_back(as_literal(b));
  return true;
}

// Depth-first over one disjunct per factor, in order; the first feasible
// branch wins.
class BranchSearch {
 public:
  BranchSearch(const ConstraintSet& base, const std::vector<DisjunctiveConstraintSet>& factors)
      : base_(base), factors_(factors) {}

  std::optional<Witness> run() {
    ConstraintSet acc;
    return visit(0, acc);
  }

  std::size_t explored() const noexcept { return explored_; }

 private:
  std::optional<Witness> visit(std::size_t i, ConstraintSet& acc) {
    if (i == factors_.size()) {
      ++explored_;
      LraSolver s;
      s.add(base_);
      s.add(acc);
      auto r = s.check();
      if (r.feasible) return std::move(r.witness);
      return std::nullopt;
    }
    for (const auto& d : factors_[i].disjuncts) {
      const std::size_t mark = acc.size();
      acc.append(d);
      auto w = visit(i + 1, acc);
      acc.constraints.resize(mark);
      if (w) return w;
    }
    return std::nullopt;
  }

  const ConstraintSet& base_;
  const std::vector<DisjunctiveConstraintSet>& factors_;
  std::size_t explored_ = 0;
};

std::vector<DisjunctiveConstraintSet> literal_factors(const Conjunction& lits) {
  std::vector<DisjunctiveConstraintSet> out;
  out.reserve(lits.size());
  for (const auto& l : lits) out.push_back(translate_literal(l));
  return out;
}

PlqoFormula falsity() {
  return PlqoFormula::prob(PropFormula::verum(), Cmp::Lt, RcofTerm::one());
}

PlqoFormula conj_all(const std::vector<PlqoFormula>& fs) {
  PlqoFormula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = PlqoFormula::conj(acc, fs[i]);
  return acc;
}

Countermodel verified_model(const PlqoFormula& target, Witness w, const DecideOptions& options) {
  auto m = model_from_witness(target, w, options.adams);
  if (!satisfies(m.structure, m.assignment, target))
    throw Error(ErrorCode::Internal, "countermodel failed re-verification");
  return {std::move(m.spec), std::move(m.structure), std::move(m.assignment), std::move(w)};
}

SideCondition required_side_condition(const PlqoFormula& phi, const DecideOptions& options) {
  auto sc = rr_side_condition(phi, options);
  if (!sc)
    throw Error(ErrorCode::Internal, "RR side condition failed for " + print_plqo(phi));
  return std::move(*sc);
}

}  // namespace

std::optional<std::pair<Conjunction, PlqoLiteral>> rr_shape(const PlqoFormula& phi) {
  if (is_literal(phi)) return std::make_pair(Conjunction{}, as_literal(phi));
  if (phi.kind() != K::Impl || !is_literal(phi.right())) return std::nullopt;
  Conjunction ante;
  if (!flatten_conj(phi.left(), ante)) return std::nullopt;
  return std::make_pair(std::move(ante), as_literal(phi.right()));
}

std::optional<SideCondition> rr_side_condition(const PlqoFormula& phi,
                                               const DecideOptions& options) {
  auto shape = rr_shape(phi);
  if (!shape) return std::nullopt;
  SideCondition sc{phi, b_phi(phi), prob_formulas(phi), {}, 0};
  sc.premise = q_adams(sc.symbols, sc.delta, options.adams);
  Conjunction lits = shape->first;
  lits.push_back(shape->second.negated());
  const auto factors = literal_factors(lits);
  BranchSearch search(sc.premise, factors);
  if (search.run()) return std::nullopt;
  sc.branches = search.explored();
  return sc;
}

Verdict check_valid(const PlqoFormula& phi, const DecideOptions& options) {
  const SymbolSet b = b_phi(phi);
  const auto delta = prob_formulas(phi);
  const ConstraintSet premise = q_adams(b, delta, options.adams);

  if (options.direct_rr && rr_shape(phi)) {
    if (auto sc = rr_side_condition(phi, options)) {
      Verdict v;
      v.valid = true;
      v.proof.emplace();
      v.proof->add_rr(std::move(*sc));
      return v;
    }
  }

  const PlqoFormula neg = PlqoFormula::neg(phi);
  const auto disjuncts = nnf_dnf_literals(neg, options.dnf);
  std::vector<std::vector<DisjunctiveConstraintSet>> factors;
  factors.reserve(disjuncts.size());
  for (const auto& eta : disjuncts) factors.push_back(literal_factors(eta));

  std::optional<Witness> witness;
  if (options.parallel && disjuncts.size() > 1) {
    std::vector<std::future<std::optional<Witness>>> jobs;
    jobs.reserve(factors.size());
    for (const auto& f : factors)
      jobs.push_back(std::async(std::launch::async, [&premise, &f] {
        return BranchSearch(premise, f).run();
      }));
    // Collect every result so no task outlives its inputs, then reduce in order.
    std::vector<std::optional<Witness>> results;
    for (auto& j : jobs) results.push_back(j.get());
    for (auto& r : results)
      if (r) {
        witness = std::move(r);
        break;
      }
  } else {
    for (const auto& f : factors) {
      witness = BranchSearch(premise, f).run();
      if (witness) break;
    }
  }

  Verdict v;
  if (witness) {
    v.countermodel = verified_model(neg, std::move(*witness), options);
    return v;
  }

  v.valid = true;
  Proof& proof = v.proof.emplace();
  if (disjuncts.empty()) {
    if (!is_skeleton_tautology(phi))
      throw Error(ErrorCode::Internal, "empty normal form for a non-tautology");
    proof.add_tt(phi);
    return v;
  }
  const PlqoFormula l = falsity();
  const PlqoFormula not_l = PlqoFormula::neg(l);
  const std::size_t not_l_line = proof.add_rr(required_side_condition(not_l, options));
  std::vector<PlqoFormula> refutations;
  std::vector<std::size_t> refutation_lines;
  for (const auto& eta : disjuncts) {
    PlqoFormula psi = PlqoFormula::impl(conjunction_formula(eta), l);
    refutation_lines.push_back(proof.add_rr(required_side_condition(psi, options)));
    refutations.push_back(std::move(psi));
  }
  PlqoFormula glue = phi;
  for (auto it = refutations.rbegin(); it != refutations.rend(); ++it)
    glue = PlqoFormula::impl(*it, glue);
  const std::size_t tt = proof.add_tt(PlqoFormula::impl(not_l, glue));
  std::size_t cur = proof.add_mp(not_l_line, tt);
  for (std::size_t line : refutation_lines) cur = proof.add_mp(line, cur);
  return v;
}

Verdict check_entail(const std::vector<PlqoFormula>& gamma, const PlqoFormula& phi,
                     const DecideOptions& options) {
  if (gamma.empty()) return check_valid(phi, options);
  const PlqoFormula combined = PlqoFormula::impl(conj_all(gamma), phi);
  Verdict inner = check_valid(combined, options);
  if (!inner.valid) return inner;

  Verdict v;
  v.valid = true;
  Proof& proof = v.proof.emplace();
  for (const auto& g : gamma) proof.add_hyp(g);
  const std::size_t implication = proof.append(*inner.proof);
  if (gamma.size() == 1) {
    proof.add_mp(1, implication);
    return v;
  }
  PlqoFormula curried = phi;
  for (auto it = gamma.rbegin(); it != gamma.rend(); ++it) curried = PlqoFormula::impl(*it, curried);
  const std::size_t tt = proof.add_tt(PlqoFormula::impl(combined, curried));
  std::size_t cur = proof.add_mp(implication, tt);
  for (std::size_t i = 1; i <= gamma.size(); ++i) cur = proof.add_mp(i, cur);
  return v;
}

SatResult check_sat(const PlqoFormula& phi, const DecideOptions& options) {
  Verdict v = check_valid(PlqoFormula::neg(phi), options);
  SatResult out;
  if (v.valid) {
    out.refutation = std::move(v.proof);
    return out;
  }
  Countermodel& m = *v.countermodel;
  if (!satisfies(m.structure, m.assignment, phi))
    throw Error(ErrorCode::Internal, "model failed re-verification");
  out.satisfiable = true;
  out.model = std::move(v.countermodel);
  return out;
}

Proof derive_schema(Schema schema, const std::vector<PropFormula>& args,
                    const DecideOptions& options) {
  auto arg = [&](std::size_t i, const char* fallback) {
    return i < args.size() ? args[i] : parse_prop(fallback);
  };
  auto side = [&](const PlqoFormula& f) {
    auto sc = rr_side_condition(f, options);
    if (!sc)
      throw Error(ErrorCode::SchemaPreconditionFailed,
                  "side condition does not hold for " + print_plqo(f));
    return std::move(*sc);
  };
  Proof proof;
  switch (schema) {
    case Schema::ObsEquivalence: {
      if (args.size() != 0 && args.size() != 2)
        throw Error(ErrorCode::SchemaPreconditionFailed, "schema takes two formulas");
      const PropFormula a1 = arg(0, "B1 & B2");
      const PropFormula a2 = arg(1, "B2 & B1");
      if (!is_tautology(PropFormula::iff(a1, a2)))
        throw Error(ErrorCode::SchemaPreconditionFailed,
                    print_prop(a1) + " and " + print_prop(a2) + " are not equivalent");
      const PlqoFormula o1 = PlqoFormula::obs(a1);
      const PlqoFormula o2 = PlqoFormula::obs(a2);
      const PlqoFormula f12 = PlqoFormula::impl(o1, o2);
      const PlqoFormula f21 = PlqoFormula::impl(o2, o1);
      const std::size_t l2 = proof.add_rr(side(f12));
      const std::size_t l4 = proof.add_rr(side(f21));
      const std::size_t l5 =
          proof.add_tt(PlqoFormula::impl(f12, PlqoFormula::impl(f21, PlqoFormula::iff(o1, o2))));
      const std::size_t l6 = proof.add_mp(l2, l5);
      proof.add_mp(l4, l6);
      return proof;
    }
    case Schema::ObsProbNonnegative: {
      if (args.size() > 1)
        throw Error(ErrorCode::SchemaPreconditionFailed, "schema takes one formula");
      const PropFormula a = arg(0, "B1 & B2");
      const PlqoFormula hyp = PlqoFormula::obs(a);
      const std::size_t h = proof.add_hyp(hyp);
      const std::size_t rr =
          proof.add_rr(side(PlqoFormula::impl(hyp, PlqoFormula::prob_ge(a, RcofTerm::zero()))));
      proof.add_mp(h, rr);
      return proof;
    }
    case Schema::ObsVerum: {
      if (!args.empty())
        throw Error(ErrorCode::SchemaPreconditionFailed, "schema takes no formulas");
      proof.add_rr(side(PlqoFormula::obs(PropFormula::verum())));
      return proof;
    }
  }
  throw Error(ErrorCode::Internal, "unknown schema");
}

bool conservativeness_check(const PropFormula& alpha, const DecideOptions& options) {
  const PlqoFormula star = PlqoFormula::impl(PlqoFormula::obs(alpha),
                                             PlqoFormula::prob(alpha, Cmp::Eq, RcofTerm::one()));
  return check_valid(star, options).valid;
}

ProofCheck check_proof(const Proof& proof, const std::vector<PlqoFormula>& hypotheses,
                       const DecideOptions& options) {
  ProofCheck out;
  auto fail = [&](std::size_t n, const std::string& why) {
    out.ok = false;
    out.errors.push_back("line " + std::to_string(n) + ": " + why);
  };
  const auto& lines = proof.lines();
  const auto& scs = proof.side_conditions();
  for (std::size_t idx = 0; idx < lines.size(); ++idx) {
    const std::size_t n = idx + 1;
    const ProofLine& l = lines[idx];
    for (std::size_t r : l.refs)
      if (r == 0 || r >= n) fail(n, "cites line " + std::to_string(r) + " which is not earlier");
    if (l.rule != Rule::Rcof && !l.formula) {
      fail(n, "missing formula");
      continue;
    }
    switch (l.rule) {
      case Rule::Hyp: {
        bool found = false;
        for (const auto& h : hypotheses) found = found || h == *l.formula;
        if (!found) fail(n, "hypothesis not among the premises");
        break;
      }
      case Rule::Rcof: {
        if (!l.side_condition || *l.side_condition >= scs.size()) {
          fail(n, "no side condition attached");
          break;
        }
        const SideCondition& sc = scs[*l.side_condition];
        auto redo = rr_side_condition(sc.rr_formula, options);
        if (!redo) fail(n, "side condition is not a theorem");
        else if (redo->symbols != sc.symbols || !(redo->premise.constraints == sc.premise.constraints))
          fail(n, "recorded premise differs from the recomputed one");
        break;
      }
      case Rule::Rr: {
        if (l.refs.size() != 1 || l.refs[0] == 0 || l.refs[0] >= n) {
          fail(n, "RR must cite one earlier line");
          break;
        }
        const ProofLine& c = lines[l.refs[0] - 1];
        if (c.rule != Rule::Rcof || !c.side_condition || *c.side_condition >= scs.size())
          fail(n, "RR must cite an RCOF line");
        else if (!(scs[*c.side_condition].rr_formula == *l.formula))
          fail(n, "cited side condition belongs to a different formula");
        else if (!rr_shape(*l.formula))
          fail(n, "formula is not of RR shape");
        break;
      }
      case Rule::Tt:
        if (!is_skeleton_tautology(*l.formula)) fail(n, "not a tautological formula");
        break;
      case Rule::Mp: {
        if (l.refs.size() != 2 || l.refs[0] == 0 || l.refs[1] == 0 || l.refs[0] >= n ||
            l.refs[1] >= n) {
          fail(n, "MP must cite two earlier lines");
          break;
        }
        const auto& a = lines[l.refs[0] - 1].formula;
        const auto& ab = lines[l.refs[1] - 1].formula;
        if (!a || !ab || ab->kind() != K::Impl || !(ab->left() == *a) ||
            !(ab->right() == *l.formula))
          fail(n, "MP premises do not match");
        break;
      }
    }
  }
  return out;
}

}  // namespace plqo
