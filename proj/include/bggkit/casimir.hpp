// Casimir eigenvalues, the graded audit of chain spaces, and splitting
// products for invariant differential operators.
//
// All values use the Killing-normalized form, under which the adjoint module
// has Casimir eigenvalue exactly 1.  A component of lowest weight mu enters
// the formulas through nu = -mu.

#pragma once

#include "bggkit/characters.hpp"
#include "bggkit/kostant.hpp"
#include "bggkit/parabolic.hpp"
#include "bggkit/root_system.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace bggkit {

// <nu, nu + 2 rho> in the Killing normalization.
inline Rational casimir_eigenvalue(const RootSystem& rs, const Weight& nu) {
  return rs.killing_inner(nu, nu) + 2 * rs.killing_inner(nu, rs.rho());
}

// Eigenvalue on the module itself (lowest weight -lambda_low).
inline Rational casimir_c0(const RootSystem& rs, const Weight& lambda_low) {
  return casimir_eigenvalue(rs, lambda_low);
}

struct EigenvalueReport {
  int degree = 0;
  Weight lowest;             // Levi-antidominant lowest weight of the component
  long long multiplicity = 1;
  BigInt dim;
  Rational homogeneity;      // grading-element eigenvalue
  Rational casimir;          // c(nu), nu = -lowest
  Rational laplacian;        // box(nu)
  Rational c0;
  bool identity_holds = false;  // c = 2 box + c0
};

// Decompose Lambda^k p_+ tensor V(lambda) into Levi components and attach all
// scalar data.  Pure character computation; no matrices.
inline std::vector<EigenvalueReport> graded_casimir_audit(
    const ParabolicData& pd, const WeylGroup& wg, const Weight& lambda, int k,
    const Guardrails& guards = Guardrails::from_env()) {
  const RootSystem& rs = pd.rs;
  if (!lambda.is_integral() || !lambda.is_dominant())
    throw std::invalid_argument("graded_casimir_audit needs a dominant integral weight");
  const Weight lambda_low = lambda_low_of(rs, wg, lambda);
  const Rational c0 = casimir_c0(rs, lambda_low);
  const WeightMultiset v_char = freudenthal_weights(rs, Subsystem::full(rs), lambda);
  const WeightMultiset chain_char = wedge_character(pd, k, v_char, guards);
  std::vector<EigenvalueReport> out;
  for (const auto& comp : decompose_g0_rep(pd, chain_char)) {
    EigenvalueReport r;
    r.degree = k;
    r.lowest = weight_of_key(comp.lowest);
    r.multiplicity = comp.multiplicity;
    r.dim = weyl_dim(rs, Subsystem::levi(pd), weight_of_key(comp.highest));
    r.homogeneity = pd.grading_element.eval(r.lowest);
    const Weight nu = -r.lowest;
    r.casimir = casimir_eigenvalue(rs, nu);
    r.laplacian = laplacian_eigenvalue(rs, lambda_low, nu);
    r.c0 = c0;
    r.identity_holds = (r.casimir == 2 * r.laplacian + c0);
    out.push_back(std::move(r));
  }
  return out;
}

// One level of a p_+-filtration together with its component eigenvalues.
struct FiltrationLevel {
  int level = 0;              // 0 = bottom quotient, N = p_+-invariants
  Rational homogeneity;       // grading-element eigenvalue on the subquotient
  std::vector<Weight> component_lowest;
  std::vector<Rational> component_casimir;
};

struct SplittingFactor {
  int level = 0;
  std::vector<Rational> distinct_eigenvalues;
};

struct SplittingReport {
  int target_level = 0;
  Weight target_lowest;
  Rational mu0;                       // Casimir eigenvalue of the target component
  std::vector<SplittingFactor> factors;  // one per level above the target
  Rational product;                   // product over all listed eigenvalue differences
  bool splits = false;                // product != 0
  std::string note;
};

// Product of (mu0 - mu) over the distinct Casimir eigenvalues of every level
// strictly deeper than the target; nonzero iff the associated invariant
// splitting operator exists.
inline SplittingReport splitting_factors(const std::vector<FiltrationLevel>& filtration,
                                         int target_level, const Weight& target_lowest) {
  const FiltrationLevel* tgt = nullptr;
  for (const auto& lv : filtration)
    if (lv.level == target_level) tgt = &lv;
  if (!tgt) throw std::invalid_argument("target level not present in filtration");
  int idx = -1;
  for (size_t i = 0; i < tgt->component_lowest.size(); ++i)
    if (tgt->component_lowest[i] == target_lowest) idx = static_cast<int>(i);
  if (idx < 0) throw std::invalid_argument("target component not present at its level");

  SplittingReport rep;
  rep.target_level = target_level;
  rep.target_lowest = target_lowest;
  rep.mu0 = tgt->component_casimir[idx];
  rep.product = 1;
  for (const auto& lv : filtration) {
    if (lv.level <= target_level) continue;
    SplittingFactor f;
    f.level = lv.level;
    std::set<Rational> distinct(lv.component_casimir.begin(), lv.component_casimir.end());
    f.distinct_eigenvalues.assign(distinct.begin(), distinct.end());
    for (const auto& mu : f.distinct_eigenvalues) rep.product *= (rep.mu0 - mu);
    rep.factors.push_back(std::move(f));
  }
  rep.splits = (rep.product != 0);
  rep.note = "factor count may shrink when the target generates a proper submodule";
  return rep;
}

// Matrix-free filtration of V(lambda) restricted to the parabolic: level j of
// the grading-element eigenvalue ladder, decomposed into Levi components.
inline std::vector<FiltrationLevel> character_p_filtration(const ParabolicData& pd,
                                                           const Weight& lambda) {
  const RootSystem& rs = pd.rs;
  if (!lambda.is_integral() || !lambda.is_dominant())
    throw std::invalid_argument("character_p_filtration needs a dominant integral weight");
  const WeightMultiset v_char = freudenthal_weights(rs, Subsystem::full(rs), lambda);
  // bucket by grading-element eigenvalue
  std::map<Rational, WeightMultiset> buckets;
  for (const auto& [k, m] : v_char) buckets[pd.grading_element.eval(weight_of_key(k))][k] = m;
  // eigenvalues must form a unit ladder
  std::vector<Rational> eigs;
  for (const auto& [e, _] : buckets) eigs.push_back(e);
  for (size_t i = 0; i + 1 < eigs.size(); ++i)
    if (eigs[i + 1] - eigs[i] != 1)
      throw InternalError("grading-element eigenvalues do not form a unit ladder");
  std::vector<FiltrationLevel> out;
  int level = 0;
  for (const auto& [e, ms] : buckets) {
    FiltrationLevel lv;
    lv.level = level++;
    lv.homogeneity = e;
    for (const auto& comp : decompose_g0_rep(pd, ms)) {
      for (long long c = 0; c < comp.multiplicity; ++c) {
        lv.component_lowest.push_back(weight_of_key(comp.lowest));
        lv.component_casimir.push_back(casimir_eigenvalue(rs, -weight_of_key(comp.lowest)));
      }
    }
    out.push_back(std::move(lv));
  }
  return out;
}

}  // namespace bggkit
