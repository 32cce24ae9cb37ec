// Structured reports: the fast symbolic summary (grading, Hasse diagram, BGG
// components with their eigenvalues, filtration and splitting scalars), plus
// the verification mode that rebuilds everything through the matrix
// realization and embeds one pass/fail entry per cross-check.
//
// JSON output is byte-deterministic: insertion-ordered objects, rationals as
// canonical "p/q" strings, big integers as decimal strings.

#pragma once

#include "bggkit/casimir.hpp"
#include "bggkit/chain_complex.hpp"
#include "bggkit/filtration.hpp"
#include "bggkit/kostant.hpp"
#include "bggkit/parabolic.hpp"
#include "bggkit/realization.hpp"
#include "bggkit/root_system.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace bggkit {

using Json = nlohmann::ordered_json;

struct JobSpec {
  std::string mode = "report";  // report | verify | diagram
  std::string type;             // e.g. "A2"
  std::vector<int> crossed;     // 1-based, sorted
  std::vector<long long> weight;
  std::string format = "json";  // json | text | dot
  long long max_dim = 0;        // overrides the module-dimension guardrail when > 0

  bool operator==(const JobSpec&) const = default;
};

struct ComponentReport {
  int hasse = 0;
  int degree = 0;
  std::vector<int> word;  // 1-based reduced word
  std::vector<long long> lowest;
  Rational homogeneity;
  std::string dim;  // decimal
  Rational casimir;
  Rational laplacian;
  Rational c0;
  bool identity = true;  // casimir == 2*laplacian + c0

  bool operator==(const ComponentReport&) const = default;
};

struct FiltrationLevelReport {
  int level = 0;
  Rational homogeneity;
  std::vector<std::pair<std::vector<long long>, Rational>> components;  // (lowest, casimir)

  bool operator==(const FiltrationLevelReport&) const = default;
};

struct SplittingEntryReport {
  int level = 0;
  std::vector<long long> lowest;
  Rational mu0;
  Rational product;
  bool splits = false;
  std::vector<std::pair<int, std::vector<Rational>>> factors;  // (level, distinct eigenvalues)

  bool operator==(const SplittingEntryReport&) const = default;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;

  bool operator==(const CheckResult&) const = default;
};

struct Report {
  std::string schema_version = "1";
  JobSpec job;

  int depth = 0;
  long long dim_g = 0;
  long long dim_g0 = 0;
  long long dim_p_plus = 0;
  std::vector<std::pair<int, long long>> layers;
  std::vector<Rational> grading_element;
  std::string weyl_order;       // decimal
  std::string levi_weyl_order;  // decimal

  struct HasseNode {
    std::vector<int> word;  // 1-based
    int degree = 0;
    bool operator==(const HasseNode&) const = default;
  };
  std::vector<HasseNode> hasse;
  std::vector<std::pair<int, int>> hasse_edges;

  std::vector<long long> lambda_low;
  std::string module_dim;  // decimal
  std::vector<ComponentReport> components;

  std::vector<FiltrationLevelReport> filtration;
  std::vector<SplittingEntryReport> splitting;

  bool has_verification = false;
  bool verification_passed = true;
  std::vector<CheckResult> checks;

  bool operator==(const Report&) const = default;
};

// ---------------------------------------------------------------------------
// Computation.

namespace detail {

inline std::vector<int> one_based(const std::vector<int>& letters) {
  std::vector<int> out;
  for (int l : letters) out.push_back(l + 1);
  return out;
}

struct VerifyContext {
  const RootSystem& rs;
  const ParabolicData& pd;
  const WeylGroup& wg;
  const BGGDiagram& bgg;
  const Weight& lambda;
  const Guardrails& guards;
};

inline void run_verification(Report& rep, const VerifyContext& vc) {
  auto check = [&](const std::string& name, bool pass, const std::string& detail = "") {
    rep.checks.push_back({name, pass, pass ? "" : detail});
    if (!pass) rep.verification_passed = false;
  };
  const RootSystem& rs = vc.rs;
  const ParabolicData& pd = vc.pd;

  const LieAlgebraRealization L = realize_algebra(rs, vc.guards);
  const RepRealization V = build_irrep(L, vc.lambda, vc.guards);

  check("jacobi_identity", jacobi_identity_check(L));
  check("killing_dual_form", killing_dual_form_check(L));

  // Casimir matrix against the weight formula, highest and lowest readings.
  {
    const Mat cm = casimir_matrix(L, V);
    const auto s = scalar_of(cm);
    const Rational from_high = casimir_eigenvalue(rs, vc.lambda);
    const Rational from_low = casimir_eigenvalue(rs, vc.bgg.lambda_low);
    check("casimir_matrix_scalar", s.has_value() && *s == from_high && *s == from_low,
          s ? "scalar " + rat_str(*s) + " != " + rat_str(from_high) : "matrix not scalar");
  }

  // Adapted frame: pairing pattern and basis-independence of the Casimir.
  {
    const AdaptedBasis ab = adapted_basis(L, pd);
    bool pattern = true;
    const auto np = ab.Z.size();
    for (size_t i = 0; i < np; ++i)
      for (size_t j = 0; j < np; ++j) {
        if (L.killing_form(ab.X[i], ab.Z[j]) != (i == j ? 1 : 0)) pattern = false;
        if (L.killing_form(ab.X[i], ab.X[j]) != 0) pattern = false;
        if (L.killing_form(ab.Z[i], ab.Z[j]) != 0) pattern = false;
      }
    for (const auto& a : ab.A)
      for (size_t i = 0; i < np; ++i) {
        if (L.killing_form(a, ab.Z[i]) != 0) pattern = false;
        if (L.killing_form(a, ab.X[i]) != 0) pattern = false;
      }
    if (ab.dual_X != ab.Z || ab.dual_Z != ab.X) pattern = false;
    check("adapted_frame_pairing", pattern);

    std::vector<Vec> frame, dual;
    for (const auto& v : ab.X) frame.push_back(v);
    for (const auto& v : ab.A) frame.push_back(v);
    for (const auto& v : ab.Z) frame.push_back(v);
    for (const auto& v : ab.dual_X) dual.push_back(v);
    for (const auto& v : ab.dual_A) dual.push_back(v);
    for (const auto& v : ab.dual_Z) dual.push_back(v);
    std::vector<Vec> std_basis, std_dual = dual_bases(L);
    for (int a = 0; a < L.dim; ++a) std_basis.push_back(L.unit(a));
    const Mat c1 = casimir_matrix_from_dual_pair(L, V, std_basis, std_dual);
    const Mat c2 = casimir_matrix_from_dual_pair(L, V, frame, dual);
    check("casimir_basis_independence", c1 == c2 && c1 == casimir_matrix(L, V));
  }

  check("filtration_killing_pairing", filtration_pairing_check(pd, L).ok());

  // Chain complex and homology.
  const ChainComplex cc = build_chain_complex(L, pd, V, vc.guards);
  check("boundary_squares_to_zero", boundary_squared_is_zero(cc));
  check("boundary_g0_equivariant", boundary_is_g0_equivariant(cc));

  const ChainHomology hom = compute_homology_blocks(cc);
  const auto brute = homology_bruteforce(cc, hom);
  {
    std::map<std::pair<int, WKey>, long long> want, got;
    for (const auto& c : vc.bgg.components) want[{c.degree, wkey(c.lowest)}] += c.multiplicity;
    for (const auto& c : brute) got[{c.degree, wkey(c.lowest)}] += c.multiplicity;
    check("homology_matches_matrix_oracle", want == got,
          "fast and matrix homology multisets differ");
  }
  check("p_plus_maps_kernel_into_image", p_plus_maps_kernel_into_image(cc, hom));

  // Eigenvalue identity across all wedge components; kernel = homology.
  {
    bool identity = true, kernel_match = true;
    std::set<std::pair<int, WKey>> homology_set;
    for (const auto& c : vc.bgg.components) homology_set.insert({c.degree, wkey(c.lowest)});
    for (int k = 0; k <= static_cast<int>(pd.p_plus_roots.size()); ++k) {
      for (const auto& er : graded_casimir_audit(pd, vc.wg, vc.lambda, k, vc.guards)) {
        if (!er.identity_holds) identity = false;
        const bool in_hom = homology_set.count({k, wkey(er.lowest)}) > 0;
        if ((er.laplacian == 0) != in_hom) kernel_match = false;
      }
    }
    check("wedge_eigenvalue_identity", identity);
    check("laplacian_kernel_is_homology", kernel_match);
  }

  // Euler characteristic.
  {
    BigInt lhs = 0, rhs = 0;
    BigInt binom = 1;
    const int np = static_cast<int>(pd.p_plus_roots.size());
    for (int k = 0; k <= np; ++k) {
      lhs += (k % 2 ? -1 : 1) * binom * V.dim;
      binom = binom * (np - k) / (k + 1);
    }
    for (const auto& c : brute) rhs += (c.degree % 2 ? -1 : 1) * BigInt(c.multiplicity) * c.dim;
    check("euler_characteristic", lhs == rhs,
          "chain alternating sum " + lhs.str() + " != homology " + rhs.str());
  }

  // Module filtration under the parabolic.
  {
    const MatrixFiltration mf = matrix_p_filtration(L, pd, V);
    check("filtration_p_plus_trivial", mf.p_plus_trivial_quotients);
    check("filtration_unit_ladder", mf.unit_ladder);
    check("filtration_casimir_scalars", filtration_casimir_check(L, pd, mf));
    const auto fast = character_p_filtration(pd, vc.lambda);
    const auto slow = filtration_levels(mf);
    bool same = fast.size() == slow.size();
    if (same)
      for (size_t i = 0; i < fast.size(); ++i) {
        if (fast[i].level != slow[i].level || fast[i].homogeneity != slow[i].homogeneity)
          same = false;
        auto key = [](const FiltrationLevel& f) {
          std::multiset<std::pair<std::vector<std::string>, std::string>> s;
          for (size_t c = 0; c < f.component_lowest.size(); ++c) {
            std::vector<std::string> w;
            for (const auto& x : f.component_lowest[c].m) w.push_back(rat_str(x));
            s.insert({w, rat_str(f.component_casimir[c])});
          }
          return s;
        };
        if (key(fast[i]) != key(slow[i])) same = false;
      }
    check("filtration_matches_character_path", same);
  }
}

}  // namespace detail

inline Report run_report(const JobSpec& job, const Guardrails& base_guards = Guardrails::from_env()) {
  Guardrails guards = base_guards;
  if (job.max_dim > 0) guards.irrep_dim = job.max_dim;

  const DynkinSpec spec = DynkinSpec::parse(job.type);
  const RootSystem rs = build_root_system(spec);
  if (static_cast<int>(job.weight.size()) != rs.rank)
    throw std::invalid_argument("weight list length must equal the rank");
  ParabolicSpec pspec;
  pspec.crossed = job.crossed;
  pspec.validate(rs.rank);
  const ParabolicData pd = make_parabolic(rs, pspec);
  Weight lambda = Weight::from_ints(job.weight);
  if (!lambda.is_dominant())
    throw std::invalid_argument("highest weight must be dominant (nonnegative integers)");
  const BigInt module_dim = weyl_dim(rs, Subsystem::full(rs), lambda);
  if (module_dim > guards.irrep_dim)
    throw GuardrailError("module dimension " + module_dim.str() + " exceeds limit " +
                         std::to_string(guards.irrep_dim) +
                         " (raise via --max-dim or BGGKIT_GUARDRAIL_SCALE)");
  const WeylGroup wg = enumerate_weyl(rs, guards);
  const HasseDiagram hd = hasse_diagram(pd, wg);
  const BGGDiagram bgg = homology(pd, wg, hd, lambda);

  Report rep;
  rep.job = job;
  rep.depth = pd.depth;
  rep.dim_g = rs.dim_g();
  rep.dim_g0 = pd.dim_g0();
  rep.dim_p_plus = pd.dim_p_plus();
  for (const auto& [layer, d] : pd.layer_dims) rep.layers.push_back({layer, d});
  rep.grading_element = pd.grading_element.coroot_coords;
  rep.weyl_order = rs.weyl_order().str();
  rep.levi_weyl_order = std::to_string(hd.levi_weyl_order);

  for (const auto& h : hd.elements)
    rep.hasse.push_back({detail::one_based(h.word.letters), h.degree});
  rep.hasse_edges = hd.cover_edges;

  rep.lambda_low = bgg.lambda_low.as_ints();
  rep.module_dim = weyl_dim(rs, Subsystem::full(rs), lambda).str();
  const Rational c0 = casimir_c0(rs, bgg.lambda_low);
  for (size_t i = 0; i < bgg.components.size(); ++i) {
    const HomologyComponent& c = bgg.components[i];
    ComponentReport cr;
    cr.hasse = bgg.hasse_index[i];
    cr.degree = c.degree;
    cr.word = detail::one_based(hd.elements[bgg.hasse_index[i]].word.letters);
    cr.lowest = c.lowest.as_ints();
    cr.homogeneity = c.homogeneity;
    cr.dim = c.dim.str();
    cr.casimir = casimir_eigenvalue(rs, -c.lowest);
    cr.laplacian = laplacian_eigenvalue(rs, bgg.lambda_low, -c.lowest);
    cr.c0 = c0;
    cr.identity = (cr.casimir == 2 * cr.laplacian + cr.c0);
    rep.components.push_back(std::move(cr));
  }

  const auto filtration = character_p_filtration(pd, lambda);
  for (const auto& lv : filtration) {
    FiltrationLevelReport fr;
    fr.level = lv.level;
    fr.homogeneity = lv.homogeneity;
    for (size_t c = 0; c < lv.component_lowest.size(); ++c)
      fr.components.push_back({lv.component_lowest[c].as_ints(), lv.component_casimir[c]});
    rep.filtration.push_back(std::move(fr));
  }
  std::set<std::pair<int, std::vector<long long>>> seen_targets;
  for (const auto& lv : filtration)
    for (const auto& lw : lv.component_lowest) {
      if (!seen_targets.insert({lv.level, lw.as_ints()}).second) continue;
      const SplittingReport sr = splitting_factors(filtration, lv.level, lw);
      SplittingEntryReport er;
      er.level = sr.target_level;
      er.lowest = sr.target_lowest.as_ints();
      er.mu0 = sr.mu0;
      er.product = sr.product;
      er.splits = sr.splits;
      for (const auto& f : sr.factors) er.factors.push_back({f.level, f.distinct_eigenvalues});
      rep.splitting.push_back(std::move(er));
    }

  if (job.mode == "verify") {
    rep.has_verification = true;
    detail::run_verification(rep, {rs, pd, wg, bgg, lambda, guards});
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Serialization.

inline Json to_json(const Report& r) {
  Json j;
  j["schema_version"] = r.schema_version;
  j["job"] = {{"mode", r.job.mode},
              {"type", r.job.type},
              {"crossed", r.job.crossed},
              {"weight", r.job.weight},
              {"format", r.job.format},
              {"max_dim", r.job.max_dim}};
  Json layers = Json::array();
  for (const auto& [l, d] : r.layers) layers.push_back({l, d});
  Json ge = Json::array();
  for (const auto& x : r.grading_element) ge.push_back(rat_str(x));
  j["grading"] = {{"depth", r.depth},
                  {"dim_g", r.dim_g},
                  {"dim_g0", r.dim_g0},
                  {"dim_p_plus", r.dim_p_plus},
                  {"layers", layers},
                  {"grading_element", ge},
                  {"weyl_order", r.weyl_order},
                  {"levi_weyl_order", r.levi_weyl_order}};
  Json hasse = Json::array();
  for (const auto& h : r.hasse) hasse.push_back({{"word", h.word}, {"degree", h.degree}});
  Json edges = Json::array();
  for (const auto& [a, b] : r.hasse_edges) edges.push_back({a, b});
  j["hasse"] = {{"elements", hasse}, {"cover_edges", edges}};
  Json comps = Json::array();
  for (const auto& c : r.components)
    comps.push_back({{"hasse", c.hasse},
                     {"degree", c.degree},
                     {"word", c.word},
                     {"lowest", c.lowest},
                     {"homogeneity", rat_str(c.homogeneity)},
                     {"dim", c.dim},
                     {"casimir", rat_str(c.casimir)},
                     {"laplacian", rat_str(c.laplacian)},
                     {"c0", rat_str(c.c0)},
                     {"identity_2box_plus_c0", c.identity}});
  j["bgg"] = {{"lambda_low", r.lambda_low}, {"module_dim", r.module_dim}, {"components", comps}};
  Json filt = Json::array();
  for (const auto& lv : r.filtration) {
    Json fc = Json::array();
    for (const auto& [lw, cas] : lv.components)
      fc.push_back({{"lowest", lw}, {"casimir", rat_str(cas)}});
    filt.push_back(
        {{"level", lv.level}, {"homogeneity", rat_str(lv.homogeneity)}, {"components", fc}});
  }
  j["filtration"] = filt;
  Json split = Json::array();
  for (const auto& s : r.splitting) {
    Json factors = Json::array();
    for (const auto& [lvl, eigs] : s.factors) {
      Json es = Json::array();
      for (const auto& e : eigs) es.push_back(rat_str(e));
      factors.push_back({{"level", lvl}, {"eigenvalues", es}});
    }
    split.push_back({{"level", s.level},
                     {"lowest", s.lowest},
                     {"mu0", rat_str(s.mu0)},
                     {"product", rat_str(s.product)},
                     {"splits", s.splits},
                     {"factors", factors}});
  }
  j["splitting"] = split;
  if (r.has_verification) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["verification"] = {{"passed", r.verification_passed}, {"checks", checks}};
  }
  return j;
}

inline Report from_json(const Json& j) {
  Report r;
  r.schema_version = j.at("schema_version").get<std::string>();
  const Json& job = j.at("job");
  r.job.mode = job.at("mode").get<std::string>();
  r.job.type = job.at("type").get<std::string>();
  r.job.crossed = job.at("crossed").get<std::vector<int>>();
  r.job.weight = job.at("weight").get<std::vector<long long>>();
  r.job.format = job.at("format").get<std::string>();
  r.job.max_dim = job.at("max_dim").get<long long>();
  const Json& g = j.at("grading");
  r.depth = g.at("depth").get<int>();
  r.dim_g = g.at("dim_g").get<long long>();
  r.dim_g0 = g.at("dim_g0").get<long long>();
  r.dim_p_plus = g.at("dim_p_plus").get<long long>();
  for (const auto& p : g.at("layers")) r.layers.push_back({p.at(0).get<int>(), p.at(1).get<long long>()});
  for (const auto& x : g.at("grading_element")) r.grading_element.push_back(rat_parse(x.get<std::string>()));
  r.weyl_order = g.at("weyl_order").get<std::string>();
  r.levi_weyl_order = g.at("levi_weyl_order").get<std::string>();
  for (const auto& h : j.at("hasse").at("elements"))
    r.hasse.push_back({h.at("word").get<std::vector<int>>(), h.at("degree").get<int>()});
  for (const auto& e : j.at("hasse").at("cover_edges"))
    r.hasse_edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  const Json& bgg = j.at("bgg");
  r.lambda_low = bgg.at("lambda_low").get<std::vector<long long>>();
  r.module_dim = bgg.at("module_dim").get<std::string>();
  for (const auto& c : bgg.at("components")) {
    ComponentReport cr;
    cr.hasse = c.at("hasse").get<int>();
    cr.degree = c.at("degree").get<int>();
    cr.word = c.at("word").get<std::vector<int>>();
    cr.lowest = c.at("lowest").get<std::vector<long long>>();
    cr.homogeneity = rat_parse(c.at("homogeneity").get<std::string>());
    cr.dim = c.at("dim").get<std::string>();
    cr.casimir = rat_parse(c.at("casimir").get<std::string>());
    cr.laplacian = rat_parse(c.at("laplacian").get<std::string>());
    cr.c0 = rat_parse(c.at("c0").get<std::string>());
    cr.identity = c.at("identity_2box_plus_c0").get<bool>();
    r.components.push_back(std::move(cr));
  }
  for (const auto& lv : j.at("filtration")) {
    FiltrationLevelReport fr;
    fr.level = lv.at("level").get<int>();
    fr.homogeneity = rat_parse(lv.at("homogeneity").get<std::string>());
    for (const auto& c : lv.at("components"))
      fr.components.push_back({c.at("lowest").get<std::vector<long long>>(),
                               rat_parse(c.at("casimir").get<std::string>())});
    r.filtration.push_back(std::move(fr));
  }
  for (const auto& s : j.at("splitting")) {
    SplittingEntryReport er;
    er.level = s.at("level").get<int>();
    er.lowest = s.at("lowest").get<std::vector<long long>>();
    er.mu0 = rat_parse(s.at("mu0").get<std::string>());
    er.product = rat_parse(s.at("product").get<std::string>());
    er.splits = s.at("splits").get<bool>();
    for (const auto& f : s.at("factors")) {
      std::vector<Rational> eigs;
      for (const auto& e : f.at("eigenvalues")) eigs.push_back(rat_parse(e.get<std::string>()));
      er.factors.push_back({f.at("level").get<int>(), std::move(eigs)});
    }
    r.splitting.push_back(std::move(er));
  }
  if (j.contains("verification")) {
    r.has_verification = true;
    r.verification_passed = j.at("verification").at("passed").get<bool>();
    for (const auto& c : j.at("verification").at("checks"))
      r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                          c.at("detail").get<std::string>()});
  }
  return r;
}

inline std::string report_to_json_text(const Report& r) { return to_json(r).dump(2) + "\n"; }

inline std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << r.job.type << "  crossed {";
  for (size_t i = 0; i < r.job.crossed.size(); ++i) os << (i ? "," : "") << r.job.crossed[i];
  os << "}  weight (";
  for (size_t i = 0; i < r.job.weight.size(); ++i) os << (i ? "," : "") << r.job.weight[i];
  os << ")\n";
  os << "grading depth " << r.depth << ", dim g = " << r.dim_g << ", dim g0 = " << r.dim_g0
     << ", dim p+ = " << r.dim_p_plus << "\n";
  os << "layers:";
  for (const auto& [l, d] : r.layers) os << "  g_" << l << ":" << d;
  os << "\nweyl order " << r.weyl_order << ", levi order " << r.levi_weyl_order << ", hasse size "
     << r.hasse.size() << "\n";
  os << "module dim " << r.module_dim << ", lambda_low (";
  for (size_t i = 0; i < r.lambda_low.size(); ++i) os << (i ? "," : "") << r.lambda_low[i];
  os << ")\n";
  os << "components (degree | lowest | homogeneity | dim | casimir | laplacian | c0):\n";
  for (const auto& c : r.components) {
    os << "  " << c.degree << " | (";
    for (size_t i = 0; i < c.lowest.size(); ++i) os << (i ? "," : "") << c.lowest[i];
    os << ") | " << rat_str(c.homogeneity) << " | " << c.dim << " | " << rat_str(c.casimir)
       << " | " << rat_str(c.laplacian) << " | " << rat_str(c.c0)
       << (c.identity ? "" : " | IDENTITY VIOLATION") << "\n";
  }
  os << "filtration levels (level | homogeneity | components):\n";
  for (const auto& lv : r.filtration) {
    os << "  " << lv.level << " | " << rat_str(lv.homogeneity) << " |";
    for (const auto& [lw, cas] : lv.components) {
      os << " (";
      for (size_t i = 0; i < lw.size(); ++i) os << (i ? "," : "") << lw[i];
      os << "):" << rat_str(cas);
    }
    os << "\n";
  }
  os << "splitting (level | lowest | mu0 | product | splits):\n";
  for (const auto& s : r.splitting) {
    os << "  " << s.level << " | (";
    for (size_t i = 0; i < s.lowest.size(); ++i) os << (i ? "," : "") << s.lowest[i];
    os << ") | " << rat_str(s.mu0) << " | " << rat_str(s.product) << " | "
       << (s.splits ? "true" : "false") << "\n";
  }
  if (r.has_verification) {
    os << "verification: " << (r.verification_passed ? "PASSED" : "FAILED") << "\n";
    for (const auto& c : r.checks)
      os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name
         << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  }
  return os.str();
}

inline std::string report_to_dot(const Report& r) {
  std::ostringstream os;
  os << "digraph bgg {\n  rankdir=LR;\n  node [shape=box];\n";
  for (size_t i = 0; i < r.components.size(); ++i) {
    const auto& c = r.components[i];
    os << "  n" << i << " [label=\"deg " << c.degree << "\\nlowest (";
    for (size_t t = 0; t < c.lowest.size(); ++t) os << (t ? "," : "") << c.lowest[t];
    os << ")\\ncasimir " << rat_str(c.casimir) << "\"];\n";
  }
  // components align 1:1 with Hasse elements, so cover edges transfer directly
  std::map<int, size_t> by_hasse;
  for (size_t i = 0; i < r.components.size(); ++i) by_hasse[r.components[i].hasse] = i;
  for (const auto& [a, b] : r.hasse_edges) {
    auto ia = by_hasse.find(a), ib = by_hasse.find(b);
    if (ia != by_hasse.end() && ib != by_hasse.end())
      os << "  n" << ia->second << " -> n" << ib->second << ";\n";
  }
  os << "}\n";
  return os.str();
}

inline std::string render_report(const Report& r) {
  if (r.job.mode == "diagram" || r.job.format == "dot") return report_to_dot(r);
  if (r.job.format == "text") return report_to_text(r);
  return report_to_json_text(r);
}

// Debug dump of the realized algebra: basis labels, structure constants,
// Killing matrix, and the chosen base module.
inline Json dump_realization_json(const LieAlgebraRealization& L) {
  Json j;
  j["schema_version"] = "1";
  j["type"] = L.rs.spec.name();
  j["dim"] = L.dim;
  j["names"] = L.names;
  Json brackets = Json::array();
  for (int a = 0; a < L.dim; ++a)
    for (int b = a + 1; b < L.dim; ++b) {
      if (L.bracket_table[a][b].empty()) continue;
      Json terms = Json::array();
      for (const auto& [c, v] : L.bracket_table[a][b])
        terms.push_back({{"label", L.names[c]}, {"coeff", rat_str(v)}});
      brackets.push_back({{"a", L.names[a]}, {"b", L.names[b]}, {"terms", terms}});
    }
  j["brackets"] = brackets;
  Json killing = Json::array();
  for (int a = 0; a < L.dim; ++a) {
    Json row = Json::array();
    for (int b = 0; b < L.dim; ++b) row.push_back(rat_str(L.killing.at(a, b)));
    killing.push_back(row);
  }
  j["killing"] = killing;
  j["base_module"] = {{"dim", L.base_rep.dim},
                      {"highest_weight", L.base_rep.lambda.as_ints()}};
  return j;
}

}  // namespace bggkit
