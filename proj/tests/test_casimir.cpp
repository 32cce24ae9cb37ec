#include "../tests/test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>

using namespace bggkit;
using namespace bggkit::testutil;

TEST_CASE("casimir eigenvalue formula") {
  // Killing normalization: the adjoint representation has eigenvalue exactly 1
  for (const char* t : {"A1", "A2", "B2", "A3", "B3", "C3", "G2"}) {
    INFO(t);
    const RootSystem rs = make_rs(t);
    CHECK(casimir_eigenvalue(rs, rs.root_weight(rs.highest_root())) == 1);
  }

  CHECK(casimir_eigenvalue(make_rs("A1"), W({1})) == Rational(3, 8));
  CHECK(casimir_eigenvalue(make_rs("A2"), W({1, 0})) == Rational(4, 9));
  CHECK(casimir_eigenvalue(make_rs("B2"), W({0, 1})) == Rational(5, 12));
  CHECK(casimir_eigenvalue(make_rs("G2"), W({1, 0})) == Rational(1, 2));
  CHECK(casimir_eigenvalue(make_rs("A2"), W({0, 0})) == 0);

  // c0 is the eigenvalue through the dual lowest weight
  const RootSystem a2 = make_rs("A2");
  const WeylGroup wg = enumerate_weyl(a2);
  CHECK(casimir_c0(a2, lambda_low_of(a2, wg, W({1, 1}))) == 1);
  CHECK(casimir_c0(a2, lambda_low_of(a2, wg, W({0, 0}))) == 0);
}

TEST_CASE("graded audit on the A2 borel, trivial coefficients") {
  const RootSystem rs = make_rs("A2");
  const WeylGroup wg = enumerate_weyl(rs);
  const ParabolicData pd = make_borel(rs);

  const auto k1 = graded_casimir_audit(pd, wg, W({0, 0}), 1);
  REQUIRE(k1.size() == 3);
  std::map<std::vector<long long>, const EigenvalueReport*> by_lowest;
  for (const auto& r : k1) by_lowest[r.lowest.as_ints()] = &r;

  REQUIRE(by_lowest.count({2, -1}) == 1);
  CHECK((by_lowest[{2, -1}]->laplacian == 0));  // homology weight alpha_1
  CHECK((by_lowest[{2, -1}]->casimir == 0));
  REQUIRE(by_lowest.count({-1, 2}) == 1);
  CHECK((by_lowest[{-1, 2}]->laplacian == 0));
  REQUIRE(by_lowest.count({1, 1}) == 1);
  CHECK((by_lowest[{1, 1}]->laplacian == Rational(-1, 6)));  // not a homology weight
  CHECK((by_lowest[{1, 1}]->casimir == Rational(-1, 3)));
  for (const auto& r : k1) {
    CHECK(r.c0 == 0);
    CHECK(r.identity_holds);
  }
}

TEST_CASE("graded audit covers the chain space and satisfies the identity") {
  struct Case {
    const char* type;
    std::vector<int> crossed;
    std::vector<long long> lambda;
  };
  for (const Case& c : {Case{"A2", {1}, {1, 1}}, Case{"B2", {2}, {0, 1}}, Case{"G2", {2}, {0, 0}}}) {
    INFO(c.type);
    const RootSystem rs = make_rs(c.type);
    const WeylGroup wg = enumerate_weyl(rs);
    const ParabolicData pd = make_pd(rs, c.crossed);
    const BigInt v_dim = weyl_dim(rs, Subsystem::full(rs), W(c.lambda));
    const int p = static_cast<int>(pd.p_plus_roots.size());
    for (int k = 0; k <= p; ++k) {
      BigInt binom = 1;
      for (int i = 0; i < k; ++i) binom = binom * (p - i) / (i + 1);
      BigInt covered = 0;
      for (const auto& r : graded_casimir_audit(pd, wg, W(c.lambda), k)) {
        CHECK(r.identity_holds);
        CHECK(r.casimir == 2 * r.laplacian + r.c0);
        CHECK(r.homogeneity == pd.grading_element.eval(r.lowest));
        covered += BigInt(r.multiplicity) * r.dim;
      }
      CHECK(covered == binom * v_dim);
    }
  }
}

TEST_CASE("laplacian kernel matches the homology weights") {
  const RootSystem rs = make_rs("A2");
  const WeylGroup wg = enumerate_weyl(rs);
  const ParabolicData pd = make_pd(rs, {1});
  const HasseDiagram hd = hasse_diagram(pd, wg);
  const BGGDiagram bgg = homology(pd, wg, hd, W({1, 1}));
  std::map<std::pair<int, std::vector<long long>>, long long> hom;
  for (const auto& c : bgg.components) hom[{c.degree, c.lowest.as_ints()}] += c.multiplicity;

  std::map<std::pair<int, std::vector<long long>>, long long> flat;
  for (int k = 0; k <= 2; ++k)
    for (const auto& r : graded_casimir_audit(pd, wg, W({1, 1}), k))
      if (r.laplacian == 0) flat[{r.degree, r.lowest.as_ints()}] += r.multiplicity;
  CHECK(flat == hom);
}

TEST_CASE("splitting factors over a synthetic filtration") {
  auto level = [](int lv, Rational hom, std::vector<std::pair<Weight, Rational>> comps) {
    FiltrationLevel f;
    f.level = lv;
    f.homogeneity = hom;
    for (auto& [w, c] : comps) {
      f.component_lowest.push_back(w);
      f.component_casimir.push_back(c);
    }
    return f;
  };
  const std::vector<FiltrationLevel> filt = {
      level(0, 0, {{W({0, 0}), 5}}),
      level(1, 1, {{W({1, 0}), 3}, {W({0, 1}), 2}, {W({1, 1}), 3}}),
      level(2, 2, {{W({2, 0}), 3}}),
  };

  const SplittingReport bottom = splitting_factors(filt, 0, W({0, 0}));
  CHECK(bottom.mu0 == 5);
  REQUIRE(bottom.factors.size() == 2);
  CHECK((bottom.factors[0].distinct_eigenvalues == std::vector<Rational>{2, 3}));
  CHECK((bottom.factors[1].distinct_eigenvalues == std::vector<Rational>{3}));
  CHECK(bottom.product == 12);  // (5-2)(5-3)(5-3)
  CHECK(bottom.splits);

  const SplittingReport mid = splitting_factors(filt, 1, W({0, 1}));
  CHECK(mid.product == -1);  // (2-3)
  CHECK(mid.splits);

  const SplittingReport collide = splitting_factors(filt, 1, W({1, 0}));
  CHECK(collide.product == 0);  // deeper level shares eigenvalue 3
  CHECK(!collide.splits);

  const SplittingReport top = splitting_factors(filt, 2, W({2, 0}));
  CHECK(top.product == 1);  // empty product
  CHECK(top.splits);

  CHECK_THROWS_AS(splitting_factors(filt, 7, W({0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(splitting_factors(filt, 0, W({9, 9})), std::invalid_argument);
}

TEST_CASE("character filtration of the A1 borel on the adjoint module") {
  const RootSystem rs = make_rs("A1");
  const ParabolicData pd = make_borel(rs);
  const auto filt = character_p_filtration(pd, W({2}));
  REQUIRE(filt.size() == 3);
  for (int j = 0; j < 3; ++j) {
    CHECK(filt[j].level == j);
    CHECK(filt[j].homogeneity == j - 1);
    REQUIRE(filt[j].component_lowest.size() == 1);
  }
  CHECK(filt[0].component_lowest[0] == W({-2}));
  CHECK(filt[0].component_casimir[0] == 1);
  CHECK(filt[1].component_lowest[0] == W({0}));
  CHECK(filt[1].component_casimir[0] == 0);
  CHECK(filt[2].component_lowest[0] == W({2}));
  CHECK(filt[2].component_casimir[0] == 0);

  // the invariant line shares its eigenvalue with the middle level: no splitting
  const SplittingReport collide = splitting_factors(filt, 1, W({0}));
  CHECK(collide.product == 0);
  CHECK(!collide.splits);

  // the bottom level differs from both deeper eigenvalues: splitting exists
  const SplittingReport bottom = splitting_factors(filt, 0, W({-2}));
  CHECK(bottom.product == 1);  // (1-0)(1-0)
  CHECK(bottom.splits);
}

TEST_CASE("character filtration of A2 with node 1 crossed, standard module") {
  const RootSystem rs = make_rs("A2");
  const ParabolicData pd = make_pd(rs, {1});
  const auto filt = character_p_filtration(pd, W({1, 0}));
  REQUIRE(filt.size() == 2);

  CHECK(filt[0].homogeneity == Rational(-1, 3));
  REQUIRE(filt[0].component_lowest.size() == 1);
  CHECK(filt[0].component_lowest[0] == W({0, -1}));
  CHECK(filt[0].component_casimir[0] == Rational(4, 9));

  CHECK(filt[1].homogeneity == Rational(2, 3));
  REQUIRE(filt[1].component_lowest.size() == 1);
  CHECK(filt[1].component_lowest[0] == W({1, 0}));
  CHECK(filt[1].component_casimir[0] == Rational(-2, 9));

  const SplittingReport sr = splitting_factors(filt, 0, W({0, -1}));
  CHECK(sr.product == Rational(2, 3));
  CHECK(sr.splits);

  // trivial module: a single level, trivially split
  const auto triv = character_p_filtration(pd, W({0, 0}));
  REQUIRE(triv.size() == 1);
  CHECK(triv[0].homogeneity == 0);
  const SplittingReport st = splitting_factors(triv, 0, W({0, 0}));
  CHECK(st.product == 1);
  CHECK(st.splits);
}
