#include "../tests/test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using namespace bggkit;
using namespace bggkit::testutil;

namespace {

struct Setup {
  LieAlgebraRealization L;
  ParabolicData pd;
  RepRealization V;
  MatrixFiltration mf;

  Setup(const std::string& type, const std::vector<int>& crossed,
        const std::vector<long long>& lambda)
      : L(realize_algebra(make_rs(type))),
        pd(crossed.empty() ? make_borel(L.rs) : make_pd(L.rs, crossed)),
        V(build_irrep(L, W(lambda))),
        mf(matrix_p_filtration(L, pd, V)) {}
};

}  // namespace

TEST_CASE("matrix filtration of the sl2 adjoint module") {
  const Setup s("A1", {}, {2});
  const MatrixFiltration& mf = s.mf;
  CHECK((mf.subspace_dims == std::vector<long long>{1, 2, 3}));
  REQUIRE(mf.levels.size() == 3);
  CHECK(mf.unit_ladder);
  CHECK(mf.p_plus_trivial_quotients);

  const std::vector<std::vector<long long>> lowests{{-2}, {0}, {2}};
  const std::vector<Rational> casimirs{1, 0, 0};
  for (int j = 0; j < 3; ++j) {
    const QuotientLevel& lv = mf.levels[j];
    CHECK(lv.level == j);
    CHECK(lv.grading_eigenvalue == Rational(j - 1));
    CHECK(lv.quotient.dim == 1);
    REQUIRE(lv.components.size() == 1);
    CHECK(lv.components[0].lowest.as_ints() == lowests[j]);
    CHECK(lv.components[0].casimir == casimirs[j]);
    CHECK(lv.p_plus_trivial);
  }

  const auto fl = filtration_levels(mf);
  // levels 1 and 2 share the eigenvalue 0, so the middle quotient cannot split
  const SplittingReport blocked = splitting_factors(fl, 1, W({0}));
  CHECK(blocked.mu0 == 0);
  CHECK(blocked.product == 0);
  CHECK_FALSE(blocked.splits);
  // the bottom quotient is separated from everything above it
  const SplittingReport ok = splitting_factors(fl, 0, W({-2}));
  CHECK(ok.mu0 == 1);
  CHECK(ok.factors.size() == 2);
  CHECK(ok.product == 1);
  CHECK(ok.splits);
}

TEST_CASE("standard module over the sl3 borel") {
  const Setup s("A2", {}, {1, 0});
  const MatrixFiltration& mf = s.mf;
  CHECK((mf.subspace_dims == std::vector<long long>{1, 2, 3}));
  REQUIRE(mf.levels.size() == 3);
  CHECK(mf.unit_ladder);
  CHECK(mf.p_plus_trivial_quotients);

  const std::vector<std::vector<long long>> lowests{{0, -1}, {-1, 1}, {1, 0}};
  const std::vector<Rational> casimirs{Rational(4, 9), Rational(1, 9), Rational(-2, 9)};
  for (int j = 0; j < 3; ++j) {
    CHECK(mf.levels[j].grading_eigenvalue == Rational(j - 1));
    REQUIRE(mf.levels[j].components.size() == 1);
    CHECK(mf.levels[j].components[0].lowest.as_ints() == lowests[j]);
    CHECK(mf.levels[j].components[0].casimir == casimirs[j]);
  }

  const SplittingReport bottom = splitting_factors(filtration_levels(mf), 0, W({0, -1}));
  CHECK(bottom.mu0 == Rational(4, 9));
  CHECK(bottom.product == Rational(2, 9));
  CHECK(bottom.splits);

  CHECK_THROWS_AS(splitting_factors(filtration_levels(mf), 5, W({0, -1})), std::invalid_argument);
  CHECK_THROWS_AS(splitting_factors(filtration_levels(mf), 0, W({9, 9})), std::invalid_argument);
}

TEST_CASE("matrix and character filtrations agree") {
  const Setup s("A2", {1}, {1, 0});
  const auto from_matrix = filtration_levels(s.mf);
  const auto from_character = character_p_filtration(s.pd, W({1, 0}));
  REQUIRE(from_matrix.size() == from_character.size());
  for (size_t j = 0; j < from_matrix.size(); ++j) {
    CHECK(from_matrix[j].level == from_character[j].level);
    CHECK(from_matrix[j].homogeneity == from_character[j].homogeneity);
    REQUIRE(from_matrix[j].component_lowest.size() == from_character[j].component_lowest.size());
    for (size_t c = 0; c < from_matrix[j].component_lowest.size(); ++c) {
      CHECK(from_matrix[j].component_lowest[c] == from_character[j].component_lowest[c]);
      CHECK(from_matrix[j].component_casimir[c] == from_character[j].component_casimir[c]);
    }
  }

  REQUIRE(from_matrix.size() == 2);
  CHECK(from_matrix[0].homogeneity == Rational(-1, 3));
  CHECK((from_matrix[0].component_lowest[0].as_ints() == std::vector<long long>{0, -1}));
  CHECK(from_matrix[0].component_casimir[0] == Rational(4, 9));
  CHECK(from_matrix[1].homogeneity == Rational(2, 3));
  CHECK((from_matrix[1].component_lowest[0].as_ints() == std::vector<long long>{1, 0}));
  CHECK(from_matrix[1].component_casimir[0] == Rational(-2, 9));

  const SplittingReport rep = splitting_factors(from_matrix, 0, W({0, -1}));
  CHECK(rep.product == Rational(2, 3));
  CHECK(rep.splits);
}

TEST_CASE("casimir formula holds on every subquotient") {
  for (const auto& [type, crossed, lambda] :
       std::vector<std::tuple<std::string, std::vector<int>, std::vector<long long>>>{
           {"A2", {1}, {1, 1}}, {"B2", {2}, {0, 1}}, {"G2", {1}, {1, 0}}}) {
    INFO(type);
    const Setup s(type, crossed, lambda);
    CHECK(s.mf.unit_ladder);
    CHECK(s.mf.p_plus_trivial_quotients);
    CHECK(filtration_casimir_check(s.L, s.pd, s.mf));
  }
}

TEST_CASE("trivial module has one level") {
  const Setup s("A2", {1}, {0, 0});
  CHECK((s.mf.subspace_dims == std::vector<long long>{1}));
  REQUIRE(s.mf.levels.size() == 1);
  CHECK(s.mf.levels[0].p_plus_trivial);
  const SplittingReport rep = splitting_factors(filtration_levels(s.mf), 0, W({0, 0}));
  CHECK(rep.product == 1);
  CHECK(rep.splits);
  CHECK(rep.factors.empty());
}
