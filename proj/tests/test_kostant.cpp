#include "../tests/test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

using namespace bggkit;
using namespace bggkit::testutil;

namespace {

struct Built {
  RootSystem rs;
  WeylGroup wg;
  ParabolicData pd;
  HasseDiagram hd;
};

Built build(const std::string& type, const std::vector<int>& crossed) {
  Built b{make_rs(type), {}, {}, {}};
  b.wg = enumerate_weyl(b.rs);
  b.pd = crossed.empty() ? make_borel(b.rs) : make_pd(b.rs, crossed);
  b.hd = hasse_diagram(b.pd, b.wg);
  return b;
}

std::multiset<int> degrees(const HasseDiagram& hd) {
  std::multiset<int> d;
  for (const auto& h : hd.elements) d.insert(h.degree);
  return d;
}

}  // namespace

TEST_CASE("hasse diagram shapes") {
  const Built a2 = build("A2", {});
  CHECK(a2.hd.size() == 6);
  CHECK((degrees(a2.hd) == std::multiset<int>{0, 1, 1, 2, 2, 3}));
  CHECK(a2.hd.cover_edges.size() == 8);
  CHECK(a2.hd.levi_weyl_order == 1);

  const Built a2p = build("A2", {1});
  CHECK(a2p.hd.size() == 3);
  CHECK((degrees(a2p.hd) == std::multiset<int>{0, 1, 2}));
  CHECK(a2p.hd.cover_edges.size() == 2);
  CHECK(a2p.hd.levi_weyl_order == 2);

  const Built b2 = build("B2", {});
  CHECK(b2.hd.size() == 8);
  CHECK(b2.hd.cover_edges.size() == 12);

  const Built g2 = build("G2", {});
  CHECK(g2.hd.size() == 12);
  CHECK((degrees(g2.hd) == std::multiset<int>{0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6}));
  CHECK(g2.hd.cover_edges.size() == 20);

  // B3 with node 1 crossed: coset chain of length 6
  const Built b3 = build("B3", {1});
  CHECK(b3.hd.size() == 6);
  CHECK((degrees(b3.hd) == std::multiset<int>{0, 1, 2, 3, 4, 5}));
  CHECK(b3.hd.cover_edges.size() == 5);
  CHECK(b3.hd.levi_weyl_order == 8);
}

TEST_CASE("hasse structural invariants") {
  for (const auto& [type, crossed] : std::vector<std::pair<std::string, std::vector<int>>>{
           {"A2", {}}, {"B2", {2}}, {"G2", {1}}, {"A3", {2}}, {"C3", {3}}}) {
    INFO(type);
    const Built b = build(type, crossed);
    // inversion sets sit inside p_+, word length == degree, edges step one degree
    for (const auto& h : b.hd.elements) {
      CHECK(h.degree == h.word.length());
      for (int ri : h.inversions) CHECK(b.pd.layer_of_positive[ri] > 0);
    }
    for (const auto& [from, to] : b.hd.cover_edges)
      CHECK(b.hd.elements[to].degree == b.hd.elements[from].degree + 1);
    // exactly one bottom and one top
    CHECK(b.hd.elements.front().degree == 0);
    CHECK(b.hd.elements.back().degree == static_cast<int>(b.pd.p_plus_roots.size()));
  }
}

TEST_CASE("lambda_low is the dual highest weight") {
  const Built a2 = build("A2", {});
  CHECK(lambda_low_of(a2.rs, a2.wg, W({1, 0})) == W({0, 1}));
  CHECK(lambda_low_of(a2.rs, a2.wg, W({1, 1})) == W({1, 1}));
  const Built a3 = build("A3", {});
  CHECK(lambda_low_of(a3.rs, a3.wg, W({1, 0, 0})) == W({0, 0, 1}));
  const Built c3 = build("C3", {});
  CHECK(lambda_low_of(c3.rs, c3.wg, W({2, 1, 0})) == W({2, 1, 0}));
}

TEST_CASE("homology of the A1 borel") {
  const Built b = build("A1", {});
  const BGGDiagram triv = homology(b.pd, b.wg, b.hd, W({0}));
  REQUIRE(triv.components.size() == 2);
  CHECK(triv.components[0].degree == 0);
  CHECK(triv.components[0].lowest == W({0}));
  CHECK(triv.components[1].degree == 1);
  CHECK(triv.components[1].lowest == W({2}));  // alpha

  const BGGDiagram adj = homology(b.pd, b.wg, b.hd, W({2}));
  REQUIRE(adj.components.size() == 2);
  CHECK(adj.components[0].lowest == W({-2}));
  CHECK(adj.components[1].lowest == W({4}));
}

TEST_CASE("homology of A2 with node 1 crossed, trivial coefficients") {
  const Built b = build("A2", {1});
  const BGGDiagram bgg = homology(b.pd, b.wg, b.hd, W({0, 0}));
  REQUIRE(bgg.components.size() == 3);

  CHECK(bgg.components[0].degree == 0);
  CHECK(bgg.components[0].lowest == W({0, 0}));
  CHECK(bgg.components[0].dim == BigInt(1));

  CHECK(bgg.components[1].degree == 1);
  CHECK(bgg.components[1].lowest == W({2, -1}));  // alpha_1
  CHECK(bgg.components[1].dim == BigInt(2));
  CHECK(bgg.components[1].homogeneity == 1);

  // degree 2 carries 2 alpha_1 + alpha_2, a Levi-trivial line
  CHECK(bgg.components[2].degree == 2);
  CHECK(bgg.components[2].lowest == W({3, 0}));
  CHECK(bgg.components[2].dim == BigInt(1));
  CHECK(bgg.components[2].homogeneity == 2);
}

TEST_CASE("homology of the A2 borel, trivial coefficients") {
  const Built b = build("A2", {});
  const BGGDiagram bgg = homology(b.pd, b.wg, b.hd, W({0, 0}));
  REQUIRE(bgg.components.size() == 6);
  std::map<int, std::multiset<std::vector<long long>>> by_degree;
  for (const auto& c : bgg.components) {
    by_degree[c.degree].insert(c.lowest.as_ints());
    CHECK(c.dim == BigInt(1));
    CHECK(c.multiplicity == 1);
  }
  CHECK((by_degree[0] == std::multiset<std::vector<long long>>{{0, 0}}));
  CHECK((by_degree[1] == std::multiset<std::vector<long long>>{{2, -1}, {-1, 2}}));
  CHECK((by_degree[2] == std::multiset<std::vector<long long>>{{0, 3}, {3, 0}}));
  CHECK((by_degree[3] == std::multiset<std::vector<long long>>{{2, 2}}));  // 2 rho
}

TEST_CASE("homology component bookkeeping") {
  for (const auto& [type, crossed, lambda] :
       std::vector<std::tuple<std::string, std::vector<int>, std::vector<long long>>>{
           {"A2", {}, {1, 1}},
           {"B2", {2}, {1, 0}},
           {"G2", {1}, {0, 1}},
           {"C3", {2}, {1, 0, 0}}}) {
    INFO(type);
    const Built b = build(type, crossed);
    const BGGDiagram bgg = homology(b.pd, b.wg, b.hd, W(lambda));
    CHECK(bgg.components.size() == static_cast<size_t>(b.hd.size()));
    std::set<std::vector<long long>> seen;
    for (size_t i = 0; i < bgg.components.size(); ++i) {
      const auto& c = bgg.components[i];
      CHECK(b.pd.is_levi_antidominant(c.lowest));
      CHECK(c.homogeneity == b.pd.grading_element.eval(c.lowest));
      CHECK(c.dim ==
            weyl_dim(b.rs, Subsystem::levi(b.pd), b.pd.levi_dominant(c.lowest)));
      CHECK(c.degree == b.hd.elements[bgg.hasse_index[i]].degree);
      // dot-orbit points are pairwise distinct for regular lambda + rho
      CHECK(seen.insert(c.lowest.as_ints()).second);
      // homology components lie in the kernel of the laplacian
      CHECK(laplacian_eigenvalue(b.rs, bgg.lambda_low, -c.lowest) == 0);
    }
  }
}
