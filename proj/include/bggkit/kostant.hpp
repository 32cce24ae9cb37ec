// Hasse diagram of a parabolic and the matrix-free homology components.
//
// W^p is the set of Weyl elements whose inversion set lies inside the p_+
// roots.  The degree-k homology of p_+ with coefficients in the irreducible
// of highest weight lambda has one Levi component per length-k element w,
// with lowest weight -(w^{-1} . lambda_low), where -lambda_low is the lowest
// weight of the coefficient module.  The inverse in that formula is forced by
// the matrix oracle (see the A2, first node crossed, trivial-coefficient
// degree-2 component); for Borel parabolics both variants agree because W^p
// is closed under inversion there.

#pragma once

#include "bggkit/characters.hpp"
#include "bggkit/parabolic.hpp"
#include "bggkit/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace bggkit {

struct HasseElement {
  WeylWord word;                 // reduced
  int degree = 0;                // = word length = |inversion set|
  std::vector<int> inversions;   // indices into rs.positive, all in p_+
  std::vector<long long> rho_image;
};

struct HasseDiagram {
  std::vector<HasseElement> elements;          // sorted by (degree, rho image)
  std::vector<std::pair<int, int>> cover_edges;  // (from, to) with degree difference 1
  long long levi_weyl_order = 0;

  int size() const { return static_cast<int>(elements.size()); }
};

inline HasseDiagram hasse_diagram(const ParabolicData& pd, const WeylGroup& wg) {
  const RootSystem& rs = pd.rs;
  HasseDiagram hd;
  std::set<std::vector<int>> levi_root_set;
  for (int r : pd.levi_roots) levi_root_set.insert(rs.positive[r].c);

  long long levi_count = 0;
  for (int e = 0; e < wg.size(); ++e) {
    const auto inv = wg.inversion_set(rs, wg.elements[e]);
    if (static_cast<int>(inv.size()) != wg.elements[e].length())
      throw InternalError("word length does not match inversion count");
    const bool in_wp = std::all_of(inv.begin(), inv.end(), [&](int ri) {
      return pd.layer_of_positive[ri] > 0;
    });
    const bool in_levi = std::all_of(inv.begin(), inv.end(), [&](int ri) {
      return pd.layer_of_positive[ri] == 0;
    });
    if (in_levi) ++levi_count;
    if (!in_wp) continue;
    HasseElement h;
    h.word = wg.elements[e];
    h.degree = h.word.length();
    h.inversions = inv;
    h.rho_image = wg.rho_images[e];
    hd.elements.push_back(std::move(h));
  }
  hd.levi_weyl_order = levi_count;
  if (static_cast<long long>(hd.elements.size()) * levi_count != wg.size())
    throw InternalError("|W^p| * |W_levi| != |W|");
  std::sort(hd.elements.begin(), hd.elements.end(), [](const HasseElement& a, const HasseElement& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.rho_image < b.rho_image;
  });

  // Covering edges: w' = s_beta w with one more inversion, both in W^p.
  std::map<std::vector<long long>, int> pos_of;
  for (size_t i = 0; i < hd.elements.size(); ++i) pos_of[hd.elements[i].rho_image] = static_cast<int>(i);
  for (size_t i = 0; i < hd.elements.size(); ++i) {
    const Weight img = Weight::from_ints(hd.elements[i].rho_image);
    for (int ri = 0; ri < rs.num_positive(); ++ri) {
      // reflect the rho image along the root beta_ri
      const Root& beta = rs.positive[ri];
      const Weight bw = rs.root_weight(beta);
      const Rational pairing = rs.inner_standard(img, bw) / rs.half_length2(beta);
      Weight refl = img;
      for (int j = 0; j < rs.rank; ++j) refl.m[j] -= pairing * bw.m[j];
      auto it = pos_of.find(refl.as_ints());
      if (it == pos_of.end()) continue;
      const int tgt = it->second;
      if (hd.elements[tgt].degree == hd.elements[i].degree + 1)
        hd.cover_edges.push_back({static_cast<int>(i), tgt});
    }
  }
  std::sort(hd.cover_edges.begin(), hd.cover_edges.end());
  return hd;
}

struct HomologyComponent {
  int degree = 0;
  Weight lowest;             // Levi-antidominant
  long long multiplicity = 1;
  Rational homogeneity;      // grading-element eigenvalue of the component
  BigInt dim;                // Levi irrep dimension

  bool operator<(const HomologyComponent& o) const {
    if (degree != o.degree) return degree < o.degree;
    return lowest.m < o.lowest.m;
  }
};

struct BGGDiagram {
  Weight highest_weight;
  Weight lambda_low;  // -lambda_low is the lowest weight of the module
  std::vector<HomologyComponent> components;  // aligned with the Hasse elements
  std::vector<int> hasse_index;               // component i comes from this Hasse element
};

// lambda_low = -w0(lambda).
inline Weight lambda_low_of(const RootSystem& rs, const WeylGroup& wg, const Weight& lambda) {
  return -weyl_apply(rs, wg.elements[wg.longest_index()], lambda);
}

inline BGGDiagram homology(const ParabolicData& pd, const WeylGroup& wg, const HasseDiagram& hd,
                           const Weight& lambda) {
  const RootSystem& rs = pd.rs;
  if (!lambda.is_integral() || !lambda.is_dominant())
    throw std::invalid_argument("homology needs a dominant integral highest weight");
  BGGDiagram bgg;
  bgg.highest_weight = lambda;
  bgg.lambda_low = lambda_low_of(rs, wg, lambda);
  const Subsystem levi = Subsystem::levi(pd);
  for (size_t i = 0; i < hd.elements.size(); ++i) {
    const HasseElement& h = hd.elements[i];
    HomologyComponent c;
    c.degree = h.degree;
    c.lowest = -dot_action(rs, h.word.inverse(), bgg.lambda_low);
    if (!pd.is_levi_antidominant(c.lowest))
      throw InternalError("homology component weight is not Levi-antidominant");
    c.homogeneity = pd.grading_element.eval(c.lowest);
    c.dim = weyl_dim(rs, levi, pd.levi_dominant(c.lowest));
    bgg.components.push_back(std::move(c));
    bgg.hasse_index.push_back(static_cast<int>(i));
  }
  // multiplicity-freeness within each degree
  std::set<std::pair<int, std::vector<std::string>>> seen;
  for (const auto& c : bgg.components) {
    std::vector<std::string> key;
    for (const auto& x : c.lowest.m) key.push_back(rat_str(x));
    if (!seen.insert({c.degree, key}).second)
      throw InternalError("homology components are not multiplicity-free");
  }
  return bgg;
}

// Kostant Laplacian eigenvalue on the component of lowest weight -nu, for a
// module of lowest weight -lambda_low.
inline Rational laplacian_eigenvalue(const RootSystem& rs, const Weight& lambda_low,
                                     const Weight& nu) {
  const Weight a = nu + rs.rho();
  const Weight b = lambda_low + rs.rho();
  return (rs.killing_norm2(a) - rs.killing_norm2(b)) / 2;
}

// Convenience alias for the peeling decomposition.
inline std::vector<LeviComponent> decompose_g0_rep(const ParabolicData& pd,
                                                   const WeightMultiset& ms) {
  return peel_levi_components(pd, ms);
}

}  // namespace bggkit
