// Parabolic subalgebras as crossed Dynkin nodes and the induced |k|-grading.
//
// The layer of a root is the sum of its coefficients over the crossed simple
// roots.  The grading element E is the unique Cartan element with
// alpha_i(E) = 1 on crossed nodes and 0 elsewhere; roots then satisfy
// beta(E) = layer(beta) identically, which make_parabolic re-checks from the
// solved coordinates.

#pragma once

#include "bggkit/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace bggkit {

struct ParabolicSpec {
  std::vector<int> crossed;  // 1-based Bourbaki node numbers, sorted, unique

  void validate(int rank) const {
    if (crossed.empty()) throw std::invalid_argument("crossed node set must be non-empty");
    std::set<int> seen;
    for (int i : crossed) {
      if (i < 1 || i > rank)
        throw std::invalid_argument("crossed node " + std::to_string(i) + " out of range 1.." +
                                    std::to_string(rank));
      if (!seen.insert(i).second)
        throw std::invalid_argument("crossed node " + std::to_string(i) + " listed twice");
    }
  }

  bool is_borel(int rank) const { return static_cast<int>(crossed.size()) == rank; }
};

struct GradingElement {
  Vec coroot_coords;  // E = sum_j x_j H_j in the simple-coroot basis

  Rational eval(const Weight& w) const {
    Rational s = 0;
    for (size_t j = 0; j < coroot_coords.size(); ++j)
      if (coroot_coords[j] != 0 && w.m[j] != 0) s += coroot_coords[j] * w.m[j];
    return s;
  }
};

struct ParabolicData {
  RootSystem rs;
  ParabolicSpec spec;
  std::vector<bool> crossed_mask;          // 0-based
  std::vector<int> uncrossed;              // 0-based Levi simple nodes
  std::vector<int> layer_of_positive;      // layer of each positive root
  int depth = 0;                           // k of the |k|-grading
  std::map<int, long long> layer_dims;     // dim g_i for -k..k
  std::vector<int> levi_roots;             // indices of positive roots in g_0
  std::vector<int> p_plus_roots;           // indices of positive roots in p_+
  GradingElement grading_element;

  int layer(int pos_root_idx) const { return layer_of_positive[pos_root_idx]; }

  long long dim_p_plus() const { return static_cast<long long>(p_plus_roots.size()); }
  long long dim_g0() const { return rs.rank + 2LL * levi_roots.size(); }

  // dim g^i of the associated filtration (sum of layers >= i).
  long long filtration_dim(int i) const {
    long long s = 0;
    for (const auto& [layer, dim] : layer_dims)
      if (layer >= i) s += dim;
    return s;
  }

  bool is_levi_dominant(const Weight& w) const {
    for (int i : uncrossed)
      if (w.m[i] < 0) return false;
    return true;
  }
  bool is_levi_antidominant(const Weight& w) const {
    for (int i : uncrossed)
      if (w.m[i] > 0) return false;
    return true;
  }

  // Levi-antidominant representative of the Levi Weyl orbit (= lowest weight
  // of the Levi irrep through w).
  Weight levi_antidominant(Weight w) const {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i : uncrossed)
        if (w.m[i] > 0) {
          w = rs.reflect(i, w);
          moved = true;
        }
    }
    return w;
  }

  Weight levi_dominant(Weight w) const {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i : uncrossed)
        if (w.m[i] < 0) {
          w = rs.reflect(i, w);
          moved = true;
        }
    }
    return w;
  }
};

inline ParabolicData make_parabolic(const RootSystem& rs, ParabolicSpec spec) {
  spec.validate(rs.rank);
  std::sort(spec.crossed.begin(), spec.crossed.end());
  ParabolicData pd;
  pd.rs = rs;
  pd.spec = spec;
  pd.crossed_mask.assign(rs.rank, false);
  for (int i : spec.crossed) pd.crossed_mask[i - 1] = true;
  for (int i = 0; i < rs.rank; ++i)
    if (!pd.crossed_mask[i]) pd.uncrossed.push_back(i);

  pd.layer_of_positive.resize(rs.num_positive());
  for (int r = 0; r < rs.num_positive(); ++r) {
    int h = 0;
    for (int i = 0; i < rs.rank; ++i)
      if (pd.crossed_mask[i]) h += rs.positive[r].c[i];
    pd.layer_of_positive[r] = h;
    pd.depth = std::max(pd.depth, h);
    if (h == 0)
      pd.levi_roots.push_back(r);
    else
      pd.p_plus_roots.push_back(r);
  }

  for (int i = -pd.depth; i <= pd.depth; ++i) pd.layer_dims[i] = 0;
  pd.layer_dims[0] = rs.rank + 2LL * pd.levi_roots.size();
  for (int r = 0; r < rs.num_positive(); ++r) {
    const int h = pd.layer_of_positive[r];
    if (h > 0) {
      pd.layer_dims[h] += 1;
      pd.layer_dims[-h] += 1;
    }
  }

  // Grading element: solve sum_j a_ij x_j = [i crossed].
  {
    const int n = rs.rank;
    Mat a(n, n);
    Vec b(n, Rational(0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a.at(i, j) = rs.cartan[i][j];
      if (pd.crossed_mask[i]) b[i] = 1;
    }
    auto x = solve_linear(a, b);
    if (!x) throw InternalError("grading element system is singular");
    pd.grading_element.coroot_coords = *x;
    // beta(E) must reproduce the layer for every positive root.
    for (int r = 0; r < rs.num_positive(); ++r) {
      if (pd.grading_element.eval(rs.root_weight(rs.positive[r])) != pd.layer_of_positive[r])
        throw InternalError("grading element does not reproduce root layers");
    }
  }
  return pd;
}

}  // namespace bggkit
