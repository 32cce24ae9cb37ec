// Filtration of a module restricted to the parabolic: invariants first, then
// iterated preimages under the p_+ action.  Levels are indexed from the
// bottom quotient (0) up to the invariants (N); on each subquotient the
// grading element must act by a scalar and those scalars must climb in unit
// steps.  All subspaces are weight-stable, so the whole computation runs per
// weight block and every quotient gets weight-homogeneous representatives.

#pragma once

#include "bggkit/casimir.hpp"
#include "bggkit/characters.hpp"
#include "bggkit/realization.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace bggkit {

struct QuotientComponent {
  Weight highest;
  Weight lowest;
  Rational casimir;        // predicted eigenvalue via nu = -lowest
  std::vector<Vec> span;   // quotient coordinates spanning the component
};

struct QuotientLevel {
  int level = 0;                 // 0 = bottom quotient, N = invariants
  Rational grading_eigenvalue;
  std::vector<std::pair<WKey, Vec>> reps;  // (weight, block-local coordinates)
  G0Rep quotient;                          // induced g_0 action
  std::vector<QuotientComponent> components;
  bool p_plus_trivial = false;
};

struct MatrixFiltration {
  std::vector<long long> subspace_dims;  // invariants first, ending at dim V
  std::vector<QuotientLevel> levels;
  bool unit_ladder = false;
  bool p_plus_trivial_quotients = false;
};

inline MatrixFiltration matrix_p_filtration(const LieAlgebraRealization& L,
                                            const ParabolicData& pd, const RepRealization& rep) {
  const RootSystem& rs = L.rs;
  const int n = rs.rank;
  const int dim = rep.dim;

  std::map<WKey, std::vector<int>> v_blocks;
  for (int v = 0; v < dim; ++v) v_blocks[rep.weights[v]].push_back(v);
  std::vector<int> local_of(dim);
  for (const auto& [w, ids] : v_blocks)
    for (size_t p = 0; p < ids.size(); ++p) local_of[ids[p]] = static_cast<int>(p);

  auto shifted = [&](const WKey& w, int root_idx, int sign) {
    const WKey beta = rs.root_fund_coords(rs.positive[root_idx]);
    WKey r = w;
    for (int t = 0; t < n; ++t) r[t] += sign * beta[t];
    return r;
  };
  // localize a weight-homogeneous global vector into a target block
  auto localize = [&](const Vec& glob, const WKey& dst) -> std::optional<Vec> {
    for (int g = 0; g < dim; ++g)
      if (glob[g] != 0 && rep.weights[g] != dst)
        throw InternalError("module action entry breaks the weight grading");
    auto it = v_blocks.find(dst);
    if (it == v_blocks.end()) return std::nullopt;
    Vec out(it->second.size(), Rational(0));
    for (size_t p = 0; p < it->second.size(); ++p) out[p] = glob[it->second[p]];
    return out;
  };
  auto globalize = [&](const WKey& w, const Vec& local) {
    Vec g(dim, Rational(0));
    const auto& ids = v_blocks.at(w);
    for (size_t p = 0; p < ids.size(); ++p) g[ids[p]] = local[p];
    return g;
  };

  // iterated preimages, blockwise; ss[t] holds the t-th subspace per block
  std::vector<std::map<WKey, Echelon>> ss;
  long long total = 0;
  while (total < dim) {
    std::map<WKey, Echelon> next;
    long long next_total = 0;
    for (const auto& [w, ids] : v_blocks) {
      const int bc = static_cast<int>(ids.size());
      // conditions: for each p_+ root, the image must reduce to zero modulo
      // the previous subspace at the shifted weight
      std::vector<Vec> cond_rows;
      for (int r : pd.p_plus_roots) {
        const WKey dst = shifted(w, r, +1);
        const Mat& act = rep.action[L.label_E(r)];
        // residue length: target block size minus previous-subspace handling
        std::vector<Vec> cols(bc);
        for (int c = 0; c < bc; ++c) {
          Vec unit(bc, Rational(0));
          unit[c] = 1;
          auto img = localize(mat_vec(act, globalize(w, unit)), dst);
          if (!img) {
            cols[c] = Vec();
            continue;
          }
          if (!ss.empty()) {
            auto pit = ss.back().find(dst);
            if (pit != ss.back().end()) {
              cols[c] = pit->second.reduce(*img);
              continue;
            }
          }
          cols[c] = *img;
        }
        size_t len = 0;
        for (const auto& cvec : cols) len = std::max(len, cvec.size());
        for (size_t t = 0; t < len; ++t) {
          Vec row(bc, Rational(0));
          bool nz = false;
          for (int c = 0; c < bc; ++c)
            if (t < cols[c].size() && cols[c][t] != 0) {
              row[c] = cols[c][t];
              nz = true;
            }
          if (nz) cond_rows.push_back(std::move(row));
        }
      }
      Mat cond(static_cast<int>(cond_rows.size()), bc);
      for (size_t t = 0; t < cond_rows.size(); ++t)
        for (int c = 0; c < bc; ++c) cond.at(static_cast<int>(t), c) = cond_rows[t][c];
      Echelon ech(bc);
      for (const auto& v : kernel_basis(cond)) ech.add_row(v);
      next_total += ech.rank();
      next.emplace(w, std::move(ech));
    }
    if (next_total <= total)
      throw InternalError("p_+ filtration stalled before exhausting the module");
    if (!ss.empty()) {
      // previous subspace must be contained in the new one
      for (const auto& [w, ech] : ss.back())
        for (const auto& row : ech.rows())
          if (!next.at(w).contains(row)) throw InternalError("p_+ filtration is not increasing");
    }
    total = next_total;
    ss.push_back(std::move(next));
  }
  const int N = static_cast<int>(ss.size()) - 1;

  MatrixFiltration mf;
  for (int t = 0; t <= N; ++t) {
    long long d = 0;
    for (const auto& [w, ech] : ss[t]) d += ech.rank();
    mf.subspace_dims.push_back(d);
  }

  const std::vector<int> g0_labels = [&] {
    std::vector<int> labels;
    for (int i = 0; i < n; ++i) labels.push_back(L.label_H(i));
    for (int r : pd.levi_roots) {
      labels.push_back(L.label_E(r));
      labels.push_back(L.label_F(r));
    }
    return labels;
  }();

  mf.unit_ladder = true;
  mf.p_plus_trivial_quotients = true;
  for (int j = 0; j <= N; ++j) {
    QuotientLevel lv;
    lv.level = j;
    const std::map<WKey, Echelon>& upper = ss[N - j];
    const std::map<WKey, Echelon>* lower = (j < N) ? &ss[N - j - 1] : nullptr;
    for (const auto& [w, ech] : upper) {
      Echelon ext = [&] {
        if (lower) {
          auto it = lower->find(w);
          if (it != lower->end()) return it->second;
        }
        return Echelon(ech.cols());
      }();
      for (const auto& row : ech.rows())
        if (ext.add_row(row)) lv.reps.push_back({w, row});
    }
    const int dq = static_cast<int>(lv.reps.size());
    if (dq == 0) throw InternalError("empty filtration quotient");

    // grading-element scalar on the quotient
    lv.grading_eigenvalue = pd.grading_element.eval(weight_of_key(lv.reps[0].first));
    for (const auto& [w, _] : lv.reps)
      if (pd.grading_element.eval(weight_of_key(w)) != lv.grading_eigenvalue) mf.unit_ladder = false;

    // induced g_0 action: solve against (lower basis | representatives)
    auto quotient_coords = [&](const WKey& dst, const Vec& local) {
      std::vector<const Vec*> cols;
      if (lower) {
        auto it = lower->find(dst);
        if (it != lower->end())
          for (const auto& row : it->second.rows()) cols.push_back(&row);
      }
      const int nlow = static_cast<int>(cols.size());
      std::vector<int> rep_ids;
      for (int p = 0; p < dq; ++p)
        if (lv.reps[p].first == dst) {
          cols.push_back(&lv.reps[p].second);
          rep_ids.push_back(p);
        }
      Mat sys(static_cast<int>(local.size()), static_cast<int>(cols.size()));
      for (size_t c = 0; c < cols.size(); ++c)
        for (size_t t = 0; t < local.size(); ++t)
          sys.at(static_cast<int>(t), static_cast<int>(c)) = (*cols[c])[t];
      const auto sol = solve_linear(sys, local);
      if (!sol) throw InternalError("filtration level is not g_0 stable");
      Vec out(dq, Rational(0));
      for (size_t c = 0; c < rep_ids.size(); ++c) out[rep_ids[c]] = (*sol)[nlow + static_cast<int>(c)];
      return out;
    };

    lv.quotient.dim = dq;
    for (int a : g0_labels) {
      Mat qm(dq, dq);
      for (int p = 0; p < dq; ++p) {
        const auto& [w, local] = lv.reps[p];
        const Vec img_glob = mat_vec(rep.action[a], globalize(w, local));
        WKey dst = w;
        if (!L.is_H(a)) {
          const WKey beta = rs.root_fund_coords(rs.positive[L.root_of(a)]);
          const int sign = L.is_E(a) ? +1 : -1;
          for (int t = 0; t < n; ++t) dst[t] += sign * beta[t];
        }
        auto img = localize(img_glob, dst);
        if (!img) continue;  // image vanished
        const Vec q = quotient_coords(dst, *img);
        for (int t = 0; t < dq; ++t) qm.at(t, p) = q[t];
      }
      lv.quotient.action.emplace(a, std::move(qm));
    }

    // induced p_+ action must vanish on the quotient
    lv.p_plus_trivial = true;
    for (int r : pd.p_plus_roots) {
      const Mat& act = rep.action[L.label_E(r)];
      for (const auto& [w, local] : lv.reps) {
        const WKey dst = shifted(w, r, +1);
        auto img = localize(mat_vec(act, globalize(w, local)), dst);
        if (!img) continue;
        bool in_lower = false;
        if (lower) {
          auto it = lower->find(dst);
          in_lower = (it != lower->end()) && it->second.contains(*img);
        }
        if (!in_lower && !vec_is_zero(*img)) lv.p_plus_trivial = false;
      }
    }
    if (!lv.p_plus_trivial) mf.p_plus_trivial_quotients = false;

    mf.levels.push_back(std::move(lv));
  }

  for (size_t j = 0; j + 1 < mf.levels.size(); ++j)
    if (mf.levels[j + 1].grading_eigenvalue - mf.levels[j].grading_eigenvalue != 1)
      mf.unit_ladder = false;

  // decompose each quotient into Levi irreducibles with explicit spans
  const Subsystem levi = Subsystem::levi(pd);
  for (QuotientLevel& lv : mf.levels) {
    const int dq = lv.quotient.dim;
    std::vector<int> raise_labels, lower_labels;
    for (int node : pd.uncrossed) {
      std::vector<int> unit(n, 0);
      unit[node] = 1;
      const int idx = rs.root_index(Root{unit});
      raise_labels.push_back(L.label_E(idx));
      lower_labels.push_back(L.label_F(idx));
    }
    std::map<WKey, std::vector<int>> q_weight_cols;
    for (int p = 0; p < dq; ++p) q_weight_cols[lv.reps[p].first].push_back(p);

    BigInt covered = 0;
    for (const auto& [w, cols] : q_weight_cols) {
      // joint kernel of the raising operators, restricted to this weight
      std::vector<Vec> cond_rows;
      for (int lab : raise_labels) {
        const Mat& qa = lv.quotient.action.at(lab);
        for (int t = 0; t < dq; ++t) {
          Vec row(cols.size(), Rational(0));
          bool nz = false;
          for (size_t c = 0; c < cols.size(); ++c)
            if (qa.at(t, cols[c]) != 0) {
              row[c] = qa.at(t, cols[c]);
              nz = true;
            }
          if (nz) cond_rows.push_back(std::move(row));
        }
      }
      Mat cond(static_cast<int>(cond_rows.size()), static_cast<int>(cols.size()));
      for (size_t t = 0; t < cond_rows.size(); ++t)
        for (size_t c = 0; c < cols.size(); ++c)
          cond.at(static_cast<int>(t), static_cast<int>(c)) = cond_rows[t][c];
      for (const auto& hw_local : kernel_basis(cond)) {
        Vec hw(dq, Rational(0));
        for (size_t c = 0; c < cols.size(); ++c) hw[cols[c]] = hw_local[c];
        QuotientComponent comp;
        comp.highest = weight_of_key(w);
        if (!pd.is_levi_dominant(comp.highest))
          throw InternalError("quotient highest weight is not Levi-dominant");
        comp.lowest = pd.levi_antidominant(comp.highest);
        comp.casimir = casimir_eigenvalue(rs, -comp.lowest);
        // close under the Levi lowering operators
        Echelon span(dq);
        span.add_row(hw);
        std::vector<Vec> frontier{hw};
        while (!frontier.empty()) {
          std::vector<Vec> next_frontier;
          for (const auto& v : frontier)
            for (int lab : lower_labels) {
              const Vec img = mat_vec(lv.quotient.action.at(lab), v);
              if (!vec_is_zero(img) && span.add_row(img)) next_frontier.push_back(img);
            }
          frontier = std::move(next_frontier);
        }
        if (BigInt(span.rank()) != weyl_dim(rs, levi, comp.highest))
          throw InternalError("component closure disagrees with the Levi dimension formula");
        covered += span.rank();
        comp.span = span.rows();
        lv.components.push_back(std::move(comp));
      }
    }
    if (covered != dq)
      throw InternalError("Levi decomposition of a filtration quotient does not exhaust it");
    std::sort(lv.components.begin(), lv.components.end(),
              [](const QuotientComponent& a, const QuotientComponent& b) {
                return a.lowest.m < b.lowest.m;
              });
  }
  return mf;
}

// Bridge to the scalar splitting machinery.
inline std::vector<FiltrationLevel> filtration_levels(const MatrixFiltration& mf) {
  std::vector<FiltrationLevel> out;
  for (const auto& lv : mf.levels) {
    FiltrationLevel f;
    f.level = lv.level;
    f.homogeneity = lv.grading_eigenvalue;
    for (const auto& c : lv.components) {
      f.component_lowest.push_back(c.lowest);
      f.component_casimir.push_back(c.casimir);
    }
    out.push_back(std::move(f));
  }
  return out;
}

// The concrete Casimir check on p_+-trivial subquotients: the matrix built
// from the g_0 dual bases acts on every irreducible component by exactly the
// predicted scalar.
inline bool filtration_casimir_check(const LieAlgebraRealization& L, const ParabolicData& pd,
                                     const MatrixFiltration& mf) {
  for (const auto& lv : mf.levels) {
    if (!lv.p_plus_trivial) return false;
    const Mat c = g0_casimir_formula(L, pd, lv.quotient);
    for (const auto& comp : lv.components)
      for (const auto& v : comp.span) {
        Vec cv = mat_vec(c, v);
        for (size_t t = 0; t < cv.size(); ++t) cv[t] -= comp.casimir * v[t];
        if (!vec_is_zero(cv)) return false;
      }
  }
  return true;
}

}  // namespace bggkit
