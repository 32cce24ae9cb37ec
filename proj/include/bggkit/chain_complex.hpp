// The homology chain spaces Lambda^k p_+ (x) V with the boundary operator,
// built from realized matrices.  Everything downstream works per weight
// block: the boundary strictly preserves weights, which is asserted entry by
// entry while the sparse matrices are assembled.

#pragma once

#include "bggkit/guardrails.hpp"
#include "bggkit/kostant.hpp"
#include "bggkit/linalg.hpp"
#include "bggkit/parabolic.hpp"
#include "bggkit/realization.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace bggkit {

struct ChainDegreeData {
  std::vector<std::vector<int>> subsets;     // sorted local p_+ index sets, lex order
  std::map<std::vector<int>, int> subset_rank;
  int dim = 0;                               // |subsets| * dim V
  std::vector<WKey> weight;                  // per basis element
  std::map<WKey, std::vector<int>> blocks;   // weight -> sorted global indices
  std::vector<int> local_of;                 // global index -> position in its block
  SparseMat boundary;                        // into degree k-1; degree 0 maps to nothing
};

struct ChainComplex {
  const LieAlgebraRealization* L = nullptr;
  const RepRealization* V = nullptr;
  ParabolicData pd;
  int np = 0;
  std::vector<int> proots;  // local slot -> positive root index
  std::vector<ChainDegreeData> deg;

  int index_of(int k, const std::vector<int>& subset, int v) const {
    return deg[k].subset_rank.at(subset) * V->dim + v;
  }
};

inline ChainComplex build_chain_complex(const LieAlgebraRealization& L, const ParabolicData& pd,
                                        const RepRealization& V,
                                        const Guardrails& guards = Guardrails::from_env()) {
  ChainComplex cc;
  cc.L = &L;
  cc.V = &V;
  cc.pd = pd;
  cc.proots = pd.p_plus_roots;
  cc.np = static_cast<int>(cc.proots.size());
  const int n = L.rs.rank;

  // local slot index of each positive root appearing in brackets
  std::vector<int> local_slot(L.m, -1);
  for (int s = 0; s < cc.np; ++s) local_slot[cc.proots[s]] = s;
  std::vector<WKey> slot_weight(cc.np);
  for (int s = 0; s < cc.np; ++s) slot_weight[s] = L.rs.root_fund_coords(L.rs.positive[cc.proots[s]]);

  cc.deg.resize(cc.np + 1);
  for (int k = 0; k <= cc.np; ++k) {
    ChainDegreeData& d = cc.deg[k];
    // k-subsets in lexicographic order
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      d.subset_rank[idx] = static_cast<int>(d.subsets.size());
      d.subsets.push_back(idx);
      if (k == 0) break;
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == cc.np - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    d.dim = static_cast<int>(d.subsets.size()) * V.dim;
    Guardrails::check(d.dim, guards.chain_dim, "chain space dimension");
    d.weight.resize(d.dim);
    for (size_t s = 0; s < d.subsets.size(); ++s)
      for (int v = 0; v < V.dim; ++v) {
        WKey w = V.weights[v];
        for (int slot : d.subsets[s])
          for (int t = 0; t < n; ++t) w[t] += slot_weight[slot][t];
        d.weight[s * V.dim + v] = std::move(w);
      }
    for (int g = 0; g < d.dim; ++g) d.blocks[d.weight[g]].push_back(g);
    d.local_of.resize(d.dim);
    for (auto& [w, ids] : d.blocks)
      for (size_t p = 0; p < ids.size(); ++p) d.local_of[ids[p]] = static_cast<int>(p);
  }

  // boundary: first sum moves a slot into the module, second contracts two
  // slots through the bracket; signs follow 1-based slot positions
  for (int k = 0; k <= cc.np; ++k) {
    ChainDegreeData& d = cc.deg[k];
    const int rows = k == 0 ? 0 : cc.deg[k - 1].dim;
    d.boundary = SparseMat(rows, d.dim);
    if (k == 0) continue;
    auto put = [&](int row, int col, const Rational& val) {
      if (val == 0) return;
      if (cc.deg[k - 1].weight[row] != d.weight[col])
        throw InternalError("boundary entry breaks the weight grading");
      d.boundary.add(row, col, val);
    };
    for (size_t s = 0; s < d.subsets.size(); ++s) {
      const std::vector<int>& sub = d.subsets[s];
      for (int v = 0; v < V.dim; ++v) {
        const int colg = static_cast<int>(s) * V.dim + v;
        for (int i = 1; i <= k; ++i) {
          const int slot = sub[i - 1];
          std::vector<int> rest;
          for (int x : sub)
            if (x != slot) rest.push_back(x);
          const Rational sign1 = (i % 2) ? -1 : 1;
          // module action of the slot root vector
          const Mat& act = V.action[L.label_E(cc.proots[slot])];
          for (int v2 = 0; v2 < V.dim; ++v2)
            if (act.at(v2, v) != 0) put(cc.index_of(k - 1, rest, v2), colg, sign1 * act.at(v2, v));
          // bracket contraction with later slots
          for (int j = i + 1; j <= k; ++j) {
            const int slot2 = sub[j - 1];
            const Rational sign2 = ((i + j) % 2) ? -1 : 1;
            std::vector<int> rest2;
            for (int x : sub)
              if (x != slot && x != slot2) rest2.push_back(x);
            for (const auto& [lab, cv] : L.bracket(L.label_E(cc.proots[slot]), L.label_E(cc.proots[slot2]))) {
              if (!L.is_E(lab) || local_slot[L.root_of(lab)] < 0)
                throw InternalError("p_+ bracket left p_+");
              const int g = local_slot[L.root_of(lab)];
              if (std::find(rest2.begin(), rest2.end(), g) != rest2.end()) continue;
              int pos = 0;
              std::vector<int> merged;
              for (int x : rest2)
                if (x < g) ++pos;
              merged = rest2;
              merged.insert(std::upper_bound(merged.begin(), merged.end(), g), g);
              const Rational sign3 = (pos % 2) ? -1 : 1;
              put(cc.index_of(k - 1, merged, v), colg, sign2 * sign3 * cv);
            }
          }
        }
      }
    }
  }
  return cc;
}

inline bool boundary_squared_is_zero(const ChainComplex& cc) {
  for (int k = 1; k < cc.np; ++k)
    if (!sparse_is_zero(sparse_mul(cc.deg[k].boundary, cc.deg[k + 1].boundary))) return false;
  return true;
}

// Action of a basis label on degree k: derivation across the wedge slots plus
// the module action on the coefficient.
inline SparseMat chain_action(const ChainComplex& cc, int k, int label) {
  const LieAlgebraRealization& L = *cc.L;
  const RepRealization& V = *cc.V;
  std::vector<int> local_slot(L.m, -1);
  for (int s = 0; s < cc.np; ++s) local_slot[cc.proots[s]] = s;
  const ChainDegreeData& d = cc.deg[k];
  SparseMat m(d.dim, d.dim);
  for (size_t s = 0; s < d.subsets.size(); ++s) {
    const std::vector<int>& sub = d.subsets[s];
    for (int v = 0; v < V.dim; ++v) {
      const int colg = static_cast<int>(s) * V.dim + v;
      const Mat& act = V.action[label];
      for (int v2 = 0; v2 < V.dim; ++v2)
        if (act.at(v2, v) != 0) m.add(cc.index_of(k, sub, v2), colg, act.at(v2, v));
      for (int i = 1; i <= k; ++i) {
        const int slot = sub[i - 1];
        std::vector<int> rest;
        for (int x : sub)
          if (x != slot) rest.push_back(x);
        for (const auto& [lab, cv] : L.bracket(label, L.label_E(cc.proots[slot]))) {
          if (!L.is_E(lab) || local_slot[L.root_of(lab)] < 0)
            throw InternalError("slot action left p_+");
          const int g = local_slot[L.root_of(lab)];
          if (std::find(rest.begin(), rest.end(), g) != rest.end()) continue;
          int pos = 0;
          for (int x : rest)
            if (x < g) ++pos;
          std::vector<int> merged = rest;
          merged.insert(std::upper_bound(merged.begin(), merged.end(), g), g);
          const Rational sign = ((i - 1 + pos) % 2) ? -1 : 1;
          m.add(cc.index_of(k, merged, v), colg, sign * cv);
        }
      }
    }
  }
  return m;
}

inline std::vector<int> g0_labels_of(const LieAlgebraRealization& L, const ParabolicData& pd) {
  std::vector<int> labels;
  for (int i = 0; i < L.n; ++i) labels.push_back(L.label_H(i));
  for (int r : pd.levi_roots) {
    labels.push_back(L.label_E(r));
    labels.push_back(L.label_F(r));
  }
  return labels;
}

// boundary o rho_k(a) = rho_{k-1}(a) o boundary for every a in the g_0 basis
inline bool boundary_is_g0_equivariant(const ChainComplex& cc) {
  const auto labels = g0_labels_of(*cc.L, cc.pd);
  for (int k = 1; k <= cc.np; ++k)
    for (int a : labels) {
      const SparseMat lhs = sparse_mul(cc.deg[k].boundary, chain_action(cc, k, a));
      const SparseMat rhs = sparse_mul(chain_action(cc, k - 1, a), cc.deg[k].boundary);
      if (!sparse_is_zero(sparse_sub(lhs, rhs))) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Per-block kernel / image / homology data.

struct ChainBlock {
  std::vector<int> cols;       // global indices in C_k
  std::vector<Vec> kernel;     // block-local coordinates
  Echelon image{0};
  std::vector<Vec> h_reps;     // kernel vectors completing the image span
};

struct ChainHomology {
  std::vector<std::map<WKey, ChainBlock>> block;  // per degree
  std::vector<long long> h_dim;                   // per degree
};

inline ChainHomology compute_homology_blocks(const ChainComplex& cc) {
  ChainHomology out;
  out.block.resize(cc.np + 1);
  out.h_dim.assign(cc.np + 1, 0);
  for (int k = 0; k <= cc.np; ++k) {
    const ChainDegreeData& d = cc.deg[k];
    for (const auto& [w, ids] : d.blocks) {
      ChainBlock blk;
      blk.cols = ids;
      const int bc = static_cast<int>(ids.size());
      // kernel of the boundary restricted to this block
      if (k == 0) {
        for (int c = 0; c < bc; ++c) {
          Vec u(bc, Rational(0));
          u[c] = 1;
          blk.kernel.push_back(std::move(u));
        }
      } else {
        const ChainDegreeData& below = cc.deg[k - 1];
        auto rit = below.blocks.find(w);
        const int br = rit == below.blocks.end() ? 0 : static_cast<int>(rit->second.size());
        Mat restricted(br, bc);
        for (int c = 0; c < bc; ++c)
          for (const auto& [row, val] : d.boundary.col[ids[c]])
            restricted.at(below.local_of[row], c) = val;
        blk.kernel = kernel_basis(restricted);
      }
      // image of the boundary from the block above
      blk.image = Echelon(bc);
      if (k < cc.np) {
        const ChainDegreeData& above = cc.deg[k + 1];
        auto ait = above.blocks.find(w);
        if (ait != above.blocks.end()) {
          for (int src : ait->second) {
            Vec u(bc, Rational(0));
            for (const auto& [row, val] : above.boundary.col[src]) u[d.local_of[row]] = val;
            blk.image.add_row(std::move(u));
          }
        }
      }
      Echelon ext = blk.image;
      for (const auto& v : blk.kernel)
        if (ext.add_row(v)) blk.h_reps.push_back(v);
      out.h_dim[k] += static_cast<long long>(blk.h_reps.size());
      out.block[k].emplace(w, std::move(blk));
    }
  }
  return out;
}

namespace detail {

// apply a sparse degree-k action to a block-local vector, landing in the
// target weight's block; returns empty when the result vanishes
inline std::optional<Vec> apply_to_block(const ChainComplex& cc, int k, const SparseMat& action,
                                         const WKey& src_w, const Vec& local,
                                         const WKey& dst_w) {
  const ChainDegreeData& d = cc.deg[k];
  const auto& src_cols = d.blocks.at(src_w);
  Vec glob(d.dim, Rational(0));
  for (size_t p = 0; p < src_cols.size(); ++p) glob[src_cols[p]] = local[p];
  const Vec img = action.apply(glob);
  for (int g = 0; g < d.dim; ++g)
    if (img[g] != 0 && d.weight[g] != dst_w)
      throw InternalError("action image escaped the weight blocks");
  auto dit = d.blocks.find(dst_w);
  if (dit == d.blocks.end()) return std::nullopt;
  Vec out(dit->second.size(), Rational(0));
  for (size_t p = 0; p < dit->second.size(); ++p) out[p] = img[dit->second[p]];
  return out;
}

}  // namespace detail

// Decomposition of ker/im into Levi irreducibles: multiplicities of highest
// weight vectors via the induced raising maps, converted to lowest weights.
inline std::vector<HomologyComponent> homology_bruteforce(const ChainComplex& cc,
                                                          const ChainHomology& hom) {
  const LieAlgebraRealization& L = *cc.L;
  const RootSystem& rs = L.rs;
  const int n = rs.rank;
  const Subsystem levi = Subsystem::levi(cc.pd);
  std::vector<int> raise_label;
  for (int j : cc.pd.uncrossed) {
    std::vector<int> unit(n, 0);
    unit[j] = 1;
    raise_label.push_back(L.label_E(rs.root_index(Root{unit})));
  }

  std::map<std::pair<int, WKey>, long long> mult;  // (degree, lowest) -> count
  for (int k = 0; k <= cc.np; ++k) {
    std::vector<SparseMat> raise_action;
    for (int lab : raise_label) raise_action.push_back(chain_action(cc, k, lab));
    BigInt covered = 0;
    for (const auto& [w, blk] : hom.block[k]) {
      const int h = static_cast<int>(blk.h_reps.size());
      if (h == 0) continue;
      // residues of the raised representatives modulo the image above
      std::vector<Vec> cond_cols(h);
      for (size_t j = 0; j < raise_label.size(); ++j) {
        WKey dst = w;
        const int node = cc.pd.uncrossed[j];
        for (int t = 0; t < n; ++t) dst[t] += rs.cartan[node][t];
        // target-block absence is uniform over r, so columns stay aligned
        for (int r = 0; r < h; ++r) {
          auto img = detail::apply_to_block(cc, k, raise_action[j], w, blk.h_reps[r], dst);
          if (!img) continue;
          const Vec residue = hom.block[k].at(dst).image.reduce(*img);
          for (const auto& x : residue) cond_cols[r].push_back(x);
        }
      }
      const int crows = h ? static_cast<int>(cond_cols[0].size()) : 0;
      Mat cond(crows, h);
      for (int r = 0; r < h; ++r) {
        if (static_cast<int>(cond_cols[r].size()) != crows)
          throw InternalError("ragged raising-residue columns");
        for (int t = 0; t < crows; ++t) cond.at(t, r) = cond_cols[r][t];
      }
      const long long hw_mult = static_cast<long long>(kernel_basis(cond).size());
      if (hw_mult == 0) continue;
      const Weight top = weight_of_key(w);
      if (!cc.pd.is_levi_dominant(top))
        throw InternalError("homology highest weight is not Levi-dominant");
      mult[{k, wkey(cc.pd.levi_antidominant(top))}] += hw_mult;
      covered += BigInt(hw_mult) * weyl_dim(rs, levi, top);
    }
    if (covered != BigInt(hom.h_dim[k]))
      throw InternalError("Levi decomposition of homology does not exhaust it");
  }

  std::vector<HomologyComponent> out;
  for (const auto& [key, count] : mult) {
    HomologyComponent c;
    c.degree = key.first;
    c.lowest = weight_of_key(key.second);
    c.multiplicity = count;
    c.homogeneity = cc.pd.grading_element.eval(c.lowest);
    c.dim = weyl_dim(rs, levi, cc.pd.levi_dominant(c.lowest));
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Every p_+ root vector maps ker(boundary) into im(boundary).
inline bool p_plus_maps_kernel_into_image(const ChainComplex& cc, const ChainHomology& hom) {
  const LieAlgebraRealization& L = *cc.L;
  const int n = L.rs.rank;
  for (int k = 0; k <= cc.np; ++k) {
    for (int s = 0; s < cc.np; ++s) {
      const int r = cc.proots[s];
      const SparseMat action = chain_action(cc, k, L.label_E(r));
      const WKey beta = L.rs.root_fund_coords(L.rs.positive[r]);
      for (const auto& [w, blk] : hom.block[k]) {
        if (blk.kernel.empty()) continue;
        WKey dst = w;
        for (int t = 0; t < n; ++t) dst[t] += beta[t];
        for (const auto& v : blk.kernel) {
          auto img = detail::apply_to_block(cc, k, action, w, v, dst);
          if (!img) continue;
          auto dit = hom.block[k].find(dst);
          if (dit == hom.block[k].end()) return false;
          if (!dit->second.image.contains(*img)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace bggkit
