// Brute-force matrix realization: the algebra, its irreducible modules, and
// everything the verification paths derive from them.
//
// The simple algebra is realized inside a smallest faithful fundamental
// module, built from the highest weight by lowering words; linear relations
// among words are detected with the contravariant form, so the whole
// construction is exact.  Root vectors for non-simple roots are fixed by
// bracketing along a defining decomposition beta = alpha_i + delta and
// dividing by the root-string normalizer, which lands in a Chevalley-style
// basis: integral structure constants and [E_beta, F_beta] equal to the
// coroot on the nose.  Every bracket is re-expanded in the basis and checked
// entry by entry, so an inconsistent construction cannot survive silently.

#pragma once

#include "bggkit/characters.hpp"
#include "bggkit/guardrails.hpp"
#include "bggkit/linalg.hpp"
#include "bggkit/parabolic.hpp"
#include "bggkit/root_system.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace bggkit {

// ---------------------------------------------------------------------------
// Irreducible module from its highest weight, generator action only.

struct GeneratorRep {
  int dim = 0;
  Weight lambda;
  std::vector<WKey> weights;     // weight of each basis vector
  std::vector<Mat> e, f, h;      // one matrix per simple node
};

inline GeneratorRep highest_weight_module(const RootSystem& rs, const Weight& lambda,
                                          const Guardrails& guards = Guardrails::from_env()) {
  if (!lambda.is_integral() || !lambda.is_dominant())
    throw std::invalid_argument("highest weight must be dominant integral");
  const BigInt predicted = weyl_dim(rs, Subsystem::full(rs), lambda);
  if (predicted > guards.irrep_dim)
    throw GuardrailError("irreducible dimension " + predicted.str() + " exceeds limit " +
                         std::to_string(guards.irrep_dim) +
                         " (raise via BGGKIT_GUARDRAIL_SCALE or an explicit override)");

  const int n = rs.rank;
  std::vector<WKey> wt_of{wkey(lambda)};
  std::map<WKey, std::vector<int>> basis_at{{wkey(lambda), {0}}};
  std::map<WKey, Mat> gram;
  {
    Mat g(1, 1);
    g.at(0, 0) = 1;
    gram[wkey(lambda)] = g;
  }
  // Coordinates of the candidate f_i(b) in the chosen basis of its weight
  // space, keyed by (i, global index of b).
  std::map<WKey, std::map<std::pair<int, int>, Vec>> cand_coords;
  // e_i action on each basis vector, as coordinates over basis_at[wt + alpha_i].
  std::vector<std::map<int, Vec>> e_action{{}};

  auto shift = [&](const WKey& k, int i, int sign) {
    WKey r = k;
    for (int j = 0; j < n; ++j) r[j] += sign * rs.cartan[i][j];
    return r;
  };

  std::set<WKey> frontier;
  for (int i = 0; i < n; ++i) frontier.insert(shift(wkey(lambda), i, -1));

  while (!frontier.empty()) {
    std::set<WKey> next;
    for (const WKey& mu : frontier) {
      // candidates f_i(b) landing at mu
      std::vector<std::pair<int, int>> cands;
      for (int i = 0; i < n; ++i) {
        auto it = basis_at.find(shift(mu, i, +1));
        if (it == basis_at.end()) continue;
        for (int b : it->second) cands.push_back({i, b});
      }
      if (cands.empty()) continue;
      const int nc = static_cast<int>(cands.size());

      // <f_i b, f_j c> = <b, f_j(e_i c)> + [i==j] wt(c)_i <b, c>
      Mat cg(nc, nc);
      for (int s = 0; s < nc; ++s) {
        const auto [i, b] = cands[s];
        const WKey above = shift(mu, i, +1);  // weight of b
        const auto& above_basis = basis_at[above];
        const Mat& above_gram = gram[above];
        const auto b_local = static_cast<int>(std::find(above_basis.begin(), above_basis.end(), b) -
                                              above_basis.begin());
        for (int t = 0; t < nc; ++t) {
          const auto [j, c] = cands[t];
          // expr = e_i(f_j c) over basis_at[mu + alpha_i]
          Vec expr(above_basis.size(), Rational(0));
          const auto& ec = e_action[c];  // e_k c coords over basis(wt(c)+alpha_k)
          auto eit = ec.find(i);
          if (eit != ec.end()) {
            const WKey top = shift(shift(mu, j, +1), i, +1);  // wt(c) + alpha_i
            const auto& top_basis = basis_at[top];
            for (size_t s2 = 0; s2 < top_basis.size(); ++s2) {
              if (eit->second[s2] == 0) continue;
              auto cit = cand_coords[above].find({j, top_basis[s2]});
              if (cit == cand_coords[above].end()) continue;
              for (size_t r2 = 0; r2 < expr.size(); ++r2)
                expr[r2] += eit->second[s2] * cit->second[r2];
            }
          }
          if (i == j) {
            const auto c_local = static_cast<int>(
                std::find(above_basis.begin(), above_basis.end(), c) - above_basis.begin());
            expr[c_local] += Rational(wt_of[c][i]);
          }
          Rational val = 0;
          for (size_t r2 = 0; r2 < expr.size(); ++r2)
            if (expr[r2] != 0) val += above_gram.at(b_local, static_cast<int>(r2)) * expr[r2];
          cg.at(s, t) = val;
        }
      }

      // pick a maximal set of candidates with independent form rows
      Echelon ech(nc);
      std::vector<int> selected;
      for (int s = 0; s < nc; ++s) {
        Vec row(nc);
        for (int t = 0; t < nc; ++t) row[t] = cg.at(s, t);
        if (ech.add_row(std::move(row))) selected.push_back(s);
      }
      if (selected.empty()) continue;
      const int dim_mu = static_cast<int>(selected.size());

      std::vector<int>& mu_basis = basis_at[mu];
      for (int r = 0; r < dim_mu; ++r) {
        mu_basis.push_back(static_cast<int>(wt_of.size()));
        wt_of.push_back(mu);
        e_action.push_back({});
      }
      if (static_cast<BigInt>(wt_of.size()) > predicted)
        throw InternalError("module construction exceeded the predicted dimension");

      Mat g(dim_mu, dim_mu);
      for (int r = 0; r < dim_mu; ++r)
        for (int s = 0; s < dim_mu; ++s) g.at(r, s) = cg.at(selected[r], selected[s]);
      const auto g_inv = mat_inverse(g);
      if (!g_inv) throw InternalError("degenerate selected form block");
      gram[mu] = g;

      // coordinates of every candidate over the selected basis
      auto& cc = cand_coords[mu];
      for (int t = 0; t < nc; ++t) {
        Vec rhs(dim_mu);
        for (int r = 0; r < dim_mu; ++r) rhs[r] = cg.at(selected[r], t);
        cc[cands[t]] = mat_vec(*g_inv, rhs);
      }

      // e action on the new basis vectors: v = f_j b', so
      // e_i v = f_j(e_i b') + [i==j] wt(b')_i b'
      for (int r = 0; r < dim_mu; ++r) {
        const auto [j, bp] = cands[selected[r]];
        const int v_glob = mu_basis[r];
        for (int i = 0; i < n; ++i) {
          const WKey up = shift(mu, i, +1);  // weight of e_i v
          auto ub = basis_at.find(up);
          if (ub == basis_at.end()) continue;
          Vec col(ub->second.size(), Rational(0));
          const auto& eb = e_action[bp];
          auto eit = eb.find(i);
          if (eit != eb.end()) {
            const WKey top = shift(shift(mu, j, +1), i, +1);
            const auto& top_basis = basis_at[top];
            for (size_t s2 = 0; s2 < top_basis.size(); ++s2) {
              if (eit->second[s2] == 0) continue;
              auto cit = cand_coords[up].find({j, top_basis[s2]});
              if (cit == cand_coords[up].end()) continue;
              for (size_t r2 = 0; r2 < col.size(); ++r2)
                col[r2] += eit->second[s2] * cit->second[r2];
            }
          }
          if (i == j) {
            const auto& ubb = ub->second;
            const auto b_local = static_cast<int>(std::find(ubb.begin(), ubb.end(), bp) - ubb.begin());
            col[b_local] += Rational(wt_of[bp][i]);
          }
          if (!vec_is_zero(col)) e_action[v_glob][i] = std::move(col);
        }
        // only the f_j that created v is guaranteed nonzero; other f_i(v)
        // columns are produced when the weights below get processed
      }

      for (int i = 0; i < n; ++i) next.insert(shift(mu, i, -1));
    }
    frontier = std::move(next);
  }

  if (BigInt(wt_of.size()) != predicted)
    throw InternalError("module dimension " + std::to_string(wt_of.size()) +
                        " disagrees with the dimension formula " + predicted.str());

  GeneratorRep rep;
  rep.dim = static_cast<int>(wt_of.size());
  rep.lambda = lambda;
  rep.weights = wt_of;
  rep.e.assign(n, Mat(rep.dim, rep.dim));
  rep.f.assign(n, Mat(rep.dim, rep.dim));
  rep.h.assign(n, Mat(rep.dim, rep.dim));
  for (int g2 = 0; g2 < rep.dim; ++g2) {
    for (int i = 0; i < n; ++i) rep.h[i].at(g2, g2) = Rational(wt_of[g2][i]);
    for (const auto& [i, col] : e_action[g2]) {
      const auto& up_basis = basis_at[shift(wt_of[g2], i, +1)];
      for (size_t r2 = 0; r2 < col.size(); ++r2) rep.e[i].at(up_basis[r2], g2) = col[r2];
    }
  }
  for (const auto& [mu, cc] : cand_coords) {
    const auto& mu_basis = basis_at[mu];
    for (const auto& [cand, coords] : cc) {
      const auto [i, b] = cand;
      for (size_t r2 = 0; r2 < coords.size(); ++r2)
        if (coords[r2] != 0) rep.f[i].at(mu_basis[r2], b) = coords[r2];
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The realized algebra.

using SparseVec = std::vector<std::pair<int, Rational>>;

class LieAlgebraRealization {
 public:
  RootSystem rs;
  int n = 0;    // rank
  int m = 0;    // number of positive roots
  int dim = 0;  // n + 2m
  std::vector<std::string> names;
  std::vector<std::vector<SparseVec>> bracket_table;  // [a][b]
  Mat killing;
  std::vector<std::pair<int, int>> defining_pair;  // (simple node, positive-root index), (-1,-1) for simples
  std::vector<Rational> e_norm, f_norm;            // divisors used to fix E_beta, F_beta
  std::vector<std::vector<long long>> coroot;      // coroot coordinates per positive root
  GeneratorRep base_rep;                            // faithful module used for the construction
  std::vector<Mat> base_action;                     // action of each basis label there

  int label_H(int i) const { return i; }
  int label_E(int r) const { return n + r; }
  int label_F(int r) const { return n + m + r; }
  bool is_H(int a) const { return a < n; }
  bool is_E(int a) const { return a >= n && a < n + m; }
  bool is_F(int a) const { return a >= n + m; }
  int root_of(int a) const { return is_E(a) ? a - n : (is_F(a) ? a - n - m : -1); }

  // root displacement of a basis label, in simple-root coordinates
  std::vector<int> displacement(int a) const {
    std::vector<int> d(n, 0);
    if (is_E(a)) d = rs.positive[a - n].c;
    if (is_F(a))
      for (int j = 0; j < n; ++j) d[j] = -rs.positive[a - n - m].c[j];
    return d;
  }

  const SparseVec& bracket(int a, int b) const { return bracket_table[a][b]; }

  Vec bracket_vec(const Vec& x, const Vec& y) const {
    Vec r(dim, Rational(0));
    for (int a = 0; a < dim; ++a) {
      if (x[a] == 0) continue;
      for (int b = 0; b < dim; ++b) {
        if (y[b] == 0) continue;
        for (const auto& [c, v] : bracket_table[a][b]) r[c] += x[a] * y[b] * v;
      }
    }
    return r;
  }

  Rational killing_form(const Vec& x, const Vec& y) const {
    Rational s = 0;
    for (int a = 0; a < dim; ++a) {
      if (x[a] == 0) continue;
      for (int b = 0; b < dim; ++b)
        if (y[b] != 0 && killing.at(a, b) != 0) s += x[a] * killing.at(a, b) * y[b];
    }
    return s;
  }

  Mat ad_matrix(int a) const {
    Mat ad(dim, dim);
    for (int b = 0; b < dim; ++b)
      for (const auto& [c, v] : bracket_table[a][b]) ad.at(c, b) = v;
    return ad;
  }

  Vec unit(int a) const {
    Vec v(dim, Rational(0));
    v[a] = 1;
    return v;
  }
};

namespace detail {

inline bool is_root_vector(const RootSystem& rs, const std::vector<int>& c) {
  const bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
  const bool nonpos = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
  if (nonneg && !nonpos) return rs.root_index(Root{c}) >= 0;
  if (nonpos && !nonneg) {
    std::vector<int> neg(c);
    for (int& x : neg) x = -x;
    return rs.root_index(Root{neg}) >= 0;
  }
  return false;  // zero or mixed sign
}

// longest k >= 0 with delta - k*alpha_i still a root
inline int string_down_length(const RootSystem& rs, const Root& delta, int i) {
  int p = 0;
  std::vector<int> c = delta.c;
  while (true) {
    c[i] -= 1;
    if (!is_root_vector(rs, c)) break;
    ++p;
  }
  return p;
}

}  // namespace detail

inline LieAlgebraRealization realize_algebra(const RootSystem& rs,
                                             const Guardrails& guards = Guardrails::from_env()) {
  LieAlgebraRealization L;
  L.rs = rs;
  L.n = rs.rank;
  L.m = rs.num_positive();
  L.dim = L.n + 2 * L.m;
  Guardrails::check(L.dim, guards.algebra_dim, "algebra dimension");

  // Smallest fundamental module is faithful (the algebra is simple).
  int best = 0;
  BigInt best_dim = -1;
  for (int j = 0; j < L.n; ++j) {
    Vec m(L.n, Rational(0));
    m[j] = 1;
    const BigInt dj = weyl_dim(rs, Subsystem::full(rs), Weight(m));
    if (best_dim < 0 || dj < best_dim) {
      best_dim = dj;
      best = j;
    }
  }
  {
    Vec m(L.n, Rational(0));
    m[best] = 1;
    Guardrails preset = guards;
    preset.irrep_dim = std::max(preset.irrep_dim, static_cast<long long>(best_dim));
    L.base_rep = highest_weight_module(rs, Weight(m), preset);
  }

  // Root vectors by bracketing along defining pairs, in height order.
  std::vector<Mat> e_mat(L.m), f_mat(L.m);
  L.defining_pair.assign(L.m, {-1, -1});
  L.e_norm.assign(L.m, Rational(1));
  L.f_norm.assign(L.m, Rational(1));
  for (int r = 0; r < L.m; ++r) {
    L.coroot.push_back(rs.coroot_coords(rs.positive[r]));
    const Root& beta = rs.positive[r];
    if (beta.height() == 1) {
      int i = 0;
      while (beta.c[i] == 0) ++i;
      e_mat[r] = L.base_rep.e[i];
      f_mat[r] = L.base_rep.f[i];
      continue;
    }
    int si = -1, delta_idx = -1;
    for (int i = 0; i < L.n && si < 0; ++i) {
      if (beta.c[i] == 0) continue;
      std::vector<int> c = beta.c;
      c[i] -= 1;
      const int idx = rs.root_index(Root{c});
      if (idx >= 0) {
        si = i;
        delta_idx = idx;
      }
    }
    if (si < 0) throw InternalError("positive root without a simple summand");
    L.defining_pair[r] = {si, delta_idx};
    const int p = detail::string_down_length(rs, rs.positive[delta_idx], si);
    const Rational norm(p + 1);
    L.e_norm[r] = norm;
    Mat er = mat_scale(commutator(L.base_rep.e[si], e_mat[delta_idx]), 1 / norm);
    Mat fr = mat_scale(commutator(L.base_rep.f[si], f_mat[delta_idx]), 1 / norm);
    if (er.is_zero() || fr.is_zero()) throw InternalError("vanishing root vector bracket");
    // normalize the F side so that [E_beta, F_beta] is the coroot exactly
    Mat h_beta(L.base_rep.dim, L.base_rep.dim);
    for (int j = 0; j < L.n; ++j)
      if (L.coroot[r][j] != 0) h_beta = mat_add(h_beta, mat_scale(L.base_rep.h[j], Rational(L.coroot[r][j])));
    const Mat t_mat = commutator(er, fr);
    Rational t;
    bool t_found = false;
    for (int idx = 0; idx < h_beta.rows * h_beta.cols && !t_found; ++idx)
      if (h_beta.a[idx] != 0) {
        t = t_mat.a[idx] / h_beta.a[idx];
        t_found = true;
      }
    if (!t_found || t == 0) throw InternalError("coroot matrix vanished");
    if (t_mat != mat_scale(h_beta, t))
      throw InternalError("[E,F] is not proportional to the coroot");
    if (t != 1 && t != -1) throw InternalError("coroot normalizer is not a sign");
    fr = mat_scale(fr, 1 / t);
    L.f_norm[r] = norm * t;
    e_mat[r] = std::move(er);
    f_mat[r] = std::move(fr);
  }

  L.base_action.resize(L.dim);
  L.names.resize(L.dim);
  for (int i = 0; i < L.n; ++i) {
    L.base_action[L.label_H(i)] = L.base_rep.h[i];
    L.names[L.label_H(i)] = "H" + std::to_string(i + 1);
  }
  auto root_name = [&](const Root& r) {
    std::string s = "(";
    for (size_t i = 0; i < r.c.size(); ++i) s += (i ? "," : "") + std::to_string(r.c[i]);
    return s + ")";
  };
  for (int r = 0; r < L.m; ++r) {
    L.base_action[L.label_E(r)] = e_mat[r];
    L.base_action[L.label_F(r)] = f_mat[r];
    L.names[L.label_E(r)] = "E" + root_name(rs.positive[r]);
    L.names[L.label_F(r)] = "F" + root_name(rs.positive[r]);
  }

  // Structure constants: every bracket is re-expanded and fully verified.
  L.bracket_table.assign(L.dim, std::vector<SparseVec>(L.dim));
  for (int a = 0; a < L.dim; ++a) {
    for (int b = 0; b < L.dim; ++b) {
      if (a == b) continue;
      const Mat k = commutator(L.base_action[a], L.base_action[b]);
      std::vector<int> disp(L.n, 0);
      {
        const auto da = L.displacement(a);
        const auto db = L.displacement(b);
        for (int j = 0; j < L.n; ++j) disp[j] = da[j] + db[j];
      }
      const bool disp_zero = std::all_of(disp.begin(), disp.end(), [](int x) { return x == 0; });
      SparseVec out;
      if (disp_zero) {
        if (L.is_H(a) && L.is_H(b)) {
          if (!k.is_zero()) throw InternalError("Cartan elements fail to commute");
        } else {
          // [E_r, F_r] = coroot
          const int r = L.root_of(a);
          Mat h_beta(L.base_rep.dim, L.base_rep.dim);
          for (int j = 0; j < L.n; ++j)
            if (L.coroot[r][j] != 0)
              h_beta = mat_add(h_beta, mat_scale(L.base_rep.h[j], Rational(L.coroot[r][j])));
          const Rational sgn = L.is_E(a) ? 1 : -1;
          if (k != mat_scale(h_beta, sgn)) throw InternalError("[E,F] disagrees with the coroot");
          for (int j = 0; j < L.n; ++j)
            if (L.coroot[r][j] != 0) out.push_back({L.label_H(j), sgn * Rational(L.coroot[r][j])});
        }
      } else if (detail::is_root_vector(rs, disp)) {
        const bool pos = std::all_of(disp.begin(), disp.end(), [](int x) { return x >= 0; });
        std::vector<int> abs_disp = disp;
        if (!pos)
          for (int& x : abs_disp) x = -x;
        const int g = rs.root_index(Root{abs_disp});
        const int tgt = pos ? L.label_E(g) : L.label_F(g);
        const Mat& basis_mat = L.base_action[tgt];
        Rational coeff = 0;
        for (int idx = 0; idx < basis_mat.rows * basis_mat.cols; ++idx)
          if (basis_mat.a[idx] != 0) {
            coeff = k.a[idx] / basis_mat.a[idx];
            break;
          }
        if (k != mat_scale(basis_mat, coeff))
          throw InternalError("bracket is not a multiple of the expected root vector");
        if (coeff != 0) {
          if (!is_integer(coeff) && !L.is_H(a) && !L.is_H(b))
            throw InternalError("non-integral structure constant");
          out.push_back({tgt, coeff});
        }
      } else {
        if (!k.is_zero()) throw InternalError("bracket escaped the root lattice support");
      }
      L.bracket_table[a][b] = std::move(out);
    }
  }

  // Killing form from adjoint traces over the structure constants.
  L.killing = Mat(L.dim, L.dim);
  for (int a = 0; a < L.dim; ++a)
    for (int b = a; b < L.dim; ++b) {
      Rational tr = 0;
      for (int y = 0; y < L.dim; ++y)
        for (const auto& [z, v] : L.bracket_table[b][y])
          for (const auto& [y2, u] : L.bracket_table[a][z])
            if (y2 == y) tr += u * v;
      L.killing.at(a, b) = tr;
      L.killing.at(b, a) = tr;
    }
  return L;
}

inline bool jacobi_identity_check(const LieAlgebraRealization& L) {
  for (int a = 0; a < L.dim; ++a)
    for (int b = a + 1; b < L.dim; ++b)
      for (int c = b + 1; c < L.dim; ++c) {
        std::map<int, Rational> acc;
        auto add_term = [&](int x, int y, int z) {
          for (const auto& [d, v] : L.bracket_table[y][z])
            for (const auto& [e, u] : L.bracket_table[x][d]) acc[e] += u * v;
        };
        add_term(a, b, c);
        add_term(b, c, a);
        add_term(c, a, b);
        for (const auto& [_, v] : acc)
          if (v != 0) return false;
      }
  return true;
}

// Check that dualizing the realized Killing form on the Cartan reproduces the
// built-in normalized inner form on weights.
inline bool killing_dual_form_check(const LieAlgebraRealization& L) {
  Mat k_cartan(L.n, L.n);
  for (int i = 0; i < L.n; ++i)
    for (int j = 0; j < L.n; ++j) k_cartan.at(i, j) = L.killing.at(i, j);
  const auto inv = mat_inverse(k_cartan);
  if (!inv) return false;
  return *inv == L.rs.gram_killing;
}

// Dual basis with respect to the Killing form: column l holds the coordinates
// of the element dual to basis label l.
inline std::vector<Vec> dual_bases(const LieAlgebraRealization& L) {
  const auto inv = mat_inverse(L.killing);
  if (!inv) throw InternalError("Killing form is degenerate");
  std::vector<Vec> dual(L.dim, Vec(L.dim, Rational(0)));
  for (int l = 0; l < L.dim; ++l)
    for (int a = 0; a < L.dim; ++a) dual[l][a] = inv->at(a, l);
  return dual;
}

// ---------------------------------------------------------------------------
// Full module realization: action of every basis label.

struct RepRealization {
  Weight lambda;
  int dim = 0;
  std::vector<WKey> weights;
  std::vector<Mat> action;  // by basis label

  Mat act(const LieAlgebraRealization& L, const Vec& coords) const {
    Mat r(dim, dim);
    for (int a = 0; a < L.dim; ++a)
      if (coords[a] != 0) r = mat_add(r, mat_scale(action[a], coords[a]));
    return r;
  }
};

inline RepRealization build_irrep(const LieAlgebraRealization& L, const Weight& lambda,
                                  const Guardrails& guards = Guardrails::from_env()) {
  const GeneratorRep gen = highest_weight_module(L.rs, lambda, guards);
  RepRealization rep;
  rep.lambda = lambda;
  rep.dim = gen.dim;
  rep.weights = gen.weights;
  rep.action.resize(L.dim);
  for (int i = 0; i < L.n; ++i) rep.action[L.label_H(i)] = gen.h[i];
  for (int r = 0; r < L.m; ++r) {
    const Root& beta = L.rs.positive[r];
    if (beta.height() == 1) {
      int i = 0;
      while (beta.c[i] == 0) ++i;
      rep.action[L.label_E(r)] = gen.e[i];
      rep.action[L.label_F(r)] = gen.f[i];
      continue;
    }
    const auto [si, delta_idx] = L.defining_pair[r];
    rep.action[L.label_E(r)] = mat_scale(
        commutator(gen.e[si], rep.action[L.label_E(delta_idx)]), 1 / L.e_norm[r]);
    rep.action[L.label_F(r)] = mat_scale(
        commutator(gen.f[si], rep.action[L.label_F(delta_idx)]), 1 / L.f_norm[r]);
  }
  return rep;
}

// The invariant bilinear wrap-up: C = sum_l rho(xi^l) rho(xi_l) over any basis
// and its Killing dual.
inline Mat casimir_matrix(const LieAlgebraRealization& L, const RepRealization& rep) {
  const auto inv = mat_inverse(L.killing);
  if (!inv) throw InternalError("Killing form is degenerate");
  Mat c(rep.dim, rep.dim);
  for (int l = 0; l < L.dim; ++l)
    for (int a = 0; a < L.dim; ++a) {
      if (inv->at(a, l) == 0) continue;
      c = mat_add(c, mat_scale(mat_mul(rep.action[l], rep.action[a]), inv->at(a, l)));
    }
  return c;
}

// Same Casimir from any frame paired dually by the Killing form; used to
// exercise basis independence.
inline Mat casimir_matrix_from_dual_pair(const LieAlgebraRealization& L, const RepRealization& rep,
                                         const std::vector<Vec>& basis,
                                         const std::vector<Vec>& dual) {
  if (basis.size() != dual.size()) throw std::invalid_argument("frame size mismatch");
  Mat c(rep.dim, rep.dim);
  for (size_t u = 0; u < basis.size(); ++u)
    c = mat_add(c, mat_mul(rep.act(L, basis[u]), rep.act(L, dual[u])));
  return c;
}

inline std::optional<Rational> scalar_of(const Mat& m) {
  if (m.rows != m.cols) return std::nullopt;
  const Rational s = m.rows ? m.at(0, 0) : Rational(0);
  if (m != mat_scale(Mat::identity(m.rows), s)) return std::nullopt;
  return s;
}

// ---------------------------------------------------------------------------
// Adapted frames for a parabolic.

struct AdaptedBasis {
  std::vector<Vec> Z;       // basis of p_+
  std::vector<Vec> X;       // corrected complement representatives
  std::vector<Vec> A;       // corrected Levi part
  std::vector<Vec> dual_X;  // Killing-dual frame, in the order (X, A, Z)
  std::vector<Vec> dual_A;
  std::vector<Vec> dual_Z;
};

// Follows the two-step correction: X_i = X~_i - 1/2 sum_j B(X~_i, X~_j) Z^j,
// then A_r = A~_r - sum_i B(X_i, A~_r) Z^i.  Default representatives are the
// Killing-duals of the E_beta inside g_-; arbitrary representatives may be
// supplied, they only have to pair correctly with the Z's.
inline AdaptedBasis adapted_basis(const LieAlgebraRealization& L, const ParabolicData& pd,
                                  const std::vector<Vec>* representatives = nullptr) {
  AdaptedBasis ab;
  const int np = static_cast<int>(pd.p_plus_roots.size());
  for (int i = 0; i < np; ++i) ab.Z.push_back(L.unit(L.label_E(pd.p_plus_roots[i])));

  std::vector<Vec> xt;
  if (representatives) {
    xt = *representatives;
    if (static_cast<int>(xt.size()) != np)
      throw std::invalid_argument("need one representative per p_+ root");
  } else {
    for (int i = 0; i < np; ++i) {
      const int r = pd.p_plus_roots[i];
      const Rational pairing = L.killing.at(L.label_E(r), L.label_F(r));
      if (pairing == 0) throw InternalError("E/F Killing pairing vanished");
      xt.push_back(vec_scale(L.unit(L.label_F(r)), 1 / pairing));
    }
  }
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j)
      if (L.killing_form(xt[i], ab.Z[j]) != (i == j ? 1 : 0))
        throw std::invalid_argument("representatives do not pair dually with p_+");

  for (int i = 0; i < np; ++i) {
    Vec x = xt[i];
    for (int j = 0; j < np; ++j) {
      const Rational b = L.killing_form(xt[i], xt[j]);
      if (b != 0)
        for (int a2 = 0; a2 < L.dim; ++a2) x[a2] -= b / 2 * ab.Z[j][a2];
    }
    ab.X.push_back(std::move(x));
  }

  std::vector<int> g0_labels;
  for (int i = 0; i < L.n; ++i) g0_labels.push_back(L.label_H(i));
  for (int r : pd.levi_roots) {
    g0_labels.push_back(L.label_E(r));
    g0_labels.push_back(L.label_F(r));
  }
  for (int lab : g0_labels) {
    Vec a = L.unit(lab);
    for (int i = 0; i < np; ++i) {
      const Rational b = L.killing_form(ab.X[i], a);
      if (b != 0)
        for (int a2 = 0; a2 < L.dim; ++a2) a[a2] -= b * ab.Z[i][a2];
    }
    ab.A.push_back(std::move(a));
  }

  // Killing-dual frame of (X, A, Z).
  std::vector<const std::vector<Vec>*> parts{&ab.X, &ab.A, &ab.Z};
  std::vector<Vec> frame;
  for (auto* p : parts)
    for (const auto& v : *p) frame.push_back(v);
  const int d = L.dim;
  Mat p_mat(d, d), gram(d, d);
  for (int c2 = 0; c2 < d; ++c2)
    for (int r2 = 0; r2 < d; ++r2) p_mat.at(r2, c2) = frame[c2][r2];
  for (int i2 = 0; i2 < d; ++i2)
    for (int j2 = 0; j2 < d; ++j2) gram.at(i2, j2) = L.killing_form(frame[i2], frame[j2]);
  const auto gram_inv = mat_inverse(gram);
  if (!gram_inv) throw InternalError("adapted frame is degenerate");
  const Mat dual_mat = mat_mul(p_mat, *gram_inv);
  auto col_of = [&](int c2) {
    Vec v(d);
    for (int r2 = 0; r2 < d; ++r2) v[r2] = dual_mat.at(r2, c2);
    return v;
  };
  for (int i = 0; i < np; ++i) ab.dual_X.push_back(col_of(i));
  for (size_t r2 = 0; r2 < ab.A.size(); ++r2) ab.dual_A.push_back(col_of(np + static_cast<int>(r2)));
  for (int i = 0; i < np; ++i) ab.dual_Z.push_back(col_of(np + static_cast<int>(ab.A.size()) + i));
  return ab;
}

// ---------------------------------------------------------------------------
// Casimir on p_+-trivial modules of the Levi.

// Action of the parabolic on some module: matrices for every g_0 basis label;
// p_+ acts by zero (that is the caller's promise, checked when supplied).
struct G0Rep {
  int dim = 0;
  std::map<int, Mat> action;  // g_0 labels only
};

inline Mat g0_casimir_formula(const LieAlgebraRealization& L, const ParabolicData& pd,
                              const G0Rep& rep) {
  for (const auto& [lab, mat] : rep.action) {
    const bool in_g0 = L.is_H(lab) || pd.layer_of_positive[L.root_of(lab)] == 0;
    if (!in_g0 && !mat.is_zero())
      throw std::invalid_argument("g0_casimir_formula: labels outside g_0 must act by zero");
  }
  Mat c(rep.dim, rep.dim);
  auto act = [&](const Vec& coords) {
    Mat r(rep.dim, rep.dim);
    for (int a = 0; a < L.dim; ++a) {
      if (coords[a] == 0) continue;
      auto it = rep.action.find(a);
      if (it == rep.action.end())
        throw std::invalid_argument("g0_casimir_formula: action leaves g_0 labels");
      r = mat_add(r, mat_scale(it->second, coords[a]));
    }
    return r;
  };
  // - sum_i [Z^i, X_i], with Z^i = E_beta and X_i its Killing dual in g_-
  for (int r : pd.p_plus_roots) {
    const Rational pairing = L.killing.at(L.label_E(r), L.label_F(r));
    Vec br(L.dim, Rational(0));
    for (const auto& [lab, v] : L.bracket(L.label_E(r), L.label_F(r))) br[lab] = v / pairing;
    c = mat_sub(c, act(br));
  }
  // + sum_r A^r A_r over a Killing-dual pair of bases of g_0
  std::vector<int> g0_labels;
  for (int i = 0; i < L.n; ++i) g0_labels.push_back(L.label_H(i));
  for (int r : pd.levi_roots) {
    g0_labels.push_back(L.label_E(r));
    g0_labels.push_back(L.label_F(r));
  }
  const int d0 = static_cast<int>(g0_labels.size());
  Mat gram0(d0, d0);
  for (int i = 0; i < d0; ++i)
    for (int j = 0; j < d0; ++j) gram0.at(i, j) = L.killing.at(g0_labels[i], g0_labels[j]);
  const auto inv0 = mat_inverse(gram0);
  if (!inv0) throw InternalError("Killing form degenerate on g_0");
  for (int r2 = 0; r2 < d0; ++r2) {
    Mat dual(rep.dim, rep.dim);
    for (int s2 = 0; s2 < d0; ++s2) {
      if (inv0->at(s2, r2) == 0) continue;
      auto it = rep.action.find(g0_labels[s2]);
      if (it == rep.action.end()) throw std::invalid_argument("missing g_0 action matrix");
      dual = mat_add(dual, mat_scale(it->second, inv0->at(s2, r2)));
    }
    auto it = rep.action.find(g0_labels[r2]);
    if (it == rep.action.end()) throw std::invalid_argument("missing g_0 action matrix");
    c = mat_add(c, mat_mul(dual, it->second));
  }
  return c;
}

// ---------------------------------------------------------------------------
// Killing-form compatibility with the grading.

struct PairingCheck {
  bool layers_orthogonal = true;      // B(g_i, g_j) = 0 unless i+j = 0
  bool opposite_nondegenerate = true; // B restricted to g_i x g_{-i} has full rank
  bool filtration_annihilator = true; // g^i is the annihilator of g^{-i+1}
  bool ok() const { return layers_orthogonal && opposite_nondegenerate && filtration_annihilator; }
};

inline PairingCheck filtration_pairing_check(const ParabolicData& pd,
                                             const LieAlgebraRealization& L) {
  PairingCheck out;
  auto layer_of_label = [&](int a) {
    if (L.is_H(a)) return 0;
    const int r = L.root_of(a);
    return L.is_E(a) ? pd.layer_of_positive[r] : -pd.layer_of_positive[r];
  };
  std::map<int, std::vector<int>> labels_by_layer;
  for (int a = 0; a < L.dim; ++a) labels_by_layer[layer_of_label(a)].push_back(a);

  for (const auto& [i, la] : labels_by_layer)
    for (const auto& [j, lb] : labels_by_layer) {
      if (i + j == 0) continue;
      for (int a : la)
        for (int b : lb)
          if (L.killing.at(a, b) != 0) out.layers_orthogonal = false;
    }
  for (const auto& [i, la] : labels_by_layer) {
    const auto& lb = labels_by_layer[-i];
    Mat blk(static_cast<int>(la.size()), static_cast<int>(lb.size()));
    for (size_t r2 = 0; r2 < la.size(); ++r2)
      for (size_t c2 = 0; c2 < lb.size(); ++c2)
        blk.at(static_cast<int>(r2), static_cast<int>(c2)) = L.killing.at(la[r2], lb[c2]);
    if (mat_rank(blk) != static_cast<int>(la.size())) out.opposite_nondegenerate = false;
  }
  // annihilator of g^{-i+1} should be exactly g^i
  for (int i = -pd.depth; i <= pd.depth; ++i) {
    std::vector<int> high;  // labels of g^{-i+1}
    for (const auto& [l, labs] : labels_by_layer)
      if (l >= -i + 1) high.insert(high.end(), labs.begin(), labs.end());
    Mat pairing(static_cast<int>(high.size()), L.dim);
    for (size_t r2 = 0; r2 < high.size(); ++r2)
      for (int c2 = 0; c2 < L.dim; ++c2) pairing.at(static_cast<int>(r2), c2) = L.killing.at(high[r2], c2);
    const auto kern = kernel_basis(pairing);
    if (static_cast<long long>(kern.size()) != pd.filtration_dim(i)) {
      out.filtration_annihilator = false;
      continue;
    }
    for (const auto& v : kern)
      for (int a = 0; a < L.dim; ++a)
        if (v[a] != 0 && layer_of_label(a) < i) out.filtration_annihilator = false;
  }
  return out;
}

}  // namespace bggkit
