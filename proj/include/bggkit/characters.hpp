// Weight multisets and exact character arithmetic.
//
// Freudenthal's recursion gives weight multiplicities of an irreducible
// highest-weight module; it is run either for the full root system or for the
// Levi subsystem of a parabolic (ambient coordinates ride along, the center
// contributions cancel in all the differences the recursion uses).  On top of
// that sits a peeling loop that decomposes any finite Levi-stable character
// into irreducible Levi summands.

#pragma once

#include "bggkit/parabolic.hpp"
#include "bggkit/root_system.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace bggkit {

using WKey = std::vector<long long>;                 // integral fundamental coordinates
using WeightMultiset = std::map<WKey, long long>;

inline WKey wkey(const Weight& w) { return w.as_ints(); }
inline Weight weight_of_key(const WKey& k) { return Weight::from_ints(k); }

// A root subsystem closed under its own reflections: the whole system, or the
// Levi part of a parabolic.
struct Subsystem {
  std::vector<int> simples;        // 0-based ambient node indices
  std::vector<int> positive_idx;   // indices into rs.positive
  Weight rho_sub;                  // half sum of the subsystem positive roots

  static Subsystem full(const RootSystem& rs) {
    Subsystem s;
    for (int i = 0; i < rs.rank; ++i) s.simples.push_back(i);
    for (int r = 0; r < rs.num_positive(); ++r) s.positive_idx.push_back(r);
    s.rho_sub = rs.rho();
    return s;
  }

  static Subsystem levi(const ParabolicData& pd) {
    Subsystem s;
    s.simples = pd.uncrossed;
    s.positive_idx = pd.levi_roots;
    Vec half(pd.rs.rank, Rational(0));
    for (int r : pd.levi_roots) {
      const auto& mf = pd.rs.positive_fund[r];
      for (int j = 0; j < pd.rs.rank; ++j) half[j] += Rational(mf[j], 2);
    }
    s.rho_sub = Weight(half);
    return s;
  }

  bool dominant(const RootSystem&, const WKey& k) const {
    for (int i : simples)
      if (k[i] < 0) return false;
    return true;
  }

  WKey antidominant_conjugate(const RootSystem& rs, WKey k) const {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i : simples)
        if (k[i] > 0) {
          Weight w = rs.reflect(i, weight_of_key(k));
          k = wkey(w);
          moved = true;
        }
    }
    return k;
  }
};

// Weight diagram with multiplicities of the irreducible with highest weight
// lambda (dominant and integral for the subsystem).
inline WeightMultiset freudenthal_weights(const RootSystem& rs, const Subsystem& sub,
                                          const Weight& lambda) {
  if (!lambda.is_integral()) throw std::invalid_argument("highest weight must be integral");
  for (int i : sub.simples)
    if (lambda.m[i] < 0)
      throw std::invalid_argument("highest weight must be dominant for the subsystem");

  // Saturate: fill every reflection string from lambda downwards/upwards.
  std::map<WKey, bool> in_set;
  std::vector<WKey> work{wkey(lambda)};
  in_set[work[0]] = true;
  while (!work.empty()) {
    const WKey k = work.back();
    work.pop_back();
    const Weight w = weight_of_key(k);
    for (int i : sub.simples) {
      const long long m = k[i];
      const long long steps = m > 0 ? m : -m;
      Weight cur = w;
      for (long long t = 1; t <= steps; ++t) {
        // step toward the reflection s_i(w)
        for (int j = 0; j < rs.rank; ++j)
          cur.m[j] += Rational((m > 0 ? -1 : 1) * rs.cartan[i][j]);
        WKey ck = wkey(cur);
        if (!in_set.count(ck)) {
          in_set[ck] = true;
          work.push_back(ck);
        }
      }
    }
  }

  // Level = height of lambda - mu as a nonnegative root combination.
  auto level_of = [&](const WKey& k) {
    const Weight diff = lambda - weight_of_key(k);
    const Vec c = rs.weight_root_coords(diff);
    long long lvl = 0;
    for (const auto& x : c) lvl += to_int64_exact(x);
    return lvl;
  };
  std::vector<std::pair<long long, WKey>> order;
  for (const auto& [k, _] : in_set) order.push_back({level_of(k), k});
  std::sort(order.begin(), order.end());

  const Weight lam_rho = lambda + sub.rho_sub;
  const Rational lam_norm = rs.inner_standard(lam_rho, lam_rho);

  WeightMultiset mult;
  for (const auto& [lvl, k] : order) {
    if (lvl == 0) {
      mult[k] = 1;
      continue;
    }
    const Weight mu = weight_of_key(k);
    const Weight mu_rho = mu + sub.rho_sub;
    const Rational c = lam_norm - rs.inner_standard(mu_rho, mu_rho);
    Rational sum = 0;
    for (int ri : sub.positive_idx) {
      const Root& gamma = rs.positive[ri];
      const Weight gw = rs.root_weight(gamma);
      const long long t_max = lvl / gamma.height();  // above that the level goes negative
      Weight up = mu;
      for (long long t = 1; t <= t_max; ++t) {
        up = up + gw;
        auto it = mult.find(wkey(up));
        if (it == mult.end() || it->second == 0) continue;
        sum += rs.inner_weight_root(up, gamma) * it->second;
      }
    }
    if (c == 0) {
      if (sum != 0) throw InternalError("Freudenthal: zero divisor with nonzero numerator");
      mult[k] = 0;
      continue;
    }
    const Rational m = 2 * sum / c;
    const long long mi = to_int64_exact(m);
    if (mi < 0) throw InternalError("Freudenthal: negative multiplicity");
    mult[k] = mi;
  }
  for (auto it = mult.begin(); it != mult.end();)
    it = it->second == 0 ? mult.erase(it) : std::next(it);
  return mult;
}

// dim of the subsystem irreducible with highest weight lambda.
inline BigInt weyl_dim(const RootSystem& rs, const Subsystem& sub, const Weight& lambda) {
  Rational prod = 1;
  const Weight lr = lambda + sub.rho_sub;
  for (int ri : sub.positive_idx) {
    const Root& gamma = rs.positive[ri];
    prod *= rs.inner_weight_root(lr, gamma) / rs.inner_weight_root(sub.rho_sub, gamma);
  }
  if (!is_integer(prod)) throw InternalError("Weyl dimension formula gave a non-integer");
  return numerator(prod);
}

inline long long multiset_total(const WeightMultiset& ms) {
  long long t = 0;
  for (const auto& [_, m] : ms) t += m;
  return t;
}

struct LeviComponent {
  WKey lowest;
  WKey highest;
  long long multiplicity = 0;
};

// Decompose a Levi-stable character into irreducible Levi components by
// repeatedly peeling the component through a maximal weight.
inline std::vector<LeviComponent> peel_levi_components(const ParabolicData& pd,
                                                       WeightMultiset ms) {
  const RootSystem& rs = pd.rs;
  const Subsystem sub = Subsystem::levi(pd);

  // The input must be stable under the Levi Weyl group.
  for (const auto& [k, m] : ms)
    for (int i : sub.simples) {
      const WKey rk = wkey(rs.reflect(i, weight_of_key(k)));
      auto it = ms.find(rk);
      if (it == ms.end() || it->second != m)
        throw std::invalid_argument("weight multiset is not Levi-reflection stable");
    }

  std::vector<LeviComponent> comps;
  while (!ms.empty()) {
    // Maximal pairing with rho of the Levi picks a highest weight.
    auto best = ms.begin();
    Rational best_val = rs.inner_standard(weight_of_key(best->first), sub.rho_sub);
    for (auto it = std::next(ms.begin()); it != ms.end(); ++it) {
      const Rational v = rs.inner_standard(weight_of_key(it->first), sub.rho_sub);
      if (v > best_val) {
        best = it;
        best_val = v;
      }
    }
    const WKey top = best->first;
    const long long count = best->second;
    if (!sub.dominant(rs, top))
      throw std::invalid_argument("maximal weight is not Levi-dominant; not a character");
    const WeightMultiset comp_char = freudenthal_weights(rs, sub, weight_of_key(top));
    for (const auto& [k, m] : comp_char) {
      auto it = ms.find(k);
      const long long need = count * m;
      if (it == ms.end() || it->second < need)
        throw std::invalid_argument("multiset is not a genuine Levi character");
      it->second -= need;
      if (it->second == 0) ms.erase(it);
    }
    LeviComponent c;
    c.highest = top;
    c.lowest = sub.antidominant_conjugate(rs, top);
    c.multiplicity = count;
    comps.push_back(std::move(c));
  }
  std::sort(comps.begin(), comps.end(),
            [](const LeviComponent& a, const LeviComponent& b) { return a.lowest < b.lowest; });
  return comps;
}

// Character of Lambda^k applied to the p_+ roots tensored with the character
// of V; used by the matrix-free paths.
inline WeightMultiset wedge_character(const ParabolicData& pd, int k, const WeightMultiset& v_char,
                                      const Guardrails& guards = Guardrails::from_env()) {
  const int n = static_cast<int>(pd.p_plus_roots.size());
  if (k < 0 || k > n) return {};
  // enumerate k-subsets of the p_+ roots
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  WeightMultiset wedge;
  long long count = 0;
  while (true) {
    WKey sum(pd.rs.rank, 0);
    for (int i : idx) {
      const auto& mf = pd.rs.positive_fund[pd.p_plus_roots[i]];
      for (int j = 0; j < pd.rs.rank; ++j) sum[j] += mf[j];
    }
    wedge[sum] += 1;
    ++count;
    Guardrails::check(count, guards.chain_dim, "wedge basis size");
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  Guardrails::check(count * multiset_total(v_char), guards.chain_dim, "chain space dimension");
  WeightMultiset out;
  for (const auto& [wk, wm] : wedge)
    for (const auto& [vk, vm] : v_char) {
      WKey s(wk);
      for (size_t j = 0; j < s.size(); ++j) s[j] += vk[j];
      out[s] += wm * vm;
    }
  return out;
}

}  // namespace bggkit
