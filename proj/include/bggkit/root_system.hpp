// Root systems, weights and the Weyl group for the simple types A-G.
//
// Conventions used everywhere downstream:
//   * Bourbaki node numbering (1-based in I/O, 0-based internally).
//   * cartan[i][j] = <alpha_i, alpha_j^vee>, so the fundamental-weight
//     coordinates of a root are m = A^T c with c its simple-root coordinates.
//   * Weights are stored in fundamental-weight coordinates, m_j = lambda(H_j).
//   * Roots are stored in simple-root coordinates (always integers).
//   * The invariant form comes in two normalizations: the standard one with
//     long roots of squared length 2, and the Killing-form normalization,
//     which is the standard one divided by twice the dual Coxeter number.
//     The Killing normalization is the one all eigenvalue formulas use; the
//     matrix realization cross-checks it by dualizing an actual trace form.

#pragma once

#include "bggkit/guardrails.hpp"
#include "bggkit/linalg.hpp"
#include "bggkit/rational.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace bggkit {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct DynkinSpec {
  Family family = Family::A;
  int rank = 1;

  std::string name() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }

  void validate() const {
    switch (family) {
      case Family::A:
        if (rank < 1) throw std::invalid_argument("A_n needs n >= 1");
        break;
      case Family::B:
        if (rank < 2) throw std::invalid_argument("B_n needs n >= 2");
        break;
      case Family::C:
        if (rank < 2) throw std::invalid_argument("C_n needs n >= 2");
        break;
      case Family::D:
        if (rank < 3) throw std::invalid_argument("D_n needs n >= 3");
        break;
      case Family::E:
        if (rank < 6 || rank > 8) throw std::invalid_argument("E_n needs n in {6,7,8}");
        break;
      case Family::F:
        if (rank != 4) throw std::invalid_argument("F_n needs n = 4");
        break;
      case Family::G:
        if (rank != 2) throw std::invalid_argument("G_n needs n = 2");
        break;
    }
  }

  static DynkinSpec parse(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("bad type string: " + s);
    const char f = s[0];
    if (f < 'A' || f > 'G') throw std::invalid_argument("bad family letter in: " + s);
    DynkinSpec d;
    d.family = static_cast<Family>(f);
    try {
      size_t used = 0;
      d.rank = std::stoi(s.substr(1), &used);
      if (used != s.size() - 1) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad rank in type string: " + s);
    }
    d.validate();
    return d;
  }
};

struct Root {
  std::vector<int> c;  // simple-root coordinates

  bool operator==(const Root& o) const { return c == o.c; }
  bool operator<(const Root& o) const { return c < o.c; }

  int height() const {
    int h = 0;
    for (int x : c) h += x;
    return h;
  }

  Root negated() const {
    Root r = *this;
    for (int& x : r.c) x = -x;
    return r;
  }
};

struct Weight {
  Vec m;  // fundamental-weight coordinates

  Weight() = default;
  explicit Weight(Vec mm) : m(std::move(mm)) {}
  static Weight zero(int rank) { return Weight(Vec(rank, Rational(0))); }
  static Weight from_ints(const std::vector<long long>& v) {
    Vec m;
    m.reserve(v.size());
    for (long long x : v) m.emplace_back(x);
    return Weight(std::move(m));
  }

  int rank() const { return static_cast<int>(m.size()); }
  bool operator==(const Weight& o) const { return m == o.m; }
  bool operator!=(const Weight& o) const { return m != o.m; }
  bool operator<(const Weight& o) const { return m < o.m; }

  Weight operator+(const Weight& o) const { return Weight(vec_add(m, o.m)); }
  Weight operator-(const Weight& o) const {
    Weight r(*this);
    for (int i = 0; i < rank(); ++i) r.m[i] -= o.m[i];
    return r;
  }
  Weight operator-() const { return Weight(vec_scale(m, Rational(-1))); }
  Weight scaled(const Rational& s) const { return Weight(vec_scale(m, s)); }

  bool is_integral() const {
    for (const auto& x : m)
      if (!is_integer(x)) return false;
    return true;
  }
  bool is_dominant() const {
    for (const auto& x : m)
      if (x < 0) return false;
    return true;
  }
  std::vector<long long> as_ints() const {
    std::vector<long long> v;
    v.reserve(m.size());
    for (const auto& x : m) v.push_back(to_int64_exact(x));
    return v;
  }
};

class RootSystem {
 public:
  DynkinSpec spec;
  int rank = 0;
  std::vector<std::vector<int>> cartan;   // cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<Rational> d;                // d[i] = (alpha_i, alpha_i)/2, long roots squared length 2
  long long dual_coxeter = 0;
  std::vector<Root> positive;             // sorted by (height, coords)
  std::vector<std::vector<long long>> positive_fund;  // fundamental coords of each positive root
  Mat gram_standard;                      // (omega_i, omega_j) standard normalization
  Mat gram_killing;                       // gram_standard / (2 h^vee)
  Mat cartan_t_inv;                       // (A^T)^{-1}, converts weight coords to root coords

  int num_positive() const { return static_cast<int>(positive.size()); }
  long long dim_g() const { return 2LL * num_positive() + rank; }

  const Root& root(int idx) const { return positive[idx]; }

  int root_index(const Root& r) const {
    auto it = index_.find(r.c);
    return it == index_.end() ? -1 : it->second;
  }

  // lambda(H_j) for a root beta: m = A^T c.
  std::vector<long long> root_fund_coords(const Root& r) const {
    std::vector<long long> m(rank, 0);
    for (int j = 0; j < rank; ++j)
      for (int i = 0; i < rank; ++i) m[j] += static_cast<long long>(r.c[i]) * cartan[i][j];
    return m;
  }

  Weight root_weight(const Root& r) const {
    auto m = root_fund_coords(r);
    return Weight::from_ints(m);
  }

  Weight rho() const { return Weight(Vec(rank, Rational(1))); }

  // Simple reflection on fundamental coordinates.
  Weight reflect(int i, const Weight& w) const {
    Weight r = w;
    const Rational mi = w.m[i];
    if (mi == 0) return r;
    for (int j = 0; j < rank; ++j) r.m[j] -= mi * cartan[i][j];
    return r;
  }

  // Simple reflection on root coordinates.
  Root reflect_root(int i, const Root& r) const {
    long long pairing = 0;
    for (int k = 0; k < rank; ++k) pairing += static_cast<long long>(r.c[k]) * cartan[k][i];
    Root out = r;
    out.c[i] -= static_cast<int>(pairing);
    return out;
  }

  // Root coordinates of an arbitrary weight (rational in general).
  Vec weight_root_coords(const Weight& w) const { return mat_vec(cartan_t_inv, w.m); }

  // Standard-normalization inner products.
  Rational inner_standard(const Weight& a, const Weight& b) const { return bilinear(gram_standard, a, b); }
  Rational inner_weight_root(const Weight& a, const Root& beta) const {
    // (a, beta) = sum_j c_j d_j a_j since (omega_j, alpha_j) = d_j.
    Rational s = 0;
    for (int j = 0; j < rank; ++j)
      if (beta.c[j] != 0 && a.m[j] != 0) s += Rational(beta.c[j]) * d[j] * a.m[j];
    return s;
  }

  // Killing-normalization inner products; all eigenvalue formulas use these.
  Rational killing_inner(const Weight& a, const Weight& b) const { return bilinear(gram_killing, a, b); }
  Rational killing_norm2(const Weight& a) const { return killing_inner(a, a); }

  Rational half_length2(const Root& r) const {  // (beta, beta)/2, standard normalization
    return inner_weight_root(root_weight(r), r) / 2;
  }

  // Coroot of a positive root in the simple-coroot basis (always integral).
  std::vector<long long> coroot_coords(const Root& r) const {
    const Rational db = half_length2(r);
    std::vector<long long> cv(rank, 0);
    for (int i = 0; i < rank; ++i) {
      const Rational x = Rational(r.c[i]) * d[i] / db;
      cv[i] = to_int64_exact(x);
    }
    return cv;
  }

  Root highest_root() const { return positive.back(); }

  BigInt weyl_order() const {
    const int n = rank;
    auto fact = [](int k) {
      BigInt f = 1;
      for (int i = 2; i <= k; ++i) f *= i;
      return f;
    };
    switch (spec.family) {
      case Family::A: return fact(n + 1);
      case Family::B:
      case Family::C: return fact(n) << n;
      case Family::D: return fact(n) << (n - 1);
      case Family::E:
        if (n == 6) return BigInt(51840);
        if (n == 7) return BigInt(2903040);
        return BigInt(696729600);
      case Family::F: return BigInt(1152);
      case Family::G: return BigInt(12);
    }
    throw InternalError("unreachable family");
  }

 private:
  friend RootSystem build_root_system(const DynkinSpec&);
  std::map<std::vector<int>, int> index_;

  static Rational bilinear(const Mat& g, const Weight& a, const Weight& b) {
    Rational s = 0;
    for (int i = 0; i < g.rows; ++i) {
      if (a.m[i] == 0) continue;
      for (int j = 0; j < g.cols; ++j)
        if (b.m[j] != 0 && g.at(i, j) != 0) s += a.m[i] * g.at(i, j) * b.m[j];
    }
    return s;
  }
};

namespace detail {

inline std::vector<std::vector<int>> cartan_matrix(const DynkinSpec& spec) {
  const int n = spec.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (spec.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n is short
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n is long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::E:
      link(0, 2);
      link(1, 3);
      link(2, 3);
      link(3, 4);
      link(4, 5);
      if (n >= 7) link(5, 6);
      if (n >= 8) link(6, 7);
      break;
    case Family::F:
      link(0, 1);
      link(2, 3);
      a[1][2] = -2;  // alpha_3, alpha_4 short
      a[2][1] = -1;
      break;
    case Family::G:
      a[0][1] = -1;  // alpha_1 short
      a[1][0] = -3;
      break;
  }
  return a;
}

inline std::vector<Rational> root_half_lengths(const DynkinSpec& spec) {
  const int n = spec.rank;
  std::vector<Rational> d(n, Rational(1));
  switch (spec.family) {
    case Family::B: d[n - 1] = Rational(1, 2); break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) d[i] = Rational(1, 2);
      break;
    case Family::F:
      d[2] = d[3] = Rational(1, 2);
      break;
    case Family::G: d[0] = Rational(1, 3); break;
    default: break;
  }
  return d;
}

inline long long dual_coxeter_number(const DynkinSpec& spec) {
  const int n = spec.rank;
  switch (spec.family) {
    case Family::A: return n + 1;
    case Family::B: return 2 * n - 1;
    case Family::C: return n + 1;
    case Family::D: return 2 * n - 2;
    case Family::E: return n == 6 ? 12 : (n == 7 ? 18 : 30);
    case Family::F: return 9;
    case Family::G: return 4;
  }
  throw InternalError("unreachable family");
}

}  // namespace detail

inline RootSystem build_root_system(const DynkinSpec& spec) {
  spec.validate();
  RootSystem rs;
  rs.spec = spec;
  rs.rank = spec.rank;
  rs.cartan = detail::cartan_matrix(spec);
  rs.d = detail::root_half_lengths(spec);
  rs.dual_coxeter = detail::dual_coxeter_number(spec);

  // d_j a_ij must equal d_i a_ji for the form to exist at all.
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j)
      if (rs.d[j] * rs.cartan[i][j] != rs.d[i] * rs.cartan[j][i])
        throw InternalError("asymmetric length data for " + spec.name());

  // All roots: closure of the simple roots under simple reflections.
  std::set<std::vector<int>> all;
  std::vector<Root> work;
  for (int i = 0; i < rs.rank; ++i) {
    Root r;
    r.c.assign(rs.rank, 0);
    r.c[i] = 1;
    all.insert(r.c);
    work.push_back(r);
  }
  while (!work.empty()) {
    const Root r = work.back();
    work.pop_back();
    for (int i = 0; i < rs.rank; ++i) {
      Root s = rs.reflect_root(i, r);
      if (all.insert(s.c).second) work.push_back(s);
    }
  }
  for (const auto& c : all) {
    const bool pos = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
    if (pos) rs.positive.push_back(Root{c});
  }
  if (2 * rs.positive.size() != all.size())
    throw InternalError("root closure produced mixed-sign vectors for " + spec.name());
  std::sort(rs.positive.begin(), rs.positive.end(), [](const Root& a, const Root& b) {
    const int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.c < b.c;
  });
  for (size_t i = 0; i < rs.positive.size(); ++i) rs.index_[rs.positive[i].c] = static_cast<int>(i);
  for (const auto& r : rs.positive) rs.positive_fund.push_back(rs.root_fund_coords(r));

  // Gram matrices.  S_ij = (alpha_i, alpha_j) = d_j a_ij; G = A^{-1} S A^{-T}.
  const int n = rs.rank;
  Mat a_mat(n, n), s_mat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a_mat.at(i, j) = rs.cartan[i][j];
      s_mat.at(i, j) = rs.d[j] * rs.cartan[i][j];
    }
  const auto a_inv = mat_inverse(a_mat);
  if (!a_inv) throw InternalError("singular Cartan matrix for " + spec.name());
  rs.gram_standard = mat_mul(mat_mul(*a_inv, s_mat), mat_transpose(*a_inv));
  rs.gram_killing = mat_scale(rs.gram_standard, Rational(1, 2 * rs.dual_coxeter));
  const auto at_inv = mat_inverse(mat_transpose(a_mat));
  rs.cartan_t_inv = *at_inv;

  // rho really is the half sum of the positive roots.
  {
    Vec half_sum(n, Rational(0));
    for (const auto& mf : rs.positive_fund)
      for (int j = 0; j < n; ++j) half_sum[j] += Rational(mf[j], 2);
    if (Weight(half_sum) != rs.rho())
      throw InternalError("rho is not the half sum of positive roots for " + spec.name());
  }
  return rs;
}

// ---------------------------------------------------------------------------
// Weyl group

struct WeylWord {
  std::vector<int> letters;  // 0-based simple reflection indices; product left to right

  int length() const { return static_cast<int>(letters.size()); }
  WeylWord inverse() const {
    WeylWord w = *this;
    std::reverse(w.letters.begin(), w.letters.end());
    return w;
  }
  bool operator==(const WeylWord& o) const { return letters == o.letters; }
};

// The word [i1, ..., ik] acts as s_{i1} o s_{i2} o ... o s_{ik}.
inline Weight weyl_apply(const RootSystem& rs, const WeylWord& w, Weight x) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) x = rs.reflect(*it, x);
  return x;
}

inline Root weyl_apply_root(const RootSystem& rs, const WeylWord& w, Root r) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r = rs.reflect_root(*it, r);
  return r;
}

// Affine ("dot") action: w . lambda = w(lambda + rho) - rho.
inline Weight dot_action(const RootSystem& rs, const WeylWord& w, const Weight& lambda) {
  return weyl_apply(rs, w, lambda + rs.rho()) - rs.rho();
}

class WeylGroup {
 public:
  std::vector<WeylWord> elements;                    // reduced words, element 0 = identity
  std::vector<std::vector<long long>> rho_images;    // w(rho) in fundamental coords

  int size() const { return static_cast<int>(elements.size()); }
  int length(int idx) const { return elements[idx].length(); }

  int index_of_image(const std::vector<long long>& img) const {
    auto it = by_image_.find(img);
    if (it == by_image_.end()) throw InternalError("rho image not found in Weyl enumeration");
    return it->second;
  }

  int index_of(const RootSystem& rs, const WeylWord& w) const {
    return index_of_image(weyl_apply(rs, w, rs.rho()).as_ints());
  }

  int longest_index() const { return longest_; }
  const WeylWord& longest(const RootSystem&) const { return elements[longest_]; }

  // Positive roots sent negative; |set| = length of a reduced word.
  std::vector<int> inversion_set(const RootSystem& rs, const WeylWord& w) const {
    std::vector<int> inv;
    for (int i = 0; i < rs.num_positive(); ++i) {
      Root img = weyl_apply_root(rs, w, rs.positive[i]);
      const bool neg = std::all_of(img.c.begin(), img.c.end(), [](int x) { return x <= 0; });
      if (neg) inv.push_back(i);
    }
    return inv;
  }

 private:
  friend WeylGroup enumerate_weyl(const RootSystem&, const Guardrails&);
  std::map<std::vector<long long>, int> by_image_;
  int longest_ = 0;
};

// Breadth-first enumeration; elements are keyed by their action on rho, which
// is faithful because rho is regular.  Words found by BFS are reduced.
inline WeylGroup enumerate_weyl(const RootSystem& rs, const Guardrails& guards = Guardrails::from_env()) {
  const BigInt order = rs.weyl_order();
  if (order > guards.weyl_order)
    throw GuardrailError("Weyl group order " + order.str() + " exceeds limit " +
                         std::to_string(guards.weyl_order) +
                         " (raise via BGGKIT_GUARDRAIL_SCALE or an explicit override)");

  struct Elem {
    WeylWord word;
    std::vector<long long> image;
  };
  std::vector<Elem> found;
  std::map<std::vector<long long>, int> seen;
  const auto rho_img = rs.rho().as_ints();
  found.push_back({WeylWord{}, rho_img});
  seen[rho_img] = 0;
  size_t frontier_begin = 0;
  while (frontier_begin < found.size()) {
    const size_t frontier_end = found.size();
    for (size_t e = frontier_begin; e < frontier_end; ++e) {
      for (int i = 0; i < rs.rank; ++i) {
        // left-extend: (s_i w)(rho) = s_i(w(rho))
        Weight img = Weight::from_ints(found[e].image);
        img = rs.reflect(i, img);
        auto key = img.as_ints();
        if (seen.count(key)) continue;
        WeylWord w;
        w.letters.reserve(found[e].word.letters.size() + 1);
        w.letters.push_back(i);
        w.letters.insert(w.letters.end(), found[e].word.letters.begin(), found[e].word.letters.end());
        seen[key] = static_cast<int>(found.size());
        found.push_back({std::move(w), std::move(key)});
      }
    }
    frontier_begin = frontier_end;
  }
  if (BigInt(found.size()) != order)
    throw InternalError("Weyl enumeration found " + std::to_string(found.size()) +
                        " elements, expected " + order.str());

  std::sort(found.begin(), found.end(), [](const Elem& a, const Elem& b) {
    if (a.word.length() != b.word.length()) return a.word.length() < b.word.length();
    return a.image < b.image;
  });
  WeylGroup wg;
  for (size_t i = 0; i < found.size(); ++i) {
    wg.by_image_[found[i].image] = static_cast<int>(i);
    wg.elements.push_back(std::move(found[i].word));
    wg.rho_images.push_back(std::move(found[i].image));
  }
  wg.longest_ = wg.size() - 1;  // unique maximum after the sort
  if (wg.size() >= 2 && wg.elements[wg.size() - 2].length() == wg.elements[wg.size() - 1].length())
    throw InternalError("longest Weyl element is not unique?");
  return wg;
}

}  // namespace bggkit
