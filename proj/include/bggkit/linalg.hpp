// Exact linear algebra over the rationals.
//
// Dense matrices for small blocks, a sparse column store for codifferential
// matrices, and an echelon container used for rank / kernel / membership
// questions.  Row reduction works on integer-primitive rows with
// cross-multiplication, so no rank decision ever depends on rounding.

#pragma once

#include "bggkit/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace bggkit {

using Vec = std::vector<Rational>;

inline bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Vec vec_scale(const Vec& a, const Rational& s) {
  Vec r(a);
  for (auto& x : r) x *= s;
  return r;
}

struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;  // row-major

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Rational& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rational& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool is_zero() const {
    for (const auto& x : a)
      if (x != 0) return false;
    return true;
  }

  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
};

inline Mat mat_mul(const Mat& x, const Mat& y) {
  Mat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rational& xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) {
        const Rational& ykj = y.at(k, j);
        if (ykj != 0) r.at(i, j) += xik * ykj;
      }
    }
  return r;
}

inline Mat mat_add(const Mat& x, const Mat& y) {
  Mat r(x);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

inline Mat mat_sub(const Mat& x, const Mat& y) {
  Mat r(x);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

inline Mat mat_scale(const Mat& x, const Rational& s) {
  Mat r(x);
  for (auto& v : r.a) v *= s;
  return r;
}

inline Mat commutator(const Mat& x, const Mat& y) { return mat_sub(mat_mul(x, y), mat_mul(y, x)); }

inline Vec mat_vec(const Mat& m, const Vec& v) {
  Vec r(m.rows, Rational(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0 && v[j] != 0) r[i] += m.at(i, j) * v[j];
  return r;
}

inline Mat mat_transpose(const Mat& m) {
  Mat r(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

inline Rational mat_trace_of_product(const Mat& x, const Mat& y) {
  Rational t = 0;
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j)
      if (x.at(i, j) != 0 && y.at(j, i) != 0) t += x.at(i, j) * y.at(j, i);
  return t;
}

// Gauss-Jordan to reduced row echelon form.  Returns the rank; pivot column
// indices are appended to `pivots` if given.
inline int rref(Mat& m, std::vector<int>* pivots = nullptr) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int i = rank; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    const Rational inv = Rational(1) / m.at(rank, col);
    for (int j = col; j < m.cols; ++j) m.at(rank, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == rank) continue;
      const Rational f = m.at(i, col);
      if (f == 0) continue;
      for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(rank, j);
    }
    if (pivots) pivots->push_back(col);
    ++rank;
  }
  return rank;
}

inline int mat_rank(Mat m) { return rref(m); }

// Basis of the right kernel {v : M v = 0}.
inline std::vector<Vec> kernel_basis(Mat m) {
  std::vector<int> pivots;
  const int rank = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols, Rational(0));
    v[free] = 1;
    for (int r = 0; r < rank; ++r) v[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of M x = b, if any.
inline std::optional<Vec> solve_linear(const Mat& m, const Vec& b) {
  Mat aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  std::vector<int> pivots;
  rref(aug, &pivots);
  for (int p : pivots)
    if (p == m.cols) return std::nullopt;  // inconsistent
  Vec x(m.cols, Rational(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), m.cols);
  return x;
}

inline std::optional<Mat> mat_inverse(const Mat& m) {
  if (m.rows != m.cols) return std::nullopt;
  Mat aug(m.rows, 2 * m.cols);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols + i) = 1;
  }
  std::vector<int> pivots;
  const int rank = rref(aug, &pivots);
  if (rank != m.rows) return std::nullopt;
  for (int r = 0; r < rank; ++r)
    if (pivots[r] != r) return std::nullopt;
  Mat inv(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
  return inv;
}

// Row space in echelon form; rows are kept integer-primitive with positive
// leading entry.  Supports incremental growth and membership tests.
class Echelon {
 public:
  explicit Echelon(int cols) : cols_(cols) {}

  int cols() const { return cols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Residual of v after elimination against the stored rows.
  Vec reduce(Vec v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const int p = pivots_[r];
      if (v[p] == 0) continue;
      const Rational f = v[p] / rows_[r][p];
      for (int j = p; j < cols_; ++j)
        if (rows_[r][j] != 0) v[j] -= f * rows_[r][j];
    }
    return v;
  }

  bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

  // Adds the span of v; returns true when the rank grew.
  bool add_row(Vec v) {
    v = reduce(std::move(v));
    int lead = -1;
    for (int j = 0; j < cols_; ++j)
      if (v[j] != 0) {
        lead = j;
        break;
      }
    if (lead < 0) return false;
    normalize_primitive(v, lead);
    // keep rows ordered by pivot column
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, lead);
    return true;
  }

  void add_rows(const std::vector<Vec>& vs) {
    for (const auto& v : vs) add_row(v);
  }

 private:
  static void normalize_primitive(Vec& v, int lead) {
    BigInt den_lcm = 1;
    for (const auto& x : v)
      if (x != 0) den_lcm = lcm(den_lcm, denominator(x));
    BigInt num_gcd = 0;
    for (auto& x : v) {
      if (x == 0) continue;
      x *= den_lcm;
      num_gcd = gcd(num_gcd, numerator(x));
    }
    if (num_gcd == 0) return;
    if (v[lead] < 0) num_gcd = -num_gcd;
    for (auto& x : v)
      if (x != 0) x /= Rational(num_gcd);
  }

  int cols_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

// Column-sparse matrix for the big chain-space operators.
struct SparseMat {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, Rational>>> col;  // (row, value), row-sorted

  SparseMat() = default;
  SparseMat(int r, int c) : rows(r), cols(c), col(c) {}

  void add(int r, int c, const Rational& v) {
    if (v == 0) return;
    auto& entries = col[c];
    auto it = std::lower_bound(entries.begin(), entries.end(), r,
                               [](const auto& e, int row) { return e.first < row; });
    if (it != entries.end() && it->first == r) {
      it->second += v;
      if (it->second == 0) entries.erase(it);
    } else {
      entries.insert(it, {r, v});
    }
  }

  size_t nnz() const {
    size_t n = 0;
    for (const auto& c : col) n += c.size();
    return n;
  }

  Vec apply(const Vec& v) const {
    Vec r(rows, Rational(0));
    for (int c = 0; c < cols; ++c) {
      if (v[c] == 0) continue;
      for (const auto& [row, val] : col[c]) r[row] += val * v[c];
    }
    return r;
  }

  // Dense block for the given global row/column index lists.  Throws if a
  // column touches a row outside the block (callers rely on exact block
  // structure, e.g. weight preservation).
  Mat block(const std::map<int, int>& row_local, const std::vector<int>& cols_glob,
            bool strict = true) const {
    Mat m(static_cast<int>(row_local.size()), static_cast<int>(cols_glob.size()));
    for (size_t cl = 0; cl < cols_glob.size(); ++cl) {
      for (const auto& [row, val] : col[cols_glob[cl]]) {
        auto it = row_local.find(row);
        if (it == row_local.end()) {
          if (strict) throw std::logic_error("sparse block: entry outside block");
          continue;
        }
        m.at(it->second, static_cast<int>(cl)) = val;
      }
    }
    return m;
  }
};

inline SparseMat sparse_mul(const SparseMat& x, const SparseMat& y) {
  SparseMat r(x.rows, y.cols);
  for (int c = 0; c < y.cols; ++c) {
    std::map<int, Rational> acc;
    for (const auto& [k, yv] : y.col[c])
      for (const auto& [row, xv] : x.col[k]) acc[row] += xv * yv;
    for (const auto& [row, v] : acc)
      if (v != 0) r.col[c].emplace_back(row, v);
  }
  return r;
}

inline bool sparse_is_zero(const SparseMat& m) {
  for (const auto& c : m.col)
    if (!c.empty()) return false;
  return true;
}

inline SparseMat sparse_sub(const SparseMat& x, const SparseMat& y) {
  SparseMat r = x;
  for (int c = 0; c < y.cols; ++c)
    for (const auto& [row, val] : y.col[c]) r.add(row, c, -val);
  return r;
}

}  // namespace bggkit
