#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "arqlab/error.hpp"
#include "arqlab/exactla/field.hpp"

namespace arqlab::exactla {

template <class K>
using Vec = std::vector<K>;

template <class K>
bool is_zero_vec(const Vec<K>& v) {
  return std::all_of(v.begin(), v.end(), [](const K& x) { return x.is_zero(); });
}

/// Dense row-major matrix over an exact field.
template <class K>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, K(0)) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }
  static Mat from_rows(const std::vector<Vec<K>>& rows, std::size_t cols) {
    Mat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Mat from_columns(const std::vector<Vec<K>>& cols, std::size_t rows) {
    Mat m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }
  static Mat column(const Vec<K>& v) { return from_columns({v}, v.size()); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  const std::vector<K>& data() const { return a_; }

  Vec<K> row(std::size_t i) const { return Vec<K>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
  Vec<K> col(std::size_t j) const {
    Vec<K> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  std::vector<Vec<K>> columns() const {
    std::vector<Vec<K>> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(col(j));
    return out;
  }

  bool is_zero() const { return is_zero_vec(a_); }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Mat b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    }
    return b;
  }
  void set_block(std::size_t r0, std::size_t c0, const Mat& b) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }
  }
  Mat select_rows(const std::vector<std::size_t>& idx) const {
    Mat m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
    }
    return m;
  }

  Vec<K> apply(const Vec<K>& v) const {
    if (v.size() != cols_) fail(ErrorKind::InvalidArgument, "matrix-vector size mismatch");
    Vec<K> out(rows_, K(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      K s(0);
      for (std::size_t j = 0; j < cols_; ++j) {
        const K& x = (*this)(i, j);
        if (!x.is_zero() && !v[j].is_zero()) s += x * v[j];
      }
      out[i] = s;
    }
    return out;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) fail(ErrorKind::InvalidArgument, "matrix product size mismatch");
    Mat c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const K& y = b(k, j);
          if (!y.is_zero()) c(i, j) += x * y;
        }
      }
    }
    return c;
  }
  friend Mat operator+(Mat a, const Mat& b) {
    a += b;
    return a;
  }
  friend Mat operator-(Mat a, const Mat& b) {
    a -= b;
    return a;
  }
  Mat& operator+=(const Mat& b) {
    check_same(b);
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (!b.a_[i].is_zero()) a_[i] += b.a_[i];
    }
    return *this;
  }
  Mat& operator-=(const Mat& b) {
    check_same(b);
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (!b.a_[i].is_zero()) a_[i] -= b.a_[i];
    }
    return *this;
  }
  friend Mat operator*(const K& s, Mat m) {
    if (s.is_zero()) return Mat(m.rows_, m.cols_);
    for (auto& x : m.a_) {
      if (!x.is_zero()) x *= s;
    }
    return m;
  }
  /// this += s * b
  void add_scaled(const K& s, const Mat& b) {
    check_same(b);
    if (s.is_zero()) return;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (!b.a_[i].is_zero()) a_[i] += s * b.a_[i];
    }
  }

  K trace() const {
    K t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Mat& m) {
    os << "[";
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
    }
    return os << "]";
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> a_;

  void check_same(const Mat& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) fail(ErrorKind::InvalidArgument, "matrix size mismatch");
  }
};

template <class K>
Mat<K> direct_sum(const Mat<K>& a, const Mat<K>& b) {
  Mat<K> m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

template <class K>
Mat<K> hstack(const Mat<K>& a, const Mat<K>& b) {
  if (a.rows() != b.rows()) fail(ErrorKind::InvalidArgument, "hstack row mismatch");
  Mat<K> m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

template <class K>
Mat<K> vstack(const Mat<K>& a, const Mat<K>& b) {
  if (a.cols() != b.cols()) fail(ErrorKind::InvalidArgument, "vstack column mismatch");
  Mat<K> m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

template <class K>
struct Rref {
  Mat<K> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form with first-nonzero pivoting. Pivots are only
/// taken among the first `col_limit` columns.
template <class K>
Rref<K> rref(Mat<K> m, std::size_t col_limit = static_cast<std::size_t>(-1)) {
  const std::size_t rows = m.rows(), cols = std::min(m.cols(), col_limit);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    const K inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const K f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class K>
std::size_t rank(const Mat<K>& m) {
  return rref(m).rank();
}

template <class K>
std::vector<Vec<K>> kernel_from_rref(const Rref<K>& rr, std::size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec<K>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec<K> v(cols, K(0));
    v[f] = K(1);
    for (std::size_t k = 0; k < rr.pivots.size(); ++k) {
      const K& x = rr.reduced(k, f);
      if (!x.is_zero()) v[rr.pivots[k]] = -x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Basis of the null space {x : m x = 0}.
template <class K>
std::vector<Vec<K>> kernel(const Mat<K>& m) {
  return kernel_from_rref(rref(m), m.cols());
}

template <class K>
struct SolveResult {
  std::vector<std::optional<Vec<K>>> solutions;
  std::vector<Vec<K>> kernel;
};

/// Solves m x = t for each target t; the kernel is shared by all targets.
template <class K>
SolveResult<K> solve(const Mat<K>& m, const std::vector<Vec<K>>& targets) {
  const std::size_t n = m.cols();
  Mat<K> aug(m.rows(), n + targets.size());
  aug.set_block(0, 0, m);
  for (std::size_t t = 0; t < targets.size(); ++t) {
    if (targets[t].size() != m.rows()) fail(ErrorKind::InvalidArgument, "target length differs from row count");
    for (std::size_t i = 0; i < m.rows(); ++i) aug(i, n + t) = targets[t][i];
  }
  Rref<K> rr = rref(std::move(aug), n);
  SolveResult<K> out;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    bool ok = true;
    for (std::size_t i = rr.rank(); i < m.rows(); ++i) {
      if (!rr.reduced(i, n + t).is_zero()) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      out.solutions.push_back(std::nullopt);
      continue;
    }
    Vec<K> x(n, K(0));
    for (std::size_t k = 0; k < rr.rank(); ++k) x[rr.pivots[k]] = rr.reduced(k, n + t);
    out.solutions.push_back(std::move(x));
  }
  std::vector<bool> is_pivot(n, false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec<K> v(n, K(0));
    v[f] = K(1);
    for (std::size_t k = 0; k < rr.rank(); ++k) {
      const K& x = rr.reduced(k, f);
      if (!x.is_zero()) v[rr.pivots[k]] = -x;
    }
    out.kernel.push_back(std::move(v));
  }
  return out;
}

template <class K>
std::optional<Mat<K>> inverse(const Mat<K>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Rref<K> rr = rref(hstack(m, Mat<K>::identity(n)), n);
  if (rr.rank() != n) return std::nullopt;
  return rr.reduced.block(0, n, n, n);
}

template <class K>
bool is_invertible(const Mat<K>& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

/// Basis of the column space, as extracted columns of m.
template <class K>
std::vector<Vec<K>> column_space(const Mat<K>& m) {
  Rref<K> rr = rref(m);
  std::vector<Vec<K>> out;
  for (auto p : rr.pivots) out.push_back(m.col(p));
  return out;
}

}  // namespace arqlab::exactla
