#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "arqlab/error.hpp"
#include "arqlab/exactla/matrix.hpp"

namespace arqlab::exactla {

/// Subspace of K^n kept as a fully reduced row echelon basis, extended one
/// vector at a time.
template <class K>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : n_(ambient) {}
  Subspace(std::size_t ambient, const std::vector<Vec<K>>& gens) : n_(ambient) {
    for (const auto& g : gens) add(g);
  }

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec<K>>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return piv_; }

  /// Canonical representative of v modulo the subspace (zero at every pivot).
  Vec<K> reduce(Vec<K> v) const {
    check(v);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const K f = v[piv_[k]];
      if (f.is_zero()) continue;
      const auto& r = rows_[k];
      for (std::size_t j = piv_[k]; j < n_; ++j) {
        if (!r[j].is_zero()) v[j] -= f * r[j];
      }
    }
    return v;
  }

  bool contains(const Vec<K>& v) const { return is_zero_vec(reduce(v)); }

  /// Adds v; returns false when v was already in the span.
  bool add(const Vec<K>& v) {
    Vec<K> r = reduce(v);
    std::size_t p = 0;
    while (p < n_ && r[p].is_zero()) ++p;
    if (p == n_) return false;
    const K inv = r[p].inverse();
    for (std::size_t j = p; j < n_; ++j) {
      if (!r[j].is_zero()) r[j] *= inv;
    }
    for (auto& row : rows_) {
      const K f = row[p];
      if (f.is_zero()) continue;
      for (std::size_t j = p; j < n_; ++j) {
        if (!r[j].is_zero()) row[j] -= f * r[j];
      }
    }
    auto pos = std::lower_bound(piv_.begin(), piv_.end(), p) - piv_.begin();
    piv_.insert(piv_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(r));
    return true;
  }

  /// Coordinates of v (assumed to lie in the span) relative to basis().
  Vec<K> coordinates(const Vec<K>& v) const {
    Vec<K> c(rows_.size(), K(0));
    for (std::size_t k = 0; k < rows_.size(); ++k) c[k] = v[piv_[k]];
    return c;
  }

  bool contains_all(const Subspace& o) const {
    return std::all_of(o.rows_.begin(), o.rows_.end(), [&](const Vec<K>& r) { return contains(r); });
  }
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.piv_ == b.piv_ && a.rows_ == b.rows_;
  }

  Subspace intersect(const Subspace& o) const {
    check_ambient(o);
    // x = sum a_i u_i = sum b_j w_j  <=>  [U | -W] (a,b) = 0
    const std::size_t p = dim(), q = o.dim();
    Mat<K> m(n_, p + q);
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t r = 0; r < n_; ++r) m(r, i) = rows_[i][r];
    }
    for (std::size_t j = 0; j < q; ++j) {
      for (std::size_t r = 0; r < n_; ++r) m(r, p + j) = -o.rows_[j][r];
    }
    Subspace out(n_);
    for (const auto& c : kernel(m)) {
      Vec<K> x(n_, K(0));
      for (std::size_t i = 0; i < p; ++i) {
        if (c[i].is_zero()) continue;
        for (std::size_t r = 0; r < n_; ++r) x[r] += c[i] * rows_[i][r];
      }
      out.add(x);
    }
    return out;
  }

  Subspace sum(const Subspace& o) const {
    check_ambient(o);
    Subspace out = *this;
    for (const auto& r : o.rows_) out.add(r);
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Vec<K>> rows_;
  std::vector<std::size_t> piv_;

  void check(const Vec<K>& v) const {
    if (v.size() != n_) fail(ErrorKind::InvalidArgument, "vector length differs from subspace ambient dimension");
  }
  void check_ambient(const Subspace& o) const {
    if (o.n_ != n_) fail(ErrorKind::InvalidArgument, "subspaces live in different ambient spaces");
  }
};

/// Coordinates relative to a fixed list of linearly independent vectors.
template <class K>
class BasisCoords {
 public:
  BasisCoords() = default;
  BasisCoords(const std::vector<Vec<K>>& basis, std::size_t ambient) : n_(ambient), k_(basis.size()) {
    if (k_ == 0) return;
    Mat<K> u = Mat<K>::from_columns(basis, n_);
    Rref<K> rr = rref(u.transpose());
    if (rr.rank() != k_) fail(ErrorKind::InvalidArgument, "BasisCoords: vectors are dependent");
    rows_ = rr.pivots;
    auto inv = inverse(u.select_rows(rows_));
    inv_ = *inv;
  }

  std::size_t size() const { return k_; }

  Vec<K> operator()(const Vec<K>& v) const {
    if (k_ == 0) return {};
    Vec<K> sel(k_);
    for (std::size_t i = 0; i < k_; ++i) sel[i] = v[rows_[i]];
    return inv_.apply(sel);
  }

 private:
  std::size_t n_ = 0, k_ = 0;
  std::vector<std::size_t> rows_;
  Mat<K> inv_;
};

/// Greedy extension of `span` by the given candidates; returns the indices
/// of candidates that were independent modulo the running span.
template <class K>
std::vector<std::size_t> extend_by(Subspace<K>& span, const std::vector<Vec<K>>& candidates) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (span.add(candidates[i])) kept.push_back(i);
  }
  return kept;
}

template <class K>
Vec<K> unit_vector(std::size_t n, std::size_t i) {
  Vec<K> v(n, K(0));
  v[i] = K(1);
  return v;
}

}  // namespace arqlab::exactla
