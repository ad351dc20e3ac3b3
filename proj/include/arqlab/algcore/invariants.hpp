#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <vector>

#include "arqlab/algcore/algebra.hpp"

namespace arqlab::algcore {

using IntMatrix = std::vector<std::vector<int>>;

/// Isomorphism invariants used to compare algebras. Full isomorphism is not
/// decided; two algebras "match" when these agree under one vertex
/// permutation.
struct AlgebraInvariants {
  std::size_t dim = 0;
  int vertices = 0;
  int loewy_length = 0;
  IntMatrix arrows;               // Gabriel quiver counts
  IntMatrix cartan;               // dim e_i A e_j
  std::vector<IntMatrix> layers;  // layers[k](i, j) = dim e_i rad^k e_j
};

template <class K>
AlgebraInvariants invariants(const Algebra<K>& a) {
  AlgebraInvariants inv;
  const int n = a.num_vertices();
  inv.dim = a.dim();
  inv.vertices = n;
  inv.loewy_length = a.loewy_length();
  inv.arrows = a.gabriel_quiver().counts;
  inv.cartan = a.cartan_matrix();
  const auto& powers = a.radical_data().powers;
  for (const auto& p : powers) {
    IntMatrix m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const auto& blk = a.block(i, j);
        if (blk.empty() || p.dim() == 0) continue;
        exactla::Mat<K> r(p.dim(), blk.size());
        for (std::size_t row = 0; row < p.dim(); ++row) {
          for (std::size_t c = 0; c < blk.size(); ++c) r(row, c) = p.basis()[row][blk[c]];
        }
        m[i][j] = static_cast<int>(exactla::rank(r));
      }
    }
    inv.layers.push_back(std::move(m));
  }
  return inv;
}

/// Elementary divisors of an integer matrix (nonzero diagonal of the Smith
/// normal form), ascending.
inline std::vector<std::int64_t> elementary_divisors(const IntMatrix& c) {
  std::vector<std::vector<std::int64_t>> m;
  for (const auto& row : c) m.emplace_back(row.begin(), row.end());
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<std::int64_t> out;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pivot: smallest nonzero absolute value in the remaining block
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (m[i][j] != 0 && (pr == rows || std::llabs(m[i][j]) < std::llabs(m[pr][pc]))) pr = i, pc = j;
      }
    }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      std::int64_t q = m[i][t] / m[t][t];
      for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
      if (m[i][t]) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      std::int64_t q = m[t][j] / m[t][t];
      for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
      if (m[t][j]) clean = false;
    }
    if (!clean) continue;
    // the pivot must divide everything left, else fold the offending row in
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i) {
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[i][j] % m[t][t] != 0) {
          for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
          divides = false;
          break;
        }
      }
    }
    if (!divides) continue;
    out.push_back(std::llabs(m[t][t]));
    ++t;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// A vertex permutation p with x(i, j) = y(p[i], p[j]) for every matrix
/// pair, or nothing.
inline std::optional<std::vector<int>> matching_permutation(const std::vector<IntMatrix>& xs,
                                                            const std::vector<IntMatrix>& ys) {
  if (xs.size() != ys.size()) return std::nullopt;
  const int n = xs.empty() ? 0 : static_cast<int>(xs[0].size());
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (static_cast<int>(xs[k].size()) != n || static_cast<int>(ys[k].size()) != n) return std::nullopt;
  }
  std::vector<int> p(n, -1);
  std::vector<bool> used(n, false);
  auto fits = [&](int i) {
    for (int j = 0; j <= i; ++j) {
      for (std::size_t k = 0; k < xs.size(); ++k) {
        if (xs[k][i][j] != ys[k][p[i]][p[j]] || xs[k][j][i] != ys[k][p[j]][p[i]]) return false;
      }
    }
    return true;
  };
  auto go = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      p[i] = v;
      if (fits(i)) {
        used[v] = true;
        if (self(self, i + 1)) return true;
        used[v] = false;
      }
    }
    p[i] = -1;
    return false;
  };
  if (!go(go, 0)) return std::nullopt;
  return p;
}

/// Vertex permutation under which every invariant of `x` equals the one of
/// `y`, if any.
inline std::optional<std::vector<int>> invariants_match(const AlgebraInvariants& x, const AlgebraInvariants& y) {
  if (x.dim != y.dim || x.vertices != y.vertices || x.loewy_length != y.loewy_length) return std::nullopt;
  if (x.layers.size() != y.layers.size()) return std::nullopt;
  std::vector<IntMatrix> xs{x.arrows, x.cartan}, ys{y.arrows, y.cartan};
  xs.insert(xs.end(), x.layers.begin(), x.layers.end());
  ys.insert(ys.end(), y.layers.begin(), y.layers.end());
  return matching_permutation(xs, ys);
}

template <class K>
std::optional<std::vector<int>> invariants_match(const Algebra<K>& x, const Algebra<K>& y) {
  return invariants_match(invariants(x), invariants(y));
}

}  // namespace arqlab::algcore
