#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "arqlab/modcat/hom.hpp"

namespace arqlab::modcat {

template <class K>
struct Summand {
  Module<K> module;
  int multiplicity = 1;
};

namespace detail {

constexpr unsigned kDecomposeSeed = 0x5eed;
constexpr unsigned kIsoSeed = 0x1505;
constexpr int kRandomAttempts = 32;
constexpr int kIsoAttempts = 8;

template <class K>
Mat<K> block_power(const Mat<K>& m, std::size_t e) {
  Mat<K> r = Mat<K>::identity(m.rows());
  Mat<K> b = m;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

/// Tries to split M with the endomorphism phi (Fitting decomposition at an
/// eigenvalue). Returns the generalized eigenspace and its complementary
/// image, or nothing when phi has a single eigenvalue in K or none.
template <class K>
std::optional<std::pair<Graded<K>, Graded<K>>> fitting_split(const Module<K>& m, const HomMap<K>& phi) {
  const int n = m.num_vertices();
  const std::size_t total = m.total();
  Mat<K> full(total, total);
  for (int v = 0; v < n; ++v) full.set_block(m.offset(v), m.offset(v), phi.blocks[v]);
  auto f = exactla::minpoly(full);
  if (f.degree() <= 1) return std::nullopt;
  for (const auto& [lambda, mult] : exactla::roots(f)) {
    (void)mult;
    Graded<K> ker(n), img(n);
    std::size_t kd = 0;
    for (int v = 0; v < n; ++v) {
      if (m.dim(v) == 0) continue;
      Mat<K> b = phi.blocks[v] - lambda * Mat<K>::identity(m.dim(v));
      Mat<K> p = block_power(b, total);
      ker[v] = exactla::kernel(p);
      img[v] = exactla::column_space(p);
      kd += ker[v].size();
    }
    if (kd > 0 && kd < total) return std::make_pair(std::move(ker), std::move(img));
  }
  return std::nullopt;
}

template <class K>
K small_scalar(std::mt19937& rng) {
  return K(static_cast<int>(rng() % 7) - 3);
}

template <class K>
std::vector<Module<K>> decompose_raw(const Module<K>& m) {
  if (m.is_zero()) return {};
  auto er = end_radical(m);
  if (er.top_dim() == 1) return {m};
  const auto& basis = er.end.basis;
  std::vector<HomMap<K>> candidates;
  std::mt19937 rng(kDecomposeSeed);
  for (int t = 0; t < kRandomAttempts; ++t) {
    Vec<K> c(basis.size());
    for (auto& x : c) x = small_scalar<K>(rng);
    candidates.push_back(combine(basis, c, er.end.zero));
  }
  for (const auto& b : basis) candidates.push_back(b);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) candidates.push_back(basis[i] + basis[j]);
  }
  for (const auto& phi : candidates) {
    auto split = fitting_split(m, phi);
    if (!split) continue;
    auto first = decompose_raw(split_submodule(m, split->first).sub);
    auto second = decompose_raw(split_submodule(m, split->second).sub);
    first.insert(first.end(), second.begin(), second.end());
    return first;
  }
  fail(ErrorKind::DecompositionStalled, "no splitting endomorphism found for a module with End/rad of dimension " +
                                            std::to_string(er.top_dim()) + "; try a larger field");
}

template <class K>
bool module_order(const Module<K>& x, const Module<K>& y) {
  if (x.total() != y.total()) return x.total() < y.total();
  return x.dims() < y.dims();
}

}  // namespace detail

template <class K>
bool is_indecomposable(const Module<K>& m) {
  if (m.is_zero()) return false;
  auto er = end_radical(m);
  if (er.top_dim() == 1) return true;
  return detail::decompose_raw(m).size() == 1;
}

template <class K>
std::optional<HomMap<K>> find_iso(const Module<K>& m, const Module<K>& n);

/// Indecomposable summands with multiplicities, sorted by (dimension,
/// dimension vector).
template <class K>
std::vector<Summand<K>> decompose(const Module<K>& m) {
  auto parts = detail::decompose_raw(m);
  std::stable_sort(parts.begin(), parts.end(), detail::module_order<K>);
  std::vector<Summand<K>> out;
  for (auto& p : parts) {
    bool merged = false;
    for (auto& s : out) {
      if (s.module.dims() == p.dims() && find_iso(s.module, p)) {
        ++s.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back({std::move(p), 1});
  }
  return out;
}

/// An isomorphism M -> N if one exists.
///
/// When M is indecomposable the non-invertible maps M -> N form a proper
/// subspace, so some basis element of Hom(M, N) is invertible whenever
/// M and N are isomorphic; the basis sweep alone is then conclusive.
template <class K>
std::optional<HomMap<K>> find_iso(const Module<K>& m, const Module<K>& n) {
  if (m.algebra() != n.algebra()) fail(ErrorKind::InvalidArgument, "modules over different algebras");
  if (m.dims() != n.dims()) return std::nullopt;
  if (m.is_zero()) return zero_map(m, n);
  auto h = hom(m, n);
  if (h.dim() == 0) return std::nullopt;
  for (const auto& b : h.basis) {
    if (b.is_iso()) return b;
  }
  std::mt19937 rng(detail::kIsoSeed);
  for (int t = 0; t < detail::kIsoAttempts; ++t) {
    Vec<K> c(h.dim());
    for (auto& x : c) x = detail::small_scalar<K>(rng);
    auto f = combine(h.basis, c, h.zero);
    if (f.is_iso()) return f;
  }
  for (std::size_t i = 0; i < h.dim(); ++i) {
    for (std::size_t j = i + 1; j < h.dim(); ++j) {
      auto f = h.basis[i] + h.basis[j];
      if (f.is_iso()) return f;
    }
  }
  if (hom(n, m).dim() != h.dim()) return std::nullopt;
  auto dm = decompose(m);
  if (dm.size() == 1 && dm[0].multiplicity == 1) return std::nullopt;
  auto dn = decompose(n);
  bool same = dm.size() == dn.size();
  std::vector<bool> used(dn.size(), false);
  for (std::size_t i = 0; same && i < dm.size(); ++i) {
    same = false;
    for (std::size_t j = 0; j < dn.size() && !same; ++j) {
      if (used[j] || dm[i].multiplicity != dn[j].multiplicity) continue;
      if (find_iso(dm[i].module, dn[j].module)) same = used[j] = true;
    }
  }
  if (!same) return std::nullopt;
  fail(ErrorKind::IsoSearchInconclusive, "isomorphic summands but no invertible map found; try a larger field");
}

template <class K>
bool is_isomorphic(const Module<K>& m, const Module<K>& n) {
  return find_iso(m, n).has_value();
}

}  // namespace arqlab::modcat
