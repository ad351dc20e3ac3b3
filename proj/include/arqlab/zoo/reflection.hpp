#pragma once

#include <string>
#include <vector>

#include "arqlab/modcat.hpp"
#include "arqlab/zoo/nakayama.hpp"

namespace arqlab::zoo {

/// Same algebra with vertex order[k] renamed to k.
template <class K>
AlgebraPtr<K> reorder_vertices(const Algebra<K>& a, const std::vector<int>& order, const std::string& name = "") {
  const int n = a.num_vertices();
  if (static_cast<int>(order.size()) != n) fail(ErrorKind::InvalidArgument, "vertex order has the wrong length");
  std::vector<int> where(n, -1);
  for (int k = 0; k < n; ++k) where[order[k]] = k;
  typename Algebra<K>::Data d;
  d.name = name.empty() ? a.name() : name;
  d.n = n;
  for (std::size_t b = 0; b < a.dim(); ++b) {
    const auto& e = a.element(b);
    d.basis.push_back({e.label, where[e.src], where[e.tgt]});
  }
  for (int k = 0; k < n; ++k) d.idempotents.push_back(a.idempotent(order[k]));
  d.products.resize(a.dim() * a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) d.products[i * a.dim() + j] = a.product(static_cast<int>(i), static_cast<int>(j));
  }
  return Algebra<K>::create(std::move(d));
}

/// B[M]: B plus a new last vertex w with e_w A = K e_w + M, so rad P(w) = M.
template <class K>
AlgebraPtr<K> one_point_extension(const AlgebraPtr<K>& b, const modcat::Module<K>& m, const std::string& name = "") {
  if (m.algebra() != b) fail(ErrorKind::InvalidArgument, "module over a different algebra");
  const int n = b->num_vertices();
  const int d = static_cast<int>(b->dim());
  typename Algebra<K>::Data data;
  data.name = name.empty() ? (b->name().empty() ? "B" : b->name()) + "[M]" : name;
  data.n = n + 1;
  for (int x = 0; x < d; ++x) data.basis.push_back(b->element(x));
  const int w = d;
  data.basis.push_back({"e" + std::to_string(n + 1), n, n});
  std::vector<int> moff(n + 1, 0);
  for (int t = 0; t < n; ++t) {
    moff[t] = static_cast<int>(data.basis.size());
    for (int k = 0; k < m.dim(t); ++k) {
      data.basis.push_back({"m" + b->vertex_name(t) + (m.dim(t) > 1 ? "." + std::to_string(k + 1) : ""), n, t});
    }
  }
  for (int v = 0; v < n; ++v) data.idempotents.push_back(b->idempotent(v));
  data.idempotents.push_back(w);
  const std::size_t total = data.basis.size();
  data.products.assign(total * total, {});
  auto prod = [&](int i, int j) -> algcore::SparseVec<K>& { return data.products[static_cast<std::size_t>(i) * total + j]; };
  for (int x = 0; x < d; ++x) {
    for (int y = 0; y < d; ++y) prod(x, y) = b->product(x, y);
  }
  prod(w, w) = {{w, K(1)}};
  for (int t = 0; t < n; ++t) {
    for (int k = 0; k < m.dim(t); ++k) {
      prod(w, moff[t] + k) = {{moff[t] + k, K(1)}};
    }
  }
  for (int x = 0; x < d; ++x) {
    const auto& e = b->element(x);
    const auto& act = m.act(x);
    for (int k = 0; k < m.dim(e.src); ++k) {
      algcore::SparseVec<K> sv;
      for (int r = 0; r < m.dim(e.tgt); ++r) {
        if (!act(r, k).is_zero()) sv.emplace_back(moff[e.tgt] + r, act(r, k));
      }
      prod(moff[e.src] + k, x) = std::move(sv);
    }
  }
  return Algebra<K>::create(std::move(data));
}

template <class K>
bool is_sink(const Algebra<K>& a, int i) {
  auto g = a.gabriel_quiver();
  for (int j = 0; j < g.n; ++j) {
    if (g.counts[i][j]) return false;
  }
  return true;
}

/// S_i^+ B for a sink i: the one-point extension by I(i) with vertex i
/// deleted; the new vertex takes the place of i.
template <class K>
AlgebraPtr<K> reflection(const AlgebraPtr<K>& b, int i) {
  const int n = b->num_vertices();
  if (i < 0 || i >= n) fail(ErrorKind::InvalidArgument, "vertex out of range");
  if (!b->gabriel_quiver().is_acyclic()) fail(ErrorKind::NotTriangular, "quiver has an oriented cycle");
  if (!is_sink(*b, i)) fail(ErrorKind::NotASink, "vertex " + b->vertex_name(i) + " is not a sink");
  auto ext = one_point_extension<K>(b, modcat::injective<K>(b, i));
  std::vector<int> keep;
  for (int v = 0; v <= n; ++v) {
    if (v != i) keep.push_back(v);
  }
  auto c = algcore::corner<K>(ext, keep);
  // corner order is increasing; move the new vertex (last) to position i
  std::vector<int> order;
  for (int k = 0; k < i; ++k) order.push_back(k);
  order.push_back(n - 1);
  for (int k = i; k < n - 1; ++k) order.push_back(k);
  std::string base = b->name().empty() ? "B" : b->name();
  return reorder_vertices(*c.algebra, order, "S" + std::to_string(i + 1) + "+" + base);
}

/// i_1, ..., i_n with i_s a sink after reflecting at i_1..i_{s-1}; smallest
/// sink first. Also returns the reflected algebras.
template <class K>
std::vector<int> reflection_sequence(const AlgebraPtr<K>& b, std::vector<AlgebraPtr<K>>* steps = nullptr) {
  if (!b->gabriel_quiver().is_acyclic()) fail(ErrorKind::NotTriangular, "quiver has an oriented cycle");
  const int n = b->num_vertices();
  std::vector<int> seq;
  std::vector<bool> used(n, false);
  AlgebraPtr<K> cur = b;
  for (int s = 0; s < n; ++s) {
    int pick = -1;
    for (int v = 0; v < n && pick < 0; ++v) {
      if (!used[v] && is_sink(*cur, v)) pick = v;
    }
    if (pick < 0) fail(ErrorKind::InternalInconsistency, "no unreflected sink left");
    used[pick] = true;
    seq.push_back(pick);
    cur = reflection<K>(cur, pick);
    if (steps) steps->push_back(cur);
  }
  return seq;
}

}  // namespace arqlab::zoo
