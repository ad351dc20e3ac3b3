#pragma once

#include <vector>

#include "arqlab/modcat/decompose.hpp"

namespace arqlab::modcat {

/// Radical, top and socle of M with their comparison maps.
template <class K>
struct Series {
  Module<K> radical;
  Module<K> top;
  Module<K> socle;
  std::vector<Mat<K>> radical_incl;  // rad M -> M
  std::vector<Mat<K>> top_proj;      // M -> top M
  std::vector<Mat<K>> socle_incl;    // soc M -> M
};

template <class K>
Series<K> series(const Module<K>& m) {
  auto r = split_submodule(m, radical_of(m));
  auto s = split_submodule(m, socle_of(m));
  return {r.sub, r.quot, s.sub, r.incl, r.proj, s.incl};
}

template <class K>
Module<K> radical_module(const Module<K>& m) {
  return split_submodule(m, radical_of(m)).sub;
}

template <class K>
Module<K> socle_module(const Module<K>& m) {
  return split_submodule(m, socle_of(m)).sub;
}

template <class K>
Module<K> socle_factor(const Module<K>& m) {
  return split_submodule(m, socle_of(m)).quot;
}

/// Dimension vectors of the radical layers rad^i M / rad^{i+1} M.
template <class K>
std::vector<std::vector<int>> radical_layers(const Module<K>& m) {
  std::vector<std::vector<int>> out;
  Module<K> cur = m;
  while (!cur.is_zero()) {
    auto r = split_submodule(cur, radical_of(cur));
    out.push_back(r.quot.dims());
    cur = r.sub;
  }
  return out;
}

template <class K>
bool is_uniserial(const Module<K>& m) {
  for (const auto& layer : radical_layers(m)) {
    int s = 0;
    for (int d : layer) s += d;
    if (s != 1) return false;
  }
  return true;
}

/// rad^k M as a submodule.
template <class K>
Module<K> radical_power(const Module<K>& m, int k) {
  Module<K> cur = m;
  for (int i = 0; i < k && !cur.is_zero(); ++i) cur = radical_module(cur);
  return cur;
}

/// Direct sum of P(v) over the list of vertices (coordinates concatenated
/// summand by summand inside each vertex).
template <class K>
Module<K> projective_sum(const typename Algebra<K>::Ptr& a, const std::vector<int>& vertices) {
  if (vertices.empty()) return zero_module<K>(a);
  Module<K> p = projective<K>(a, vertices[0]);
  for (std::size_t j = 1; j < vertices.size(); ++j) p = direct_sum(p, projective<K>(a, vertices[j]));
  return p;
}

template <class K>
struct ProjectiveCover {
  Module<K> cover;
  std::vector<int> vertices;
  HomMap<K> epi;
};

template <class K>
ProjectiveCover<K> projective_cover(const Module<K>& m) {
  const auto& tp = m.presentation();
  ProjectiveCover<K> out;
  out.vertices = tp.top_vertex;
  out.cover = projective_sum<K>(m.algebra(), tp.top_vertex);
  out.epi.blocks = tp.pi;
  return out;
}

/// P1 -> P0 -> M -> 0 with P0 -> M and the image of P1 in P0 both
/// projective covers.
template <class K>
struct MinimalPresentation {
  Module<K> p1, p0;
  std::vector<int> p1_vertices, p0_vertices;
  HomMap<K> d1;  // P1 -> P0
  HomMap<K> pi;  // P0 -> M
};

template <class K>
MinimalPresentation<K> minimal_presentation(const Module<K>& m) {
  const auto& a = m.algebra();
  const auto& tp = m.presentation();
  MinimalPresentation<K> out;
  out.p0_vertices = tp.top_vertex;
  out.p1_vertices = tp.syz_vertex;
  out.p0 = projective_sum<K>(a, tp.top_vertex);
  out.p1 = projective_sum<K>(a, tp.syz_vertex);
  out.pi.blocks = tp.pi;
  const int n = a->num_vertices();
  // images of the P1 generators in P0 coordinates
  std::vector<Vec<K>> omega;
  for (std::size_t k = 0; k < tp.syz_vertex.size(); ++k) {
    const int u = tp.syz_vertex[k];
    Vec<K> w(tp.p0_dims[u], K(0));
    for (std::size_t c = 0; c < tp.p0_index[u].size(); ++c) {
      auto [j, pos] = tp.p0_index[u][c];
      w[c] = tp.syz[k][j][pos];
    }
    omega.push_back(std::move(w));
  }
  for (int t = 0; t < n; ++t) {
    Mat<K> d(out.p0.dim(t), out.p1.dim(t));
    int col = 0;
    for (std::size_t k = 0; k < tp.syz_vertex.size(); ++k) {
      for (int x : a->block(tp.syz_vertex[k], t)) {
        Vec<K> img = out.p0.act(x).apply(omega[k]);
        for (int i = 0; i < out.p0.dim(t); ++i) d(i, col) = img[i];
        ++col;
      }
    }
    out.d1.blocks.push_back(std::move(d));
  }
  return out;
}

/// M is projective iff its projective cover has no kernel.
template <class K>
bool is_projective(const Module<K>& m) {
  return m.presentation().syz_vertex.empty();
}

template <class K>
bool is_injective(const Module<K>& m) {
  return is_projective(dual(m));
}

/// Vertex i with M = P(i), for indecomposable projective M.
template <class K>
int projective_vertex(const Module<K>& m) {
  const auto& tp = m.presentation();
  if (tp.top_vertex.size() != 1 || !tp.syz_vertex.empty()) return -1;
  return tp.top_vertex[0];
}

/// Vertex i with M = I(i), for indecomposable injective M.
template <class K>
int injective_vertex(const Module<K>& m) {
  return projective_vertex(dual(m));
}

/// Vertex i with M = S(i), or -1.
template <class K>
int simple_vertex(const Module<K>& m) {
  if (m.total() != 1) return -1;
  for (int v = 0; v < m.num_vertices(); ++v) {
    if (m.dim(v) == 1) return v;
  }
  return -1;
}

template <class K>
bool is_selfinjective(const typename Algebra<K>::Ptr& a) {
  for (int i = 0; i < a->num_vertices(); ++i) {
    if (!is_injective(projective<K>(a, i))) return false;
  }
  return true;
}

}  // namespace arqlab::modcat
