#pragma once

#include <vector>

#include "arqlab/modcat/module.hpp"

namespace arqlab::modcat {

/// Module homomorphism given vertex by vertex: blocks[v] maps M e_v to N e_v.
template <class K>
struct HomMap {
  std::vector<Mat<K>> blocks;

  bool is_zero() const {
    for (const auto& b : blocks) {
      if (!b.is_zero()) return false;
    }
    return true;
  }
  bool is_iso() const {
    for (const auto& b : blocks) {
      if (b.rows() != b.cols()) return false;
      if (b.rows() && !exactla::is_invertible(b)) return false;
    }
    return true;
  }
  Vec<K> flatten() const {
    Vec<K> out;
    for (const auto& b : blocks) {
      for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) out.push_back(b(i, j));
      }
    }
    return out;
  }
  /// Inverse of flatten for a map with the same block shapes.
  HomMap unflatten(const Vec<K>& v) const {
    HomMap out = *this;
    std::size_t k = 0;
    for (auto& b : out.blocks) {
      for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = v[k++];
      }
    }
    return out;
  }
  K trace() const {
    K t(0);
    for (const auto& b : blocks) t += b.trace();
    return t;
  }
  Vec<K> apply(int v, const Vec<K>& x) const { return blocks[v].apply(x); }

  friend HomMap operator+(HomMap a, const HomMap& b) {
    for (std::size_t v = 0; v < a.blocks.size(); ++v) a.blocks[v] += b.blocks[v];
    return a;
  }
  friend HomMap operator-(HomMap a, const HomMap& b) {
    for (std::size_t v = 0; v < a.blocks.size(); ++v) a.blocks[v] -= b.blocks[v];
    return a;
  }
  friend HomMap operator*(const K& s, HomMap a) {
    for (auto& b : a.blocks) b = s * b;
    return a;
  }
  friend bool operator==(const HomMap& a, const HomMap& b) { return a.blocks == b.blocks; }
};

/// g o f
template <class K>
HomMap<K> compose(const HomMap<K>& g, const HomMap<K>& f) {
  HomMap<K> h;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(g.blocks[v] * f.blocks[v]);
  return h;
}

template <class K>
HomMap<K> zero_map(const Module<K>& m, const Module<K>& n) {
  HomMap<K> h;
  for (int v = 0; v < m.num_vertices(); ++v) h.blocks.emplace_back(n.dim(v), m.dim(v));
  return h;
}

template <class K>
HomMap<K> identity_map(const Module<K>& m) {
  HomMap<K> h;
  for (int v = 0; v < m.num_vertices(); ++v) h.blocks.push_back(Mat<K>::identity(m.dim(v)));
  return h;
}

template <class K>
HomMap<K> combine(const std::vector<HomMap<K>>& basis, const Vec<K>& coeffs, const HomMap<K>& zero) {
  HomMap<K> h = zero;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    for (std::size_t v = 0; v < h.blocks.size(); ++v) h.blocks[v].add_scaled(coeffs[i], basis[i].blocks[v]);
  }
  return h;
}

/// Checks f(m a) = f(m) a on the arrows.
template <class K>
bool is_homomorphism(const Module<K>& m, const Module<K>& n, const HomMap<K>& f) {
  const auto& gens = m.algebra()->radical_data().generators;
  const auto& gm = m.generator_actions();
  const auto& gn = n.generator_actions();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (!(f.blocks[gens[g].tgt] * gm[g] == gn[g] * f.blocks[gens[g].src])) return false;
  }
  return true;
}

template <class K>
struct HomSpace {
  std::vector<HomMap<K>> basis;
  HomMap<K> zero;
  std::size_t dim() const { return basis.size(); }
};

/// Hom_A(M, N). Uses the presentation of M: a map is determined by images
/// n_j in N e_{v_j} of the top generators subject to sum_j n_j w_kj = 0.
template <class K>
HomSpace<K> hom(const Module<K>& m, const Module<K>& n) {
  if (m.algebra() != n.algebra()) fail(ErrorKind::InvalidArgument, "modules over different algebras");
  const auto& a = m.algebra();
  const int nv = m.num_vertices();
  HomSpace<K> out;
  out.zero = zero_map(m, n);
  if (m.is_zero() || n.is_zero()) return out;
  const auto& tp = m.presentation();
  const std::size_t J = tp.top_vertex.size();
  std::vector<int> off(J + 1, 0);
  for (std::size_t j = 0; j < J; ++j) off[j + 1] = off[j] + n.dim(tp.top_vertex[j]);
  const int unknowns = off[J];
  if (unknowns == 0) return out;
  int rows = 0;
  for (int u : tp.syz_vertex) rows += n.dim(u);
  Mat<K> sys(rows, unknowns);
  int r0 = 0;
  for (std::size_t k = 0; k < tp.syz_vertex.size(); ++k) {
    const int u = tp.syz_vertex[k];
    for (std::size_t j = 0; j < J; ++j) {
      const auto& blk = a->block(tp.top_vertex[j], u);
      Mat<K> coef(n.dim(u), n.dim(tp.top_vertex[j]));
      for (std::size_t p = 0; p < blk.size(); ++p) {
        if (!tp.syz[k][j][p].is_zero()) coef.add_scaled(tp.syz[k][j][p], n.act(blk[p]));
      }
      sys.set_block(r0, off[j], coef);
    }
    r0 += n.dim(u);
  }
  std::vector<Vec<K>> sols;
  if (rows == 0) {
    for (int i = 0; i < unknowns; ++i) sols.push_back(exactla::unit_vector<K>(unknowns, i));
  } else {
    sols = exactla::kernel(sys);
  }
  for (const auto& s : sols) {
    HomMap<K> f;
    for (int t = 0; t < nv; ++t) {
      Mat<K> g(n.dim(t), tp.p0_dims[t]);
      for (std::size_t c = 0; c < tp.p0_index[t].size(); ++c) {
        auto [j, pos] = tp.p0_index[t][c];
        int x = a->block(tp.top_vertex[j], t)[pos];
        Vec<K> nj(s.begin() + off[j], s.begin() + off[j + 1]);
        Vec<K> img = n.act(x).apply(nj);
        for (int i = 0; i < n.dim(t); ++i) g(i, c) = img[i];
      }
      f.blocks.push_back(g * tp.section[t]);
    }
    out.basis.push_back(std::move(f));
  }
  return out;
}

/// Jacobson radical of End(M) via the trace form on M.
template <class K>
struct EndRadical {
  HomSpace<K> end;
  std::vector<Vec<K>> coeffs;    // radical basis in coordinates of end.basis
  std::vector<HomMap<K>> basis;  // the same elements as maps
  std::size_t top_dim() const { return end.dim() - basis.size(); }
};

template <class K>
EndRadical<K> end_radical(const Module<K>& m) {
  exactla::require_characteristic_above<K>(m.total(), "module");
  EndRadical<K> r;
  r.end = hom(m, m);
  const std::size_t d = r.end.dim();
  Mat<K> gram(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      gram(i, j) = compose(r.end.basis[i], r.end.basis[j]).trace();
      gram(j, i) = gram(i, j);
    }
  }
  r.coeffs = exactla::kernel(gram);
  for (const auto& c : r.coeffs) r.basis.push_back(combine(r.end.basis, c, r.end.zero));
  return r;
}

/// Graded image of a homomorphism.
template <class K>
Graded<K> image_of(const HomMap<K>& f) {
  Graded<K> out;
  for (const auto& b : f.blocks) out.push_back(b.rows() ? exactla::column_space(b) : std::vector<Vec<K>>{});
  return out;
}

template <class K>
Graded<K> kernel_of(const HomMap<K>& f) {
  Graded<K> out;
  for (const auto& b : f.blocks) {
    if (b.rows() == 0) {
      out.push_back(detail::complement<K>({}, b.cols()));
    } else {
      out.push_back(exactla::kernel(b));
    }
  }
  return out;
}

}  // namespace arqlab::modcat
