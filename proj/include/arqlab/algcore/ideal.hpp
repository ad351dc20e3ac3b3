#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "arqlab/algcore/algebra.hpp"

namespace arqlab::algcore {

/// Subspace of an algebra, usually a two-sided ideal.
template <class K>
struct SubspaceIdeal {
  typename Algebra<K>::Ptr alg;
  Subspace<K> space;

  static SubspaceIdeal zero(typename Algebra<K>::Ptr a) { return {a, Subspace<K>(a->dim())}; }
  static SubspaceIdeal whole(typename Algebra<K>::Ptr a) {
    SubspaceIdeal s = zero(a);
    for (std::size_t i = 0; i < a->dim(); ++i) s.space.add(a->unit(static_cast<int>(i)));
    return s;
  }
  static SubspaceIdeal span(typename Algebra<K>::Ptr a, const std::vector<Vec<K>>& gens) {
    return {a, Subspace<K>(a->dim(), gens)};
  }

  std::size_t dim() const { return space.dim(); }
  bool contains(const Vec<K>& x) const { return space.contains(x); }
  bool contains_idempotent(int v) const { return space.contains(alg->unit(alg->idempotent(v))); }
  bool contains_all(const SubspaceIdeal& o) const { return space.contains_all(o.space); }
  friend bool operator==(const SubspaceIdeal& a, const SubspaceIdeal& b) { return a.space == b.space; }

  bool is_two_sided() const {
    for (const auto& x : space.basis()) {
      for (std::size_t b = 0; b < alg->dim(); ++b) {
        if (!space.contains(alg->multiply_basis(static_cast<int>(b), x))) return false;
        if (!space.contains(alg->multiply_basis(x, static_cast<int>(b)))) return false;
      }
    }
    return true;
  }

  /// True when the subspace is the sum of its intersections with the blocks.
  bool is_graded() const {
    for (const auto& x : space.basis()) {
      for (int s = 0; s < alg->num_vertices(); ++s) {
        for (int t = 0; t < alg->num_vertices(); ++t) {
          if (!space.contains(project_block(x, s, t))) return false;
        }
      }
    }
    return true;
  }

  Vec<K> project_block(const Vec<K>& x, int s, int t) const {
    Vec<K> y(alg->dim(), K(0));
    for (int b : alg->block(s, t)) y[b] = x[b];
    return y;
  }

  /// Basis of the block e_s I e_t (for graded I). Basis elements of the
  /// algebra lying in I are preferred, idempotent first.
  std::vector<Vec<K>> block_basis(int s, int t) const {
    Subspace<K> blk(alg->dim());
    std::vector<Vec<K>> out;
    for (int b : alg->block(s, t)) {
      Vec<K> u = alg->unit(b);
      if (space.contains(u) && blk.add(u)) out.push_back(u);
    }
    for (const auto& x : space.basis()) {
      Vec<K> y = project_block(x, s, t);
      if (blk.add(y)) out.push_back(y);
    }
    return out;
  }
};

/// Two-sided ideal generated by the given elements.
template <class K>
SubspaceIdeal<K> ideal_generated(typename Algebra<K>::Ptr a, const std::vector<Vec<K>>& gens) {
  SubspaceIdeal<K> out = SubspaceIdeal<K>::zero(a);
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < a->dim(); ++i) {
      Vec<K> left = a->multiply_basis(static_cast<int>(i), g);
      if (exactla::is_zero_vec(left)) continue;
      for (std::size_t j = 0; j < a->dim(); ++j) out.space.add(a->multiply_basis(left, static_cast<int>(j)));
    }
  }
  return out;
}

/// span{x y : x in X, y in Y}
template <class K>
SubspaceIdeal<K> product_span(const SubspaceIdeal<K>& x, const SubspaceIdeal<K>& y) {
  SubspaceIdeal<K> out = SubspaceIdeal<K>::zero(x.alg);
  for (const auto& a : x.space.basis()) {
    for (const auto& b : y.space.basis()) out.space.add(x.alg->multiply(a, b));
  }
  return out;
}

/// span{ e x f : x in I } for idempotent sums e, f.
template <class K>
SubspaceIdeal<K> sandwich(const SubspaceIdeal<K>& i, const Vec<K>& e, const Vec<K>& f) {
  SubspaceIdeal<K> out = SubspaceIdeal<K>::zero(i.alg);
  for (const auto& x : i.space.basis()) out.space.add(i.alg->multiply(i.alg->multiply(e, x), f));
  return out;
}

/// The subspace e A e for a set of vertices.
template <class K>
SubspaceIdeal<K> corner_space(typename Algebra<K>::Ptr a, const std::vector<int>& vertices) {
  SubspaceIdeal<K> out = SubspaceIdeal<K>::zero(a);
  for (int s : vertices) {
    for (int t : vertices) {
      for (int b : a->block(s, t)) out.space.add(a->unit(b));
    }
  }
  return out;
}

template <class K>
SubspaceIdeal<K> radical_ideal(typename Algebra<K>::Ptr a) {
  return {a, a->radical_data().radical()};
}

/// A / I together with the data needed to push elements down.
template <class K>
class Quotient {
 public:
  typename Algebra<K>::Ptr algebra;
  std::vector<int> kept_basis;    // new basis index -> old basis index
  std::vector<int> vertex_map;    // new vertex -> old vertex
  std::vector<int> vertex_index;  // old vertex -> new vertex or -1

  /// Image of an element of the original algebra.
  Vec<K> project(const Vec<K>& x) const {
    Vec<K> y(kept_basis.size(), K(0));
    for (const auto& bp : blocks_) {
      Vec<K> local(bp.coords.size());
      bool any = false;
      for (std::size_t i = 0; i < bp.coords.size(); ++i) {
        local[i] = x[bp.coords[i]];
        any = any || !local[i].is_zero();
      }
      if (!any) continue;
      Vec<K> c = bp.inv.apply(local);
      for (std::size_t k = 0; k < bp.kept.size(); ++k) y[bp.kept[k]] += c[k];
    }
    return y;
  }

  template <class T>
  friend Quotient<T> quotient(const SubspaceIdeal<T>& ideal, const std::string& name);

 private:
  struct BlockProjector {
    std::vector<int> coords;  // old basis indices of the block
    std::vector<int> kept;    // new basis indices of the kept elements, in column order
    Mat<K> inv;
  };
  std::vector<BlockProjector> blocks_;
};

/// Quotient by a graded two-sided ideal. Vertices whose idempotent lies in
/// the ideal disappear.
template <class K>
Quotient<K> quotient(const SubspaceIdeal<K>& ideal, const std::string& name = "") {
  const auto& a = ideal.alg;
  if (!ideal.is_two_sided()) fail(ErrorKind::NotTwoSided, "subspace is not a two-sided ideal");
  if (!ideal.is_graded()) fail(ErrorKind::PreconditionFailed, "ideal is not graded by the idempotents");
  Quotient<K> q;
  const int n = a->num_vertices();
  q.vertex_index.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    if (!ideal.contains_idempotent(v)) {
      q.vertex_index[v] = static_cast<int>(q.vertex_map.size());
      q.vertex_map.push_back(v);
    }
  }
  if (q.vertex_map.empty()) fail(ErrorKind::InvalidArgument, "quotient by the whole algebra");
  struct Pending {
    std::vector<int> coords, kept_old;
    std::vector<Vec<K>> ideal_part;
  };
  std::vector<Pending> pend;
  std::vector<int> kept_all;
  for (int s : q.vertex_map) {
    for (int t : q.vertex_map) {
      const auto& blk = a->block(s, t);
      if (blk.empty()) continue;
      Pending p;
      p.coords = blk;
      p.ideal_part = ideal.block_basis(s, t);
      Subspace<K> span(a->dim(), p.ideal_part);
      for (int b : blk) {
        if (span.add(a->unit(b))) p.kept_old.push_back(b);
      }
      kept_all.insert(kept_all.end(), p.kept_old.begin(), p.kept_old.end());
      pend.push_back(std::move(p));
    }
  }
  std::sort(kept_all.begin(), kept_all.end());
  std::vector<int> new_index(a->dim(), -1);
  for (std::size_t i = 0; i < kept_all.size(); ++i) new_index[kept_all[i]] = static_cast<int>(i);
  q.kept_basis = kept_all;
  for (auto& p : pend) {
    const std::size_t m = p.coords.size();
    Mat<K> cols(m, m);
    std::size_t c = 0;
    for (int b : p.kept_old) {
      for (std::size_t i = 0; i < m; ++i) cols(i, c) = p.coords[i] == b ? K(1) : K(0);
      ++c;
    }
    for (const auto& v : p.ideal_part) {
      for (std::size_t i = 0; i < m; ++i) cols(i, c) = v[p.coords[i]];
      ++c;
    }
    auto inv = exactla::inverse(cols);
    if (!inv) fail(ErrorKind::InternalInconsistency, "quotient block complement is singular");
    typename Quotient<K>::BlockProjector bp;
    bp.coords = p.coords;
    for (int b : p.kept_old) bp.kept.push_back(new_index[b]);
    bp.inv = *inv;
    q.blocks_.push_back(std::move(bp));
  }
  typename Algebra<K>::Data d;
  d.name = name.empty() ? (a->name().empty() ? std::string("A/I") : a->name() + "/I") : name;
  d.n = static_cast<int>(q.vertex_map.size());
  for (int v : q.vertex_map) d.vertex_names.push_back(a->vertex_name(v));
  for (int v : q.vertex_map) d.idempotents.push_back(new_index[a->idempotent(v)]);
  for (int b : kept_all) {
    const auto& e = a->element(b);
    d.basis.push_back({e.label, q.vertex_index[e.src], q.vertex_index[e.tgt]});
  }
  const std::size_t dm = kept_all.size();
  d.products.resize(dm * dm);
  for (std::size_t i = 0; i < dm; ++i) {
    for (std::size_t j = 0; j < dm; ++j) {
      const auto& p = a->product(kept_all[i], kept_all[j]);
      if (p.empty()) continue;
      Vec<K> x(a->dim(), K(0));
      for (const auto& [k, c] : p) x[k] = c;
      Vec<K> y = q.project(x);
      SparseVec<K> sv;
      for (std::size_t k = 0; k < dm; ++k) {
        if (!y[k].is_zero()) sv.emplace_back(static_cast<int>(k), y[k]);
      }
      d.products[i * dm + j] = std::move(sv);
    }
  }
  q.algebra = Algebra<K>::create(std::move(d));
  return q;
}

template <class K>
struct Corner {
  typename Algebra<K>::Ptr algebra;
  std::vector<int> kept_basis;  // new -> old
  std::vector<int> vertex_map;  // new -> old
};

/// e A e for e the sum of the idempotents at the given vertices.
template <class K>
Corner<K> corner(typename Algebra<K>::Ptr a, std::vector<int> vertices, const std::string& name = "") {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  if (vertices.empty()) fail(ErrorKind::InvalidArgument, "corner over an empty vertex set");
  Corner<K> c;
  c.vertex_map = vertices;
  std::vector<int> vidx(a->num_vertices(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0 || vertices[i] >= a->num_vertices()) fail(ErrorKind::InvalidArgument, "corner vertex out of range");
    vidx[vertices[i]] = static_cast<int>(i);
  }
  std::vector<int> new_index(a->dim(), -1);
  for (std::size_t b = 0; b < a->dim(); ++b) {
    const auto& e = a->element(b);
    if (vidx[e.src] >= 0 && vidx[e.tgt] >= 0) {
      new_index[b] = static_cast<int>(c.kept_basis.size());
      c.kept_basis.push_back(static_cast<int>(b));
    }
  }
  typename Algebra<K>::Data d;
  d.name = name.empty() ? "eAe" : name;
  d.n = static_cast<int>(vertices.size());
  for (int v : vertices) d.vertex_names.push_back(a->vertex_name(v));
  for (int v : vertices) d.idempotents.push_back(new_index[a->idempotent(v)]);
  for (int b : c.kept_basis) {
    const auto& e = a->element(b);
    d.basis.push_back({e.label, vidx[e.src], vidx[e.tgt]});
  }
  const std::size_t dm = c.kept_basis.size();
  d.products.resize(dm * dm);
  for (std::size_t i = 0; i < dm; ++i) {
    for (std::size_t j = 0; j < dm; ++j) {
      SparseVec<K> sv;
      for (const auto& [k, coef] : a->product(c.kept_basis[i], c.kept_basis[j])) sv.emplace_back(new_index[k], coef);
      d.products[i * dm + j] = std::move(sv);
    }
  }
  c.algebra = Algebra<K>::create(std::move(d));
  return c;
}

}  // namespace arqlab::algcore
