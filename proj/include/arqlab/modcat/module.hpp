#pragma once

#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "arqlab/algcore/algebra.hpp"

namespace arqlab::modcat {

using algcore::Algebra;
using exactla::Mat;
using exactla::Subspace;
using exactla::Vec;

/// Per-vertex list of vectors, e.g. a basis of a graded subspace.
template <class K>
using Graded = std::vector<std::vector<Vec<K>>>;

template <class K>
class Module;

/// Data of a minimal projective presentation P1 -> P0 -> M -> 0.
///
/// P0 = sum of P(top_vertex[j]); generator j maps to top_elements[j] in
/// M e_{top_vertex[j]}. P1 = sum of P(syz_vertex[k]); generator k maps to
/// an element of P0 whose component in summand j is syz[k][j], a vector in
/// the coordinates of the block e_{top_vertex[j]} A e_{syz_vertex[k]}.
template <class K>
struct TopPresentation {
  std::vector<int> top_vertex;
  std::vector<Vec<K>> top_elements;
  std::vector<Mat<K>> pi;       // per vertex: P0 e_v -> M e_v
  std::vector<Mat<K>> section;  // per vertex: right inverse of pi
  std::vector<int> p0_dims;
  std::vector<std::vector<std::pair<int, int>>> p0_index;  // per vertex: (summand j, block position)
  std::vector<int> syz_vertex;
  std::vector<std::vector<Vec<K>>> syz;
};

/// Finite-dimensional right module, graded by the vertex idempotents.
///
/// act(b) for b in e_s A e_t is the d_t x d_s matrix of m -> m b from M e_s
/// to M e_t acting on column vectors; act(b c) = act(c) act(b).
template <class K>
class Module {
 public:
  using AlgPtr = typename Algebra<K>::Ptr;

  Module() = default;
  Module(AlgPtr a, std::vector<int> dims, std::vector<Mat<K>> act)
      : alg_(std::move(a)), dims_(std::move(dims)), act_(std::move(act)), cache_(std::make_shared<Cache>()) {
    if (static_cast<int>(dims_.size()) != alg_->num_vertices()) fail(ErrorKind::InvalidArgument, "dimension vector has wrong length");
    if (act_.size() != alg_->dim()) fail(ErrorKind::InvalidArgument, "need one action matrix per basis element");
    offsets_.assign(dims_.size() + 1, 0);
    for (std::size_t v = 0; v < dims_.size(); ++v) offsets_[v + 1] = offsets_[v] + dims_[v];
    for (std::size_t b = 0; b < act_.size(); ++b) {
      const auto& e = alg_->element(b);
      if (act_[b].rows() != static_cast<std::size_t>(dims_[e.tgt]) ||
          act_[b].cols() != static_cast<std::size_t>(dims_[e.src])) {
        fail(ErrorKind::InvalidArgument, "action of " + e.label + " has the wrong shape");
      }
    }
  }

  const AlgPtr& algebra() const { return alg_; }
  int num_vertices() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  int dim(int v) const { return dims_[v]; }
  int total() const { return offsets_.back(); }
  int offset(int v) const { return offsets_[v]; }
  bool is_zero() const { return total() == 0; }
  const Mat<K>& act(int b) const { return act_[b]; }
  const std::vector<Mat<K>>& actions() const { return act_; }

  /// Action of an element lying in the block e_s A e_t.
  Mat<K> act_element(const Vec<K>& x, int s, int t) const {
    Mat<K> m(dims_[t], dims_[s]);
    for (int b : alg_->block(s, t)) {
      if (!x[b].is_zero()) m.add_scaled(x[b], act_[b]);
    }
    return m;
  }

  /// Actions of the radical generators (arrows), in generator order.
  const std::vector<Mat<K>>& generator_actions() const {
    std::call_once(cache_->gen_once, [this] {
      for (const auto& g : alg_->radical_data().generators) {
        cache_->gens.push_back(act_element(g.element, g.src, g.tgt));
      }
    });
    return cache_->gens;
  }

  /// Full total x total matrix of right multiplication by x.
  Mat<K> full_action(const Vec<K>& x) const {
    Mat<K> m(total(), total());
    for (std::size_t b = 0; b < alg_->dim(); ++b) {
      if (x[b].is_zero()) continue;
      const auto& e = alg_->element(b);
      const auto& a = act_[b];
      for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(offsets_[e.tgt] + i, offsets_[e.src] + j) += x[b] * a(i, j);
      }
    }
    return m;
  }

  /// Checks act(b c) = act(c) act(b) and the idempotent axioms on all pairs.
  bool satisfies_axioms() const {
    const int n = num_vertices();
    for (int v = 0; v < n; ++v) {
      if (!(act_[alg_->idempotent(v)] == Mat<K>::identity(dims_[v]))) return false;
    }
    const std::size_t d = alg_->dim();
    for (std::size_t b = 0; b < d; ++b) {
      for (std::size_t c = 0; c < d; ++c) {
        if (alg_->element(b).tgt != alg_->element(c).src) continue;
        const auto& e = alg_->element(b);
        const auto& f = alg_->element(c);
        Mat<K> lhs(dims_[f.tgt], dims_[e.src]);
        for (const auto& [k, coef] : alg_->product(static_cast<int>(b), static_cast<int>(c))) lhs.add_scaled(coef, act_[k]);
        if (!(lhs == act_[c] * act_[b])) return false;
      }
    }
    return true;
  }

  std::string dimvec_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t v = 0; v < dims_.size(); ++v) os << (v ? "," : "") << dims_[v];
    os << ")";
    return os.str();
  }

  /// Minimal projective presentation, computed once and shared by copies.
  const TopPresentation<K>& presentation() const {
    std::call_once(cache_->pres_once, [this] { cache_->pres = compute_presentation(); });
    return cache_->pres;
  }

 private:
  struct Cache {
    std::once_flag gen_once;
    std::vector<Mat<K>> gens;
    std::once_flag pres_once;
    TopPresentation<K> pres;
  };

  AlgPtr alg_;
  std::vector<int> dims_;
  std::vector<int> offsets_{0};
  std::vector<Mat<K>> act_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();

  TopPresentation<K> compute_presentation() const;
};

// ---------------------------------------------------------------------------
// Graded linear algebra helpers.

namespace detail {

/// Extends independent columns `basis` of K^d to a basis by unit vectors;
/// returns the added unit vectors.
template <class K>
std::vector<Vec<K>> complement(const std::vector<Vec<K>>& basis, std::size_t d) {
  Subspace<K> span(d, basis);
  std::vector<Vec<K>> out;
  for (std::size_t i = 0; i < d && span.dim() < d; ++i) {
    Vec<K> u = exactla::unit_vector<K>(d, i);
    if (span.add(u)) out.push_back(std::move(u));
  }
  return out;
}

/// Splits K^d = span(B) + span(C): returns (L_B, L_C) with
/// x = B L_B x + C L_C x.
template <class K>
std::pair<Mat<K>, Mat<K>> split_coordinates(const std::vector<Vec<K>>& b, const std::vector<Vec<K>>& c, std::size_t d) {
  std::vector<Vec<K>> all = b;
  all.insert(all.end(), c.begin(), c.end());
  if (all.size() != d) fail(ErrorKind::InternalInconsistency, "split_coordinates: not a basis");
  auto inv = exactla::inverse(Mat<K>::from_columns(all, d));
  if (!inv) fail(ErrorKind::InternalInconsistency, "split_coordinates: dependent vectors");
  return {inv->block(0, 0, b.size(), d), inv->block(b.size(), 0, c.size(), d)};
}

template <class K>
Mat<K> columns(const std::vector<Vec<K>>& vs, std::size_t d) {
  return Mat<K>::from_columns(vs, d);
}

/// Independent basis of the span of the given vectors.
template <class K>
std::vector<Vec<K>> span_basis(const std::vector<Vec<K>>& vs, std::size_t d) {
  Subspace<K> s(d);
  std::vector<Vec<K>> out;
  for (const auto& v : vs) {
    if (s.add(v)) out.push_back(v);
  }
  return out;
}

}  // namespace detail

/// Submodule generated by the given homogeneous vectors (per vertex).
template <class K>
Graded<K> generated_submodule(const Module<K>& m, const Graded<K>& seeds) {
  const int n = m.num_vertices();
  std::vector<Subspace<K>> span;
  for (int v = 0; v < n; ++v) span.emplace_back(m.dim(v));
  Graded<K> out(n);
  std::vector<std::pair<int, Vec<K>>> queue;
  for (int v = 0; v < n; ++v) {
    for (const auto& x : seeds[v]) queue.push_back({v, x});
  }
  const auto& gens = m.algebra()->radical_data().generators;
  const auto& ga = m.generator_actions();
  for (std::size_t q = 0; q < queue.size(); ++q) {
    auto [v, x] = queue[q];
    if (!span[v].add(x)) continue;
    out[v].push_back(x);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (gens[g].src != v) continue;
      Vec<K> y = ga[g].apply(x);
      if (!exactla::is_zero_vec(y)) queue.push_back({gens[g].tgt, std::move(y)});
    }
  }
  return out;
}

/// rad M = M rad A.
template <class K>
Graded<K> radical_of(const Module<K>& m) {
  const int n = m.num_vertices();
  Graded<K> seeds(n);
  const auto& gens = m.algebra()->radical_data().generators;
  const auto& ga = m.generator_actions();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (const auto& col : ga[g].columns()) {
      if (!exactla::is_zero_vec(col)) seeds[gens[g].tgt].push_back(col);
    }
  }
  return generated_submodule(m, seeds);
}

/// U rad A for a graded submodule U of M.
template <class K>
Graded<K> radical_of_subspace(const Module<K>& m, const Graded<K>& u) {
  Graded<K> seeds(m.num_vertices());
  const auto& gens = m.algebra()->radical_data().generators;
  const auto& ga = m.generator_actions();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (const auto& x : u[gens[g].src]) {
      Vec<K> y = ga[g].apply(x);
      if (!exactla::is_zero_vec(y)) seeds[gens[g].tgt].push_back(std::move(y));
    }
  }
  return generated_submodule(m, seeds);
}

/// soc M = vectors killed by every arrow.
template <class K>
Graded<K> socle_of(const Module<K>& m) {
  const int n = m.num_vertices();
  const auto& gens = m.algebra()->radical_data().generators;
  const auto& ga = m.generator_actions();
  Graded<K> out(n);
  for (int v = 0; v < n; ++v) {
    if (m.dim(v) == 0) continue;
    Mat<K> stack(0, m.dim(v));
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (gens[g].src == v) stack = exactla::vstack(stack, ga[g]);
    }
    out[v] = stack.rows() ? exactla::kernel(stack) : detail::complement<K>({}, m.dim(v));
  }
  return out;
}

/// A submodule U of M, its quotient M/U and the comparison maps.
template <class K>
struct SubQuotient {
  Module<K> sub;
  Module<K> quot;
  std::vector<Mat<K>> incl;  // per vertex: U e_v -> M e_v
  std::vector<Mat<K>> proj;  // per vertex: M e_v -> (M/U) e_v
};

/// U must be a graded submodule given by independent vectors per vertex.
template <class K>
SubQuotient<K> split_submodule(const Module<K>& m, const Graded<K>& u) {
  const int n = m.num_vertices();
  const auto& a = m.algebra();
  std::vector<std::vector<Vec<K>>> comp(n);
  std::vector<Mat<K>> lb(n), lc(n), bm(n), cm(n);
  std::vector<int> du(n), dq(n);
  for (int v = 0; v < n; ++v) {
    comp[v] = detail::complement(u[v], m.dim(v));
    auto [l1, l2] = detail::split_coordinates(u[v], comp[v], m.dim(v));
    lb[v] = std::move(l1);
    lc[v] = std::move(l2);
    bm[v] = detail::columns(u[v], m.dim(v));
    cm[v] = detail::columns(comp[v], m.dim(v));
    du[v] = static_cast<int>(u[v].size());
    dq[v] = static_cast<int>(comp[v].size());
  }
  std::vector<Mat<K>> asub(a->dim()), aquot(a->dim());
  for (std::size_t b = 0; b < a->dim(); ++b) {
    const auto& e = a->element(b);
    Mat<K> img = m.act(static_cast<int>(b)) * bm[e.src];
    asub[b] = lb[e.tgt] * img;
    aquot[b] = lc[e.tgt] * (m.act(static_cast<int>(b)) * cm[e.src]);
    if (!(lc[e.tgt] * img).is_zero()) fail(ErrorKind::InternalInconsistency, "subspace is not a submodule");
  }
  SubQuotient<K> out{Module<K>(a, du, std::move(asub)), Module<K>(a, dq, std::move(aquot)), bm, lc};
  return out;
}

// ---------------------------------------------------------------------------
// Standard modules.

/// P(i) = e_i A with basis the graded basis of the blocks e_i A e_t.
template <class K>
Module<K> projective(const typename Algebra<K>::Ptr& a, int i) {
  const int n = a->num_vertices();
  std::vector<int> dims(n);
  for (int t = 0; t < n; ++t) dims[t] = static_cast<int>(a->block_dim(i, t));
  std::vector<Mat<K>> act(a->dim());
  for (std::size_t b = 0; b < a->dim(); ++b) {
    const auto& e = a->element(b);
    Mat<K> m(dims[e.tgt], dims[e.src]);
    const auto& from = a->block(i, e.src);
    for (std::size_t c = 0; c < from.size(); ++c) {
      for (const auto& [k, coef] : a->product(from[c], static_cast<int>(b))) m(a->position_in_block(k), c) += coef;
    }
    act[b] = std::move(m);
  }
  return Module<K>(a, std::move(dims), std::move(act));
}

template <class K>
Module<K> simple(const typename Algebra<K>::Ptr& a, int i) {
  const int n = a->num_vertices();
  std::vector<int> dims(n, 0);
  dims[i] = 1;
  std::vector<Mat<K>> act(a->dim());
  for (std::size_t b = 0; b < a->dim(); ++b) {
    const auto& e = a->element(b);
    act[b] = Mat<K>(dims[e.tgt], dims[e.src]);
  }
  act[a->idempotent(i)] = Mat<K>::identity(1);
  return Module<K>(a, std::move(dims), std::move(act));
}

/// D(M) over the opposite algebra: transpose every action.
template <class K>
Module<K> dual(const Module<K>& m) {
  auto o = m.algebra()->op();
  std::vector<Mat<K>> act;
  for (const auto& x : m.actions()) act.push_back(x.transpose());
  return Module<K>(o, m.dims(), std::move(act));
}

/// I(i) = D(A e_i).
template <class K>
Module<K> injective(const typename Algebra<K>::Ptr& a, int i) {
  return dual(projective<K>(a->op(), i));
}

template <class K>
Module<K> direct_sum(const Module<K>& x, const Module<K>& y) {
  const int n = x.num_vertices();
  std::vector<int> dims(n);
  for (int v = 0; v < n; ++v) dims[v] = x.dim(v) + y.dim(v);
  std::vector<Mat<K>> act;
  for (std::size_t b = 0; b < x.algebra()->dim(); ++b) act.push_back(exactla::direct_sum(x.act(b), y.act(b)));
  return Module<K>(x.algebra(), std::move(dims), std::move(act));
}

template <class K>
Module<K> zero_module(const typename Algebra<K>::Ptr& a) {
  std::vector<Mat<K>> act;
  for (std::size_t b = 0; b < a->dim(); ++b) act.emplace_back(0, 0);
  return Module<K>(a, std::vector<int>(a->num_vertices(), 0), std::move(act));
}

/// Regular module A_A = P(1) + ... + P(n).
template <class K>
Module<K> regular_module(const typename Algebra<K>::Ptr& a) {
  Module<K> m = projective<K>(a, 0);
  for (int v = 1; v < a->num_vertices(); ++v) m = direct_sum(m, projective<K>(a, v));
  return m;
}

/// Module from per-vertex dimensions and matrices for the arrows of the
/// algebra's presentation (or its radical generators when they are basis
/// elements). Remaining basis elements act through path products.
template <class K>
Module<K> from_representation(const typename Algebra<K>::Ptr& a, const std::vector<int>& dims,
                              const std::vector<Mat<K>>& arrow_maps) {
  if (!a->presentation()) fail(ErrorKind::InvalidArgument, "representation input needs a quiver presentation");
  const auto& p = *a->presentation();
  if (arrow_maps.size() != p.quiver.arrows.size()) fail(ErrorKind::InvalidArgument, "one matrix per arrow required");
  std::vector<Mat<K>> act(a->dim());
  std::vector<bool> known(a->dim(), false);
  for (int v = 0; v < a->num_vertices(); ++v) {
    act[a->idempotent(v)] = Mat<K>::identity(dims[v]);
    known[a->idempotent(v)] = true;
  }
  for (std::size_t i = 0; i < arrow_maps.size(); ++i) {
    int b = p.arrow_element[i];
    const auto& ar = p.quiver.arrows[i];
    if (arrow_maps[i].rows() != static_cast<std::size_t>(dims[ar.tgt]) ||
        arrow_maps[i].cols() != static_cast<std::size_t>(dims[ar.src])) {
      fail(ErrorKind::InvalidArgument, "matrix of arrow " + ar.name + " has the wrong shape");
    }
    if (b < 0) continue;
    act[b] = arrow_maps[i];
    known[b] = true;
  }
  // Path basis labels are arrow names joined by '*'.
  for (std::size_t b = 0; b < a->dim(); ++b) {
    if (known[b]) continue;
    const auto& lbl = a->element(b).label;
    Mat<K> m;
    bool first = true;
    std::size_t pos = 0;
    while (pos <= lbl.size()) {
      std::size_t star = lbl.find('*', pos);
      std::string name = lbl.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
      int ar = p.quiver.arrow_index(name);
      if (ar < 0) fail(ErrorKind::InvalidArgument, "basis element " + lbl + " is not a path");
      m = first ? arrow_maps[ar] : arrow_maps[ar] * m;
      first = false;
      if (star == std::string::npos) break;
      pos = star + 1;
    }
    act[b] = std::move(m);
  }
  Module<K> out(a, dims, std::move(act));
  if (!out.satisfies_axioms()) fail(ErrorKind::InvalidArgument, "matrices do not satisfy the relations");
  return out;
}

// ---------------------------------------------------------------------------

template <class K>
TopPresentation<K> Module<K>::compute_presentation() const {
  const int n = num_vertices();
  const auto& a = alg_;
  TopPresentation<K> tp;
  Graded<K> rad = radical_of(*this);
  for (int v = 0; v < n; ++v) {
    for (auto& x : detail::complement(rad[v], dims_[v])) {
      tp.top_vertex.push_back(v);
      tp.top_elements.push_back(std::move(x));
    }
  }
  // P0 coordinates: for each vertex t, concatenation over summands j of the
  // block e_{v_j} A e_t.
  tp.p0_dims.assign(n, 0);
  tp.p0_index.assign(n, {});
  for (int t = 0; t < n; ++t) {
    for (std::size_t j = 0; j < tp.top_vertex.size(); ++j) {
      const auto& blk = a->block(tp.top_vertex[j], t);
      for (std::size_t c = 0; c < blk.size(); ++c) tp.p0_index[t].push_back({static_cast<int>(j), static_cast<int>(c)});
    }
    tp.p0_dims[t] = static_cast<int>(tp.p0_index[t].size());
  }
  // pi_t: column for (j, x) is m_j x.
  tp.pi.resize(n);
  tp.section.resize(n);
  Graded<K> omega(n);
  for (int t = 0; t < n; ++t) {
    Mat<K> pi(dims_[t], tp.p0_dims[t]);
    for (std::size_t c = 0; c < tp.p0_index[t].size(); ++c) {
      auto [j, pos] = tp.p0_index[t][c];
      int x = a->block(tp.top_vertex[j], t)[pos];
      Vec<K> img = act_[x].apply(tp.top_elements[j]);
      for (int r = 0; r < dims_[t]; ++r) pi(r, c) = img[r];
    }
    std::vector<Vec<K>> targets;
    for (int r = 0; r < dims_[t]; ++r) targets.push_back(exactla::unit_vector<K>(dims_[t], r));
    auto sol = exactla::solve(pi, targets);
    Mat<K> sec(tp.p0_dims[t], dims_[t]);
    for (int r = 0; r < dims_[t]; ++r) {
      if (!sol.solutions[r]) fail(ErrorKind::InternalInconsistency, "top elements do not generate the module");
      for (int i = 0; i < tp.p0_dims[t]; ++i) sec(i, r) = (*sol.solutions[r])[i];
    }
    omega[t] = exactla::kernel(pi);
    tp.pi[t] = std::move(pi);
    tp.section[t] = std::move(sec);
  }
  // P0 as a module, to find the top of the syzygy.
  std::vector<Mat<K>> p0act(a->dim());
  for (std::size_t b = 0; b < a->dim(); ++b) {
    const auto& e = a->element(b);
    Mat<K> m(tp.p0_dims[e.tgt], tp.p0_dims[e.src]);
    for (std::size_t c = 0; c < tp.p0_index[e.src].size(); ++c) {
      auto [j, pos] = tp.p0_index[e.src][c];
      int from = a->block(tp.top_vertex[j], e.src)[pos];
      // offset of summand j inside P0 e_tgt
      int base = 0;
      for (int jj = 0; jj < j; ++jj) base += static_cast<int>(a->block_dim(tp.top_vertex[jj], e.tgt));
      for (const auto& [k, coef] : a->product(from, static_cast<int>(b))) m(base + a->position_in_block(k), c) += coef;
    }
    p0act[b] = std::move(m);
  }
  Module<K> p0(a, tp.p0_dims, std::move(p0act));
  Graded<K> omega_rad = radical_of_subspace(p0, omega);
  for (int u = 0; u < n; ++u) {
    Subspace<K> r(tp.p0_dims[u], omega_rad[u]);
    for (const auto& w : omega[u]) {
      if (!r.add(w)) continue;
      tp.syz_vertex.push_back(u);
      std::vector<Vec<K>> comps(tp.top_vertex.size());
      for (std::size_t j = 0; j < tp.top_vertex.size(); ++j) comps[j].assign(a->block_dim(tp.top_vertex[j], u), K(0));
      for (std::size_t c = 0; c < tp.p0_index[u].size(); ++c) {
        auto [j, pos] = tp.p0_index[u][c];
        comps[j][pos] = w[c];
      }
      tp.syz.push_back(std::move(comps));
    }
  }
  return tp;
}

}  // namespace arqlab::modcat
