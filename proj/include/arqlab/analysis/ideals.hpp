#pragma once

#include <string>
#include <vector>

#include "arqlab/algcore.hpp"
#include "arqlab/modcat.hpp"

namespace arqlab::analysis {

using algcore::Algebra;
using algcore::AlgebraPtr;
using algcore::SubspaceIdeal;
using exactla::Mat;
using exactla::Subspace;
using exactla::Vec;
using modcat::Graded;
using modcat::Module;

enum class Side { Left, Right };

/// r_A(M) = {a : M a = 0} for a right module M.
template <class K>
SubspaceIdeal<K> annihilator(const Module<K>& m) {
  const auto& a = m.algebra();
  const int n = a->num_vertices();
  // one row block per (s, t) slot of the action matrices
  std::vector<std::vector<int>> off(n, std::vector<int>(n, 0));
  int rows = 0;
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      off[s][t] = rows;
      if (!a->block(s, t).empty()) rows += m.dim(s) * m.dim(t);
    }
  }
  Mat<K> sys(rows, a->dim());
  for (std::size_t b = 0; b < a->dim(); ++b) {
    const auto& e = a->element(b);
    const auto& act = m.act(static_cast<int>(b));
    int r = off[e.src][e.tgt];
    for (std::size_t i = 0; i < act.rows(); ++i) {
      for (std::size_t j = 0; j < act.cols(); ++j) sys(r++, b) = act(i, j);
    }
  }
  return SubspaceIdeal<K>::span(a, rows ? exactla::kernel(sys) : algcore::SubspaceIdeal<K>::whole(a).space.basis());
}

/// l_A(X) = {a : a X = 0} or r_A(X) = {a : X a = 0}, searched inside `within`
/// (the whole algebra by default).
template <class K>
SubspaceIdeal<K> annihilator(const SubspaceIdeal<K>& x, Side side, const std::vector<Vec<K>>* within = nullptr) {
  const auto& a = x.alg;
  const std::size_t d = a->dim();
  std::vector<Vec<K>> dom;
  if (within) {
    dom = *within;
  } else {
    for (std::size_t i = 0; i < d; ++i) dom.push_back(a->unit(static_cast<int>(i)));
  }
  if (dom.empty()) return SubspaceIdeal<K>::zero(a);
  const auto& xb = x.space.basis();
  Mat<K> sys(xb.size() * d, dom.size());
  for (std::size_t c = 0; c < dom.size(); ++c) {
    for (std::size_t k = 0; k < xb.size(); ++k) {
      Vec<K> p = side == Side::Left ? a->multiply(dom[c], xb[k]) : a->multiply(xb[k], dom[c]);
      for (std::size_t r = 0; r < d; ++r) sys(k * d + r, c) = p[r];
    }
  }
  std::vector<Vec<K>> sols;
  if (xb.empty()) {
    for (std::size_t c = 0; c < dom.size(); ++c) sols.push_back(exactla::unit_vector<K>(dom.size(), c));
  } else {
    sols = exactla::kernel(sys);
  }
  SubspaceIdeal<K> out = SubspaceIdeal<K>::zero(a);
  for (const auto& s : sols) {
    Vec<K> y(d, K(0));
    for (std::size_t c = 0; c < dom.size(); ++c) {
      if (s[c].is_zero()) continue;
      for (std::size_t r = 0; r < d; ++r) y[r] += s[c] * dom[c][r];
    }
    out.space.add(y);
  }
  return out;
}

/// Element of e_i A with coordinates given in P(i) = e_i A.
template <class K>
Vec<K> projective_element(const Algebra<K>& a, int i, const Graded<K>& coords) {
  Vec<K> y(a.dim(), K(0));
  for (int t = 0; t < a.num_vertices(); ++t) {
    const auto& blk = a.block(i, t);
    for (const auto& v : coords[t]) {
      for (std::size_t p = 0; p < blk.size(); ++p) y[blk[p]] += v[p];
    }
  }
  return y;
}

/// Trace ideal of M in A: the sum of the images of all maps M -> A_A.
template <class K>
SubspaceIdeal<K> trace_ideal(const Module<K>& m) {
  const auto& a = m.algebra();
  std::vector<Vec<K>> gens;
  for (int i = 0; i < a->num_vertices(); ++i) {
    auto p = modcat::projective<K>(a, i);
    auto h = modcat::hom(m, p);
    for (const auto& f : h.basis) {
      auto img = modcat::image_of(f);
      for (int t = 0; t < a->num_vertices(); ++t) {
        for (const auto& v : img[t]) {
          Graded<K> one(a->num_vertices());
          one[t].push_back(v);
          gens.push_back(projective_element(*a, i, one));
        }
      }
    }
  }
  // images of maps into A_A already form a right ideal; close on the left
  return algcore::ideal_generated<K>(a, gens);
}

/// Vertices whose idempotent is not in I.
template <class K>
std::vector<int> residual_identity(const SubspaceIdeal<K>& i) {
  std::vector<int> e;
  for (int v = 0; v < i.alg->num_vertices(); ++v) {
    if (!i.contains_idempotent(v)) e.push_back(v);
  }
  return e;
}

template <class K>
Vec<K> idempotent_vector(const Algebra<K>& a, const std::vector<int>& vertices) {
  return a.idempotent_sum(vertices);
}

/// I e or e I as a subspace.
template <class K>
SubspaceIdeal<K> times_idempotent(const SubspaceIdeal<K>& i, const Vec<K>& e, Side side) {
  SubspaceIdeal<K> out = SubspaceIdeal<K>::zero(i.alg);
  for (const auto& x : i.space.basis()) out.space.add(side == Side::Right ? i.alg->multiply(x, e) : i.alg->multiply(e, x));
  return out;
}

/// The right socle {x : x rad A = 0}.
template <class K>
SubspaceIdeal<K> socle_ideal(const AlgebraPtr<K>& a) {
  return annihilator(algcore::radical_ideal<K>(a), Side::Left);
}

struct DeformingReport {
  std::vector<int> e;
  bool ieI_zero = false;
  bool left_is_Ie = false;   // l_A(I) = Ie
  bool right_is_eI = false;  // r_A(I) = eI
  bool socle_in_I = false;
  bool d1 = false;           // l_eAe(I) = eIe = r_eAe(I)
  bool d2 = false;           // quiver of A/I acyclic
  bool deforming() const { return d1 && d2; }
};

/// D1, D2 and the annihilator conditions of a candidate deforming ideal.
/// When I e I = 0 the conditions l_A(I) = Ie and r_A(I) = eI must agree and
/// imply soc A in I and D1; a violation is an internal inconsistency.
template <class K>
DeformingReport deforming_ideal_check(const SubspaceIdeal<K>& i) {
  const auto& a = i.alg;
  if (!modcat::is_selfinjective<K>(a)) fail(ErrorKind::NotSelfinjective, "deforming ideals need a selfinjective algebra");
  DeformingReport r;
  r.e = residual_identity(i);
  const Vec<K> e = idempotent_vector(*a, r.e);
  auto ie = times_idempotent(i, e, Side::Right);
  auto ei = times_idempotent(i, e, Side::Left);
  r.ieI_zero = algcore::product_span(ie, i).dim() == 0;
  r.left_is_Ie = annihilator(i, Side::Left) == ie;
  r.right_is_eI = annihilator(i, Side::Right) == ei;
  r.socle_in_I = i.contains_all(socle_ideal<K>(a));
  std::vector<Vec<K>> eae = algcore::corner_space<K>(a, r.e).space.basis();
  auto eie = algcore::sandwich(i, e, e);
  r.d1 = annihilator(i, Side::Left, &eae) == eie && annihilator(i, Side::Right, &eae) == eie;
  if (r.e.empty()) {
    r.d2 = false;
  } else {
    r.d2 = algcore::quotient(i).algebra->gabriel_quiver().is_acyclic();
  }
  if (r.ieI_zero) {
    if (r.left_is_Ie != r.right_is_eI) {
      fail(ErrorKind::InternalInconsistency, "l_A(I) = Ie and r_A(I) = eI disagree although IeI = 0");
    }
    if (r.left_is_Ie && !(r.socle_in_I && r.d1)) {
      fail(ErrorKind::InternalInconsistency, "annihilator conditions hold but soc A is not in I or D1 fails");
    }
  }
  return r;
}

/// A[I] = (eAe/eIe) + I with (b, x)(c, y) = (bc, by + xc + xy).
template <class K>
AlgebraPtr<K> build_AI(const SubspaceIdeal<K>& i, const std::string& name = "") {
  const auto& a = i.alg;
  auto rep = deforming_ideal_check(i);
  if (!rep.d1 || !rep.d2) fail(ErrorKind::PreconditionFailed, "A[I] needs an ideal satisfying D1 and D2");
  auto q = algcore::quotient(i);
  const auto& b = *q.algebra;
  const int n = a->num_vertices();
  const std::size_t db = b.dim();
  // graded basis of I
  std::vector<Vec<K>> ib;
  std::vector<std::pair<int, int>> ipos;
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      for (auto& v : i.block_basis(s, t)) {
        ib.push_back(std::move(v));
        ipos.push_back({s, t});
      }
    }
  }
  const std::size_t total = db + ib.size();
  Mat<K> icols = Mat<K>::from_columns(ib, a->dim());
  typename Algebra<K>::Data d;
  d.name = name.empty() ? (a->name().empty() ? "A" : a->name()) + "[I]" : name;
  d.n = n;
  d.vertex_names = a->vertex_names();
  for (std::size_t k = 0; k < db; ++k) {
    const auto& e = b.element(k);
    d.basis.push_back({e.label, q.vertex_map[e.src], q.vertex_map[e.tgt]});
  }
  for (std::size_t k = 0; k < ib.size(); ++k) {
    std::string label;
    for (std::size_t r = 0; r < ib[k].size(); ++r) {
      if (!ib[k][r].is_zero() && label.empty()) label = a->element(r).label;
    }
    d.basis.push_back({"i:" + label, ipos[k].first, ipos[k].second});
  }
  d.idempotents.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    if (q.vertex_index[v] >= 0) {
      d.idempotents[v] = b.idempotent(q.vertex_index[v]);
      continue;
    }
    Vec<K> ev = a->unit(a->idempotent(v));
    for (std::size_t k = 0; k < ib.size(); ++k) {
      if (ib[k] == ev) d.idempotents[v] = static_cast<int>(db + k);
    }
    if (d.idempotents[v] < 0) fail(ErrorKind::InternalInconsistency, "idempotent of a vertex in I is not a basis element");
  }
  auto lift = [&](std::size_t k) { return a->unit(q.kept_basis[k]); };
  d.products.assign(total * total, {});
  // products landing in I, solved for I-coordinates in one pass
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  std::vector<Vec<K>> targets;
  for (std::size_t x = 0; x < db; ++x) {
    for (std::size_t y = 0; y < db; ++y) d.products[x * total + y] = b.product(static_cast<int>(x), static_cast<int>(y));
    for (std::size_t y = 0; y < ib.size(); ++y) {
      slots.push_back({x, db + y});
      targets.push_back(a->multiply(lift(x), ib[y]));
    }
  }
  for (std::size_t x = 0; x < ib.size(); ++x) {
    for (std::size_t y = 0; y < total; ++y) {
      slots.push_back({db + x, y});
      targets.push_back(a->multiply(ib[x], y < db ? lift(y) : ib[y - db]));
    }
  }
  auto sol = exactla::solve(icols, targets);
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (!sol.solutions[k]) fail(ErrorKind::InternalInconsistency, "product left the ideal in A[I]");
    algcore::SparseVec<K> sv;
    const auto& c = *sol.solutions[k];
    for (std::size_t r = 0; r < c.size(); ++r) {
      if (!c[r].is_zero()) sv.emplace_back(static_cast<int>(db + r), c[r]);
    }
    d.products[slots[k].first * total + slots[k].second] = std::move(sv);
  }
  return Algebra<K>::create(std::move(d));
}

}  // namespace arqlab::analysis
