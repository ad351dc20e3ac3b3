#pragma once

#include <vector>

#include "arqlab/artheory/translate.hpp"

namespace arqlab::artheory {

/// 0 -> X -f-> E -g-> Y -> 0 with Y = tau^{-1} X.
template <class K>
struct AlmostSplitSequence {
  Module<K> start;   // X
  Module<K> middle;  // E
  Module<K> end;     // Y
  HomMap<K> f, g;
  std::vector<modcat::Summand<K>> summands;  // of E
};

namespace detail {

template <class K>
Vec<K> hom_coords(const exactla::BasisCoords<K>& bc, const HomMap<K>& h) {
  return bc(h.flatten());
}

/// Maps from a quotient basis: g with g * proj = phi, for proj surjective.
template <class K>
Mat<K> factor_through(const Mat<K>& phi, const Mat<K>& proj) {
  if (proj.rows() == 0) return Mat<K>(phi.rows(), 0);
  auto sol = exactla::solve(proj.transpose(), phi.transpose().columns());
  Mat<K> g(phi.rows(), proj.rows());
  for (std::size_t i = 0; i < phi.rows(); ++i) {
    if (!sol.solutions[i]) fail(ErrorKind::InternalInconsistency, "map does not factor through the quotient");
    for (std::size_t j = 0; j < proj.rows(); ++j) g(i, j) = (*sol.solutions[i])[j];
  }
  return g;
}

}  // namespace detail

/// The almost split sequence starting at the indecomposable non-injective
/// module X.
///
/// Ext^1(Y, X) = Hom(Omega, X) / (maps extending to P0) for the presentation
/// 0 -> Omega -> P0 -> Y -> 0. The sequence is the pushout along any class
/// annihilated by rad End(Y); that socle has to be one-dimensional.
template <class K>
AlmostSplitSequence<K> almost_split_sequence(const Module<K>& x) {
  if (modcat::is_injective(x)) fail(ErrorKind::UndefinedTranslate, "no almost split sequence starts at an injective module");
  const auto& a = x.algebra();
  const int n = a->num_vertices();
  Module<K> y = tau_inverse(x);
  const auto& tp = y.presentation();
  Module<K> p0 = modcat::projective_sum<K>(a, tp.top_vertex);
  HomMap<K> pi{tp.pi};
  auto om = modcat::split_submodule(p0, modcat::kernel_of(pi));
  const Module<K>& omega = om.sub;
  const auto& incl = om.incl;

  auto hs = modcat::hom(omega, x);
  const std::size_t h = hs.dim();
  std::vector<Vec<K>> flat;
  for (const auto& b : hs.basis) flat.push_back(b.flatten());
  const std::size_t flat_len = hs.zero.flatten().size();
  exactla::BasisCoords<K> hc(flat, flat_len);

  std::vector<Vec<K>> restricted;
  for (const auto& g : modcat::hom(p0, x).basis) {
    HomMap<K> r;
    for (int t = 0; t < n; ++t) r.blocks.push_back(g.blocks[t] * incl[t]);
    restricted.push_back(detail::hom_coords(hc, r));
  }
  auto rb = modcat::detail::span_basis(restricted, h);
  auto cb = modcat::detail::complement(rb, h);
  if (cb.empty()) fail(ErrorKind::InternalInconsistency, "Ext^1(tau^-1 X, X) vanishes for " + x.dimvec_string());
  auto [lr, lc] = modcat::detail::split_coordinates(rb, cb, h);
  (void)lr;
  const std::size_t e = cb.size();

  // generator columns of P0 and their images in Y
  std::vector<int> gen_col(tp.top_vertex.size(), -1);
  for (std::size_t j = 0; j < tp.top_vertex.size(); ++j) {
    const int v = tp.top_vertex[j];
    const int idpos = a->position_in_block(a->idempotent(v));
    for (std::size_t c = 0; c < tp.p0_index[v].size(); ++c) {
      if (tp.p0_index[v][c] == std::make_pair(static_cast<int>(j), idpos)) gen_col[j] = static_cast<int>(c);
    }
  }
  std::vector<exactla::BasisCoords<K>> omega_coords;
  for (int t = 0; t < n; ++t) omega_coords.emplace_back(incl[t].columns(), p0.dim(t));

  auto er = modcat::end_radical(y);
  if (er.top_dim() != 1) fail(ErrorKind::SocleNotUnique, "End(" + y.dimvec_string() + ") is not local with residue field K");
  Mat<K> stack(0, e);
  for (const auto& rho : er.basis) {
    // lift rho to P0 through the generators, then restrict to Omega
    std::vector<Vec<K>> z(tp.top_vertex.size());
    for (std::size_t j = 0; j < tp.top_vertex.size(); ++j) {
      const int v = tp.top_vertex[j];
      Vec<K> mj = tp.pi[v].col(gen_col[j]);
      z[j] = tp.section[v].apply(rho.blocks[v].apply(mj));
    }
    std::vector<Mat<K>> rho1(n);
    for (int t = 0; t < n; ++t) {
      Mat<K> r0(p0.dim(t), p0.dim(t));
      for (std::size_t c = 0; c < tp.p0_index[t].size(); ++c) {
        auto [j, pos] = tp.p0_index[t][c];
        int b = a->block(tp.top_vertex[j], t)[pos];
        Vec<K> img = p0.act(b).apply(z[j]);
        for (int i = 0; i < p0.dim(t); ++i) r0(i, c) = img[i];
      }
      Mat<K> on = r0 * incl[t];
      Mat<K> r1(omega.dim(t), omega.dim(t));
      for (std::size_t c = 0; c < on.cols(); ++c) {
        Vec<K> co = omega_coords[t](on.col(c));
        for (int i = 0; i < omega.dim(t); ++i) r1(i, c) = co[i];
      }
      rho1[t] = std::move(r1);
    }
    Mat<K> act(e, e);
    for (std::size_t i = 0; i < e; ++i) {
      HomMap<K> hi = modcat::combine(hs.basis, cb[i], hs.zero);
      HomMap<K> hr;
      for (int t = 0; t < n; ++t) hr.blocks.push_back(hi.blocks[t] * rho1[t]);
      Vec<K> q = lc.apply(detail::hom_coords(hc, hr));
      for (std::size_t k = 0; k < e; ++k) act(k, i) = q[k];
    }
    stack = exactla::vstack(stack, act);
  }
  std::vector<Vec<K>> soc;
  if (stack.rows() == 0) {
    soc = modcat::detail::complement<K>({}, e);
  } else {
    soc = exactla::kernel(stack);
  }
  if (soc.size() != 1) {
    fail(ErrorKind::SocleNotUnique, "socle of Ext^1(" + y.dimvec_string() + ", " + x.dimvec_string() + ") has dimension " +
                                        std::to_string(soc.size()));
  }
  // normalize: first nonzero coordinate of the class is 1
  for (const auto& c : soc[0]) {
    if (c.is_zero()) continue;
    K inv = K(1) / c;
    for (auto& x : soc[0]) x = inv * x;
    break;
  }
  Vec<K> xi(h, K(0));
  for (std::size_t i = 0; i < e; ++i) {
    for (std::size_t k = 0; k < h; ++k) xi[k] += soc[0][i] * cb[i][k];
  }
  HomMap<K> hx = modcat::combine(hs.basis, xi, hs.zero);

  // pushout E = (X + P0) / {(h w, -w) : w in Omega}
  Module<K> sum = modcat::direct_sum(x, p0);
  Graded<K> rel(n);
  for (int t = 0; t < n; ++t) {
    Mat<K> col = exactla::vstack(hx.blocks[t], K(-1) * incl[t]);
    rel[t] = col.columns();
  }
  auto po = modcat::split_submodule(sum, rel);

  AlmostSplitSequence<K> out;
  out.start = x;
  out.end = y;
  out.middle = po.quot;
  for (int t = 0; t < n; ++t) {
    Mat<K> ix(sum.dim(t), x.dim(t));
    for (int i = 0; i < x.dim(t); ++i) ix(i, i) = K(1);
    out.f.blocks.push_back(po.proj[t] * ix);
    Mat<K> phi(y.dim(t), sum.dim(t));
    phi.set_block(0, x.dim(t), tp.pi[t]);
    out.g.blocks.push_back(detail::factor_through(phi, po.proj[t]));
  }
  if (out.middle.total() != x.total() + y.total()) fail(ErrorKind::InternalInconsistency, "almost split sequence is not additive");
  out.summands = modcat::decompose(out.middle);
  return out;
}

}  // namespace arqlab::artheory
