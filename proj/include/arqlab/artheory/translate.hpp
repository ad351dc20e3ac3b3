#pragma once

#include "arqlab/modcat.hpp"

namespace arqlab::artheory {

using algcore::Algebra;
using modcat::Graded;
using modcat::HomMap;
using modcat::Module;
using exactla::Mat;
using exactla::Vec;

/// Tr M over the opposite algebra: cokernel of Hom(P0, A) -> Hom(P1, A)
/// for the minimal presentation P1 -> P0 -> M. Projective summands of M
/// contribute nothing.
///
/// With P0 = sum P(v_j), P1 = sum P(u_k) and P1 -> P0 sending the k-th
/// generator to (w_kj)_j, Hom(P(v), A) = A e_v = e_v A^op and the map is
/// y_j -> (sum_j y_j w_kj)_k.
template <class K>
Module<K> transpose(const Module<K>& m) {
  const auto& a = m.algebra();
  auto o = a->op();
  const auto& tp = m.presentation();
  Module<K> target = modcat::projective_sum<K>(o, tp.syz_vertex);
  if (tp.syz_vertex.empty()) return target;
  const int n = a->num_vertices();
  Graded<K> image(n);
  for (int w = 0; w < n; ++w) {
    if (target.dim(w) == 0) continue;
    // offsets of the summands k inside target e_w (= A-blocks (w, u_k))
    std::vector<int> koff;
    int acc = 0;
    for (int u : tp.syz_vertex) {
      koff.push_back(acc);
      acc += static_cast<int>(a->block_dim(w, u));
    }
    for (std::size_t j = 0; j < tp.top_vertex.size(); ++j) {
      for (int y : a->block(w, tp.top_vertex[j])) {
        Vec<K> col(target.dim(w), K(0));
        for (std::size_t k = 0; k < tp.syz_vertex.size(); ++k) {
          const auto& wblk = a->block(tp.top_vertex[j], tp.syz_vertex[k]);
          const auto& wk = tp.syz[k][j];
          for (std::size_t p = 0; p < wblk.size(); ++p) {
            if (wk[p].is_zero()) continue;
            for (const auto& [r, c] : a->product(y, wblk[p])) col[koff[k] + a->position_in_block(r)] += wk[p] * c;
          }
        }
        if (!exactla::is_zero_vec(col)) image[w].push_back(std::move(col));
      }
    }
    image[w] = modcat::detail::span_basis(image[w], target.dim(w));
  }
  return modcat::split_submodule(target, image).quot;
}

/// tau M = D Tr M.
template <class K>
Module<K> tau(const Module<K>& m) {
  if (modcat::is_projective(m)) fail(ErrorKind::UndefinedTranslate, "tau of a projective module");
  return modcat::dual(transpose(m));
}

/// tau^{-1} M = Tr D M.
template <class K>
Module<K> tau_inverse(const Module<K>& m) {
  if (modcat::is_injective(m)) fail(ErrorKind::UndefinedTranslate, "inverse tau of an injective module");
  return transpose(modcat::dual(m));
}

}  // namespace arqlab::artheory
