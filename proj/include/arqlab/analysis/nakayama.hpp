#pragma once

#include <optional>
#include <vector>

#include "arqlab/analysis/ideals.hpp"

namespace arqlab::analysis {

/// Nakayama permutation: soc P(i) is isomorphic to top P(nu(i)).
template <class K>
std::vector<int> nakayama_permutation(const AlgebraPtr<K>& a) {
  const int n = a->num_vertices();
  std::vector<int> nu(n, -1);
  std::vector<bool> hit(n, false);
  for (int i = 0; i < n; ++i) {
    auto soc = modcat::socle_of(modcat::projective<K>(a, i));
    int total = 0;
    for (int v = 0; v < n; ++v) {
      total += static_cast<int>(soc[v].size());
      if (!soc[v].empty()) nu[i] = v;
    }
    if (total != 1 || hit[nu[i]]) fail(ErrorKind::NotSelfinjective, "socle of P(" + a->vertex_name(i) + ") is not a new simple");
    hit[nu[i]] = true;
  }
  if (!modcat::is_selfinjective<K>(a)) fail(ErrorKind::NotSelfinjective, "projectives are not injective");
  return nu;
}

struct NakayamaCheck {
  bool is_nakayama = false;
  std::optional<std::vector<int>> nu;  // when selfinjective
  std::vector<int> fixed_points;
};

/// Every P(i) uniserial; plus nu and its fixed points when A is selfinjective.
template <class K>
NakayamaCheck nakayama_check(const AlgebraPtr<K>& a) {
  NakayamaCheck r;
  r.is_nakayama = true;
  for (int i = 0; i < a->num_vertices() && r.is_nakayama; ++i) {
    r.is_nakayama = modcat::is_uniserial(modcat::projective<K>(a, i));
  }
  if (modcat::is_selfinjective<K>(a)) {
    r.nu = nakayama_permutation<K>(a);
    for (int i = 0; i < a->num_vertices(); ++i) {
      if ((*r.nu)[i] == i) r.fixed_points.push_back(i);
    }
  }
  return r;
}

}  // namespace arqlab::analysis
