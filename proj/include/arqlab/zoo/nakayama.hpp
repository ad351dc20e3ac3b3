#pragma once

#include <string>
#include <vector>

#include "arqlab/algcore.hpp"

namespace arqlab::zoo {

using algcore::Algebra;
using algcore::AlgebraPtr;
using algcore::Quiver;
using algcore::Relation;

/// N(m, l): cyclic quiver 1 -> 2 -> ... -> m -> 1 modulo all paths of
/// length l.
template <class K>
AlgebraPtr<K> nakayama_selfinjective(int m, int l) {
  if (m < 1 || l < 2) fail(ErrorKind::InvalidArgument, "nakayama_selfinjective needs m >= 1 and l >= 2");
  Quiver q;
  q.n = m;
  for (int i = 0; i < m; ++i) q.arrows.push_back({"a" + std::to_string(i + 1), i, (i + 1) % m});
  std::vector<Relation<K>> rels;
  for (int i = 0; i < m; ++i) {
    std::vector<int> path;
    for (int k = 0; k < l; ++k) path.push_back((i + k) % m);
    rels.push_back({{{K(1), path}}});
  }
  return algcore::bound_quiver_algebra<K>(q, rels, l, "N(" + std::to_string(m) + "," + std::to_string(l) + ")");
}

/// Path algebra of the linear quiver 1 <- 2 <- ... <- n.
template <class K>
AlgebraPtr<K> hereditary_nakayama(int n) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "hereditary_nakayama needs n >= 1");
  Quiver q;
  q.n = n;
  for (int i = 1; i < n; ++i) q.arrows.push_back({"a" + std::to_string(i), i, i - 1});
  return algcore::bound_quiver_algebra<K>(q, {}, std::max(2, n), "A" + std::to_string(n));
}

/// Path algebra of an acyclic quiver given by (source, target) pairs,
/// 0-based.
template <class K>
AlgebraPtr<K> path_algebra(int n, const std::vector<std::pair<int, int>>& arrows, const std::string& name = "") {
  Quiver q;
  q.n = n;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    q.arrows.push_back({std::string(1, static_cast<char>('a' + i % 26)) + (i >= 26 ? std::to_string(i / 26) : ""),
                        arrows[i].first, arrows[i].second});
  }
  return algcore::bound_quiver_algebra_auto<K>(q, {}, name);
}

/// 1 <- 2 -> 3
template <class K>
AlgebraPtr<K> alternating_a3() {
  return path_algebra<K>(3, {{1, 0}, {1, 2}}, "A3alt");
}

/// Star with three arms pointing into the centre 4.
template <class K>
AlgebraPtr<K> d4_star() {
  return path_algebra<K>(4, {{0, 3}, {1, 3}, {2, 3}}, "D4");
}

}  // namespace arqlab::zoo
