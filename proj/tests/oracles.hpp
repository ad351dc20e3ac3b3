#pragma once

// Independent checks used by the test suites and the acceptance gate. They
// recompute things the library derives by other routes.

#include <map>
#include <vector>

#include "arqlab/algcore.hpp"
#include "arqlab/artheory.hpp"
#include "arqlab/modcat.hpp"

namespace arqlab::oracle {

using algcore::Quiver;
using algcore::Relation;
using exactla::Rational;
using exactla::Subspace;
using exactla::Vec;

// Homogeneous relations: the quotient is graded by path length, so its
// dimension in degree l is #paths(l) - dim span{u r v : |u r v| = l}.
// Counts degrees until one vanishes.
inline int graded_dimension_oracle(const Quiver& q, const std::vector<Relation<Rational>>& rels) {
  std::vector<std::vector<std::vector<int>>> by_len(1);
  for (int v = 0; v < q.n; ++v) by_len[0].push_back({-1 - v});
  int total = q.n;
  auto src = [&](const std::vector<int>& p) { return p[0] < 0 ? -1 - p[0] : q.arrows[p[0]].src; };
  auto tgt = [&](const std::vector<int>& p) { return p.back() < 0 ? -1 - p.back() : q.arrows[p.back()].tgt; };
  for (int len = 1;; ++len) {
    std::vector<std::vector<int>> cur;
    for (const auto& p : by_len[len - 1]) {
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].src != tgt(p)) continue;
        std::vector<int> np = p[0] < 0 ? std::vector<int>{} : p;
        np.push_back(static_cast<int>(a));
        cur.push_back(np);
      }
    }
    by_len.push_back(cur);
    std::map<std::vector<int>, std::size_t> idx;
    for (std::size_t i = 0; i < cur.size(); ++i) idx[cur[i]] = i;
    Subspace<Rational> ideal(cur.size());
    for (const auto& r : rels) {
      const int rl = static_cast<int>(r.terms[0].second.size());
      if (rl > len) continue;
      int rs = q.arrows[r.terms[0].second.front()].src, rt = q.arrows[r.terms[0].second.back()].tgt;
      for (int ul = 0; ul <= len - rl; ++ul) {
        for (const auto& u : by_len[ul]) {
          if (tgt(u) != rs) continue;
          for (const auto& v : by_len[len - rl - ul]) {
            if (src(v) != rt) continue;
            Vec<Rational> w(cur.size(), Rational(0));
            for (const auto& [c, p] : r.terms) {
              std::vector<int> full;
              if (u[0] >= 0) full = u;
              full.insert(full.end(), p.begin(), p.end());
              if (v[0] >= 0) full.insert(full.end(), v.begin(), v.end());
              w[idx.at(full)] += c;
            }
            ideal.add(w);
          }
        }
      }
    }
    int d = static_cast<int>(cur.size() - ideal.dim());
    if (d == 0) return total;
    total += d;
  }
}


// Short cycle from raw Hom dimensions over the knitted indecomposables:
// Hom(X, Y) != 0 != Hom(Y, X) for distinct nodes, or rad End(X) != 0. No
// Hom table, no AR structure.
template <class K>
bool brute_force_cycle(const artheory::ARQuiver<K>& q, std::pair<int, int>* witness = nullptr) {
  const int n = static_cast<int>(q.size());
  for (int x = 0; x < n; ++x) {
    const auto& mx = q.nodes[x].module;
    if (!modcat::end_radical(mx).basis.empty()) {
      if (witness) *witness = {x, x};
      return true;
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const auto& mx = q.nodes[x].module;
      const auto& my = q.nodes[y].module;
      if (modcat::hom(mx, my).dim() > 0 && modcat::hom(my, mx).dim() > 0) {
        if (witness) *witness = {x, y};
        return true;
      }
    }
  }
  return false;
}

}  // namespace arqlab::oracle
