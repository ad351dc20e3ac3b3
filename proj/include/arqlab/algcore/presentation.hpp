#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "arqlab/algcore/bound_quiver.hpp"

namespace arqlab::algcore {

/// Quiver and minimal relations for an algebra given by structure constants.
/// Arrows are the radical generators; relations span the kernel of the
/// evaluation of paths of length >= 2, chosen greedily by increasing length
/// so that none lies in the ideal generated by the earlier ones.
///
/// The stored presentation is returned unchanged when the algebra has one.
template <class K>
Presentation<K> extract_presentation(const Algebra<K>& a) {
  if (a.presentation()) return *a.presentation();
  const auto& rd = a.radical_data();
  Presentation<K> out;
  out.quiver.n = a.num_vertices();
  out.quiver.vertex_names = a.vertex_names();
  for (const auto& g : rd.generators) out.quiver.arrows.push_back({g.name, g.src, g.tgt});
  const int L = std::max(2, rd.loewy_length);
  PathTable table(out.quiver, L);
  const std::size_t np = table.size();

  // Value of every path in A.
  std::vector<Vec<K>> value(np);
  for (std::size_t i = 0; i < np; ++i) {
    const Path& p = table[i];
    if (p.arrows.empty()) {
      value[i] = a.unit(a.idempotent(p.src));
      continue;
    }
    std::vector<int> prefix(p.arrows.begin(), p.arrows.end() - 1);
    int pre = table.find(p.src, prefix);
    value[i] = a.multiply(value[pre], rd.generators[p.arrows.back()].element);
  }

  // Kernel of evaluation, endpoint pair by endpoint pair.
  std::vector<typename TruncatedIdeal<K>::Row> candidates;
  const int n = a.num_vertices();
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      std::vector<int> cols;
      for (std::size_t i = 0; i < np; ++i) {
        if (table[i].src == s && table[i].tgt == t && table[i].length() >= 2) cols.push_back(static_cast<int>(i));
      }
      if (cols.empty()) continue;
      const auto& blk = a.block(s, t);
      Mat<K> ev(blk.size(), cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c) {
        for (std::size_t r = 0; r < blk.size(); ++r) ev(r, c) = value[cols[c]][blk[r]];
      }
      TruncatedIdeal<K> echelon;
      for (const auto& kv : exactla::kernel(ev)) {
        typename TruncatedIdeal<K>::Row row;
        for (std::size_t c = 0; c < cols.size(); ++c) {
          if (!kv[c].is_zero()) row[cols[c]] = kv[c];
        }
        echelon.insert(row);
      }
      for (auto row : echelon.rows()) candidates.push_back(std::move(row));
    }
  }
  auto lead_len = [&](const typename TruncatedIdeal<K>::Row& r) { return table[r.rbegin()->first].length(); };
  std::stable_sort(candidates.begin(), candidates.end(), [&](const auto& x, const auto& y) {
    if (lead_len(x) != lead_len(y)) return lead_len(x) < lead_len(y);
    return x.rbegin()->first < y.rbegin()->first;
  });

  std::vector<std::vector<int>> by_tgt(n), by_src(n);
  for (std::size_t i = 0; i < np; ++i) {
    by_tgt[table[i].tgt].push_back(static_cast<int>(i));
    by_src[table[i].src].push_back(static_cast<int>(i));
  }
  TruncatedIdeal<K> closure;
  for (auto& cand : candidates) {
    auto probe = cand;
    closure.reduce(probe);
    if (probe.empty()) continue;
    const int s = table[cand.begin()->first].src, t = table[cand.begin()->first].tgt;
    int minlen = L;
    Relation<K> rel;
    for (auto it = cand.rbegin(); it != cand.rend(); ++it) {
      rel.terms.emplace_back(it->second, table[it->first].arrows);
      minlen = std::min(minlen, table[it->first].length());
    }
    for (int u : by_tgt[s]) {
      for (int v : by_src[t]) {
        if (table[u].length() + table[v].length() + minlen > L) continue;
        typename TruncatedIdeal<K>::Row row;
        for (const auto& [k, c] : cand) {
          int uk = table.concat(u, k);
          if (uk < 0) continue;
          int ukv = table.concat(uk, v);
          if (ukv < 0) continue;
          K& slot = row[ukv];
          slot += c;
          if (slot.is_zero()) row.erase(ukv);
        }
        if (!row.empty()) closure.insert(std::move(row));
      }
    }
    out.relations.push_back(std::move(rel));
  }
  out.length_bound = L;
  out.explicit_bound = false;
  for (std::size_t i = 0; i < out.quiver.arrows.size(); ++i) out.arrow_element.push_back(-1);

  auto rebuilt = bound_quiver_algebra<K>(out.quiver, out.relations, L);
  if (rebuilt->dim() != a.dim()) {
    fail(ErrorKind::InternalInconsistency, "extracted presentation has dimension " + std::to_string(rebuilt->dim()) +
                                               " instead of " + std::to_string(a.dim()));
  }
  return out;
}

}  // namespace arqlab::algcore
