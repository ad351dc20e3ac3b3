#pragma once

#include <string>
#include <vector>

#include "arqlab/analysis/ideals.hpp"
#include "arqlab/artheory.hpp"

namespace arqlab::analysis {

using artheory::ARQuiver;

/// X -> Y -> X with both maps nonzero non-isomorphisms. X = Y means a
/// nonzero radical endomorphism.
struct ShortCycle {
  int x = 0;
  int y = 0;
  int rad_xy = 0;  // dim rad(X, Y)
  int rad_yx = 0;
};

struct ShortCycleReport {
  bool has_cycle = false;
  std::vector<ShortCycle> witnesses;  // the first one, or all on request
  std::size_t pairs_checked = 0;
};

/// Pairs in search order: pairs of projectives first (by vertex), then all
/// remaining pairs x <= y in node order.
template <class K>
std::vector<std::pair<int, int>> cycle_search_order(const ARQuiver<K>& q) {
  std::vector<int> proj;
  for (int v = 0; v < q.algebra->num_vertices(); ++v) {
    int p = q.projective_node(v);
    if (p >= 0) proj.push_back(p);
  }
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < proj.size(); ++i) {
    for (std::size_t j = i; j < proj.size(); ++j) out.push_back({proj[i], proj[j]});
  }
  const int n = static_cast<int>(q.size());
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      if (q.nodes[x].projective && q.nodes[y].projective) continue;
      out.push_back({x, y});
    }
  }
  return out;
}

template <class K>
ShortCycleReport short_cycles(const ARQuiver<K>& q, bool all_witnesses = false) {
  std::shared_ptr<const artheory::HomTable<K>> table = q.homs;
  if (!table) {
    std::vector<Module<K>> mods;
    for (const auto& n : q.nodes) mods.push_back(n.module);
    table = artheory::hom_table(mods);
  }
  ShortCycleReport r;
  for (auto [x, y] : cycle_search_order(q)) {
    ++r.pairs_checked;
    const int xy = static_cast<int>(table->rad[x][y].size());
    const int yx = static_cast<int>(table->rad[y][x].size());
    if (xy > 0 && yx > 0) {
      r.has_cycle = true;
      r.witnesses.push_back({x, y, xy, yx});
      if (!all_witnesses) break;
    }
  }
  return r;
}

template <class K>
ShortCycleReport short_cycles(const AlgebraPtr<K>& a, const artheory::KnitOptions& opt = {}, bool all_witnesses = false) {
  return short_cycles(artheory::knit<K>(a, opt), all_witnesses);
}

/// The basis map of rad(X, Y) of smallest rank, with its image as a
/// submodule of Y.
template <class K>
struct SmallestMap {
  modcat::HomMap<K> map;
  std::vector<int> image_dims;
  bool image_simple = false;
  bool image_is_socle = false;  // image equals soc Y
};

template <class K>
SmallestMap<K> smallest_map(const ARQuiver<K>& q, int x, int y) {
  const auto& maps = q.homs->rad[x][y];
  if (maps.empty()) fail(ErrorKind::InvalidArgument, "no radical maps between the given nodes");
  SmallestMap<K> best;
  int best_rank = -1;
  for (const auto& f : maps) {
    auto img = modcat::image_of(f);
    int rank = 0;
    for (const auto& v : img) rank += static_cast<int>(v.size());
    if (best_rank < 0 || rank < best_rank) {
      best_rank = rank;
      best.map = f;
      best.image_dims.clear();
      for (const auto& v : img) best.image_dims.push_back(static_cast<int>(v.size()));
    }
  }
  best.image_simple = best_rank == 1;
  auto soc = modcat::socle_of(q.nodes[y].module);
  auto img = modcat::image_of(best.map);
  best.image_is_socle = true;
  for (std::size_t v = 0; v < soc.size(); ++v) {
    if (soc[v].size() != img[v].size()) best.image_is_socle = false;
    Subspace<K> s(q.nodes[y].module.dim(static_cast<int>(v)), soc[v]);
    for (const auto& u : img[v]) best.image_is_socle = best.image_is_socle && s.contains(u);
  }
  return best;
}

}  // namespace arqlab::analysis
