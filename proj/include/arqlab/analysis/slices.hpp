#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "arqlab/analysis/short_cycles.hpp"

namespace arqlab::analysis {

/// Full subquiver of the AR quiver given by node indices (sorted).
struct Slice {
  std::vector<int> nodes;
  std::vector<std::pair<int, int>> arrows;

  bool contains(int x) const { return std::binary_search(nodes.begin(), nodes.end(), x); }
  friend bool operator==(const Slice&, const Slice&) = default;
};

template <class K>
Slice make_slice(const ARQuiver<K>& q, std::vector<int> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  Slice s;
  s.nodes = std::move(nodes);
  for (const auto& a : q.arrows) {
    if (s.contains(a.source) && s.contains(a.target)) {
      for (int k = 0; k < a.multiplicity; ++k) s.arrows.push_back({a.source, a.target});
    }
  }
  return s;
}

/// Number of vertices of the Dynkin tree class of the stable part; the
/// orbit count when the tree class cannot be read off.
template <class K>
int slice_size(const ARQuiver<K>& q) {
  auto st = artheory::stable_part(q);
  try {
    return artheory::dynkin_type_of(st).rank;
  } catch (const Error&) {
    return static_cast<int>(st.orbits.size());
  }
}

/// Empty when `s` is a stable slice; otherwise the first violated condition.
/// Checked: connected, acyclic, projective-free; the two neighbour closure
/// conditions; a tree meeting every tau-orbit with as many nodes as the
/// Dynkin class has vertices.
template <class K>
std::string slice_violation(const ARQuiver<K>& q, const Slice& s, int expected_size = -1) {
  if (s.nodes.empty()) return "empty";
  for (int x : s.nodes) {
    if (q.nodes[x].projective) return "contains the projective " + q.nodes[x].label;
  }
  const int n = static_cast<int>(s.nodes.size());
  auto local = [&](int x) { return static_cast<int>(std::lower_bound(s.nodes.begin(), s.nodes.end(), x) - s.nodes.begin()); };
  std::vector<std::vector<int>> out(n), und(n);
  for (auto [a, b] : s.arrows) {
    out[local(a)].push_back(local(b));
    und[local(a)].push_back(local(b));
    und[local(b)].push_back(local(a));
  }
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : und[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != n) return "not connected";
  if (static_cast<int>(s.arrows.size()) != n - 1) return "underlying graph is not a tree";
  // a tree has no oriented cycles; only loops from multiplicities remain
  for (auto [a, b] : s.arrows) {
    if (a == b) return "has a loop";
  }
  for (int u : s.nodes) {
    for (auto [v, m] : q.predecessors(u)) {
      if (q.nodes[v].projective || s.contains(v)) continue;
      const int w = q.nodes[v].tau_inv;
      if (w < 0 || !s.contains(w)) return "predecessor " + q.nodes[v].label + " of " + q.nodes[u].label + " is outside";
    }
    for (auto [v, m] : q.successors(u)) {
      if (q.nodes[v].projective || s.contains(v)) continue;
      const int w = q.nodes[v].tau;
      if (w < 0 || !s.contains(w)) return "successor " + q.nodes[v].label + " of " + q.nodes[u].label + " is outside";
    }
  }
  auto st = artheory::stable_part(q);
  for (const auto& orbit : st.orbits) {
    bool met = false;
    for (int x : orbit) met = met || s.contains(st.nodes[x]);
    if (!met) return "misses a tau-orbit";
  }
  if (expected_size >= 0 && n != expected_size) return "has " + std::to_string(n) + " nodes, expected " + std::to_string(expected_size);
  return "";
}

template <class K>
bool is_stable_slice(const ARQuiver<K>& q, const Slice& s) {
  return slice_violation(q, s, slice_size(q)).empty();
}

/// Endpoints of sectional paths in the stable part starting at y: paths
/// x_0 -> x_1 -> ... with x_{i+1} != tau^{-1} x_{i-1}, all non-projective.
template <class K>
std::vector<int> sectional_targets(const ARQuiver<K>& q, int y, bool include_trivial) {
  const int bound = static_cast<int>(q.size());
  std::set<int> out;
  if (include_trivial) out.insert(y);
  std::function<void(int, int, int)> walk = [&](int prev, int cur, int len) {
    if (len >= bound) return;
    for (auto [v, m] : q.successors(cur)) {
      if (q.nodes[v].projective) continue;
      if (prev >= 0 && v == q.nodes[prev].tau_inv) continue;
      out.insert(v);
      walk(cur, v, len + 1);
    }
  };
  walk(-1, y, 0);
  return {out.begin(), out.end()};
}

enum class SliceMode { All, First };

/// Stable slices by backtracking from the nodes of one tau-orbit (taken in
/// increasing tau-power): every non-projective neighbour of a chosen node,
/// or its translate on the far side, must be chosen too.
template <class K>
std::vector<Slice> stable_slices(const ARQuiver<K>& q, SliceMode mode = SliceMode::All) {
  auto st = artheory::stable_part(q);
  std::vector<Slice> found;
  if (st.size() == 0) return found;
  const int target = slice_size(q);
  std::set<std::vector<int>> seen;
  std::vector<int> seed_orbit = st.orbits.front();
  bool stop = false;
  std::vector<int> chosen;
  std::vector<bool> in(q.size(), false);
  std::function<void()> extend = [&]() {
    if (stop) return;
    // first unsatisfied neighbour condition
    int need_a = -1, need_b = -1;
    for (std::size_t k = 0; k < chosen.size() && need_a < 0; ++k) {
      const int u = chosen[k];
      for (auto [v, m] : q.predecessors(u)) {
        if (q.nodes[v].projective || in[v]) continue;
        const int w = q.nodes[v].tau_inv;
        if (w >= 0 && in[w]) continue;
        need_a = v;
        need_b = w;
        break;
      }
      if (need_a >= 0) break;
      for (auto [v, m] : q.successors(u)) {
        if (q.nodes[v].projective || in[v]) continue;
        const int w = q.nodes[v].tau;
        if (w >= 0 && in[w]) continue;
        need_a = v;
        need_b = w;
        break;
      }
    }
    if (need_a < 0) {
      Slice s = make_slice(q, chosen);
      if (seen.insert(s.nodes).second && slice_violation(q, s, target).empty()) {
        found.push_back(std::move(s));
        if (mode == SliceMode::First) stop = true;
      }
      return;
    }
    if (static_cast<int>(chosen.size()) >= target) return;
    for (int pick : {need_a, need_b}) {
      if (pick < 0 || q.nodes[pick].projective || in[pick]) continue;
      chosen.push_back(pick);
      in[pick] = true;
      extend();
      in[pick] = false;
      chosen.pop_back();
      if (stop) return;
    }
  };
  for (int x : seed_orbit) {
    const int g = st.nodes[x];
    chosen = {g};
    in.assign(q.size(), false);
    in[g] = true;
    extend();
    if (stop) break;
  }
  return found;
}

/// The slice built from an indecomposable projective P: tau^{-1}(P/soc P)
/// together with the ends of nontrivial sectional paths from P/soc P.
template <class K>
std::optional<Slice> slice_from_projective(const ARQuiver<K>& q, int vertex) {
  auto p = modcat::projective<K>(q.algebra, vertex);
  auto f = modcat::socle_factor(p);
  if (f.is_zero()) return std::nullopt;
  const int y = q.find(f);
  if (y < 0 || q.nodes[y].projective || q.nodes[y].tau_inv < 0) return std::nullopt;
  auto nodes = sectional_targets(q, y, false);
  nodes.push_back(q.nodes[y].tau_inv);
  Slice s = make_slice(q, nodes);
  if (!slice_violation(q, s, slice_size(q)).empty()) return std::nullopt;
  return s;
}

/// rad^{n-i+1} P for i = 1..n, n + 1 the length of P: the slice through
/// soc P and rad P used for Nakayama algebras.
template <class K>
std::optional<Slice> radical_series_slice(const ARQuiver<K>& q, int vertex) {
  auto p = modcat::projective<K>(q.algebra, vertex);
  std::vector<int> nodes;
  auto cur = modcat::radical_module(p);
  while (!cur.is_zero()) {
    const int x = q.find(cur);
    if (x < 0) return std::nullopt;
    nodes.push_back(x);
    cur = modcat::radical_module(cur);
  }
  Slice s = make_slice(q, nodes);
  if (!slice_violation(q, s, slice_size(q)).empty()) return std::nullopt;
  return s;
}

struct SliceProps {
  bool semiregular = false;
  bool double_tau_rigid = false;
};

/// Nodes of Q/soc Q and of rad P for the indecomposable projectives.
struct ProjectiveMarkers {
  std::vector<int> socle_factors;
  std::vector<int> radicals;
};

template <class K>
ProjectiveMarkers projective_markers(const ARQuiver<K>& q) {
  ProjectiveMarkers m;
  for (int v = 0; v < q.algebra->num_vertices(); ++v) {
    auto p = modcat::projective<K>(q.algebra, v);
    m.socle_factors.push_back(q.find(modcat::socle_factor(p)));
    m.radicals.push_back(q.find(modcat::radical_module(p)));
  }
  return m;
}

/// Semiregular: not both some Q/soc Q and some rad P on the slice.
/// Double tau-rigid: Hom(X, tau Y) = 0 = Hom(tau^{-1} X, Y) on the slice.
template <class K>
SliceProps slice_props(const ARQuiver<K>& q, const Slice& s, const ProjectiveMarkers* markers = nullptr) {
  ProjectiveMarkers local;
  if (!markers) {
    local = projective_markers(q);
    markers = &local;
  }
  bool has_factor = false, has_radical = false;
  for (int f : markers->socle_factors) has_factor = has_factor || (f >= 0 && s.contains(f));
  for (int r : markers->radicals) has_radical = has_radical || (r >= 0 && s.contains(r));
  SliceProps out;
  out.semiregular = !(has_factor && has_radical);
  std::shared_ptr<const artheory::HomTable<K>> table = q.homs;
  if (!table) fail(ErrorKind::InvalidArgument, "slice_props needs an AR quiver with Hom tables");
  out.double_tau_rigid = true;
  for (int x : s.nodes) {
    for (int y : s.nodes) {
      const int ty = q.nodes[y].tau;
      const int tx = q.nodes[x].tau_inv;
      if (ty >= 0 && table->hom_dim[x][ty] != 0) out.double_tau_rigid = false;
      if (tx >= 0 && table->hom_dim[tx][y] != 0) out.double_tau_rigid = false;
    }
  }
  return out;
}

}  // namespace arqlab::analysis
