#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "arqlab/zoo/nakayama.hpp"

namespace arqlab::zoo {

/// Brauer tree: `order[v]` lists the edges at vertex v in their cyclic
/// order; edge k joins edges[k].first and edges[k].second.
struct BrauerTree {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> order;
  int exceptional = 0;
  int multiplicity = 1;

  /// Star with e edges around the exceptional centre 0.
  static BrauerTree star(int e, int m) {
    BrauerTree t;
    t.vertices = e + 1;
    t.order.assign(e + 1, {});
    for (int k = 0; k < e; ++k) {
      t.edges.push_back({0, k + 1});
      t.order[0].push_back(k);
      t.order[k + 1].push_back(k);
    }
    t.exceptional = 0;
    t.multiplicity = m;
    return t;
  }

  /// Line with e edges, vertices 0 - 1 - ... - e.
  static BrauerTree line(int e, int exceptional = 0, int m = 1) {
    BrauerTree t;
    t.vertices = e + 1;
    t.order.assign(e + 1, {});
    for (int k = 0; k < e; ++k) {
      t.edges.push_back({k, k + 1});
      t.order[k].push_back(k);
      t.order[k + 1].push_back(k);
    }
    t.exceptional = exceptional;
    t.multiplicity = m;
    return t;
  }

  void validate() const {
    const int e = static_cast<int>(edges.size());
    if (e < 1) fail(ErrorKind::InvalidArgument, "Brauer tree needs an edge");
    if (vertices != e + 1) fail(ErrorKind::InvalidArgument, "a tree with " + std::to_string(e) + " edges has " + std::to_string(e + 1) + " vertices");
    if (static_cast<int>(order.size()) != vertices) fail(ErrorKind::InvalidArgument, "need a cyclic order at every vertex");
    if (exceptional < 0 || exceptional >= vertices) fail(ErrorKind::InvalidArgument, "exceptional vertex out of range");
    if (multiplicity < 1) fail(ErrorKind::InvalidArgument, "multiplicity must be positive");
    std::vector<int> seen(e, 0);
    for (int v = 0; v < vertices; ++v) {
      for (int k : order[v]) {
        if (k < 0 || k >= e || (edges[k].first != v && edges[k].second != v)) {
          fail(ErrorKind::InvalidArgument, "cyclic order at vertex " + std::to_string(v) + " lists a foreign edge");
        }
        ++seen[k];
      }
    }
    for (int k = 0; k < e; ++k) {
      if (seen[k] != 2) fail(ErrorKind::InvalidArgument, "edge " + std::to_string(k) + " must appear at both ends");
    }
    // connected with e = v - 1 edges means a tree
    std::vector<int> parent(vertices);
    for (int v = 0; v < vertices; ++v) parent[v] = v;
    auto root = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [a, b] : edges) {
      if (root(a) == root(b)) fail(ErrorKind::InvalidArgument, "Brauer graph has a cycle");
      parent[root(a)] = root(b);
    }
  }
};

/// Brauer tree algebra: one vertex per edge, an oriented cycle around every
/// tree vertex following its cyclic order, and the usual special biserial
/// relations (arrows from different cycles compose to zero; the two cycle
/// powers at an edge agree; a cycle power followed by one more arrow is
/// zero). Vertices of valency one and multiplicity one carry no loop.
template <class K>
AlgebraPtr<K> brauer_tree_algebra(const BrauerTree& t) {
  t.validate();
  const int e = static_cast<int>(t.edges.size());
  auto mult = [&](int v) { return v == t.exceptional ? t.multiplicity : 1; };
  std::vector<bool> has_cycle(t.vertices);
  for (int v = 0; v < t.vertices; ++v) {
    has_cycle[v] = t.order[v].size() >= 2 || mult(v) > 1 || (e == 1 && v == t.exceptional);
  }
  Quiver q;
  q.n = e;
  // out[v][k]: arrow leaving edge k inside the cycle of v; in[v][k]: entering
  std::vector<std::vector<int>> out(t.vertices, std::vector<int>(e, -1)), in(t.vertices, std::vector<int>(e, -1));
  for (int v = 0; v < t.vertices; ++v) {
    if (!has_cycle[v]) continue;
    const auto& ord = t.order[v];
    for (std::size_t i = 0; i < ord.size(); ++i) {
      int from = ord[i], to = ord[(i + 1) % ord.size()];
      int idx = static_cast<int>(q.arrows.size());
      q.arrows.push_back({"c" + std::to_string(v + 1) + "_" + std::to_string(i + 1), from, to});
      out[v][from] = idx;
      in[v][to] = idx;
    }
  }
  auto cycle_power = [&](int v, int k) {
    // path around v starting and ending at edge k, repeated mult(v) times
    std::vector<int> path;
    const auto& ord = t.order[v];
    std::size_t start = std::find(ord.begin(), ord.end(), k) - ord.begin();
    for (int r = 0; r < mult(v); ++r) {
      for (std::size_t i = 0; i < ord.size(); ++i) path.push_back(out[v][ord[(start + i) % ord.size()]]);
    }
    return path;
  };
  std::vector<Relation<K>> rels;
  for (int k = 0; k < e; ++k) {
    auto [u, w] = t.edges[k];
    for (auto [x, y] : {std::pair{u, w}, std::pair{w, u}}) {
      if (in[x][k] >= 0 && out[y][k] >= 0) rels.push_back({{{K(1), {in[x][k], out[y][k]}}}});
    }
    for (int v : {u, w}) {
      if (!has_cycle[v]) continue;
      auto p = cycle_power(v, k);
      p.push_back(out[v][k]);
      rels.push_back({{{K(1), p}}});
    }
    if (has_cycle[u] && has_cycle[w]) rels.push_back({{{K(1), cycle_power(u, k)}, {K(-1), cycle_power(w, k)}}});
  }
  std::string name = "Brauer(" + std::to_string(e) + " edges, m=" + std::to_string(t.multiplicity) + ")";
  return algcore::bound_quiver_algebra_auto<K>(q, rels, name);
}

}  // namespace arqlab::zoo
