#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "arqlab/error.hpp"

namespace arqlab::artheory {

enum class DynkinFamily { A, D, E };

struct DynkinType {
  DynkinFamily family = DynkinFamily::A;
  int rank = 1;

  std::string str() const {
    const char* f = family == DynkinFamily::A ? "A" : family == DynkinFamily::D ? "D" : "E";
    return f + std::to_string(rank);
  }
  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

inline DynkinType parse_dynkin(const std::string& s) {
  if (s.size() < 2) fail(ErrorKind::InvalidArgument, "bad Dynkin type '" + s + "'");
  DynkinType t;
  switch (s[0]) {
    case 'A': t.family = DynkinFamily::A; break;
    case 'D': t.family = DynkinFamily::D; break;
    case 'E': t.family = DynkinFamily::E; break;
    default: fail(ErrorKind::InvalidArgument, "bad Dynkin type '" + s + "'");
  }
  t.rank = std::stoi(s.substr(1));
  return t;
}

/// Classifies a finite tree (adjacency lists) as a simply-laced Dynkin graph.
inline DynkinType classify_tree(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) fail(ErrorKind::NotDynkin, "empty graph");
  int edges = 0;
  for (const auto& nb : adj) edges += static_cast<int>(nb.size());
  if (edges != 2 * (n - 1)) fail(ErrorKind::NotDynkin, "graph is not a tree");
  std::vector<int> branch;
  for (int v = 0; v < n; ++v) {
    if (adj[v].size() > 3) fail(ErrorKind::NotDynkin, "vertex of degree " + std::to_string(adj[v].size()));
    if (adj[v].size() == 3) branch.push_back(v);
  }
  if (branch.empty()) return {DynkinFamily::A, n};
  if (branch.size() > 1) fail(ErrorKind::NotDynkin, "more than one branch point");
  const int c = branch[0];
  std::vector<int> arms;
  for (int start : adj[c]) {
    int len = 1, prev = c, cur = start;
    while (adj[cur].size() == 2) {
      int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {DynkinFamily::D, n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {DynkinFamily::E, n};
  fail(ErrorKind::NotDynkin, "branch arms " + std::to_string(arms[0]) + "," + std::to_string(arms[1]) + "," +
                                 std::to_string(arms[2]));
}

/// Tree class of a stable translation quiver Z Delta / G given by arrow
/// counts and the (total) inverse translate.
///
/// In Z Delta every vertex has exactly one outgoing arrow towards the orbit
/// of each neighbour in Delta, and the arrow back towards the parent of a
/// walk x -> y is y -> tau^{-1} x. Walking out along arrows while skipping
/// that one unrolls Delta starting from any vertex.
inline std::vector<std::vector<int>> unroll_section(const std::vector<std::vector<int>>& counts,
                                                    const std::vector<int>& tau_inv, int start = 0) {
  const int n = static_cast<int>(counts.size());
  for (const auto& row : counts) {
    for (int c : row) {
      if (c > 1) fail(ErrorKind::NotSimplyLaced, "multiple arrows in the stable quiver");
    }
  }
  std::vector<std::vector<int>> adj;
  struct Item {
    int node, parent_node, parent_index;
  };
  std::vector<Item> stack{{start, -1, -1}};
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    const int idx = static_cast<int>(adj.size());
    if (idx >= n) fail(ErrorKind::NotDynkin, "stable quiver does not unroll to a finite tree");
    adj.emplace_back();
    if (it.parent_index >= 0) {
      adj[idx].push_back(it.parent_index);
      adj[it.parent_index].push_back(idx);
    }
    const int back = it.parent_node >= 0 ? tau_inv[it.parent_node] : -1;
    if (it.parent_node >= 0 && (back < 0 || counts[it.node][back] == 0)) {
      fail(ErrorKind::NotDynkin, "arrows do not form meshes");
    }
    for (int y = n - 1; y >= 0; --y) {
      if (counts[it.node][y] == 0 || y == back) continue;
      stack.push_back({y, it.node, idx});
    }
  }
  return adj;
}

inline DynkinType dynkin_type_of(const std::vector<std::vector<int>>& counts, const std::vector<int>& tau_inv) {
  if (counts.empty()) fail(ErrorKind::NotDynkin, "empty stable quiver");
  return classify_tree(unroll_section(counts, tau_inv, 0));
}

}  // namespace arqlab::artheory
