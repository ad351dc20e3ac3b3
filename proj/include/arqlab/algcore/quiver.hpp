#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arqlab/error.hpp"

namespace arqlab::algcore {

struct Arrow {
  std::string name;
  int src = 0;  // 0-based vertex index
  int tgt = 0;
};

/// Finite quiver with vertices 0..n-1 (printed 1..n unless named).
struct Quiver {
  int n = 0;
  std::vector<Arrow> arrows;
  std::vector<std::string> vertex_names;

  std::string vertex_name(int v) const {
    if (v < static_cast<int>(vertex_names.size()) && !vertex_names[v].empty()) return vertex_names[v];
    return std::to_string(v + 1);
  }

  int arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      if (arrows[i].name == name) return static_cast<int>(i);
    }
    return -1;
  }

  void validate() const {
    std::map<std::string, int> seen;
    for (const auto& a : arrows) {
      if (a.src < 0 || a.src >= n || a.tgt < 0 || a.tgt >= n) {
        fail(ErrorKind::InvalidArgument, "arrow " + a.name + " has an endpoint out of range");
      }
      if (seen[a.name]++) fail(ErrorKind::InvalidArgument, "duplicate arrow name " + a.name);
    }
  }

  Quiver reversed() const {
    Quiver q = *this;
    for (auto& a : q.arrows) std::swap(a.src, a.tgt);
    return q;
  }
};

/// Path in a quiver: sequence of arrow indices composed left to right.
/// A path of length zero is the trivial path at `src`.
struct Path {
  int src = 0;
  int tgt = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }

  friend bool operator==(const Path&, const Path&) = default;
};

inline std::string path_label(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e" + q.vertex_name(p.src);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += "*";
    s += q.arrows[p.arrows[i]].name;
  }
  return s;
}

/// Linear combination of paths sharing one source and one target.
template <class K>
struct Relation {
  std::vector<std::pair<K, std::vector<int>>> terms;

  int max_length() const {
    int m = 0;
    for (const auto& t : terms) m = std::max(m, static_cast<int>(t.second.size()));
    return m;
  }
  int min_length() const {
    int m = 1 << 30;
    for (const auto& t : terms) m = std::min(m, static_cast<int>(t.second.size()));
    return m;
  }
};

/// Checks that every term is a path of length at least two and that all terms
/// share their endpoints; returns the common (source, target).
template <class K>
std::pair<int, int> relation_endpoints(const Quiver& q, const Relation<K>& r) {
  if (r.terms.empty()) fail(ErrorKind::MalformedRelation, "empty relation");
  int s = -1, t = -1;
  for (const auto& [c, path] : r.terms) {
    if (path.size() < 2) fail(ErrorKind::MalformedRelation, "relation term of length < 2");
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (path[i] < 0 || path[i] >= static_cast<int>(q.arrows.size())) {
        fail(ErrorKind::MalformedRelation, "unknown arrow in relation");
      }
      if (i + 1 < path.size() && q.arrows[path[i]].tgt != q.arrows[path[i + 1]].src) {
        fail(ErrorKind::MalformedRelation, "non-composable arrows " + q.arrows[path[i]].name + "*" +
                                               q.arrows[path[i + 1]].name);
      }
    }
    int ps = q.arrows[path.front()].src, pt = q.arrows[path.back()].tgt;
    if (s == -1) {
      s = ps;
      t = pt;
    } else if (s != ps || t != pt) {
      fail(ErrorKind::MalformedRelation, "relation mixes paths with different endpoints");
    }
  }
  return {s, t};
}

}  // namespace arqlab::algcore
