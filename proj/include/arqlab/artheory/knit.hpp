#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "arqlab/artheory/ar_sequence.hpp"
#include "arqlab/artheory/dynkin.hpp"

namespace arqlab::artheory {

template <class K>
struct ARNode {
  Module<K> module;
  bool projective = false;
  bool injective = false;
  int projective_vertex = -1;  // P(v) when projective
  int injective_vertex = -1;   // I(v) when injective
  int simple_vertex = -1;      // S(v) when simple
  int tau = -1;                // index of tau M, or -1 for projectives
  int tau_inv = -1;            // index of tau^{-1} M, or -1 for injectives
  std::string label;
};

struct ARArrow {
  int source = 0;
  int target = 0;
  int multiplicity = 1;
  int valuation_source = 1;
  int valuation_target = 1;
};

/// Radical maps between the nodes: rad[i][j] spans rad(X_i, X_j).
template <class K>
struct HomTable {
  std::vector<std::vector<std::vector<HomMap<K>>>> rad;
  std::vector<std::vector<int>> hom_dim;
  std::vector<std::vector<int>> rad2_dim;

  int irreducible(int i, int j) const { return static_cast<int>(rad[i][j].size()) - rad2_dim[i][j]; }
};

template <class K>
struct ARQuiver {
  typename Algebra<K>::Ptr algebra;
  std::vector<ARNode<K>> nodes;
  std::vector<ARArrow> arrows;  // sorted by (source, target)
  std::shared_ptr<const HomTable<K>> homs;

  std::size_t size() const { return nodes.size(); }

  int arrow_count(int i, int j) const {
    for (const auto& a : arrows) {
      if (a.source == i && a.target == j) return a.multiplicity;
    }
    return 0;
  }
  std::vector<std::pair<int, int>> successors(int i) const {
    std::vector<std::pair<int, int>> out;
    for (const auto& a : arrows) {
      if (a.source == i) out.push_back({a.target, a.multiplicity});
    }
    return out;
  }
  std::vector<std::pair<int, int>> predecessors(int i) const {
    std::vector<std::pair<int, int>> out;
    for (const auto& a : arrows) {
      if (a.target == i) out.push_back({a.source, a.multiplicity});
    }
    return out;
  }
  int count_projective() const {
    int c = 0;
    for (const auto& n : nodes) c += n.projective;
    return c;
  }
  /// Index of the node isomorphic to m, or -1.
  int find(const Module<K>& m) const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].module.dims() == m.dims() && modcat::find_iso(nodes[i].module, m)) return static_cast<int>(i);
    }
    return -1;
  }
  int projective_node(int v) const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].projective_vertex == v) return static_cast<int>(i);
    }
    return -1;
  }
  int injective_node(int v) const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].injective_vertex == v) return static_cast<int>(i);
    }
    return -1;
  }
  int simple_node(int v) const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].simple_vertex == v) return static_cast<int>(i);
    }
    return -1;
  }
};

struct KnitOptions {
  int node_budget = 512;
  int dim_budget = 64;
  /// Arrow multiplicities from dim rad(X,Y) - dim rad^2(X,Y); when false the
  /// almost split sequences alone determine them.
  bool hom_table = true;
};

namespace detail {

template <class K>
std::string node_label(const ARNode<K>& n, const Algebra<K>& a) {
  if (n.projective_vertex >= 0) return "P(" + a.vertex_name(n.projective_vertex) + ")";
  if (n.injective_vertex >= 0) return "I(" + a.vertex_name(n.injective_vertex) + ")";
  if (n.simple_vertex >= 0) return "S(" + a.vertex_name(n.simple_vertex) + ")";
  return n.module.dimvec_string();
}

/// Flattened composite g o f.
template <class K>
Vec<K> composite_vector(const HomMap<K>& g, const HomMap<K>& f) {
  return compose(g, f).flatten();
}

}  // namespace detail

/// Hom table over the nodes with dim rad^2 computed as the span of
/// composites through every node.
template <class K>
std::shared_ptr<HomTable<K>> hom_table(const std::vector<Module<K>>& mods) {
  const std::size_t n = mods.size();
  auto t = std::make_shared<HomTable<K>>();
  t->rad.assign(n, std::vector<std::vector<HomMap<K>>>(n));
  t->hom_dim.assign(n, std::vector<int>(n, 0));
  t->rad2_dim.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        auto er = modcat::end_radical(mods[i]);
        t->hom_dim[i][i] = static_cast<int>(er.end.dim());
        t->rad[i][i] = std::move(er.basis);
      } else {
        auto h = modcat::hom(mods[i], mods[j]);
        t->hom_dim[i][j] = static_cast<int>(h.dim());
        t->rad[i][j] = std::move(h.basis);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& target = t->rad[i][j];
      if (target.empty()) continue;
      const std::size_t len = target[0].flatten().size();
      exactla::Subspace<K> span(len);
      for (std::size_t k = 0; k < n && span.dim() < target.size(); ++k) {
        for (const auto& f : t->rad[i][k]) {
          for (const auto& g : t->rad[k][j]) {
            span.add(detail::composite_vector(g, f));
            if (span.dim() == target.size()) break;
          }
          if (span.dim() == target.size()) break;
        }
      }
      t->rad2_dim[i][j] = static_cast<int>(span.dim());
    }
  }
  return t;
}

/// Mesh consistency and length additivity: for each non-projective z the
/// predecessors of z are the successors of tau z, count for count, and
/// dim z + dim tau z is the weighted sum of their dimensions.
template <class K>
void check_meshes(const ARQuiver<K>& q) {
  for (std::size_t z = 0; z < q.size(); ++z) {
    const auto& node = q.nodes[z];
    if (node.projective) continue;
    const int x = node.tau;
    if (x < 0) fail(ErrorKind::InternalInconsistency, "non-projective node " + node.label + " has no translate");
    auto in = q.predecessors(static_cast<int>(z));
    auto out = q.successors(x);
    std::sort(in.begin(), in.end());
    std::sort(out.begin(), out.end());
    if (in != out) fail(ErrorKind::InternalInconsistency, "mesh ending at " + node.label + " is inconsistent");
    int mid = 0;
    for (const auto& [k, m] : in) mid += m * q.nodes[k].module.total();
    if (mid != node.module.total() + q.nodes[x].module.total()) {
      fail(ErrorKind::InternalInconsistency, "length additivity fails at the mesh ending at " + node.label);
    }
  }
}

/// The Auslander-Reiten quiver by knitting from the projectives: every
/// non-injective node contributes its almost split sequence, every injective
/// node I contributes I/soc I, every projective P contributes rad P.
template <class K>
ARQuiver<K> knit(const typename Algebra<K>::Ptr& a, const KnitOptions& opt = {}) {
  if (opt.node_budget <= 0 || opt.dim_budget <= 0) fail(ErrorKind::InvalidArgument, "budgets must be positive");
  ARQuiver<K> q;
  q.algebra = a;
  std::map<std::pair<int, int>, int> seq_arrows;
  std::map<std::vector<int>, std::vector<int>> buckets;

  auto add = [&](const Module<K>& m) -> int {
    auto& bucket = buckets[m.dims()];
    for (int i : bucket) {
      if (modcat::find_iso(q.nodes[i].module, m)) return i;
    }
    if (static_cast<int>(q.nodes.size()) >= opt.node_budget) {
      fail(ErrorKind::BudgetExceeded, "more than " + std::to_string(opt.node_budget) + " indecomposables");
    }
    if (m.total() > opt.dim_budget) {
      fail(ErrorKind::BudgetExceeded, "indecomposable of dimension " + std::to_string(m.total()) + " exceeds the budget " +
                                          std::to_string(opt.dim_budget));
    }
    ARNode<K> node;
    node.module = m;
    node.projective_vertex = modcat::projective_vertex(m);
    node.injective_vertex = modcat::injective_vertex(m);
    node.simple_vertex = modcat::simple_vertex(m);
    node.projective = node.projective_vertex >= 0;
    node.injective = node.injective_vertex >= 0;
    q.nodes.push_back(std::move(node));
    bucket.push_back(static_cast<int>(q.nodes.size()) - 1);
    return static_cast<int>(q.nodes.size()) - 1;
  };
  auto set_arrow = [&](int s, int t, int m) {
    auto [it, inserted] = seq_arrows.emplace(std::make_pair(s, t), m);
    if (!inserted && it->second != m) {
      fail(ErrorKind::InternalInconsistency, "conflicting arrow multiplicities between knitted nodes");
    }
  };

  const int n = a->num_vertices();
  for (int v = 0; v < n; ++v) add(modcat::projective<K>(a, v));
  for (int v = 0; v < n; ++v) {
    for (const auto& s : modcat::decompose(modcat::radical_module(q.nodes[v].module))) {
      set_arrow(add(s.module), v, s.multiplicity);
    }
  }
  for (std::size_t i = 0; i < q.nodes.size(); ++i) {
    if (!q.nodes[i].injective) {
      auto seq = almost_split_sequence(q.nodes[i].module);
      const int y = add(seq.end);
      q.nodes[i].tau_inv = y;
      q.nodes[y].tau = static_cast<int>(i);
      for (const auto& s : seq.summands) {
        const int k = add(s.module);
        set_arrow(static_cast<int>(i), k, s.multiplicity);
        set_arrow(k, y, s.multiplicity);
      }
    } else {
      for (const auto& s : modcat::decompose(modcat::socle_factor(q.nodes[i].module))) {
        set_arrow(static_cast<int>(i), add(s.module), s.multiplicity);
      }
    }
  }

  // canonical order: by dimension, then dimension vector, then discovery
  std::vector<int> order(q.nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return modcat::detail::module_order(q.nodes[x].module, q.nodes[y].module);
  });
  std::vector<int> where(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) where[order[p]] = static_cast<int>(p);
  std::vector<ARNode<K>> sorted;
  for (int old : order) {
    ARNode<K> node = std::move(q.nodes[old]);
    if (node.tau >= 0) node.tau = where[node.tau];
    if (node.tau_inv >= 0) node.tau_inv = where[node.tau_inv];
    node.label = detail::node_label(node, *a);
    sorted.push_back(std::move(node));
  }
  q.nodes = std::move(sorted);
  std::map<std::pair<int, int>, int> knitted;
  for (const auto& [st, m] : seq_arrows) knitted[{where[st.first], where[st.second]}] = m;

  for (const auto& node : q.nodes) {
    if (node.projective != (node.tau < 0)) fail(ErrorKind::InternalInconsistency, "translate missing for " + node.label);
    if (node.injective != (node.tau_inv < 0)) fail(ErrorKind::InternalInconsistency, "inverse translate missing for " + node.label);
  }

  if (opt.hom_table) {
    std::vector<Module<K>> mods;
    for (const auto& node : q.nodes) mods.push_back(node.module);
    auto table = hom_table(mods);
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = 0; j < q.size(); ++j) {
        const int c = table->irreducible(static_cast<int>(i), static_cast<int>(j));
        auto it = knitted.find({static_cast<int>(i), static_cast<int>(j)});
        const int expected = it == knitted.end() ? 0 : it->second;
        if (c != expected) {
          fail(ErrorKind::InternalInconsistency, "irreducible maps " + q.nodes[i].label + " -> " + q.nodes[j].label + ": " +
                                                     std::to_string(c) + " from Hom tables, " + std::to_string(expected) +
                                                     " from almost split sequences");
        }
        if (c > 0) q.arrows.push_back({static_cast<int>(i), static_cast<int>(j), c, 1, 1});
      }
    }
    q.homs = std::move(table);
  } else {
    for (const auto& [st, m] : knitted) q.arrows.push_back({st.first, st.second, m, 1, 1});
  }
  check_meshes(q);
  return q;
}

/// Stable part of the AR quiver of a selfinjective algebra.
template <class K>
struct StableQuiver {
  std::vector<int> nodes;                         // indices into the full quiver
  std::vector<ARArrow> arrows;                    // local indices
  std::vector<int> tau;                           // local, total
  std::vector<int> tau_inv;                       // local, total
  std::vector<std::vector<int>> orbits;           // local indices x, tau x, tau^2 x, ...

  std::size_t size() const { return nodes.size(); }
  std::vector<std::vector<int>> counts() const {
    std::vector<std::vector<int>> c(nodes.size(), std::vector<int>(nodes.size(), 0));
    for (const auto& a : arrows) c[a.source][a.target] = a.multiplicity;
    return c;
  }
};

template <class K>
StableQuiver<K> stable_part(const ARQuiver<K>& q) {
  for (const auto& node : q.nodes) {
    if (node.projective != node.injective) fail(ErrorKind::NotSelfinjective, node.label + " breaks projective = injective");
  }
  StableQuiver<K> s;
  std::vector<int> local(q.size(), -1);
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q.nodes[i].projective) continue;
    local[i] = static_cast<int>(s.nodes.size());
    s.nodes.push_back(static_cast<int>(i));
  }
  for (const auto& a : q.arrows) {
    if (local[a.source] >= 0 && local[a.target] >= 0) s.arrows.push_back({local[a.source], local[a.target], a.multiplicity, 1, 1});
  }
  for (int g : s.nodes) {
    s.tau.push_back(local[q.nodes[g].tau]);
    s.tau_inv.push_back(local[q.nodes[g].tau_inv]);
  }
  std::vector<bool> seen(s.size(), false);
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (seen[x]) continue;
    std::vector<int> orbit;
    int y = static_cast<int>(x);
    while (!seen[y]) {
      seen[y] = true;
      orbit.push_back(y);
      y = s.tau[y];
      if (y < 0) fail(ErrorKind::InternalInconsistency, "translate leaves the stable part");
    }
    s.orbits.push_back(std::move(orbit));
  }
  return s;
}

/// Connected components of the stable quiver (arrows and translates).
template <class K>
std::vector<std::vector<int>> components(const StableQuiver<K>& s) {
  std::vector<int> parent(s.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](int x, int y) { parent[root(x)] = root(y); };
  for (const auto& a : s.arrows) join(a.source, a.target);
  for (std::size_t x = 0; x < s.size(); ++x) join(static_cast<int>(x), s.tau[x]);
  std::map<int, std::vector<int>> groups;
  for (std::size_t x = 0; x < s.size(); ++x) groups[root(static_cast<int>(x))].push_back(static_cast<int>(x));
  std::vector<std::vector<int>> out;
  for (auto& [r, g] : groups) out.push_back(std::move(g));
  std::sort(out.begin(), out.end());
  return out;
}

/// Tree class of the stable quiver. Several components must share it.
template <class K>
DynkinType dynkin_type_of(const StableQuiver<K>& s) {
  if (s.size() == 0) fail(ErrorKind::NotDynkin, "empty stable quiver");
  const auto counts = s.counts();
  std::optional<DynkinType> type;
  for (const auto& comp : components(s)) {
    auto t = classify_tree(unroll_section(counts, s.tau_inv, comp.front()));
    if (type && !(*type == t)) fail(ErrorKind::NotDynkin, "components of different tree class");
    type = t;
  }
  return *type;
}

}  // namespace arqlab::artheory
