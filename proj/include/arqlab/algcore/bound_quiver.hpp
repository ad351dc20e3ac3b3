#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arqlab/algcore/algebra.hpp"
#include "arqlab/algcore/quiver.hpp"

namespace arqlab::algcore {

/// All paths of length <= max_len, indexed in degree-then-lexicographic order.
class PathTable {
 public:
  PathTable(const Quiver& q, int max_len) : q_(&q) {
    for (int v = 0; v < q.n; ++v) add({v, v, {}});
    std::size_t begin = 0;
    for (int len = 1; len <= max_len; ++len) {
      std::size_t end = paths_.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (std::size_t a = 0; a < q.arrows.size(); ++a) {
          if (q.arrows[a].src != paths_[i].tgt) continue;
          Path p = paths_[i];
          p.arrows.push_back(static_cast<int>(a));
          p.tgt = q.arrows[a].tgt;
          add(std::move(p));
        }
      }
      begin = end;
    }
  }

  std::size_t size() const { return paths_.size(); }
  const Path& operator[](std::size_t i) const { return paths_[i]; }
  const std::vector<Path>& paths() const { return paths_; }

  /// Index of the path with this arrow sequence starting at `src`, or -1.
  int find(int src, const std::vector<int>& arrows) const {
    if (arrows.empty()) return src;
    auto it = index_.find(arrows);
    return it == index_.end() ? -1 : it->second;
  }

  /// Index of the concatenation p*q, or -1 when too long or not composable.
  int concat(int p, int q) const {
    const Path& a = paths_[p];
    const Path& b = paths_[q];
    if (a.tgt != b.src) return -1;
    if (a.arrows.empty()) return q;
    if (b.arrows.empty()) return p;
    std::vector<int> c = a.arrows;
    c.insert(c.end(), b.arrows.begin(), b.arrows.end());
    return find(a.src, c);
  }

 private:
  const Quiver* q_;
  std::vector<Path> paths_;
  std::map<std::vector<int>, int> index_;

  void add(Path p) {
    if (!p.arrows.empty()) index_[p.arrows] = static_cast<int>(paths_.size());
    paths_.push_back(std::move(p));
  }
};

/// Span of an ideal of the path algebra truncated above a length bound, kept
/// in semi-echelon form with the largest path index of each row as its
/// leading term.
template <class K>
class TruncatedIdeal {
 public:
  using Row = std::map<int, K>;

  void reduce(Row& v) const {
    int cur = 1 << 30;
    while (true) {
      auto it = v.lower_bound(cur);
      if (it == v.begin()) break;
      --it;
      const int k = it->first;
      auto r = rows_.find(k);
      if (r != rows_.end()) {
        const K f = it->second;
        for (const auto& [j, c] : r->second) {
          K& slot = v[j];
          slot -= f * c;
          if (slot.is_zero()) v.erase(j);
        }
      }
      cur = k;
    }
  }

  bool insert(Row v) {
    reduce(v);
    if (v.empty()) return false;
    const int lead = v.rbegin()->first;
    const K inv = v.rbegin()->second.inverse();
    for (auto& [j, c] : v) c *= inv;
    rows_.emplace(lead, std::move(v));
    return true;
  }

  bool is_leading(int k) const { return rows_.count(k) != 0; }
  std::size_t dim() const { return rows_.size(); }
  std::vector<Row> rows() const {
    std::vector<Row> out;
    for (const auto& [k, r] : rows_) out.push_back(r);
    return out;
  }

 private:
  std::map<int, Row> rows_;
};

namespace detail {

template <class K>
struct BoundQuiverBuild {
  bool certified = false;
  std::optional<PathTable> table;
  TruncatedIdeal<K> ideal;
};

template <class K>
BoundQuiverBuild<K> close_ideal(const Quiver& q, const std::vector<Relation<K>>& rels, int L) {
  BoundQuiverBuild<K> out;
  out.table.emplace(q, L);
  const PathTable& T = *out.table;
  std::vector<std::vector<int>> by_tgt(q.n), by_src(q.n);
  for (std::size_t i = 0; i < T.size(); ++i) {
    by_tgt[T[i].tgt].push_back(static_cast<int>(i));
    by_src[T[i].src].push_back(static_cast<int>(i));
  }
  for (const auto& r : rels) {
    auto [s, t] = relation_endpoints(q, r);
    const int minlen = r.min_length();
    if (minlen > L) continue;
    std::vector<std::pair<K, int>> terms;
    for (const auto& [c, arrows] : r.terms) {
      if (static_cast<int>(arrows.size()) > L) continue;
      terms.emplace_back(c, T.find(s, arrows));
    }
    for (int u : by_tgt[s]) {
      if (T[u].length() + minlen > L) continue;
      for (int v : by_src[t]) {
        if (T[u].length() + T[v].length() + minlen > L) continue;
        typename TruncatedIdeal<K>::Row row;
        for (const auto& [c, idx] : terms) {
          int ui = T.concat(u, idx);
          if (ui < 0) continue;
          int uv = T.concat(ui, v);
          if (uv < 0) continue;
          K& slot = row[uv];
          slot += c;
          if (slot.is_zero()) row.erase(uv);
        }
        if (!row.empty()) out.ideal.insert(std::move(row));
      }
    }
  }
  out.certified = true;
  for (std::size_t i = 0; i < T.size(); ++i) {
    if (T[i].length() == L && !out.ideal.is_leading(static_cast<int>(i))) {
      out.certified = false;
      break;
    }
  }
  return out;
}

template <class K>
typename Algebra<K>::Ptr assemble(const Quiver& q, const std::vector<Relation<K>>& rels, int L, bool explicit_bound,
                                  BoundQuiverBuild<K>& b, const std::string& name) {
  const PathTable& T = *b.table;
  typename Algebra<K>::Data d;
  d.name = name;
  d.n = q.n;
  d.vertex_names = q.vertex_names;
  std::vector<int> to_basis(T.size(), -1);
  std::vector<int> from_basis;
  for (std::size_t i = 0; i < T.size(); ++i) {
    if (T[i].length() >= L || b.ideal.is_leading(static_cast<int>(i))) continue;
    to_basis[i] = static_cast<int>(from_basis.size());
    from_basis.push_back(static_cast<int>(i));
    d.basis.push_back({path_label(q, T[i]), T[i].src, T[i].tgt});
  }
  for (int v = 0; v < q.n; ++v) {
    if (to_basis[v] < 0) fail(ErrorKind::MalformedRelation, "vertex " + q.vertex_name(v) + " lies in the ideal");
    d.idempotents.push_back(to_basis[v]);
  }
  const std::size_t dm = from_basis.size();
  d.products.resize(dm * dm);
  for (std::size_t i = 0; i < dm; ++i) {
    for (std::size_t j = 0; j < dm; ++j) {
      int c = T.concat(from_basis[i], from_basis[j]);
      if (c < 0 || T[c].length() >= L) continue;
      typename TruncatedIdeal<K>::Row row;
      row[c] = K(1);
      b.ideal.reduce(row);
      SparseVec<K> sv;
      for (const auto& [k, coef] : row) {
        if (to_basis[k] < 0) fail(ErrorKind::InternalInconsistency, "normal form left the standard basis");
        sv.emplace_back(to_basis[k], coef);
      }
      d.products[i * dm + j] = std::move(sv);
    }
  }
  Presentation<K> p;
  p.quiver = q;
  p.relations = rels;
  p.length_bound = L;
  p.explicit_bound = explicit_bound;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) {
    int idx = T.find(q.arrows[a].src, {static_cast<int>(a)});
    p.arrow_element.push_back(idx >= 0 ? to_basis[idx] : -1);
  }
  d.presentation = std::move(p);
  return Algebra<K>::create(std::move(d));
}

}  // namespace detail

/// KQ/I for the ideal generated by `rels`. Paths of length `length_bound`
/// must all lie in the ideal (this certifies finite dimension for
/// admissible ideals); otherwise NotFiniteDimensional is raised.
template <class K>
typename Algebra<K>::Ptr bound_quiver_algebra(const Quiver& q, const std::vector<Relation<K>>& rels, int length_bound,
                                              const std::string& name = "") {
  q.validate();
  if (length_bound < 2) fail(ErrorKind::InvalidArgument, "length bound must be at least 2");
  for (const auto& r : rels) {
    relation_endpoints(q, r);
    if (r.max_length() > length_bound) {
      fail(ErrorKind::NotFiniteDimensional, "relation longer than the length bound " + std::to_string(length_bound));
    }
  }
  auto b = detail::close_ideal(q, rels, length_bound);
  if (!b.certified) {
    fail(ErrorKind::NotFiniteDimensional,
         "paths of length " + std::to_string(length_bound) + " survive modulo the relations");
  }
  return detail::assemble(q, rels, length_bound, true, b, name);
}

/// Same as bound_quiver_algebra, increasing the bound from the longest
/// relation until every path of that length lies in the ideal.
template <class K>
typename Algebra<K>::Ptr bound_quiver_algebra_auto(const Quiver& q, const std::vector<Relation<K>>& rels,
                                                   const std::string& name = "", int cap = 64) {
  q.validate();
  int L = 2;
  for (const auto& r : rels) {
    relation_endpoints(q, r);
    L = std::max(L, r.max_length());
  }
  for (; L <= cap; ++L) {
    auto b = detail::close_ideal(q, rels, L);
    if (b.certified) return detail::assemble(q, rels, L, false, b, name);
  }
  fail(ErrorKind::NotFiniteDimensional, "no length bound up to " + std::to_string(cap) + " certifies finite dimension");
}

}  // namespace arqlab::algcore
