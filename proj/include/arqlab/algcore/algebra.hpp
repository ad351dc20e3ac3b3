#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arqlab/algcore/quiver.hpp"
#include "arqlab/error.hpp"
#include "arqlab/exactla.hpp"

namespace arqlab::algcore {

using exactla::Mat;
using exactla::Subspace;
using exactla::Vec;

template <class K>
using SparseVec = std::vector<std::pair<int, K>>;

struct BasisElement {
  std::string label;
  int src = 0;
  int tgt = 0;
};

/// Quiver-with-relations description an algebra was built from.
template <class K>
struct Presentation {
  Quiver quiver;
  std::vector<Relation<K>> relations;
  int length_bound = 0;           // bound used to certify finite dimension
  bool explicit_bound = false;    // the bound was given by the user
  std::vector<int> arrow_element; // basis index of each arrow
};

/// Homogeneous element of the radical lifting a Gabriel-quiver arrow.
template <class K>
struct Generator {
  int src = 0;
  int tgt = 0;
  Vec<K> element;  // dense coordinates in the algebra basis
  std::string name;
};

template <class K>
struct RadicalData {
  std::vector<Subspace<K>> powers;  // rad^0 = A, rad^1, ..., last one is 0
  std::vector<Generator<K>> generators;
  int loewy_length = 0;
  const Subspace<K>& radical() const { return powers[1]; }
};

/// Arrow counts of the Gabriel quiver: counts[i][j] = number of arrows i -> j.
struct GabrielQuiver {
  int n = 0;
  std::vector<std::vector<int>> counts;

  int arrows() const {
    int s = 0;
    for (auto& r : counts) {
      for (int c : r) s += c;
    }
    return s;
  }
  bool is_acyclic() const {
    // Kahn's algorithm
    std::vector<int> indeg(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (counts[i][j]) {
          if (i == j) return false;
          ++indeg[j];
        }
      }
    }
    std::vector<int> stack;
    for (int i = 0; i < n; ++i) {
      if (!indeg[i]) stack.push_back(i);
    }
    int seen = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++seen;
      for (int j = 0; j < n; ++j) {
        if (counts[v][j] && --indeg[j] == 0) stack.push_back(j);
      }
    }
    return seen == n;
  }
  friend bool operator==(const GabrielQuiver&, const GabrielQuiver&) = default;
};

/// Finite-dimensional basic algebra given by structure constants on a basis
/// graded by a complete set of primitive orthogonal idempotents.
///
/// Basis element b with (src, tgt) = (s, t) lies in e_s A e_t. Products are
/// nonzero only for composable pairs. Right modules and paths are read left
/// to right, so e_i A is the indecomposable projective at vertex i.
template <class K>
class Algebra : public std::enable_shared_from_this<Algebra<K>> {
 public:
  using Ptr = std::shared_ptr<const Algebra>;

  struct Data {
    std::string name;
    int n = 0;
    std::vector<std::string> vertex_names;
    std::vector<BasisElement> basis;
    std::vector<int> idempotents;         // basis index of e_v
    std::vector<SparseVec<K>> products;   // dim*dim, row-major
    std::optional<Presentation<K>> presentation;
  };

  static Ptr create(Data d) {
    auto a = std::shared_ptr<Algebra>(new Algebra(std::move(d)));
    a->validate();
    return a;
  }

  const std::string& name() const { return d_.name; }
  int num_vertices() const { return d_.n; }
  std::size_t dim() const { return d_.basis.size(); }
  const BasisElement& element(std::size_t i) const { return d_.basis[i]; }
  const std::vector<BasisElement>& basis() const { return d_.basis; }
  int idempotent(int v) const { return d_.idempotents[v]; }
  const std::vector<int>& idempotents() const { return d_.idempotents; }
  const std::optional<Presentation<K>>& presentation() const { return d_.presentation; }
  const std::vector<std::string>& vertex_names() const { return d_.vertex_names; }
  std::string vertex_name(int v) const {
    if (v < static_cast<int>(d_.vertex_names.size()) && !d_.vertex_names[v].empty()) return d_.vertex_names[v];
    return std::to_string(v + 1);
  }

  /// Basis indices of e_s A e_t, idempotent first when s == t.
  const std::vector<int>& block(int s, int t) const { return blocks_[s * d_.n + t]; }
  std::size_t block_dim(int s, int t) const { return block(s, t).size(); }
  /// Position of a basis element inside its block.
  int position_in_block(int b) const { return pos_in_block_[b]; }

  const SparseVec<K>& product(int i, int j) const { return d_.products[static_cast<std::size_t>(i) * dim() + j]; }

  Vec<K> unit(int i) const { return exactla::unit_vector<K>(dim(), i); }

  Vec<K> multiply(const Vec<K>& x, const Vec<K>& y) const {
    Vec<K> z(dim(), K(0));
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j].is_zero()) continue;
        const auto& p = product(static_cast<int>(i), static_cast<int>(j));
        if (p.empty()) continue;
        const K f = x[i] * y[j];
        for (const auto& [k, c] : p) z[k] += f * c;
      }
    }
    return z;
  }
  Vec<K> multiply_basis(int i, const Vec<K>& y) const { return multiply(unit(i), y); }
  Vec<K> multiply_basis(const Vec<K>& x, int j) const { return multiply(x, unit(j)); }

  /// Block (s, t) of a nonzero homogeneous element, or nullopt if the
  /// element is zero or not homogeneous.
  std::optional<std::pair<int, int>> homogeneous_block(const Vec<K>& x) const {
    std::optional<std::pair<int, int>> blk;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i].is_zero()) continue;
      std::pair<int, int> b{d_.basis[i].src, d_.basis[i].tgt};
      if (blk && *blk != b) return std::nullopt;
      blk = b;
    }
    return blk;
  }

  Vec<K> idempotent_sum(const std::vector<int>& vertices) const {
    Vec<K> e(dim(), K(0));
    for (int v : vertices) e[d_.idempotents[v]] = K(1);
    return e;
  }

  /// Exhaustive associativity check on basis triples.
  bool is_associative() const {
    const int n = static_cast<int>(dim());
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (d_.basis[i].tgt != d_.basis[j].src) continue;
        const auto& ij = product(i, j);
        for (int k = 0; k < n; ++k) {
          if (d_.basis[j].tgt != d_.basis[k].src) continue;
          Vec<K> left(dim(), K(0)), right(dim(), K(0));
          for (const auto& [m, c] : ij) {
            for (const auto& [r, c2] : product(m, k)) left[r] += c * c2;
          }
          for (const auto& [m, c] : product(j, k)) {
            for (const auto& [r, c2] : product(i, m)) right[r] += c * c2;
          }
          if (left != right) return false;
        }
      }
    }
    return true;
  }

  /// Jacobson radical, its powers and lifts of the Gabriel-quiver arrows.
  /// Requires characteristic 0 or p > dim.
  const RadicalData<K>& radical_data() const {
    std::call_once(rad_once_, [this] { rad_ = compute_radical(); });
    return rad_;
  }
  int loewy_length() const { return radical_data().loewy_length; }

  GabrielQuiver gabriel_quiver() const {
    GabrielQuiver g{d_.n, std::vector<std::vector<int>>(d_.n, std::vector<int>(d_.n, 0))};
    for (const auto& gen : radical_data().generators) ++g.counts[gen.src][gen.tgt];
    return g;
  }

  /// C(i, j) = dim e_i A e_j, the multiplicity of S(j) in P(i).
  std::vector<std::vector<int>> cartan_matrix() const {
    std::vector<std::vector<int>> c(d_.n, std::vector<int>(d_.n, 0));
    for (int i = 0; i < d_.n; ++i) {
      for (int j = 0; j < d_.n; ++j) c[i][j] = static_cast<int>(block_dim(i, j));
    }
    return c;
  }

  /// Opposite algebra. The opposite of the opposite is this same object.
  Ptr op() const {
    std::lock_guard<std::mutex> lock(op_mutex_);
    if (auto back = op_of_.lock()) return back;
    if (op_) return op_;
    Data o;
    o.name = d_.name.empty() ? std::string() : d_.name + "^op";
    o.n = d_.n;
    o.vertex_names = d_.vertex_names;
    o.idempotents = d_.idempotents;
    for (const auto& b : d_.basis) o.basis.push_back({b.label, b.tgt, b.src});
    const std::size_t n = dim();
    o.products.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) o.products[i * n + j] = d_.products[j * n + i];
    }
    if (d_.presentation) {
      Presentation<K> p = *d_.presentation;
      p.quiver = p.quiver.reversed();
      for (auto& r : p.relations) {
        for (auto& t : r.terms) std::reverse(t.second.begin(), t.second.end());
      }
      o.presentation = std::move(p);
    }
    auto a = std::shared_ptr<Algebra>(new Algebra(std::move(o)));
    a->validate();
    a->op_of_ = this->shared_from_this();
    op_ = a;
    return op_;
  }

 private:
  explicit Algebra(Data d) : d_(std::move(d)) {}

  Data d_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> pos_in_block_;

  mutable std::once_flag rad_once_;
  mutable RadicalData<K> rad_;
  mutable std::mutex op_mutex_;
  mutable Ptr op_;
  mutable std::weak_ptr<const Algebra> op_of_;

  void validate() {
    const int n = d_.n;
    const std::size_t dm = d_.basis.size();
    if (n <= 0) fail(ErrorKind::InvalidArgument, "algebra needs at least one vertex");
    if (static_cast<int>(d_.idempotents.size()) != n) fail(ErrorKind::InvalidArgument, "one idempotent per vertex required");
    if (d_.products.size() != dm * dm) fail(ErrorKind::InvalidArgument, "structure constant table has wrong size");
    blocks_.assign(static_cast<std::size_t>(n) * n, {});
    pos_in_block_.assign(dm, 0);
    for (int v = 0; v < n; ++v) {
      int e = d_.idempotents[v];
      if (e < 0 || e >= static_cast<int>(dm) || d_.basis[e].src != v || d_.basis[e].tgt != v) {
        fail(ErrorKind::InvalidArgument, "idempotent of vertex " + std::to_string(v + 1) + " is not in e_v A e_v");
      }
      blocks_[v * n + v].push_back(e);
    }
    for (std::size_t b = 0; b < dm; ++b) {
      const auto& be = d_.basis[b];
      if (be.src < 0 || be.src >= n || be.tgt < 0 || be.tgt >= n) fail(ErrorKind::InvalidArgument, "basis element out of range");
      if (d_.idempotents[be.src] == static_cast<int>(b)) continue;
      blocks_[be.src * n + be.tgt].push_back(static_cast<int>(b));
    }
    for (auto& blk : blocks_) {
      for (std::size_t p = 0; p < blk.size(); ++p) pos_in_block_[blk[p]] = static_cast<int>(p);
    }
    for (std::size_t i = 0; i < dm; ++i) {
      for (std::size_t j = 0; j < dm; ++j) {
        auto& p = d_.products[i * dm + j];
        std::sort(p.begin(), p.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        p.erase(std::remove_if(p.begin(), p.end(), [](const auto& t) { return t.second.is_zero(); }), p.end());
        if (p.empty()) continue;
        if (d_.basis[i].tgt != d_.basis[j].src) fail(ErrorKind::InvalidArgument, "nonzero product of non-composable elements");
        for (const auto& [k, c] : p) {
          if (k < 0 || k >= static_cast<int>(dm) || d_.basis[k].src != d_.basis[i].src || d_.basis[k].tgt != d_.basis[j].tgt) {
            fail(ErrorKind::InvalidArgument, "product " + d_.basis[i].label + "*" + d_.basis[j].label + " leaves its block");
          }
        }
      }
    }
    // Idempotent axioms: e_s b = b = b e_t for b in e_s A e_t.
    for (std::size_t b = 0; b < dm; ++b) {
      const auto& be = d_.basis[b];
      for (int v = 0; v < n; ++v) {
        const auto& l = product(d_.idempotents[v], static_cast<int>(b));
        const auto& r = product(static_cast<int>(b), d_.idempotents[v]);
        bool lok = v == be.src ? (l.size() == 1 && l[0].first == static_cast<int>(b) && l[0].second.is_one()) : l.empty();
        bool rok = v == be.tgt ? (r.size() == 1 && r[0].first == static_cast<int>(b) && r[0].second.is_one()) : r.empty();
        if (!lok || !rok) fail(ErrorKind::InvalidArgument, "idempotent e" + vertex_name(v) + " does not act as a graded unit on " + be.label);
      }
    }
  }

  RadicalData<K> compute_radical() const {
    const std::size_t dm = dim();
    const int n = d_.n;
    exactla::require_characteristic_above<K>(dm, "algebra " + d_.name);
    // t_k = trace of left multiplication by b_k
    std::vector<K> tr(dm, K(0));
    for (std::size_t k = 0; k < dm; ++k) {
      for (std::size_t m = 0; m < dm; ++m) {
        for (const auto& [r, c] : product(static_cast<int>(k), static_cast<int>(m))) {
          if (r == static_cast<int>(m)) tr[k] += c;
        }
      }
    }
    RadicalData<K> out;
    Subspace<K> whole(dm);
    for (std::size_t i = 0; i < dm; ++i) whole.add(unit(static_cast<int>(i)));
    out.powers.push_back(whole);
    Subspace<K> rad(dm);
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        const auto& blk = block(s, t);
        if (blk.empty()) continue;
        // x in e_s A e_t is radical iff tr(L_{x b}) = 0 for all b in e_t A
        std::vector<int> partners;
        for (std::size_t b = 0; b < dm; ++b) {
          if (d_.basis[b].src == t) partners.push_back(static_cast<int>(b));
        }
        Mat<K> g(partners.size(), blk.size());
        for (std::size_t r = 0; r < partners.size(); ++r) {
          for (std::size_t c = 0; c < blk.size(); ++c) {
            K v(0);
            for (const auto& [k, coef] : product(blk[c], partners[r])) v += coef * tr[k];
            g(r, c) = v;
          }
        }
        for (const auto& kv : exactla::kernel(g)) {
          Vec<K> x(dm, K(0));
          for (std::size_t c = 0; c < blk.size(); ++c) x[blk[c]] = kv[c];
          rad.add(x);
        }
      }
    }
    out.powers.push_back(rad);
    while (out.powers.back().dim() > 0) {
      const auto& last = out.powers.back();
      Subspace<K> next(dm);
      for (const auto& x : last.basis()) {
        for (const auto& y : rad.basis()) next.add(multiply(x, y));
      }
      if (next.dim() == last.dim()) fail(ErrorKind::InternalInconsistency, "radical is not nilpotent");
      out.powers.push_back(std::move(next));
    }
    out.loewy_length = static_cast<int>(out.powers.size()) - 1;
    // Arrows: complement of rad^2 in rad, block by block.
    Subspace<K> span = out.powers.size() > 2 ? out.powers[2] : Subspace<K>(dm);
    std::vector<std::pair<std::pair<int, int>, Vec<K>>> gens;
    for (const auto& x : rad.basis()) {
      if (span.add(x)) {
        auto blk = homogeneous_block(x);
        if (!blk) fail(ErrorKind::InternalInconsistency, "radical basis vector is not homogeneous");
        gens.push_back({*blk, x});
      }
    }
    std::stable_sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    int counter = 0;
    for (auto& [blk, x] : gens) {
      Generator<K> g;
      g.src = blk.first;
      g.tgt = blk.second;
      g.element = std::move(x);
      g.name = "x" + std::to_string(++counter);
      out.generators.push_back(std::move(g));
    }
    // Prefer presentation arrows when they realize the arrow space.
    if (d_.presentation && !d_.presentation->arrow_element.empty()) {
      Subspace<K> check = out.powers.size() > 2 ? out.powers[2] : Subspace<K>(dm);
      std::vector<Generator<K>> arrows;
      bool ok = true;
      for (std::size_t a = 0; a < d_.presentation->quiver.arrows.size(); ++a) {
        int b = d_.presentation->arrow_element[a];
        if (b < 0 || !check.add(unit(b))) {
          ok = false;
          break;
        }
        Generator<K> g;
        g.src = d_.basis[b].src;
        g.tgt = d_.basis[b].tgt;
        g.element = unit(b);
        g.name = d_.presentation->quiver.arrows[a].name;
        arrows.push_back(std::move(g));
      }
      if (ok && arrows.size() == out.generators.size()) out.generators = std::move(arrows);
    }
    return out;
  }
};

template <class K>
using AlgebraPtr = typename Algebra<K>::Ptr;

}  // namespace arqlab::algcore
