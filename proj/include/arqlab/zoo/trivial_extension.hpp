#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arqlab/zoo/nakayama.hpp"

namespace arqlab::zoo {

using exactla::Mat;
using exactla::Rational;
using exactla::Vec;

/// Algebra automorphism of B given on the quiver: a vertex permutation and,
/// for each arrow, the arrow it goes to with a scalar.
struct AutomorphismSpec {
  std::vector<int> vertex_perm;                                   // 0-based
  std::map<std::string, std::pair<std::string, Rational>> arrows;  // a -> c * b
};

/// Named arrows of B as algebra elements: the stored presentation's arrows
/// when they are basis elements, else the radical generators.
template <class K>
std::vector<std::pair<std::string, Vec<K>>> arrow_elements(const Algebra<K>& b) {
  std::vector<std::pair<std::string, Vec<K>>> out;
  const auto& p = b.presentation();
  if (p && std::all_of(p->arrow_element.begin(), p->arrow_element.end(), [](int x) { return x >= 0; }) &&
      p->arrow_element.size() == p->quiver.arrows.size()) {
    for (std::size_t a = 0; a < p->quiver.arrows.size(); ++a) out.push_back({p->quiver.arrows[a].name, b.unit(p->arrow_element[a])});
    return out;
  }
  for (const auto& g : b.radical_data().generators) out.push_back({g.name, g.element});
  return out;
}

/// The linear map of an automorphism on the basis of B (column b = image of
/// basis element b). Raises InvalidTwist unless it is multiplicative and
/// bijective.
template <class K>
Mat<K> automorphism_matrix(const Algebra<K>& b, const AutomorphismSpec& spec) {
  const int n = b.num_vertices();
  const std::size_t d = b.dim();
  if (static_cast<int>(spec.vertex_perm.size()) != n) fail(ErrorKind::InvalidTwist, "vertex permutation has the wrong length");
  std::vector<bool> hit(n, false);
  for (int v : spec.vertex_perm) {
    if (v < 0 || v >= n || hit[v]) fail(ErrorKind::InvalidTwist, "vertex map is not a permutation");
    hit[v] = true;
  }
  auto arrows = arrow_elements(b);
  std::map<std::string, std::size_t> by_name;
  for (std::size_t i = 0; i < arrows.size(); ++i) by_name[arrows[i].first] = i;
  std::vector<std::pair<Vec<K>, Vec<K>>> gens;
  for (const auto& [name, x] : arrows) {
    auto it = spec.arrows.find(name);
    if (it == spec.arrows.end()) fail(ErrorKind::InvalidTwist, "no image given for arrow " + name);
    auto jt = by_name.find(it->second.first);
    if (jt == by_name.end()) fail(ErrorKind::InvalidTwist, "unknown arrow " + it->second.first);
    const K c = exactla::FieldTraits<K>::from_rational(it->second.second);
    if (c.is_zero()) fail(ErrorKind::InvalidTwist, "arrow " + name + " sent to zero");
    Vec<K> y = arrows[jt->second].second;
    for (auto& v : y) v = c * v;
    gens.push_back({x, y});
  }
  for (const auto& [name, x] : spec.arrows) {
    if (!by_name.count(name)) fail(ErrorKind::InvalidTwist, "unknown arrow " + name);
  }
  // closure: images of idempotents, then right products with arrows
  std::vector<std::pair<Vec<K>, Vec<K>>> known;
  for (int v = 0; v < n; ++v) known.push_back({b.unit(b.idempotent(v)), b.unit(b.idempotent(spec.vertex_perm[v]))});
  exactla::Subspace<K> span(d);
  std::vector<Vec<K>> xs, ys;
  for (std::size_t q = 0; q < known.size() && xs.size() < d; ++q) {
    auto [x, y] = known[q];
    if (exactla::is_zero_vec(x) || !span.add(x)) continue;
    xs.push_back(x);
    ys.push_back(y);
    for (const auto& [gx, gy] : gens) known.push_back({b.multiply(x, gx), b.multiply(y, gy)});
  }
  if (xs.size() != d) fail(ErrorKind::InvalidTwist, "arrows do not generate the algebra");
  auto xinv = exactla::inverse(Mat<K>::from_columns(xs, d));
  Mat<K> s = Mat<K>::from_columns(ys, d) * *xinv;
  if (!exactla::is_invertible(s)) fail(ErrorKind::InvalidTwist, "twist is not bijective");
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Vec<K> lhs(d, K(0));
      for (const auto& [k, c] : b.product(static_cast<int>(i), static_cast<int>(j))) {
        for (std::size_t r = 0; r < d; ++r) lhs[r] += c * s(r, k);
      }
      if (lhs != b.multiply(s.col(i), s.col(j))) fail(ErrorKind::InvalidTwist, "twist does not respect the relations");
    }
  }
  return s;
}

namespace detail {

/// Layers 0..L-1 of copies of B, with a D(B) slot from each layer to the
/// next; with `wrap` the last slot returns to layer 0 through sigma.
///
/// A slot element x* (x in e_j B e_i) runs from (l, i) to (l+1, j).
/// For b in layer l and c in layer l+1: (b x*)(y) = x*(y b) and
/// (x* c)(y) = x*(c y); at the seam c acts through sigma(c).
template <class K>
AlgebraPtr<K> repetitive_slab(const Algebra<K>& b, int layers, bool wrap, const std::optional<Mat<K>>& sigma,
                              const std::string& name) {
  const int n = b.num_vertices();
  const int d = static_cast<int>(b.dim());
  const int slots = wrap ? layers : layers - 1;
  typename Algebra<K>::Data data;
  data.name = name;
  data.n = n * layers;
  if (layers == 1) data.vertex_names = b.vertex_names();
  std::vector<int> vperm(n);
  for (int v = 0; v < n; ++v) vperm[v] = v;
  std::vector<int> vinv = vperm;
  if (sigma) {
    // vertex permutation read off the idempotents
    for (int v = 0; v < n; ++v) {
      Vec<K> col = sigma->col(b.idempotent(v));
      for (int w = 0; w < n; ++w) {
        if (!col[b.idempotent(w)].is_zero()) vperm[v] = w;
      }
    }
    for (int v = 0; v < n; ++v) vinv[vperm[v]] = v;
  }
  auto bidx = [&](int l, int x) { return l * d + x; };
  auto didx = [&](int s, int x) { return layers * d + s * d + x; };
  auto suffix = [&](int l) { return layers == 1 ? std::string() : "_" + std::to_string(l); };
  for (int l = 0; l < layers; ++l) {
    for (int x = 0; x < d; ++x) {
      const auto& e = b.element(x);
      data.basis.push_back({e.label + suffix(l), l * n + e.src, l * n + e.tgt});
    }
  }
  for (int s = 0; s < slots; ++s) {
    const bool seam = wrap && s == layers - 1;
    for (int x = 0; x < d; ++x) {
      const auto& e = b.element(x);
      int tgt = seam ? vinv[e.src] : ((s + 1) % layers) * n + e.src;
      data.basis.push_back({"D(" + e.label + ")" + suffix(s), s * n + e.tgt, tgt});
    }
  }
  for (int l = 0; l < layers; ++l) {
    for (int v = 0; v < n; ++v) data.idempotents.push_back(bidx(l, b.idempotent(v)));
  }
  const std::size_t total = data.basis.size();
  data.products.assign(total * total, {});
  auto prod = [&](int i, int j) -> algcore::SparseVec<K>& { return data.products[static_cast<std::size_t>(i) * total + j]; };
  for (int l = 0; l < layers; ++l) {
    for (int x = 0; x < d; ++x) {
      for (int y = 0; y < d; ++y) {
        for (const auto& [k, c] : b.product(x, y)) prod(bidx(l, x), bidx(l, y)).emplace_back(bidx(l, k), c);
      }
    }
  }
  // accumulate slot products in dense maps, then store sorted
  std::vector<std::map<int, K>> acc(total * total);
  auto add = [&](int i, int j, int k, const K& c) {
    auto& m = acc[static_cast<std::size_t>(i) * total + j];
    m[k] += c;
  };
  for (int s = 0; s < slots; ++s) {
    const bool seam = wrap && s == layers - 1;
    const int next = (s + 1) % layers;
    // b x*: coefficient of y* is the coefficient of x in y b
    for (int y = 0; y < d; ++y) {
      for (int bb = 0; bb < d; ++bb) {
        for (const auto& [x, c] : b.product(y, bb)) add(bidx(s, bb), didx(s, x), didx(s, y), c);
      }
    }
    // x* c: coefficient of y* is the coefficient of x in c' y, c' = c or sigma(c)
    for (int cc = 0; cc < d; ++cc) {
      Vec<K> cv = seam && sigma ? sigma->col(cc) : b.unit(cc);
      for (int y = 0; y < d; ++y) {
        for (int k = 0; k < d; ++k) {
          if (cv[k].is_zero()) continue;
          for (const auto& [x, c] : b.product(k, y)) add(didx(s, x), bidx(next, cc), didx(s, y), cv[k] * c);
        }
      }
    }
  }
  for (std::size_t p = 0; p < acc.size(); ++p) {
    for (const auto& [k, c] : acc[p]) {
      if (!c.is_zero()) data.products[p].emplace_back(k, c);
    }
  }
  return Algebra<K>::create(std::move(data));
}

}  // namespace detail

/// T(B)^(r): r layers of B joined cyclically by copies of D(B); with a twist
/// the slot from layer r-1 back to layer 0 goes through the automorphism.
template <class K>
AlgebraPtr<K> trivial_extension_r(const AlgebraPtr<K>& b, int r, const std::optional<AutomorphismSpec>& twist = std::nullopt) {
  if (r < 1) fail(ErrorKind::InvalidArgument, "r must be at least 1");
  std::optional<Mat<K>> sigma;
  if (twist) sigma = automorphism_matrix(*b, *twist);
  std::string base = b->name().empty() ? "B" : b->name();
  std::string name = "T(" + base + ")^(" + std::to_string(r) + ")" + (twist ? "~" : "");
  return detail::repetitive_slab<K>(*b, r, true, sigma, name);
}

/// Full subcategory of the repetitive category on layers m0..m1.
template <class K>
AlgebraPtr<K> repetitive_truncation(const AlgebraPtr<K>& b, int m0, int m1) {
  if (m0 > m1) fail(ErrorKind::InvalidArgument, "repetitive_truncation needs m0 <= m1");
  std::string base = b->name().empty() ? "B" : b->name();
  return detail::repetitive_slab<K>(*b, m1 - m0 + 1, false, std::nullopt,
                                 base + "^[" + std::to_string(m0) + "," + std::to_string(m1) + "]");
}

}  // namespace arqlab::zoo
