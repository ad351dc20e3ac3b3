#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "arqlab/exactla/matrix.hpp"
#include "arqlab/exactla/subspace.hpp"

namespace arqlab::exactla {

/// Univariate polynomial, coefficients from degree 0 upwards, no trailing zeros.
template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<K> c) : c_(std::move(c)) { trim(); }

  static Poly x() { return Poly({K(0), K(1)}); }
  static Poly constant(const K& a) { return Poly({a}); }
  /// x - a
  static Poly linear(const K& a) { return Poly({-a, K(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
  K lead() const { return c_.empty() ? K(0) : c_.back(); }

  Poly monic() const {
    if (c_.empty()) return *this;
    const K inv = c_.back().inverse();
    std::vector<K> c = c_;
    for (auto& x : c) x *= inv;
    return Poly(std::move(c));
  }

  K operator()(const K& t) const {
    K r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
    return r;
  }

  Poly derivative() const {
    std::vector<K> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(K(static_cast<std::int64_t>(i)) * c_[i]);
    return Poly(std::move(d));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }

  /// Quotient and remainder of a / b.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(ErrorKind::InvalidArgument, "polynomial division by zero");
    std::vector<K> r = a.c_;
    const int db = b.degree();
    if (a.degree() < db) return {Poly(), a};
    std::vector<K> q(a.degree() - db + 1, K(0));
    const K inv = b.lead().inverse();
    for (int i = a.degree(); i >= db; --i) {
      const K f = r[i] * inv;
      if (f.is_zero()) continue;
      q[i - db] = f;
      for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.c_[j];
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
  }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      const K& a = c_[i];
      if (a.is_zero()) continue;
      std::string coef = a.to_string();
      bool neg = !coef.empty() && coef[0] == '-';
      if (neg) coef = coef.substr(1);
      if (!s.empty()) s += neg ? " - " : " + ";
      else if (neg) s += "-";
      if (i == 0 || coef != "1") s += coef;
      if (i > 0) s += var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s;
  }

 private:
  std::vector<K> c_;
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
};

template <class K>
Poly<K> gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    Poly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class K>
Poly<K> lcm(const Poly<K>& a, const Poly<K>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return ((a * b) / gcd(a, b)).monic();
}

template <class K>
Poly<K> powmod(Poly<K> base, std::uint64_t e, const Poly<K>& m) {
  Poly<K> r = Poly<K>::constant(K(1)) % m;
  base = base % m;
  while (e != 0) {
    if (e & 1) r = (r * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return r;
}

/// p(m) for a square matrix m.
template <class K>
Mat<K> evaluate(const Poly<K>& p, const Mat<K>& m) {
  const std::size_t n = m.rows();
  Mat<K> r(n, n);
  for (int i = p.degree(); i >= 0; --i) {
    r = r * m;
    for (std::size_t j = 0; j < n; ++j) r(j, j) += p.coeff(static_cast<std::size_t>(i));
  }
  return r;
}

/// Minimal polynomial of a square matrix: lcm of the minimal polynomials of
/// the standard basis vectors, each found from its Krylov sequence.
template <class K>
Poly<K> minpoly(const Mat<K>& m) {
  if (m.rows() != m.cols()) fail(ErrorKind::InvalidArgument, "minpoly of a non-square matrix");
  const std::size_t n = m.rows();
  Poly<K> result = Poly<K>::constant(K(1));
  Subspace<K> covered(n);
  for (std::size_t s = 0; s < n; ++s) {
    Vec<K> start = unit_vector<K>(n, s);
    if (covered.contains(start)) continue;
    // Krylov vectors v, mv, m^2 v, ... kept in echelon form together with
    // the polynomial each one represents.
    std::vector<Vec<K>> rows;
    std::vector<std::size_t> piv;
    std::vector<std::vector<K>> combo;
    Vec<K> v = start;
    for (std::size_t k = 0;; ++k) {
      Vec<K> r = v;
      std::vector<K> c(k + 1, K(0));
      c[k] = K(1);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const K f = r[piv[i]];
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) r[j] -= f * rows[i][j];
        for (std::size_t j = 0; j < combo[i].size(); ++j) c[j] -= f * combo[i][j];
      }
      std::size_t p = 0;
      while (p < n && r[p].is_zero()) ++p;
      if (p == n) {
        result = lcm(result, Poly<K>(c));
        break;
      }
      const K inv = r[p].inverse();
      for (auto& x : r) x *= inv;
      for (auto& x : c) x *= inv;
      rows.push_back(std::move(r));
      piv.push_back(p);
      combo.push_back(std::move(c));
      covered.add(v);
      v = m.apply(v);
    }
  }
  return result.monic();
}

/// Roots in K of a nonzero polynomial with their multiplicities.
///
/// Over the rationals the polynomial is rescaled to an integral monic one,
/// whose rational roots are integers dividing the constant term; candidates
/// up to `rational_search_bound` in absolute value are tested. Over GF(p)
/// roots are split off gcd(f, x^p - x) by random equal-degree splitting with
/// a fixed deterministic sequence of shifts.
template <class K>
std::vector<std::pair<K, int>> roots(const Poly<K>& f, std::int64_t rational_search_bound = 20000);

template <class K>
int multiplicity(Poly<K> f, const K& a) {
  int m = 0;
  const Poly<K> lin = Poly<K>::linear(a);
  while (!f.is_zero() && f(a).is_zero()) {
    f = f / lin;
    ++m;
  }
  return m;
}

template <>
inline std::vector<std::pair<Rational, int>> roots(const Poly<Rational>& f0, std::int64_t bound) {
  std::vector<std::pair<Rational, int>> out;
  if (f0.degree() < 1) return out;
  Poly<Rational> f = f0.monic();
  // Strip the root 0 first.
  int zero_mult = 0;
  while (f.coeff(0).is_zero()) {
    std::vector<Rational> c(f.coeffs().begin() + 1, f.coeffs().end());
    f = Poly<Rational>(std::move(c));
    ++zero_mult;
  }
  if (zero_mult) out.emplace_back(Rational(0), zero_mult);
  if (f.degree() < 1) return out;
  // f(x) monic with rational coefficients; g(y) = D^n f(y / D) is integral and monic.
  mpz_class d = 1;
  for (const auto& c : f.coeffs()) d = lcm(d, c.denominator());
  const int n = f.degree();
  std::vector<mpz_class> g(n + 1);
  mpz_class dp = 1;
  for (int i = n; i >= 0; --i) {
    mpq_class gi = f.coeff(i).to_mpq() * mpq_class(dp);
    gi.canonicalize();
    g[i] = gi.get_num();
    dp *= d;
  }
  const mpz_class& c0 = g[0];
  const mpz_class absc0 = abs(c0);
  auto eval = [&](const mpz_class& y) {
    mpz_class r = 0;
    for (int i = n; i >= 0; --i) r = r * y + g[i];
    return r;
  };
  for (std::int64_t y = 1; y <= bound; ++y) {
    if (mpz_class(y) > absc0) break;
    if (absc0 % y != 0) continue;
    for (std::int64_t s : {y, -y}) {
      if (eval(mpz_class(static_cast<long>(s))) != 0) continue;
      mpq_class r(mpz_class(static_cast<long>(s)), d);
      r.canonicalize();
      Rational root = Rational::parse(r.get_str());
      out.emplace_back(root, multiplicity(f, root));
    }
  }
  return out;
}

template <>
inline std::vector<std::pair<ModP, int>> roots(const Poly<ModP>& f0, std::int64_t) {
  std::vector<std::pair<ModP, int>> out;
  if (f0.degree() < 1) return out;
  const Poly<ModP> f = f0.monic();
  const std::uint64_t p = ModP::modulus();
  Poly<ModP> xp = powmod(Poly<ModP>::x(), p, f);
  Poly<ModP> split = gcd(f, xp - Poly<ModP>::x());
  std::vector<ModP> found;
  std::vector<Poly<ModP>> work{split};
  std::uint64_t shift = 0;
  while (!work.empty()) {
    Poly<ModP> h = work.back();
    work.pop_back();
    if (h.degree() < 1) continue;
    if (h.degree() == 1) {
      found.push_back(-h.coeff(0) / h.coeff(1));
      continue;
    }
    if (p == 2) {
      // Only 0 and 1 can be roots; h has distinct linear factors.
      for (std::uint64_t a : {0u, 1u}) {
        if (h(ModP(a)).is_zero()) found.push_back(ModP(a));
      }
      continue;
    }
    bool done = false;
    while (!done) {
      ++shift;
      Poly<ModP> t = powmod(Poly<ModP>::linear(-ModP(shift)), (p - 1) / 2, h) - Poly<ModP>::constant(ModP(1));
      Poly<ModP> g = gcd(h, t);
      if (g.degree() >= 1 && g.degree() < h.degree()) {
        work.push_back(g);
        work.push_back(h / g);
        done = true;
      }
      if (shift > 4 * p + 64) fail(ErrorKind::InternalInconsistency, "root splitting did not terminate");
    }
  }
  std::sort(found.begin(), found.end());
  for (const auto& a : found) out.emplace_back(a, multiplicity(f, a));
  return out;
}

}  // namespace arqlab::exactla
