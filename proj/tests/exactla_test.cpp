#include <gtest/gtest.h>

#include <random>

#include "arqlab/exactla.hpp"

using namespace arqlab;
using namespace arqlab::exactla;

namespace {

using Q = Rational;

Mat<Q> qmat(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size(), c = rows.begin()->size();
  Mat<Q> m(r, c);
  std::size_t i = 0;
  for (auto& row : rows) {
    std::size_t j = 0;
    for (long x : row) m(i, j++) = Q(x);
    ++i;
  }
  return m;
}

template <class K>
Mat<K> random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int span) {
  std::uniform_int_distribution<int> d(-span, span);
  Mat<K> m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = K(d(rng));
  }
  return m;
}

}  // namespace

TEST(Rational, NormalizesAndPromotes) {
  EXPECT_EQ(Q(2, 4), Q(1, 2));
  EXPECT_EQ(Q(3, -6).to_string(), "-1/2");
  Q big = Q(INT64_MAX) * Q(INT64_MAX);
  EXPECT_EQ(big / Q(INT64_MAX), Q(INT64_MAX));
  EXPECT_EQ((big - big), Q(0));
  EXPECT_EQ(Q::parse("-6/4"), Q(-3, 2));
  EXPECT_THROW(Q::parse("1/0"), Error);
  EXPECT_TRUE(Q(1, 3) < Q(1, 2));
}

TEST(ModP, ArithmeticInGF7) {
  FieldScope scope(7);
  EXPECT_EQ(ModP(3) * ModP(5), ModP(1));
  EXPECT_EQ(ModP(3).inverse(), ModP(5));
  EXPECT_EQ(ModP(-1).to_string(), "-1");
  EXPECT_EQ(ModP::parse("1/2"), ModP(4));
  EXPECT_THROW(ModP::parse("1/7"), Error);
}

TEST(FieldSpec, ParsesSpellings) {
  EXPECT_EQ(FieldSpec::parse("Q"), FieldSpec::rationals());
  EXPECT_EQ(FieldSpec::parse("GF(7)").characteristic, 7u);
  EXPECT_EQ(FieldSpec::parse("gf:101").characteristic, 101u);
  EXPECT_THROW(FieldSpec::parse("GF(8)"), Error);
  EXPECT_THROW(FieldSpec::parse("R"), Error);
}

TEST(Kernel, IdentityHasEmptyKernel) { EXPECT_TRUE(kernel(Mat<Q>::identity(2)).empty()); }

TEST(Kernel, RowOfOnes) {
  auto k = kernel(qmat({{1, 1}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0][0] + k[0][1], Q(0));
  EXPECT_FALSE(k[0][0].is_zero());
}

TEST(Kernel, RankOneOverGF5) {
  FieldScope scope(5);
  Mat<ModP> m(2, 2);
  m(0, 0) = ModP(1);
  m(0, 1) = ModP(2);
  m(1, 0) = ModP(2);
  m(1, 1) = ModP(4);
  auto k = kernel(m);
  ASSERT_EQ(k.size(), 1u);
  // proportional to (2, -1)
  EXPECT_EQ(k[0][0] * ModP(-1), k[0][1] * ModP(2));
  EXPECT_TRUE(is_zero_vec(m.apply(k[0])));
}

TEST(Solve, Examples) {
  auto id = solve(Mat<Q>::identity(2), {{Q(5), Q(-3)}});
  EXPECT_EQ(*id.solutions[0], (Vec<Q>{Q(5), Q(-3)}));
  EXPECT_TRUE(id.kernel.empty());

  auto z = solve(Mat<Q>(2, 2), {{Q(1), Q(0)}});
  EXPECT_FALSE(z.solutions[0].has_value());
  EXPECT_EQ(z.kernel.size(), 2u);

  auto bs = solve(qmat({{1, 1}, {0, 1}}), {{Q(3), Q(1)}});
  EXPECT_EQ(*bs.solutions[0], (Vec<Q>{Q(2), Q(1)}));
}

TEST(Minpoly, Examples) {
  EXPECT_EQ(minpoly(Mat<Q>(3, 3)), Poly<Q>::x());
  EXPECT_EQ(minpoly(Mat<Q>::identity(4)), Poly<Q>::linear(Q(1)));
  EXPECT_EQ(minpoly(qmat({{0, 1}, {0, 0}})), Poly<Q>::x() * Poly<Q>::x());
}

TEST(Roots, RationalAndModular) {
  // (x - 1/2)^2 (x + 3) (x^2 + 1)
  Poly<Q> f = Poly<Q>::linear(Q(1, 2)) * Poly<Q>::linear(Q(1, 2)) * Poly<Q>::linear(Q(-3)) *
              Poly<Q>({Q(1), Q(0), Q(1)});
  auto r = roots(f);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].first, Q(1, 2));
  EXPECT_EQ(r[0].second, 2);
  EXPECT_EQ(r[1].first, Q(-3));

  FieldScope scope(13);
  // x^2 + 1 = (x - 5)(x - 8) over GF(13)
  auto rm = roots(Poly<ModP>({ModP(1), ModP(0), ModP(1)}) * Poly<ModP>::linear(ModP(2)));
  ASSERT_EQ(rm.size(), 3u);
  EXPECT_EQ(rm[0].first, ModP(2));
  EXPECT_EQ(rm[1].first, ModP(5));
  EXPECT_EQ(rm[2].first, ModP(8));
}

TEST(Subspace, ReduceIntersectSum) {
  Subspace<Q> a(3, {{Q(1), Q(1), Q(0)}, {Q(0), Q(1), Q(1)}});
  Subspace<Q> b(3, {{Q(1), Q(0), Q(0)}, {Q(0), Q(0), Q(1)}});
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_TRUE(a.contains({Q(1), Q(2), Q(1)}));
  EXPECT_FALSE(a.contains({Q(1), Q(0), Q(0)}));
  EXPECT_EQ(a.intersect(b).dim(), 1u);
  EXPECT_TRUE(a.intersect(b).contains({Q(1), Q(0), Q(-1)}));
  EXPECT_EQ(a.sum(b).dim(), 3u);
}

// Seeded property checks over both field kinds.
template <class K>
void property_round(std::mt19937& rng) {
  std::uniform_int_distribution<int> dims(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = dims(rng), c = dims(rng);
    Mat<K> m = random_matrix<K>(rng, r, c, 2);
    if (trial % 3 == 0 && r > 1) {
      // force dependent rows
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) + m(0, j);
    }
    auto ker = kernel(m);
    EXPECT_EQ(rank(m) + ker.size(), c);
    for (auto& v : ker) EXPECT_TRUE(is_zero_vec(m.apply(v)));

    Vec<K> x0(c);
    for (auto& x : x0) x = K(static_cast<int>(rng() % 7) - 3);
    Vec<K> t = m.apply(x0);
    auto s = solve(m, {t});
    ASSERT_TRUE(s.solutions[0].has_value());
    EXPECT_EQ(m.apply(*s.solutions[0]), t);

    Mat<K> sq = random_matrix<K>(rng, r, r, 2);
    Poly<K> f = minpoly(sq);
    EXPECT_TRUE(evaluate(f, sq).is_zero());
    EXPECT_TRUE(f.lead().is_one());
  }
}

TEST(Properties, RationalField) {
  std::mt19937 rng(20240601);
  property_round<Q>(rng);
}

TEST(Properties, PrimeField) {
  FieldScope scope(101);
  std::mt19937 rng(7);
  property_round<ModP>(rng);
}

TEST(Properties, MinpolyIsMinimal) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + rng() % 5;
    Mat<Q> m = random_matrix<Q>(rng, n, n, 1);
    Poly<Q> f = minpoly(m);
    // no proper monic divisor of smaller degree built from f's roots annihilates m
    for (auto& [root, mult] : roots(f)) {
      Poly<Q> g = f / Poly<Q>::linear(root);
      EXPECT_FALSE(evaluate(g, m).is_zero());
    }
  }
}
