#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "arqlab/algcore.hpp"
#include "arqlab/modcat.hpp"

using namespace arqlab;
using namespace arqlab::modcat;
using algcore::AlgebraPtr;
using exactla::ModP;
using exactla::Rational;
using Q = Rational;

namespace {

AlgebraPtr<Q> load(const std::string& text) { return algcore::build_algebra<Q>(algcore::parse_algebra_file(text)); }

AlgebraPtr<Q> example3() {
  std::ifstream in(ARQLAB_SAMPLES_DIR "/example3.alg");
  std::stringstream ss;
  ss << in.rdbuf();
  return load(ss.str());
}

AlgebraPtr<Q> dual_numbers() { return load("arqlab v1\nvertices 1\narrow x 1 1\nrelation x*x\n"); }
AlgebraPtr<Q> linear_a2() { return load("arqlab v1\nvertices 2\narrow a 2 1\n"); }
AlgebraPtr<Q> semisimple2() { return load("arqlab v1\nvertices 2\n"); }

// Full intertwining system over every basis element, solved directly.
template <class K>
std::size_t hom_dim_oracle(const Module<K>& m, const Module<K>& n) {
  const auto& a = m.algebra();
  const int nv = m.num_vertices();
  std::vector<int> off(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dim(v) * m.dim(v);
  if (off[nv] == 0) return 0;
  std::vector<Vec<K>> rows;
  for (std::size_t b = 0; b < a->dim(); ++b) {
    int s = a->element(b).src, t = a->element(b).tgt;
    const auto& am = m.act(b);
    const auto& an = n.act(b);
    for (int i = 0; i < n.dim(t); ++i) {
      for (int j = 0; j < m.dim(s); ++j) {
        Vec<K> row(off[nv], K(0));
        for (int k = 0; k < m.dim(t); ++k) row[off[t] + i * m.dim(t) + k] += am(k, j);
        for (int k = 0; k < n.dim(s); ++k) row[off[s] + k * m.dim(s) + j] -= an(i, k);
        rows.push_back(row);
      }
    }
  }
  return exactla::kernel(Mat<K>::from_rows(rows, off[nv])).size();
}

// Same module in a random basis.
template <class K>
Module<K> conjugate(const Module<K>& m, std::mt19937& rng) {
  std::vector<Mat<K>> t, ti;
  for (int v = 0; v < m.num_vertices(); ++v) {
    while (true) {
      Mat<K> x(m.dim(v), m.dim(v));
      for (int i = 0; i < m.dim(v); ++i) {
        for (int j = 0; j < m.dim(v); ++j) x(i, j) = K(static_cast<int>(rng() % 5) - 2);
      }
      auto inv = exactla::inverse(x);
      if (inv) {
        t.push_back(x);
        ti.push_back(*inv);
        break;
      }
    }
  }
  std::vector<Mat<K>> act;
  for (std::size_t b = 0; b < m.algebra()->dim(); ++b) {
    const auto& e = m.algebra()->element(b);
    act.push_back(t[e.tgt] * m.act(b) * ti[e.src]);
  }
  return Module<K>(m.algebra(), m.dims(), act);
}

std::vector<int> unit_dims(int n, int v) {
  std::vector<int> d(n, 0);
  d[v] = 1;
  return d;
}

}  // namespace

TEST(StandardModules, Example3Projectives) {
  auto a = example3();
  auto p1 = projective<Q>(a, 0);
  EXPECT_EQ(p1.total(), 4);
  EXPECT_TRUE(p1.satisfies_axioms());
  auto s = series(p1);
  EXPECT_EQ(s.top.dims(), unit_dims(6, 0));
  EXPECT_EQ(s.socle.dims(), unit_dims(6, 3));
  for (int i = 0; i < 6; ++i) {
    EXPECT_TRUE(projective<Q>(a, i).satisfies_axioms());
    EXPECT_TRUE(injective<Q>(a, i).satisfies_axioms());
    EXPECT_EQ(injective<Q>(a, i).algebra(), a);
  }
}

TEST(StandardModules, SemisimpleAndLinear) {
  auto ss = semisimple2();
  EXPECT_TRUE(find_iso(projective<Q>(ss, 0), simple<Q>(ss, 0)).has_value());
  auto a2 = linear_a2();
  auto i1 = injective<Q>(a2, 0);
  EXPECT_EQ(i1.total(), 2);
  EXPECT_TRUE(is_uniserial(i1));
  EXPECT_EQ(projective<Q>(a2, 0).total(), 1);
  EXPECT_FALSE(is_injective(projective<Q>(a2, 0)));
}

TEST(Hom, SimplesAndProjectives) {
  auto a = example3();
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) EXPECT_EQ(hom(simple<Q>(a, i), simple<Q>(a, j)).dim(), i == j ? 1u : 0u);
  }
  auto p1 = projective<Q>(a, 0), p4 = projective<Q>(a, 3);
  auto h = hom(p1, p4);
  ASSERT_GE(h.dim(), 1u);
  bool found = false;
  for (const auto& f : h.basis) {
    EXPECT_TRUE(is_homomorphism(p1, p4, f));
    auto img = image_of(f);
    std::vector<int> d;
    for (auto& v : img) d.push_back(static_cast<int>(v.size()));
    found = found || d == unit_dims(6, 0);
  }
  EXPECT_TRUE(found);
}

TEST(Hom, AgreesWithFullSystemOracle) {
  auto a = example3();
  std::mt19937 rng(11);
  std::vector<Module<Q>> ms;
  for (int i = 0; i < 6; ++i) {
    ms.push_back(projective<Q>(a, i));
    ms.push_back(simple<Q>(a, i));
    ms.push_back(radical_module(projective<Q>(a, i)));
  }
  ms.push_back(direct_sum(simple<Q>(a, 0), projective<Q>(a, 2)));
  for (const auto& m : ms) {
    for (const auto& n : ms) {
      std::size_t d = hom(m, n).dim();
      EXPECT_EQ(d, hom_dim_oracle(m, n));
      EXPECT_EQ(hom(conjugate(m, rng), conjugate(n, rng)).dim(), d);
    }
  }
}

TEST(EndRadical, Examples) {
  auto a = example3();
  EXPECT_EQ(end_radical(simple<Q>(a, 2)).basis.size(), 0u);
  auto d = dual_numbers();
  EXPECT_EQ(end_radical(projective<Q>(d, 0)).basis.size(), 1u);
  auto er = end_radical(projective<Q>(a, 0));
  EXPECT_EQ(er.basis.size(), er.end.dim() - 1);
}

TEST(Decompose, Examples) {
  auto a = example3();
  auto s1 = simple<Q>(a, 0), s2 = simple<Q>(a, 1);
  EXPECT_TRUE(is_indecomposable(s1));
  EXPECT_FALSE(is_indecomposable(direct_sum(s1, s1)));
  auto two = decompose(direct_sum(s2, s1));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].module.dims(), unit_dims(6, 1));
  EXPECT_EQ(two[1].module.dims(), unit_dims(6, 0));
  auto dbl = decompose(direct_sum(s1, s1));
  ASSERT_EQ(dbl.size(), 1u);
  EXPECT_EQ(dbl[0].multiplicity, 2);

  auto reg = decompose(regular_module<Q>(a));
  ASSERT_EQ(reg.size(), 6u);
  std::vector<bool> seen(6, false);
  for (const auto& s : reg) {
    EXPECT_EQ(s.multiplicity, 1);
    int v = projective_vertex(s.module);
    ASSERT_GE(v, 0);
    seen[v] = true;
    auto again = decompose(s.module);
    ASSERT_EQ(again.size(), 1u);
    EXPECT_TRUE(find_iso(again[0].module, s.module).has_value());
  }
  EXPECT_EQ(std::count(seen.begin(), seen.end(), true), 6);
}

TEST(Decompose, ScrambledSum) {
  auto a = example3();
  std::mt19937 rng(5);
  auto m = conjugate(direct_sum(direct_sum(projective<Q>(a, 0), simple<Q>(a, 3)), radical_module(projective<Q>(a, 0))), rng);
  auto parts = decompose(m);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0].module.total(), 1);
  EXPECT_EQ(parts[1].module.total(), 3);
  EXPECT_EQ(parts[2].module.total(), 4);
}

TEST(FindIso, Examples) {
  auto a = example3();
  std::mt19937 rng(3);
  auto p = projective<Q>(a, 3);
  auto id = find_iso(p, p);
  ASSERT_TRUE(id.has_value());
  EXPECT_TRUE(id->is_iso());
  auto c = conjugate(p, rng);
  auto f = find_iso(p, c);
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(is_homomorphism(p, c, *f));
  EXPECT_FALSE(find_iso(p, projective<Q>(a, 0)).has_value());
  EXPECT_FALSE(find_iso(simple<Q>(a, 0), simple<Q>(a, 1)).has_value());
  auto sum = direct_sum(simple<Q>(a, 0), projective<Q>(a, 1));
  EXPECT_TRUE(find_iso(sum, conjugate(sum, rng)).has_value());
}

TEST(Series, DualNumbersAndDuality) {
  auto d = dual_numbers();
  auto s = series(projective<Q>(d, 0));
  EXPECT_EQ(s.top.total(), 1);
  EXPECT_EQ(s.socle.total(), 1);
  EXPECT_EQ(s.radical.total(), 1);
  auto a = example3();
  std::vector<Module<Q>> ms;
  for (int i = 0; i < 6; ++i) {
    ms.push_back(projective<Q>(a, i));
    ms.push_back(radical_module(projective<Q>(a, i)));
    ms.push_back(socle_factor(projective<Q>(a, i)));
  }
  for (const auto& m : ms) {
    EXPECT_EQ(series(m).socle.dims(), series(dual(m)).top.dims());
    auto dd = dual(dual(m));
    EXPECT_EQ(dd.algebra(), a);
    EXPECT_TRUE(find_iso(m, dd).has_value());
  }
  auto sim = dual(simple<Q>(a, 4));
  EXPECT_EQ(sim.dims(), unit_dims(6, 4));
}

TEST(Presentations, Examples) {
  auto a = example3();
  auto mp = minimal_presentation(projective<Q>(a, 2));
  EXPECT_EQ(mp.p0_vertices, std::vector<int>{2});
  EXPECT_TRUE(mp.p1_vertices.empty());
  auto d = dual_numbers();
  auto ms = minimal_presentation(simple<Q>(d, 0));
  EXPECT_EQ(ms.p0_vertices, std::vector<int>{0});
  EXPECT_EQ(ms.p1_vertices, std::vector<int>{0});
  EXPECT_TRUE(is_homomorphism(ms.p1, ms.p0, ms.d1));
  EXPECT_TRUE(compose(ms.pi, ms.d1).is_zero());

  auto m = socle_factor(projective<Q>(a, 0));
  auto pm = minimal_presentation(m);
  EXPECT_TRUE(is_homomorphism(pm.p1, pm.p0, pm.d1));
  EXPECT_TRUE(is_homomorphism(pm.p0, m, pm.pi));
  EXPECT_TRUE(compose(pm.pi, pm.d1).is_zero());
  auto cov = projective_cover(m);
  EXPECT_EQ(cov.vertices, std::vector<int>{0});
}

TEST(Selfinjective, Examples) {
  EXPECT_TRUE(is_selfinjective<Q>(example3()));
  EXPECT_TRUE(is_selfinjective<Q>(semisimple2()));
  EXPECT_FALSE(is_selfinjective<Q>(linear_a2()));
  EXPECT_TRUE(is_selfinjective<Q>(dual_numbers()));
}

TEST(Representation, FromArrowMatrices) {
  auto a = linear_a2();
  Mat<Q> one(1, 1);
  one(0, 0) = Q(1);
  auto m = from_representation<Q>(a, {1, 1}, {one});
  EXPECT_TRUE(find_iso(m, projective<Q>(a, 1)).has_value());
  auto e = example3();
  std::vector<Mat<Q>> maps;
  for (int k = 0; k < 8; ++k) maps.push_back(one);
  EXPECT_THROW(from_representation<Q>(e, {1, 1, 1, 1, 1, 1}, maps), Error);
}

TEST(PrimeField, Example3Modules) {
  exactla::FieldScope scope(101);
  std::ifstream in(ARQLAB_SAMPLES_DIR "/example3.alg");
  std::stringstream ss;
  ss << in.rdbuf();
  auto f = algcore::parse_algebra_file(ss.str());
  f.field = exactla::FieldSpec::prime(101);
  auto a = algcore::build_algebra<ModP>(f);
  EXPECT_TRUE(is_selfinjective<ModP>(a));
  auto reg = decompose(regular_module<ModP>(a));
  EXPECT_EQ(reg.size(), 6u);
}
