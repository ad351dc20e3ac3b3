#include <gtest/gtest.h>

#include "arqlab/algcore.hpp"
#include "oracles.hpp"

using namespace arqlab;
using namespace arqlab::algcore;
using exactla::ModP;
using exactla::Rational;
using exactla::Subspace;
using exactla::Vec;
using oracle::graded_dimension_oracle;

namespace {

template <class K>
struct QuiverBuilder {
  Quiver q;
  std::vector<Relation<K>> rels;

  explicit QuiverBuilder(int n) { q.n = n; }
  QuiverBuilder& arrow(const std::string& name, int s, int t) {
    q.arrows.push_back({name, s - 1, t - 1});
    return *this;
  }
  std::vector<int> path(std::initializer_list<const char*> names) const {
    std::vector<int> p;
    for (auto n : names) p.push_back(q.arrow_index(n));
    return p;
  }
  QuiverBuilder& zero(std::initializer_list<const char*> names) {
    rels.push_back({{{K(1), path(names)}}});
    return *this;
  }
  QuiverBuilder& commute(std::initializer_list<const char*> a, std::initializer_list<const char*> b) {
    rels.push_back({{{K(1), path(a)}, {K(-1), path(b)}}});
    return *this;
  }
  typename Algebra<K>::Ptr build() const { return bound_quiver_algebra_auto<K>(q, rels); }
};

template <class K>
QuiverBuilder<K> example3() {
  QuiverBuilder<K> b(6);
  b.arrow("a1", 1, 2).arrow("b1", 1, 3).arrow("a2", 2, 4).arrow("b2", 3, 4);
  b.arrow("b3", 4, 5).arrow("a3", 4, 6).arrow("b4", 5, 1).arrow("a4", 6, 1);
  b.commute({"a1", "a2"}, {"b1", "b2"}).commute({"a3", "a4"}, {"b3", "b4"});
  b.zero({"a2", "b3"}).zero({"b2", "a3"}).zero({"a4", "b1"}).zero({"b4", "a1"});
  return b;
}

}  // namespace

TEST(BoundQuiver, LinearA2) {
  QuiverBuilder<Rational> b(2);
  b.arrow("a", 1, 2);
  auto a = b.build();
  EXPECT_EQ(a->dim(), 3u);
  EXPECT_EQ(a->loewy_length(), 2);
  EXPECT_TRUE(a->is_associative());
  EXPECT_EQ(a->cartan_matrix(), (std::vector<std::vector<int>>{{1, 1}, {0, 1}}));
  EXPECT_TRUE(a->gabriel_quiver().is_acyclic());
}

TEST(BoundQuiver, DualNumbers) {
  QuiverBuilder<Rational> b(1);
  b.arrow("x", 1, 1).zero({"x", "x"});
  auto a = b.build();
  EXPECT_EQ(a->dim(), 2u);
  EXPECT_EQ(a->cartan_matrix(), (std::vector<std::vector<int>>{{2}}));
  auto q = quotient(radical_ideal<Rational>(a));
  EXPECT_EQ(q.algebra->dim(), 1u);
  EXPECT_EQ(quotient(SubspaceIdeal<Rational>::zero(a)).algebra->dim(), 2u);
}

TEST(BoundQuiver, SemisimplePair) {
  QuiverBuilder<Rational> b(2);
  auto a = b.build();
  EXPECT_EQ(a->dim(), 2u);
  EXPECT_EQ(a->cartan_matrix(), (std::vector<std::vector<int>>{{1, 0}, {0, 1}}));
  EXPECT_EQ(a->radical_data().radical().dim(), 0u);
  EXPECT_EQ(corner<Rational>(a, {1}).algebra->dim(), 1u);
  EXPECT_EQ(corner<Rational>(a, {0, 1}).algebra->dim(), 2u);
}

TEST(BoundQuiver, Errors) {
  QuiverBuilder<Rational> loop(1);
  loop.arrow("x", 1, 1);
  EXPECT_THROW(bound_quiver_algebra_auto<Rational>(loop.q, loop.rels, "", 8), Error);
  try {
    bound_quiver_algebra_auto<Rational>(loop.q, loop.rels, "", 8);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotFiniteDimensional);
  }

  QuiverBuilder<Rational> bad(3);
  bad.arrow("a", 1, 2).arrow("b", 2, 3).arrow("c", 1, 3);
  bad.rels.push_back({{{Rational(1), bad.path({"b", "a"})}}});
  try {
    bad.build();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MalformedRelation);
  }

  QuiverBuilder<Rational> cyc(2);
  cyc.arrow("a", 1, 2).arrow("b", 2, 1).zero({"a", "b", "a"});
  try {
    bound_quiver_algebra<Rational>(cyc.q, cyc.rels, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotFiniteDimensional);
  }
  EXPECT_NO_THROW(bound_quiver_algebra<Rational>(cyc.q, cyc.rels, 4));
}

TEST(Example3, DimensionAgainstOracle) {
  auto b = example3<Rational>();
  auto a = b.build();
  EXPECT_EQ(static_cast<int>(a->dim()), graded_dimension_oracle(b.q, b.rels));
  EXPECT_EQ(a->dim(), 20u);
  std::vector<int> proj;
  for (auto& row : a->cartan_matrix()) {
    int s = 0;
    for (int c : row) s += c;
    proj.push_back(s);
  }
  EXPECT_EQ(proj, (std::vector<int>{4, 3, 3, 4, 3, 3}));
  EXPECT_EQ(a->loewy_length(), 3);
  EXPECT_TRUE(a->is_associative());
}

TEST(Example3, GabrielQuiverRoundTrip) {
  auto b = example3<Rational>();
  auto a = b.build();
  auto g = a->gabriel_quiver();
  EXPECT_EQ(g.arrows(), 8);
  for (const auto& ar : b.q.arrows) EXPECT_EQ(g.counts[ar.src][ar.tgt], 1);
  // radical = span of the non-idempotent path basis elements
  Subspace<Rational> paths(a->dim());
  for (std::size_t i = 0; i < a->dim(); ++i) {
    if (a->element(i).label[0] != 'e') paths.add(a->unit(static_cast<int>(i)));
  }
  EXPECT_EQ(paths, a->radical_data().radical());
}

TEST(Example3, PrimeField) {
  exactla::FieldScope scope(101);
  auto a = example3<ModP>().build();
  EXPECT_EQ(a->dim(), 20u);
  EXPECT_EQ(a->loewy_length(), 3);
}

TEST(Radical, CharacteristicTooSmall) {
  exactla::FieldScope scope(2);
  QuiverBuilder<ModP> b(1);
  b.arrow("x", 1, 1).zero({"x", "x"});
  auto a = b.build();
  try {
    a->radical_data();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CharacteristicTooSmall);
  }
}

TEST(Cartan, CyclicNakayama) {
  QuiverBuilder<Rational> b(3);
  b.arrow("a1", 1, 2).arrow("a2", 2, 3).arrow("a3", 3, 1);
  b.zero({"a1", "a2"}).zero({"a2", "a3"}).zero({"a3", "a1"});
  auto a = b.build();
  EXPECT_EQ(a->dim(), 6u);
  auto c = a->cartan_matrix();
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(c[i][i], 1);
    EXPECT_EQ(c[i][(i + 1) % 3], 1);
    EXPECT_EQ(c[i][(i + 2) % 3], 0);
  }
}

TEST(Opposite, InvolutionAndTranspose) {
  auto a = example3<Rational>().build();
  auto o = a->op();
  EXPECT_EQ(o->op().get(), a.get());
  EXPECT_TRUE(o->is_associative());
  auto c = a->cartan_matrix(), co = o->cartan_matrix();
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) EXPECT_EQ(c[i][j], co[j][i]);
  }
  EXPECT_EQ(o->loewy_length(), 3);
}

TEST(Ideals, GeneratedQuotientCorner) {
  auto a = example3<Rational>().build();
  auto arrow = a->presentation()->arrow_element[0];
  auto i = ideal_generated<Rational>(a, {a->unit(arrow)});
  EXPECT_TRUE(i.is_two_sided());
  auto q = quotient(i);
  EXPECT_EQ(q.algebra->dim() + i.dim(), a->dim());
  EXPECT_TRUE(q.algebra->is_associative());
  EXPECT_EQ(q.project(a->unit(arrow)), Vec<Rational>(q.algebra->dim(), Rational(0)));

  auto half = SubspaceIdeal<Rational>::span(a, {a->unit(a->idempotent(0))});
  try {
    quotient(half);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotTwoSided);
  }

  std::vector<int> e{0, 3, 4};
  auto c = corner<Rational>(a, e);
  std::size_t expect = 0;
  for (int s : e) {
    for (int t : e) expect += a->block_dim(s, t);
  }
  EXPECT_EQ(c.algebra->dim(), expect);
  EXPECT_TRUE(c.algebra->is_associative());
  EXPECT_EQ(corner<Rational>(a, {0, 1, 2, 3, 4, 5}).algebra->dim(), a->dim());
}

TEST(Presentation, ExtractedFromStructureConstants) {
  auto a = example3<Rational>().build();
  auto c = corner<Rational>(a, {0, 3});
  auto p = extract_presentation(*c.algebra);
  auto rebuilt = bound_quiver_algebra<Rational>(p.quiver, p.relations, p.length_bound);
  EXPECT_EQ(rebuilt->dim(), c.algebra->dim());
  EXPECT_EQ(rebuilt->gabriel_quiver(), c.algebra->gabriel_quiver());
  EXPECT_EQ(rebuilt->cartan_matrix(), c.algebra->cartan_matrix());

  auto q = quotient(radical_ideal<Rational>(a));
  EXPECT_TRUE(extract_presentation(*q.algebra).relations.empty());
}
