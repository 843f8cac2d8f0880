#include <gtest/gtest.h>

#include <random>

#include "ucg/classify.hpp"
#include "ucg/oracle.hpp"

using namespace ucg;

namespace {

GeometryClass named(const Field& f, const std::string& name) {
  for (const auto& c : enumerate_classes(f, 2))
    if (c.name == name) return c;
  throw std::runtime_error("no class named " + name);
}

Matrix random_isometry(const QuadraticForm& q, std::mt19937_64& rng) {
  const Field& f = q.field();
  auto rand_vec = [&] {
    Vector v;
    for (std::size_t i = 0; i < q.dim(); ++i) v.push_back(random_scalar(f, rng));
    return v;
  };
  Vector u = rand_vec();
  while (q(u).is_zero()) u = rand_vec();
  Vector v = rand_vec();
  while (q(v) != q(u)) v = rand_vec();
  return extend_isometry(q, {u}, {v}, &rng);
}

bool contains(const std::vector<GeometryClass>& v, const GeometryClass& c) {
  return std::find(v.begin(), v.end(), c) != v.end();
}

}  // namespace

TEST(Counts, Closed) {
  for (std::size_t d = 1; d <= 4; ++d) EXPECT_EQ(enumerate_closed_classes(d).size(), 4u);
}

TEST(Counts, RealsBySignatureAndSignFlip) {
  const Field r = Field::rational();
  // d: number of signatures (neg >= 2, up to overall sign) times 9, minus the sign-flip identifications
  EXPECT_EQ(enumerate_classes(r, 1).size(), 5u);
  EXPECT_EQ(enumerate_classes(r, 2).size(), 9u);
  EXPECT_EQ(enumerate_classes(r, 3).size(), 14u);
  EXPECT_EQ(enumerate_classes(r, 4).size(), 18u);
}

TEST(Counts, OddFiniteFields) {
  for (std::int64_t p : {3, 5, 7}) {
    const Field f = Field::prime(p);
    EXPECT_EQ(enumerate_classes(f, 2).size(), 9u);
    EXPECT_EQ(enumerate_classes(f, 4).size(), 9u);
  }
  // even dim V: scaling by e keeps the form and identifies (p, l) with (ep, el)
  EXPECT_EQ(enumerate_classes(Field::prime(3), 1).size(), 5u);
  EXPECT_EQ(enumerate_classes(Field::prime(5), 1).size(), 5u);
  EXPECT_EQ(enumerate_classes(Field::prime(5), 3).size(), 10u);
}

TEST(Counts, CharTwo) {
  EXPECT_EQ(enumerate_classes(Field::char_two(2), 3).size(), 8u);
  EXPECT_EQ(enumerate_classes(Field::char_two(4), 3).size(), 8u);
  EXPECT_THROW(enumerate_classes(Field::char_two(2), 2), Error);
}

TEST(Counts, ApproxRejected) { EXPECT_THROW(enumerate_classes(Field::approx(1e-9), 2), Error); }

TEST(Representative, ClassifiesBack) {
  for (const Field& f : {Field::rational(), Field::prime(3), Field::prime(5), Field::char_two(2), Field::char_two(4)}) {
    for (std::size_t d : {1u, 2u, 3u}) {
      std::vector<GeometryClass> classes;
      try {
        classes = enumerate_classes(f, d);
      } catch (const Error&) {
        continue;
      }
      for (const auto& c : classes) {
        const Geometry g = representative(c);
        EXPECT_EQ(classify(g), c) << f.name() << " d=" << d;
        EXPECT_TRUE(is_nondegenerate_form(g.form()));
      }
    }
  }
}

TEST(Representative, RejectsImpossibleClasses) {
  GeometryClass c;
  c.field = "rational";
  c.geom_dim = 2;
  c.form = {FormInvariantKind::Signature, 4, 1};
  c.qP = c.qL = SquareClass::NonResidue;
  EXPECT_THROW(representative(c), Error);
  c.form = {FormInvariantKind::Signature, 4, 2};
  EXPECT_THROW(representative(c), Error);
  c.form = {FormInvariantKind::Arf};
  EXPECT_THROW(representative(c), Error);
}

TEST(Classify, InvariantUnderIsometries) {
  std::mt19937_64 rng(7);
  const Field f5 = Field::prime(5);
  for (const auto& c : enumerate_classes(f5, 2)) {
    const Geometry g = representative(c);
    for (int i = 0; i < 20; ++i) {
      const Matrix m = random_isometry(g.form(), rng);
      EXPECT_EQ(classify(Geometry(g.form(), m * g.P(), m * g.L())), c);
    }
  }
}

TEST(Classify, ScalingTheFormKeepsTheClass) {
  const Field f5 = Field::prime(5);
  const Scalar e = canonical_nonresidue(f5);
  for (const auto& c : enumerate_classes(f5, 2)) {
    const Geometry g = representative(c);
    const Geometry h(g.form().scaled(e), g.P(), g.L());
    EXPECT_EQ(classify(h), c);
  }
}

TEST(CayleyKlein, RealTable) {
  const CayleyKleinTable t = ck_table(Field::rational());
  EXPECT_EQ(t.names[0][0], "elliptic");
  EXPECT_EQ(t.names[0][1], "parabolic");
  EXPECT_EQ(t.names[0][2], "hyperbolic");
  EXPECT_EQ(t.names[1][0], "dual parabolic");
  EXPECT_EQ(t.names[1][1], "Laguerre/Galilei");
  EXPECT_EQ(t.names[1][2], "dual Minkowski");
  EXPECT_EQ(t.names[2][0], "dual hyperbolic");
  EXPECT_EQ(t.names[2][1], "Minkowski");
  EXPECT_EQ(t.names[2][2], "anti-de Sitter");
}

TEST(CayleyKlein, FiniteTableMatchesReal) {
  EXPECT_EQ(ck_table(Field::prime(5)).names, ck_table(Field::rational()).names);
  EXPECT_EQ(ck_table(Field::prime(3)).labels[0], "e");
  EXPECT_THROW(ck_table(Field::char_two(2)), Error);
}

TEST(CycleEquivalence, RealExamples) {
  const Field r = Field::rational();
  auto g = [&](const std::string& n) { return representative(named(r, n)); };
  EXPECT_TRUE(cycle_equivalent(g("elliptic"), g("elliptic")));
  EXPECT_TRUE(cycle_equivalent(g("dual hyperbolic"), g("anti-de Sitter")));
  EXPECT_FALSE(cycle_equivalent(g("elliptic"), g("hyperbolic")));
}

TEST(CycleEquivalence, RealPartners) {
  const Field r = Field::rational();
  EXPECT_TRUE(cycle_equivalence_partners(named(r, "elliptic")).empty());
  const auto mink = cycle_equivalence_partners(named(r, "Minkowski"));
  EXPECT_TRUE(contains(mink, named(r, "Minkowski")));
  const auto dh = cycle_equivalence_partners(named(r, "dual hyperbolic"));
  ASSERT_EQ(dh.size(), 1u);
  EXPECT_EQ(dh[0], named(r, "anti-de Sitter"));
}

TEST(CycleEquivalence, F5Partner) {
  const Field f5 = Field::prime(5);
  const auto parts = cycle_equivalence_partners(named(f5, "anti-de Sitter"));
  EXPECT_TRUE(contains(parts, named(f5, "dual hyperbolic")));
}

TEST(CycleEquivalence, IsAnEquivalenceRelation) {
  for (const Field& f : {Field::rational(), Field::prime(3), Field::prime(5)}) {
    std::vector<Geometry> gs;
    for (const auto& c : enumerate_classes(f, 2)) gs.push_back(representative(c));
    for (const auto& a : gs)
      for (const auto& b : gs) {
        EXPECT_EQ(cycle_equivalent(a, b), cycle_equivalent(b, a));
        for (const auto& c : gs)
          if (cycle_equivalent(a, b) && cycle_equivalent(b, c)) EXPECT_TRUE(cycle_equivalent(a, c));
      }
  }
}

TEST(CycleEquivalence, MatchesIsometrySearchOverF3) {
  const Field f3 = Field::prime(3);
  for (const auto& a : enumerate_classes(f3, 2))
    for (const auto& b : enumerate_classes(f3, 2)) {
      const Geometry ga = representative(a), gb = representative(b);
      EXPECT_EQ(cycle_equivalent(ga, gb), oracle::pointspace_similarity(ga, gb).has_value()) << a.name.value_or("?") << " / "
                                                                                 << b.name.value_or("?");
    }
}

TEST(CycleEquivalence, Preconditions) {
  const Geometry a = representative(enumerate_classes(Field::prime(3), 2)[0]);
  const Geometry b = representative(enumerate_classes(Field::prime(5), 2)[0]);
  const Geometry c = representative(enumerate_classes(Field::prime(3), 3)[0]);
  EXPECT_THROW(cycle_equivalent(a, b), Error);
  EXPECT_THROW(cycle_equivalent(a, c), Error);
}
