#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ucg/field.hpp"

using namespace ucg;

namespace {

std::set<std::int64_t> squares_mod(std::int64_t p) {
  std::set<std::int64_t> s;
  for (std::int64_t x = 1; x < p; ++x) s.insert(x * x % p);
  return s;
}

}  // namespace

TEST(SquareClass, ZeroAndSigns) {
  const Field q = Field::rational();
  EXPECT_EQ(square_class(q.zero()), SquareClass::Zero);
  EXPECT_EQ(square_class(parse_scalar(q, "-4/9")), SquareClass::NonResidue);
  EXPECT_EQ(square_class(parse_scalar(q, "7/3")), SquareClass::Unit);
}

TEST(SquareClass, MatchesEnumeratedSquares) {
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    const Field f = Field::prime(p);
    const auto sq = squares_mod(p);
    std::size_t units = 0;
    for (std::int64_t x = 1; x < p; ++x) {
      const SquareClass c = square_class(f.from_int(x));
      EXPECT_EQ(c == SquareClass::Unit, sq.count(x) == 1) << p << " " << x;
      units += c == SquareClass::Unit;
    }
    EXPECT_EQ(units, static_cast<std::size_t>((p - 1) / 2));
  }
  EXPECT_EQ(square_class(Field::prime(7).from_int(3)), SquareClass::NonResidue);
}

TEST(SquareClass, Multiplicative) {
  for (std::int64_t p : {3, 5, 7}) {
    const Field f = Field::prime(p);
    for (const auto& x : f.elements())
      for (const auto& y : f.elements()) EXPECT_EQ(square_class(x * y), square_class(x) * square_class(y));
  }
}

TEST(SquareClass, CharTwoEverythingIsSquare) {
  for (int q : {2, 4}) {
    const Field f = Field::char_two(q);
    for (const auto& x : f.elements())
      if (!x.is_zero()) EXPECT_EQ(square_class(x), SquareClass::Unit);
  }
}

TEST(SquareClass, ApproxRejected) {
  const Field a = Field::approx();
  EXPECT_THROW(square_class(a.from_double(2.0)), Error);
}

TEST(Nonresidue, SmallestPerPrime) {
  EXPECT_EQ(canonical_nonresidue(Field::prime(3)).residue(), 2);
  EXPECT_EQ(canonical_nonresidue(Field::prime(5)).residue(), 2);
  EXPECT_EQ(canonical_nonresidue(Field::prime(7)).residue(), 3);
  for (std::int64_t p : {11, 13, 17, 19, 23}) {
    const auto sq = squares_mod(p);
    std::int64_t want = 1;
    while (sq.count(want)) ++want;
    EXPECT_EQ(canonical_nonresidue(Field::prime(p)).residue(), want) << p;
  }
  EXPECT_EQ(canonical_nonresidue(Field::rational()), Field::rational().from_int(-1));
  EXPECT_THROW(canonical_nonresidue(Field::char_two(2)), Error);
}

TEST(Sqrt, FiniteFields) {
  const Field f7 = Field::prime(7);
  ASSERT_TRUE(sqrt_if_square(f7.from_int(4)));
  EXPECT_EQ(sqrt_if_square(f7.from_int(4))->residue(), 2);
  EXPECT_FALSE(sqrt_if_square(f7.from_int(3)));
  const Field f4 = Field::char_two(4);
  EXPECT_EQ(*sqrt_if_square(f4.one()), f4.one());
  for (const auto& x : f4.elements()) {
    auto r = sqrt_if_square(x);
    ASSERT_TRUE(r);
    EXPECT_EQ(*r * *r, x);
  }
  for (std::int64_t p : {11, 13, 101}) {
    const Field f = Field::prime(p);
    for (const auto& x : f.elements()) {
      auto r = sqrt_if_square(x);
      EXPECT_EQ(r.has_value(), square_class(x) != SquareClass::NonResidue);
      if (r) EXPECT_EQ(*r * *r, x);
    }
  }
}

TEST(Sqrt, Rationals) {
  const Field q = Field::rational();
  EXPECT_EQ(*sqrt_if_square(parse_scalar(q, "9/4")), parse_scalar(q, "3/2"));
  EXPECT_FALSE(sqrt_if_square(q.from_int(2)));
  EXPECT_FALSE(sqrt_if_square(q.from_int(-1)));
}

TEST(FieldAxioms, RandomTriples) {
  std::mt19937_64 rng(7);
  for (const char* spec : {"fp:3", "fp:5", "fp:7", "fp:11", "f2", "f4", "rational"}) {
    const Field f = parse_field(spec);
    for (int k = 0; k < 1000; ++k) {
      const Scalar a = random_scalar(f, rng), b = random_scalar(f, rng), c = random_scalar(f, rng);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a + (-a), f.zero());
      if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), f.one());
    }
  }
}

TEST(F4, Structure) {
  const Field f = Field::char_two(4);
  const Scalar t = parse_scalar(f, "t");
  EXPECT_EQ(t * t + t + f.one(), f.zero());
  EXPECT_EQ(t + t, f.zero());
  EXPECT_EQ(t * t, parse_scalar(f, "t+1"));
  EXPECT_EQ(f.elements().size(), 4u);
}

TEST(Field, MixedFieldsThrow) {
  EXPECT_THROW(Field::prime(3).one() + Field::prime(5).one(), Error);
  EXPECT_THROW(Field::prime(9), Error);
  EXPECT_THROW(Field::prime(2), Error);
  EXPECT_THROW(Field::char_two(8), Error);
}

TEST(Parse, FieldSpecs) {
  EXPECT_EQ(parse_field("fp:7").order(), 7);
  EXPECT_EQ(parse_field("f4").order(), 4);
  EXPECT_EQ(parse_field("rational").kind(), FieldKind::RationalAsReal);
  EXPECT_THROW(parse_field("fp:x"), Error);
  EXPECT_THROW(parse_field("complex"), Error);
  const Field f7 = Field::prime(7);
  EXPECT_EQ(parse_scalar(f7, "-1").residue(), 6);
  EXPECT_EQ(parse_scalar(f7, "1/2").residue(), 4);
  EXPECT_EQ(parse_scalar(f7, "e").residue(), 3);
}

TEST(Approx, ToleranceEquality) {
  const Field a = Field::approx(1e-9);
  EXPECT_EQ(a.from_double(1.0), a.from_double(1.0 + 1e-12));
  EXPECT_NE(a.from_double(1.0), a.from_double(1.0 + 1e-6));
}
