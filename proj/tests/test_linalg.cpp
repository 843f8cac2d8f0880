#include <gtest/gtest.h>

#include <random>

#include "ucg/enumerate.hpp"
#include "ucg/linalg.hpp"

using namespace ucg;

TEST(Linalg, RankAndNullspace) {
  const Field f = Field::prime(5);
  std::vector<Vector> rows{make_vector(f, {1, 2, 3}), make_vector(f, {0, 1, 1}), make_vector(f, {1, 3, 4})};
  // third row = first + second
  EXPECT_EQ(rank(rows), 2u);
  Matrix m = Matrix::from_rows(f, rows, 3);
  auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 1u);
  for (const auto& r : rows) {
    Scalar s = f.zero();
    for (std::size_t i = 0; i < 3; ++i) s += r[i] * ns[0][i];
    EXPECT_TRUE(s.is_zero());
  }
}

TEST(Linalg, DeterminantAndInverse) {
  std::mt19937_64 rng(3);
  for (const char* spec : {"fp:7", "rational", "f4"}) {
    const Field f = parse_field(spec);
    for (int k = 0; k < 50; ++k) {
      Matrix m(f, 4, 4);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = random_scalar(f, rng);
      auto inv = inverse(m);
      EXPECT_EQ(inv.has_value(), !determinant(m).is_zero());
      if (inv) EXPECT_EQ(m * *inv, Matrix::identity(f, 4));
    }
  }
}

TEST(Linalg, SolveAndCoordinates) {
  const Field q = Field::rational();
  Matrix m = Matrix::from_rows(q, {make_vector(q, {2, 1}), make_vector(q, {1, 3})}, 2);
  auto x = solve(m, make_vector(q, {3, 4}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, make_vector(q, {1, 1}));
  std::vector<Vector> basis{make_vector(q, {1, 0, 1}), make_vector(q, {0, 1, 1})};
  EXPECT_TRUE(in_span(basis, make_vector(q, {2, 3, 5})));
  EXPECT_FALSE(in_span(basis, make_vector(q, {0, 0, 1})));
}

TEST(Enumerate, ProjectivePointCounts) {
  for (std::int64_t p : {2, 3, 5}) {
    const Field f = p == 2 ? Field::char_two(2) : Field::prime(p);
    for (std::size_t n = 1; n <= 4; ++n) {
      std::size_t want = 0, pk = 1;
      for (std::size_t k = 0; k < n; ++k, pk *= static_cast<std::size_t>(p)) want += pk;
      EXPECT_EQ(projective_points(f, n).size(), want);
    }
  }
}

TEST(Enumerate, NormalizationIsIdempotent) {
  const Field f = Field::prime(7);
  for (const auto& v : projective_points(f, 3)) {
    EXPECT_EQ(normalize(v), v);
    EXPECT_EQ(normalize(f.from_int(3) * v), v);
  }
}

TEST(Enumerate, VectorCodeIsInjective) {
  const Field f = Field::prime(3);
  std::set<std::int64_t> codes;
  std::size_t n = 0;
  for_each_vector(f, 4, [&](const Vector& v) {
    codes.insert(vector_code(v));
    ++n;
  });
  EXPECT_EQ(codes.size(), n);
  EXPECT_EQ(n, 81u);
}
