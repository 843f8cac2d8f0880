#include <gtest/gtest.h>

#include <random>

#include "ucg/oracle.hpp"
#include "ucg/quadform.hpp"

using namespace ucg;

namespace {

QuadraticForm terms(const Field& f, std::size_t n, std::initializer_list<std::tuple<int, int, int>> ts) {
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> t;
  for (auto [i, j, c] : ts) t.emplace_back(i, j, f.from_int(c));
  return QuadraticForm::from_terms(f, n, t);
}

}  // namespace

TEST(Bilinear, SmallGrams) {
  const Field f5 = Field::prime(5);
  EXPECT_EQ(assoc_bilinear(QuadraticForm::diagonal(f5, {1})).matrix()(0, 0), f5.from_int(2));
  const QuadraticForm xy = terms(f5, 2, {{0, 1, 1}});
  const Matrix& g = assoc_bilinear(xy).matrix();
  EXPECT_TRUE(g(0, 0).is_zero());
  EXPECT_TRUE(g(1, 1).is_zero());
  EXPECT_TRUE(g(0, 1).is_one());
  EXPECT_TRUE(g(1, 0).is_one());
}

TEST(Bilinear, CharTwoRadicalVector) {
  const Field f2 = Field::char_two(2);
  const QuadraticForm q = terms(f2, 3, {{0, 0, 1}, {1, 2, 1}});
  const auto b = assoc_bilinear(q);
  for_each_vector(f2, 3, [&](const Vector& u) { EXPECT_TRUE(b(make_vector(f2, {1, 0, 0}), u).is_zero()); });
  const auto rad = bilinear_radical(q);
  ASSERT_EQ(rad.size(), 1u);
  EXPECT_EQ(normalize(rad[0]), make_vector(f2, {1, 0, 0}));
  EXPECT_TRUE(is_nondegenerate_form(q));
}

TEST(Bilinear, HalfForm) {
  const Field q = Field::rational();
  const auto b = half_bilinear(QuadraticForm::diagonal(q, {1, -1}));
  EXPECT_EQ(b(make_vector(q, {1, 0}), make_vector(q, {1, 0})), q.one());
  const QuadraticForm f = terms(q, 4, {{0, 0, 1}, {1, 1, 1}, {2, 3, -1}});
  EXPECT_EQ(half_bilinear(f)(unit_vector(q, 4, 2), unit_vector(q, 4, 3)), parse_scalar(q, "-1/2"));
  EXPECT_EQ(half_bilinear(QuadraticForm::diagonal(q, {1, 1, -1}))(make_vector(q, {1, 1, 1}), make_vector(q, {1, 0, 0})),
            q.one());
  EXPECT_THROW(half_bilinear(terms(Field::char_two(2), 2, {{0, 1, 1}})), Error);
}

TEST(Radical, Examples) {
  const Field f5 = Field::prime(5);
  EXPECT_TRUE(bilinear_radical(QuadraticForm::diagonal(f5, {1, 1, -1})).empty());
  const auto rad = bilinear_radical(QuadraticForm::diagonal(f5, {1, 0}));
  ASSERT_EQ(rad.size(), 1u);
  EXPECT_EQ(normalize(rad[0]), make_vector(f5, {0, 1}));
  EXPECT_FALSE(is_nondegenerate_form(QuadraticForm::diagonal(f5, {1, 0})));
  EXPECT_TRUE(is_nondegenerate_form(QuadraticForm::diagonal(Field::prime(7), {1, 1, -1})));
}

TEST(Diagonalize, TransportedFormIsDiagonal) {
  std::mt19937_64 rng(11);
  for (const char* spec : {"fp:3", "fp:5", "fp:7", "rational"}) {
    const Field f = parse_field(spec);
    for (int k = 0; k < 40; ++k) {
      std::vector<std::tuple<std::size_t, std::size_t, Scalar>> t;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j) t.emplace_back(i, j, random_scalar(f, rng));
      const QuadraticForm q = QuadraticForm::from_terms(f, 4, t);
      const Diagonalization d = diagonalize(q);
      ASSERT_EQ(d.basis.size(), 4u);
      EXPECT_TRUE(linearly_independent(d.basis));
      for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(q(d.basis[i]), d.entries[i]);
        for (std::size_t j = i + 1; j < 4; ++j) EXPECT_TRUE(q.polar(d.basis[i], d.basis[j]).is_zero());
      }
      if (is_nondegenerate_form(q)) {
        EXPECT_TRUE(isometric(q, QuadraticForm::diagonal(f, d.entries)));
        EXPECT_EQ(det_class(QuadraticForm::diagonal(f, d.entries)), det_class(q));
      }
    }
  }
}

TEST(Diagonalize, Examples) {
  const Field q = Field::rational();
  const auto s = signature(terms(q, 4, {{0, 0, 1}, {1, 1, 1}, {2, 3, -1}}));
  EXPECT_EQ(s.positive, 3u);
  EXPECT_EQ(s.negative, 1u);
  const Field f5 = Field::prime(5);
  const auto d = diagonalize(QuadraticForm::diagonal(f5, {2, 3}));
  EXPECT_EQ(d.entries, (std::vector<Scalar>{f5.from_int(2), f5.from_int(3)}));
  EXPECT_EQ(d.basis[0], unit_vector(f5, 2, 0));
  const Field f7 = Field::prime(7);
  const auto e = diagonalize(terms(f7, 2, {{0, 1, 1}}));
  EXPECT_EQ(square_class(e.entries[0]) * square_class(e.entries[1]), square_class(f7.from_int(-1)));
  EXPECT_THROW(diagonalize(terms(Field::char_two(2), 2, {{0, 1, 1}})), Error);
}

TEST(GenOrthoBasis, Examples) {
  const Field f5 = Field::prime(5);
  const auto b = generalized_orthogonal_basis(QuadraticForm::diagonal(f5, {1, -1}));
  EXPECT_EQ(b.vectors.size(), 2u);

  const Field f7 = Field::prime(7);
  const QuadraticForm q7 = QuadraticForm::diagonal(f7, {1, -1, 1});
  const Vector s = make_vector(f7, {1, 1, 0});
  const auto b7 = generalized_orthogonal_basis(q7, {s});
  ASSERT_EQ(b7.vectors.size(), 3u);
  ASSERT_EQ(b7.couples.size(), 1u);
  const auto [i, j] = b7.couples[0];
  EXPECT_TRUE(b7.vectors[i] == s || b7.vectors[j] == s);
  EXPECT_TRUE(q7.polar(b7.vectors[i], b7.vectors[j]).is_one());

  const Field f2 = Field::char_two(2);
  const QuadraticForm a = terms(f2, 2, {{0, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  const auto b2 = generalized_orthogonal_basis(a, {make_vector(f2, {1, 0})});
  ASSERT_EQ(b2.couples.size(), 1u);
  EXPECT_EQ(b2.vectors[0], make_vector(f2, {1, 0}));
  EXPECT_EQ(b2.vectors[1], make_vector(f2, {0, 1}));
}

TEST(GenOrthoBasis, Rejections) {
  const Field f3 = Field::prime(3);
  const QuadraticForm q = QuadraticForm::diagonal(f3, {1, 1, 1});
  try {
    generalized_orthogonal_basis(q, {make_vector(f3, {1, 1, 0}), make_vector(f3, {1, 0, 0})});
    FAIL() << "non-orthogonal set accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
  }
  try {
    generalized_orthogonal_basis(QuadraticForm::diagonal(f3, {1, 0}));
    FAIL() << "degenerate form accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Precondition);
  }
}

TEST(Witt, Examples) {
  EXPECT_EQ(witt_index(QuadraticForm::diagonal(Field::rational(), {1, 1, 1, -1, -1})), 2u);
  const QuadraticForm f5 = QuadraticForm::diagonal(Field::prime(5), {1, 1, 1, -1, -1});
  EXPECT_EQ(witt_index(f5), 2u);
  EXPECT_EQ(oracle::max_singular_dim(f5), 2u);
  const QuadraticForm f7 = QuadraticForm::diagonal(Field::prime(7), {1, -3});
  EXPECT_EQ(witt_index(f7), 0u);
  EXPECT_EQ(oracle::max_singular_dim(f7), 0u);
}

TEST(Witt, ClosedFormMatchesSearchF7) {
  const Field f = Field::prime(7);
  for (std::int64_t a : {1, 3})
    for (std::int64_t b : {1, 3})
      for (std::int64_t c : {1, 3}) {
        const QuadraticForm q = QuadraticForm::diagonal(f, {a, b, c, 1});
        EXPECT_EQ(witt_index(q), oracle::max_singular_dim(q)) << q.to_string();
      }
}

TEST(Isometric, Examples) {
  const Field f7 = Field::prime(7);
  EXPECT_FALSE(isometric(QuadraticForm::diagonal(f7, {1, 1}), QuadraticForm::diagonal(f7, {1, 3})));
  const Field f5 = Field::prime(5);
  EXPECT_TRUE(isometric(QuadraticForm::diagonal(f5, {1, -1}), QuadraticForm::diagonal(f5, {2, -2})));
  const QuadraticForm q = QuadraticForm::diagonal(Field::rational(), {1, -1, 1});
  EXPECT_TRUE(isometric(q, q));
  EXPECT_FALSE(isometric(q, QuadraticForm::diagonal(Field::rational(), {1, -1, -1})));
}

TEST(Arf, SmallForms) {
  const Field f2 = Field::char_two(2);
  const QuadraticForm xy = terms(f2, 2, {{0, 1, 1}});
  const QuadraticForm an = terms(f2, 2, {{0, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  EXPECT_EQ(arf_invariant(xy).value, 0);
  EXPECT_EQ(arf_invariant(an).value, 1);
  // zero counts: xy has 3 zeros (two lines plus origin), the anisotropic plane only the origin
  EXPECT_EQ(oracle::count_zeros(xy), 3u);
  EXPECT_EQ(oracle::count_zeros(an), 1u);
  const QuadraticForm two_an = terms(f2, 4, {{0, 0, 1}, {0, 1, 1}, {1, 1, 1}, {2, 2, 1}, {2, 3, 1}, {3, 3, 1}});
  EXPECT_EQ(arf_invariant(two_an).value, 0);
  EXPECT_EQ(oracle::arf_from_zero_count(two_an), 0);
  EXPECT_THROW(arf_invariant(terms(f2, 3, {{0, 0, 1}, {1, 2, 1}})), Error);
}

TEST(Represents, Examples) {
  const Field f7 = Field::prime(7);
  const QuadraticForm xy = terms(f7, 2, {{0, 1, 1}});
  auto w = represents(xy, f7.from_int(5));
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, make_vector(f7, {5, 1}));
  EXPECT_FALSE(represents(QuadraticForm::diagonal(f7, {1, -3}), f7.zero()));
  const Field q = Field::rational();
  EXPECT_FALSE(represents(QuadraticForm::diagonal(q, {1}), q.from_int(-1)));
  auto r = represents(QuadraticForm::diagonal(q, {1, -1}), q.from_int(-3));
  ASSERT_TRUE(r);
  EXPECT_EQ(QuadraticForm::diagonal(q, {1, -1})(*r), q.from_int(-3));
}

TEST(ExtendIsometry, Examples) {
  const Field f3 = Field::prime(3);
  const QuadraticForm w = QuadraticForm::diagonal(f3, {1, 1, -1, -1});
  const Vector e1 = unit_vector(f3, 4, 0), e2 = unit_vector(f3, 4, 1);
  EXPECT_EQ(extend_isometry(w, {e1}, {e1}), Matrix::identity(f3, 4));
  const Matrix g = extend_isometry(w, {e1}, {e2});
  EXPECT_TRUE(is_isometry(w, g));
  EXPECT_EQ(g * e1, e2);

  const QuadraticForm q = QuadraticForm::diagonal(f3, {1, 1, 1, -1, -1});
  const Vector a = make_vector(f3, {1, 0, 0, 1, 0}), b = make_vector(f3, {0, 1, 1, 1, 1});
  ASSERT_TRUE(q(a).is_zero());
  ASSERT_TRUE(q(b).is_zero());
  const Matrix h = extend_isometry(q, {a}, {b});
  EXPECT_TRUE(is_isometry(q, h));
  EXPECT_EQ(h * a, b);
}

TEST(ExtendIsometry, RandomPairsF5) {
  std::mt19937_64 rng(5);
  const Field f = Field::prime(5);
  const QuadraticForm q = QuadraticForm::diagonal(f, {1, 1, 1, -1, -1});
  std::vector<Vector> pts = projective_points(f, 5);
  std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
  int done = 0;
  while (done < 30) {
    const Vector& x = pts[pick(rng)];
    const Vector& y = pts[pick(rng)];
    if (q(x) != q(y) || q(x).is_zero() != q(y).is_zero()) continue;
    const Matrix h = extend_isometry(q, {x}, {y}, &rng);
    EXPECT_TRUE(is_isometry(q, h));
    EXPECT_EQ(h * x, y);
    ++done;
  }
}

TEST(QuadraticForm, Homogeneity) {
  std::mt19937_64 rng(2);
  const Field f = Field::prime(11);
  const QuadraticForm q = terms(f, 3, {{0, 0, 2}, {0, 1, 5}, {1, 2, 7}, {2, 2, 1}});
  for (int k = 0; k < 200; ++k) {
    Vector v{random_scalar(f, rng), random_scalar(f, rng), random_scalar(f, rng)};
    const Scalar l = random_scalar(f, rng);
    EXPECT_EQ(q(l * v), l * l * q(v));
  }
}
