#include <gtest/gtest.h>

#include <random>

#include "ucg/classify.hpp"
#include "ucg/metric.hpp"
#include "ucg/models.hpp"
#include "ucg/oracle.hpp"

using namespace ucg;

namespace {

Geometry with_ql(const Field& f, SquareClass ql) {
  for (const auto& c : enumerate_classes(f, 2))
    if (c.qP == SquareClass::NonResidue && c.qL == ql) return representative(c);
  throw std::runtime_error("no class");
}

std::size_t det_one_count(const Geometry& g, const Vector& l) {
  const LineSpace ls = line_space(g, l);
  std::size_t n = 0;
  for (const auto& m : oracle::isometries_fixing(ls.form, {ls.L_coords})) n += determinant(m).is_one();
  return n;
}

}  // namespace

TEST(LineSpace, Basics) {
  const Geometry g = models::model_geometry(models::ModelKind::Elliptic, 2);
  const auto l = models::lift_line(models::ModelKind::Elliptic, {1, 0, 0}, 0);
  const LineSpace ls = line_space(g, l.lift);
  EXPECT_EQ(ls.basis.size(), 3u);
  const Signature s = signature(ls.form);
  EXPECT_EQ(s.positive, 2u);
  EXPECT_EQ(s.negative, 1u);

  const Field f5 = Field::prime(5);
  const Geometry h = with_ql(f5, SquareClass::Unit);
  for (const auto& line : non_ideal_lines(h)) {
    const LineSpace lf = line_space(h, line);
    EXPECT_TRUE(is_nondegenerate_form(lf.form));
    // <P, l> is a hyperbolic plane
    const QuadraticForm pl = h.form().restrict({h.P(), line});
    EXPECT_EQ(witt_index(pl), 1u);
  }
}

TEST(LineSpace, IdealLineRejected) {
  const Field f3 = Field::prime(3);
  for (const auto& c : enumerate_classes(f3, 2)) {
    const Geometry g = representative(c);
    for (const auto& l : geometry_hyperplanes(g))
      if (role(g, l) == Role::Ideal && rank(std::vector<Vector>{g.P(), l}) == 2) {
        EXPECT_THROW(line_space(g, l), Error);
      }
  }
}

TEST(GammaClass, Reals) {
  using models::ModelKind;
  EXPECT_EQ(gamma_class(models::model_geometry(ModelKind::Elliptic, 2)).tag, LineGroupTag::NonSplitTorus);
  EXPECT_EQ(gamma_class(models::model_geometry(ModelKind::Parabolic, 2)).tag, LineGroupTag::Additive);
  EXPECT_EQ(gamma_class(models::model_geometry(ModelKind::Hyperbolic, 2)).tag, LineGroupTag::SplitTorus);
  EXPECT_EQ(gamma_class(dual_geometry(models::model_geometry(ModelKind::Hyperbolic, 2))).tag,
            LineGroupTag::NonSplitTorus);
}

TEST(GammaClass, FiniteOrdersMatchEnumeration) {
  for (std::int64_t p : {3, 5, 7}) {
    const Field f = Field::prime(p);
    for (auto ql : {SquareClass::NonResidue, SquareClass::Zero, SquareClass::Unit}) {
      const Geometry g = with_ql(f, ql);
      const LineGroupClass c = gamma_class(g);
      ASSERT_TRUE(c.order);
      const auto l = non_ideal_lines(g).front();
      EXPECT_EQ(static_cast<std::size_t>(*c.order), stabilizer_group(g, l).size());
      if (p <= 5) EXPECT_EQ(static_cast<std::size_t>(*c.order), det_one_count(g, l));
    }
  }
  const Geometry g7 = with_ql(Field::prime(7), SquareClass::NonResidue);
  EXPECT_EQ(gamma_class(g7).tag, LineGroupTag::NonSplitTorus);
  EXPECT_EQ(*gamma_class(g7).order, 8);
}

TEST(Stabilizer, AdditiveOverF3) {
  const Field f3 = Field::prime(3);
  const Geometry g = with_ql(f3, SquareClass::Zero);
  const auto l = non_ideal_lines(g).front();
  const auto st = stabilizer_group(g, l);
  ASSERT_EQ(st.size(), 3u);
  const LineChart chart = line_chart(g, l);
  for (const auto& a : f3.elements())
    for (const auto& b : f3.elements())
      EXPECT_TRUE(equal_motion(compose(make_motion(chart, {a}), make_motion(chart, {b})), make_motion(chart, {a + b})));
  bool has_identity = false;
  for (const auto& e : st) has_identity = has_identity || is_identity(e);
  EXPECT_TRUE(has_identity);
}

TEST(Stabilizer, SplitOverF5) {
  const Field f5 = Field::prime(5);
  const Geometry g = with_ql(f5, SquareClass::Unit);
  const auto l = non_ideal_lines(g).front();
  EXPECT_EQ(stabilizer_group(g, l).size(), 4u);
  EXPECT_EQ(full_line_stabilizer(line_chart(g, l)).size(), 8u);
}

TEST(Translation, IdentityAndInverse) {
  const Field f5 = Field::prime(5);
  for (auto ql : {SquareClass::NonResidue, SquareClass::Zero, SquareClass::Unit}) {
    const Geometry g = with_ql(f5, ql);
    const auto l = non_ideal_lines(g).front();
    const auto pts = line_points(g, l);
    for (const auto& a : pts) {
      EXPECT_TRUE(is_identity(translation_between(g, l, a, a)));
      for (const auto& b : pts) {
        const auto ab = translation_between(g, l, a, b);
        EXPECT_TRUE(equal_motion(translation_between(g, l, b, a), invert(ab)));
        EXPECT_TRUE(is_identity(compose(ab, invert(ab))));
        EXPECT_EQ(normalize(apply_motion(ab, a)), b);
        EXPECT_TRUE(same_distance(ab, translation_between(g, l, b, a)));
      }
    }
  }
}

TEST(Translation, SplitNormalFormActsOnIsotropicDirections) {
  const Field f5 = Field::prime(5);
  const Geometry g = with_ql(f5, SquareClass::Unit);
  const auto l = non_ideal_lines(g).front();
  const LineChart chart = line_chart(g, l);
  ASSERT_EQ(chart.cls.tag, LineGroupTag::SplitTorus);
  const auto pts = line_points(g, l);
  const auto e = translation_between(g, l, pts[0], pts[1]);
  const Scalar mu = e.normal_form[0];
  EXPECT_TRUE(chart.form(make_vector(f5, {0, 1, 0})).is_zero());
  EXPECT_TRUE(chart.form(make_vector(f5, {0, 0, 1})).is_zero());
  EXPECT_EQ(e.matrix * make_vector(f5, {0, 1, 0}), mu * make_vector(f5, {0, 1, 0}));
  EXPECT_EQ(e.matrix * make_vector(f5, {0, 0, 1}), mu.inverse() * make_vector(f5, {0, 0, 1}));
  bool found = false;
  for (const auto& s : stabilizer_group(g, l)) found = found || equal_motion(s, e);
  EXPECT_TRUE(found);
}

TEST(Translation, RejectsPointsOffTheLine) {
  const Field f5 = Field::prime(5);
  const Geometry g = with_ql(f5, SquareClass::NonResidue);
  const auto lines = non_ideal_lines(g);
  const auto on = line_points(g, lines[0]);
  for (const auto& p : geometry_points(g))
    if (!g.B(p, lines[0]).is_zero()) {
      EXPECT_THROW(translation_between(g, lines[0], on[0], p), Error);
      break;
    }
}

TEST(Compose, DifferentChartsRejected) {
  const Field f5 = Field::prime(5);
  const Geometry g = with_ql(f5, SquareClass::NonResidue);
  const auto lines = non_ideal_lines(g);
  ASSERT_GE(lines.size(), 2u);
  const auto a = identity_motion(line_chart(g, lines[0]));
  std::size_t k = 1;
  while (unoriented_key(g, lines[k]) == unoriented_key(g, lines[0])) ++k;
  const auto b = identity_motion(line_chart(g, lines[k]));
  EXPECT_THROW(compose(a, b), Error);
}

TEST(Uniqueness, EveryLineSameGroupF5) {
  const Field f5 = Field::prime(5);
  for (const auto& c : enumerate_classes(f5, 2)) {
    const Geometry g = representative(c);
    const LineGroupClass want = gamma_class(g);
    for (const auto& l : non_ideal_lines(g)) {
      const LineChart ch = line_chart(g, l);
      EXPECT_EQ(ch.cls, want);
      EXPECT_EQ(line_points(g, l).size(), static_cast<std::size_t>(*want.order));
    }
  }
}

TEST(RealSplit, ParametersMultiply) {
  // on the hyperbolic line, mu-parameters of successive translations multiply
  const Geometry g = models::model_geometry(models::ModelKind::Hyperbolic, 2);
  const auto l = models::lift_line(models::ModelKind::Hyperbolic, {0, 1, 0}, 0).lift;
  auto pt = [&](double d) {
    return models::lift_point(models::ModelKind::Hyperbolic, {std::sinh(d), 0, std::cosh(d)}).lift;
  };
  const auto ab = translation_between(g, l, pt(0), pt(0.3));
  const auto bc = translation_between(g, l, pt(0.3), pt(1.0));
  const auto ac = translation_between(g, l, pt(0), pt(1.0));
  EXPECT_NEAR(ab.normal_form[0].to_double() * bc.normal_form[0].to_double(), ac.normal_form[0].to_double(), 1e-9);
  EXPECT_NEAR(std::abs(std::log(std::abs(ac.normal_form[0].to_double()))), 1.0, 1e-9);
}
