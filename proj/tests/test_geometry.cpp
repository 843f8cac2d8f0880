#include <gtest/gtest.h>

#include <cmath>

#include "ucg/classify.hpp"
#include "ucg/geometry.hpp"
#include "ucg/models.hpp"

using namespace ucg;

namespace {

Geometry diag5(const Field& f, std::size_t p, std::size_t l) {
  return new_geometry(QuadraticForm::diagonal(f, {1, 1, 1, -1, -1}), unit_vector(f, 5, p), unit_vector(f, 5, l));
}

std::size_t brute_isotropic(const Geometry& g) {
  std::size_t n = 0;
  for (const auto& v : projective_points(g.field(), g.vector_dim())) n += g.Q(v).is_zero();
  return n;
}

}  // namespace

TEST(NewGeometry, Validation) {
  const Field q = Field::rational();
  EXPECT_NO_THROW(diag5(q, 4, 3));
  EXPECT_NO_THROW(diag5(Field::prime(3), 4, 3));
  try {
    diag5(q, 0, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
    EXPECT_NE(std::string(e.what()).find("orthogonal"), std::string::npos);
  }
  EXPECT_THROW(new_geometry(QuadraticForm::diagonal(q, {1, 1, 1, -1, 0}), unit_vector(q, 5, 0), unit_vector(q, 5, 1)),
               Error);
  EXPECT_THROW(new_geometry(QuadraticForm::diagonal(q, {1, -1, 1}), unit_vector(q, 3, 0), unit_vector(q, 3, 1)), Error);
}

TEST(Role, ModelCoordinates) {
  const Geometry g = models::model_geometry(models::ModelKind::Elliptic, 2);
  const Field& f = g.field();
  auto v = [&](std::vector<double> x) { return models::to_vector(x); };
  EXPECT_EQ(role(g, v({1, 0, 0, 1, 0})), Role::Point);
  EXPECT_EQ(role(g, v({0, 1, 0, 0, 1})), Role::Hyperplane);
  const double rho = 0.4;
  EXPECT_EQ(role(g, v({0, 0, 1, std::cos(rho), std::sin(rho)})), Role::GenericCycle);
  EXPECT_THROW(role(g, v({1, 0, 0, 0, 0})), Error);
  (void)f;
}

TEST(Role, IdealMeansBoth) {
  const Field f = Field::prime(3);
  const Geometry g = diag5(f, 4, 3);
  for (const auto& c : lie_quadric_points(g)) {
    const Role r = role(g, c);
    EXPECT_EQ(r == Role::Ideal, is_point(g, c) && is_hyperplane(g, c));
  }
}

TEST(Incident, Examples) {
  const Geometry g = models::model_geometry(models::ModelKind::Elliptic, 2);
  const auto p = models::lift_point(models::ModelKind::Elliptic, {1, 0, 0});
  EXPECT_TRUE(incident(g, p.lift, p.lift));
  EXPECT_TRUE(incident(g, p.lift, models::lift_line(models::ModelKind::Elliptic, {0, 1, 0}, 0).lift));
  EXPECT_FALSE(incident(g, p.lift, models::lift_line(models::ModelKind::Elliptic, {0.6, 0.8, 0}, 0).lift));
  const Geometry par = models::model_geometry(models::ModelKind::Parabolic, 2);
  EXPECT_FALSE(incident(par, models::lift_point(models::ModelKind::Parabolic, {0, 0}).lift,
                        models::lift_point(models::ModelKind::Parabolic, {0.5, 0}).lift));
}

TEST(NonEmpty, Examples) {
  const Field q = Field::rational();
  EXPECT_TRUE(non_empty(diag5(q, 4, 3)));
  EXPECT_FALSE(non_empty(new_geometry(QuadraticForm::diagonal(q, {1, 1, 1, 1, 1}), unit_vector(q, 5, 4),
                                      unit_vector(q, 5, 3))));
  const Field f3 = Field::prime(3);
  const Geometry g = diag5(f3, 0, 3);  // Q(P) = 1
  EXPECT_TRUE(non_empty(g));
  EXPECT_FALSE(geometry_points(g).empty());
}

TEST(NonEmpty, AgreesWithPointSearch) {
  for (std::int64_t p : {3, 5}) {
    const Field f = Field::prime(p);
    for (const auto& c : enumerate_classes(f, 2)) {
      const Geometry g = representative(c);
      EXPECT_EQ(non_empty(g), !geometry_points(g).empty()) << c.name.value_or("?");
    }
  }
}

TEST(NonDegenerate, Examples) {
  const Field q = Field::rational();
  EXPECT_TRUE(non_degenerate_geometry(diag5(q, 4, 3)));
  EXPECT_FALSE(non_degenerate_geometry(
      new_geometry(QuadraticForm::diagonal(q, {1, 1, 1, 1, -1}), unit_vector(q, 5, 4), unit_vector(q, 5, 3))));
  EXPECT_TRUE(non_degenerate_geometry(diag5(Field::prime(5), 4, 3)));
}

TEST(Separation, SelfIsZero) {
  const Geometry g = models::model_geometry(models::ModelKind::Elliptic, 2);
  const auto p = models::lift_point(models::ModelKind::Elliptic, {0, 0.6, 0.8});
  EXPECT_NEAR(inversive_separation(g, p.lift, p.lift).to_double(), 0.0, 1e-12);
}

TEST(Separation, IdealDenominator) {
  const Field f = Field::prime(5);
  const Geometry g = diag5(f, 4, 3);
  for (const auto& c : lie_quadric_points(g))
    if (role(g, c) == Role::Ideal || role(g, c) == Role::Hyperplane) {
      EXPECT_THROW(inversive_separation(g, c, c), Error);
      break;
    }
}

TEST(LieQuadric, Counts) {
  const Field f3 = Field::prime(3);
  const Geometry g = diag5(f3, 4, 3);
  EXPECT_EQ(lie_quadric_points(g).size(), brute_isotropic(g));
  EXPECT_EQ(lie_quadric_points(g).size(), 40u);
  const Field f7 = Field::prime(7);
  EXPECT_TRUE(isotropic_points(QuadraticForm::diagonal(f7, {1, -3})).empty());
  const Field f5 = Field::prime(5);
  EXPECT_EQ(isotropic_points(QuadraticForm::from_terms(f5, 2, {{0, 1, f5.one()}})).size(), 2u);
  EXPECT_THROW(lie_quadric_points(diag5(Field::rational(), 4, 3)), Error);
}

TEST(Pointspace, Restriction) {
  const Field f3 = Field::prime(3);
  const Geometry g = diag5(f3, 4, 3);
  const Pointspace ps = pointspace(g);
  ASSERT_EQ(ps.basis.size(), 4u);
  for (const auto& b : ps.basis) EXPECT_TRUE(g.B(g.P(), b).is_zero());
  EXPECT_TRUE(isometric(ps.form, QuadraticForm::diagonal(f3, {1, 1, 1, -1})));
  EXPECT_EQ(combine(ps.basis, ps.L_coords), g.L());
  EXPECT_FALSE(in_span(ps.basis, g.P()));
  const Geometry e = diag5(Field::rational(), 4, 3);
  const Pointspace pe = pointspace(e);
  EXPECT_TRUE(isometric(pe.form, QuadraticForm::diagonal(Field::rational(), {1, 1, 1, -1})));
  EXPECT_EQ(square_class(pe.form(pe.L_coords)), SquareClass::NonResidue);
}

TEST(Projection, Basics) {
  const Field q = Field::rational();
  const Geometry g = diag5(q, 4, 3);
  const Vector inside = make_vector(q, {1, 0, 0, 1, 0});
  EXPECT_EQ(project_cycle(g, inside), normalize(inside));
  // (c, cos r, sin r) with the P-component dropped, over exact stand-ins 3/5, 4/5
  const Vector c = models::to_vector({0, 0, 1, 0.6, 0.8});
  const Geometry m = models::model_geometry(models::ModelKind::Elliptic, 2);
  const Vector pr = project_vector(m, c);
  EXPECT_NEAR(pr[4].to_double(), 0.0, 1e-12);
  EXPECT_NEAR(pr[3].to_double(), 0.6, 1e-12);
  const Field f3 = Field::prime(3);
  const Geometry z = new_geometry(QuadraticForm::diagonal(f3, {1, 1, 1, -1, -1}), make_vector(f3, {1, 0, 0, 1, 0}),
                                  unit_vector(f3, 5, 2));
  EXPECT_THROW(project_cycle(z, make_vector(f3, {1, 0, 0, 1, 0})), Error);
}

TEST(PointsOf, PointIsOnItself) {
  const Field f3 = Field::prime(3);
  const Geometry g = diag5(f3, 4, 3);
  for (const auto& p : geometry_points(g)) {
    const auto on = points_of(g, p);
    EXPECT_NE(std::find(on.begin(), on.end(), p), on.end());
  }
  for (const auto& c : lie_quadric_points(g)) {
    const auto got = points_of(g, c);
    std::vector<ProjPoint> want;
    for (const auto& p : geometry_points(g))
      if (incident(g, p, c)) want.push_back(p);
    EXPECT_EQ(got, want);
  }
}

TEST(Antipodal, Examples) {
  const Field f3 = Field::prime(3);
  const Geometry g = diag5(f3, 4, 3);
  const Vector a = make_vector(f3, {1, 0, 0, 1, 0}), b = make_vector(f3, {2, 0, 0, 1, 0});
  EXPECT_TRUE(antipodal(g, a, a));
  EXPECT_TRUE(antipodal(g, a, b));
  EXPECT_FALSE(antipodal(g, a, make_vector(f3, {0, 1, 0, 1, 0})));
  EXPECT_THROW(antipodal(g, a, make_vector(f3, {1, 0, 0, 0, 1})), Error);
}

TEST(Subcycles, Dimensions) {
  const Field f3 = Field::prime(3);
  const Geometry g = diag5(f3, 4, 3);
  const auto pts = geometry_points(g);
  std::vector<Vector> indep;
  for (const auto& p : pts)
    if (rank([&] {
          auto r = indep;
          r.push_back(p);
          return r;
        }()) == indep.size() + 1)
      indep.push_back(p);
  ASSERT_GE(indep.size(), 3u);
  EXPECT_EQ(span_subcycle(g, {indep[0], indep[1]}).dimension(), 0);
  EXPECT_EQ(span_subcycle(g, {indep[0], indep[1], indep[2]}).dimension(), 1);
}

TEST(Subcycles, LineThroughTwoPointsElliptic) {
  const Field f3 = Field::prime(3);
  const Geometry g = diag5(f3, 4, 3);
  std::vector<ProjPoint> pts;
  for (const auto& p : geometry_points(g))
    if (role(g, p) == Role::Point) pts.push_back(p);
  const auto lines = geometry_hyperplanes(g);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (antipodal(g, pts[i], pts[j])) {
        EXPECT_THROW(hyperplane_through(g, {pts[i], pts[j]}), Error);
        continue;
      }
      std::set<std::vector<Vector>> through;
      for (const auto& l : lines)
        if (g.B(l, pts[i]).is_zero() && g.B(l, pts[j]).is_zero()) through.insert(unoriented_key(g, l));
      EXPECT_EQ(through.size(), 1u);
      auto l = hyperplane_through(g, {pts[i], pts[j]});
      ASSERT_TRUE(l);
      EXPECT_EQ(unoriented_key(g, *l), *through.begin());
    }
}

TEST(Subcycles, IntersectionOfTwoLines) {
  const Field f3 = Field::prime(3);
  const Geometry g = diag5(f3, 4, 3);
  const auto lines = geometry_hyperplanes(g);
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (rank(std::vector<Vector>{g.P(), lines[i], lines[j]}) < 3) continue;
      const Subcycle s = intersect_hyperplanes(g, {lines[i], lines[j]});
      EXPECT_EQ(s.basis.size(), 2u);
      const auto pts = subcycle_points(g, s);
      EXPECT_LE(pts.size(), 2u);
      if (pts.size() == 2) EXPECT_TRUE(antipodal(g, pts[0], pts[1]));
    }
}

TEST(QuasiIdeal, Lines) {
  const Field f3 = Field::prime(3);
  for (const auto& c : enumerate_classes(f3, 2)) {
    const Geometry g = representative(c);
    for (const auto& l : geometry_hyperplanes(g)) {
      if (rank(std::vector<Vector>{g.P(), l}) < 2) continue;
      const Subcycle line = intersect_hyperplanes(g, {l});
      EXPECT_EQ(quasi_ideal(g, line), g.B(g.P(), l).is_zero()) << c.name.value_or("?") << " " << to_string(l);
    }
  }
  const Geometry e = diag5(f3, 4, 3);
  EXPECT_FALSE(quasi_ideal(e, detail::make_subcycle(e, pointspace(e).basis)));
}

TEST(CayleyKlein, Classes) {
  const Field f3 = Field::prime(3);
  const Geometry e = diag5(f3, 4, 3);
  std::size_t total = 0;
  for (const auto& cls : cayley_klein_points(e)) {
    EXPECT_LE(cls.size(), 2u);
    total += cls.size();
  }
  EXPECT_EQ(total, geometry_points(e).size());
}

TEST(Dual, SwapsRoles) {
  const Field f3 = Field::prime(3);
  const Geometry g = diag5(f3, 4, 3);
  const Geometry d = dual_geometry(g);
  EXPECT_EQ(dual_geometry(d), g);
  for (const auto& c : lie_quadric_points(g)) EXPECT_EQ(is_point(g, c), is_hyperplane(d, c));
  const Geometry h = models::model_geometry(models::ModelKind::Hyperbolic, 2);
  EXPECT_EQ(classify(dual_geometry(h)).name.value_or("?"), "dual hyperbolic");
}
