#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ucg/models.hpp"

using namespace ucg;
using namespace ucg::models;

namespace {

struct Sample {
  ModelKind kind;
  std::vector<double> point, center;
  double radius;
  std::vector<double> on_cycle;
  int qp, ql;  // signs of Q(P), Q(L)
};

std::vector<Sample> samples() {
  const double r = 0.5;
  return {
      {ModelKind::Elliptic, {0.6, 0.8, 0}, {0, 0, 1}, r, {std::sin(r), 0, std::cos(r)}, -1, -1},
      {ModelKind::Hyperbolic, {std::sinh(1.0), 0, std::cosh(1.0)}, {0, 0, 1}, r, {std::sinh(r), 0, std::cosh(r)}, -1, 1},
      {ModelKind::Parabolic, {-0.5, 0.3}, {1, 2}, r, {1.5, 2}, -1, 0},
      {ModelKind::Minkowski2, {-0.5, 0.3}, {1, 2}, r, {1 + r * std::sinh(0.3), 2 + r * std::cosh(0.3)}, 1, 0},
      {ModelKind::DeSitter, {std::cosh(0.5), 0, std::sinh(0.5)}, {0, 0, 1}, r, {std::cosh(r), 0, -std::sinh(r)}, 1, -1},
      {ModelKind::AntiDeSitter, {std::sinh(0.5), std::cosh(0.5), 0}, {0, 1, 0}, r, {0, std::cos(r), std::sin(r)}, 1, 1},
      {ModelKind::LaguerreGalilei, {-0.5, 0.3}, {1, 2}, r, {3, 2 + r * 4}, 0, 0},
  };
}

int sign(const Scalar& x) { return x.is_zero() ? 0 : (x.to_double() > 0 ? 1 : -1); }

}  // namespace

TEST(Models, NormsOfPAndL) {
  for (const auto& s : samples()) {
    const Geometry g = model_geometry(s.kind, 2);
    EXPECT_EQ(g.dim(), 2u);
    EXPECT_EQ(sign(g.Q(g.P())), s.qp) << to_string(s.kind);
    EXPECT_EQ(sign(g.Q(g.L())), s.ql) << to_string(s.kind);
    EXPECT_TRUE(g.B(g.P(), g.L()).is_zero());
  }
  EXPECT_EQ(sign(minkowski_other_half().Q(minkowski_other_half().P())), -1);
}

TEST(Models, LiftedPointsArePoints) {
  for (const auto& s : samples()) {
    const Geometry g = model_geometry(s.kind, 2);
    const auto p = lift_point(s.kind, s.point);
    EXPECT_TRUE(g.Q(p.lift).is_zero()) << to_string(s.kind);
    EXPECT_EQ(role(g, p.lift), Role::Point) << to_string(s.kind);
  }
}

TEST(Models, CyclesAndIncidence) {
  for (const auto& s : samples()) {
    const Geometry g = model_geometry(s.kind, 2);
    const auto c = lift_cycle(s.kind, s.center, s.radius);
    EXPECT_TRUE(g.Q(c.lift).is_zero()) << to_string(s.kind);
    EXPECT_EQ(role(g, c.lift), Role::GenericCycle) << to_string(s.kind);
    EXPECT_TRUE(incident(g, lift_point(s.kind, s.on_cycle).lift, c.lift)) << to_string(s.kind);
    EXPECT_FALSE(incident(g, lift_point(s.kind, s.point).lift, c.lift)) << to_string(s.kind);
  }
}

TEST(Models, OrientationFlipsTheLift) {
  const auto a = lift_cycle(ModelKind::Parabolic, {0, 0}, 1), b = lift_cycle(ModelKind::Parabolic, {0, 0}, -1);
  const Geometry g = model_geometry(ModelKind::Parabolic, 2);
  EXPECT_NE(normalize(a.lift), normalize(b.lift));
  EXPECT_TRUE(incident(g, lift_point(ModelKind::Parabolic, {1, 0}).lift, b.lift));
}

TEST(Models, Lines) {
  const Geometry e = model_geometry(ModelKind::Elliptic, 2);
  const auto le = lift_line(ModelKind::Elliptic, {1, 0, 0}, 0);
  EXPECT_EQ(role(e, le.lift), Role::Hyperplane);
  EXPECT_TRUE(incident(e, lift_point(ModelKind::Elliptic, {0, 0, 1}).lift, le.lift));

  const Geometry p = model_geometry(ModelKind::Parabolic, 2);
  const auto lp = lift_line(ModelKind::Parabolic, {1, 0}, 1);
  EXPECT_EQ(role(p, lp.lift), Role::Hyperplane);
  EXPECT_TRUE(incident(p, lift_point(ModelKind::Parabolic, {1, 7}).lift, lp.lift));
  EXPECT_FALSE(incident(p, lift_point(ModelKind::Parabolic, {2, 7}).lift, lp.lift));

  const Geometry lg = model_geometry(ModelKind::LaguerreGalilei, 2);
  const auto ll = lift_line(ModelKind::LaguerreGalilei, {-2, 1}, 1);  // y = 2x + 1
  EXPECT_TRUE(incident(lg, lift_point(ModelKind::LaguerreGalilei, {1, 3}).lift, ll.lift));

  const Geometry h = model_geometry(ModelKind::Hyperbolic, 2);
  const auto hyp = lift_hypercycle({1, 0, 0}, 0.4);
  EXPECT_TRUE(h.Q(hyp.lift).is_zero());
  const auto para = lift_paracycle({1, 0, 1}, 0.3);
  EXPECT_TRUE(h.Q(para.lift).is_zero());
}

TEST(Models, RejectsBadInput) {
  EXPECT_THROW(lift_point(ModelKind::Elliptic, {1, 1, 0}), Error);
  EXPECT_THROW(lift_point(ModelKind::Hyperbolic, {0, 0, -1}), Error);
  EXPECT_THROW(lift_line(ModelKind::Elliptic, {1, 0, 0}, 0.5), Error);
  EXPECT_THROW(lift_line(ModelKind::Minkowski2, {1, 0}, 0), Error);
  EXPECT_THROW(lift_line(ModelKind::LaguerreGalilei, {1, 0}, 0), Error);
  EXPECT_THROW(model_geometry(ModelKind::DeSitter, 3), Error);
  EXPECT_THROW(parse_model("spherical"), Error);
  EXPECT_EQ(parse_model("anti-de-sitter"), ModelKind::AntiDeSitter);
}

TEST(Models, HigherDimensions) {
  for (std::size_t n : {1u, 3u}) {
    const Geometry g = model_geometry(ModelKind::Elliptic, n);
    std::vector<double> x(n + 1, 0.0);
    x[0] = 1;
    EXPECT_EQ(role(g, lift_point(ModelKind::Elliptic, x).lift), Role::Point);
  }
}

TEST(Separation, Points) {
  for (double t : {0.1, 0.7, 1.5, 2.5}) {
    const auto [a, b] = elliptic_points(t);
    const auto ce = check_separation(a, b);
    EXPECT_TRUE(ce.agrees);
    EXPECT_NEAR(ce.value, std::cos(t) - 1, 1e-9);
    const auto [c, d] = hyperbolic_points(t);
    EXPECT_NEAR(check_separation(c, d).value, 1 - std::cosh(t), 1e-9);
    const auto [e, f] = parabolic_points(t);
    EXPECT_NEAR(check_separation(e, f).value, -t * t / 2, 1e-9);
  }
}

TEST(Separation, CyclesAtAngle) {
  for (ModelKind k : {ModelKind::Elliptic, ModelKind::Hyperbolic, ModelKind::Parabolic}) {
    for (double theta : {0.0, 0.4, std::numbers::pi / 2, 2.0}) {
      const auto [a, b] = cycles_at_angle(k, theta);
      const auto c = check_separation(a, b);
      EXPECT_TRUE(c.agrees) << to_string(k) << " " << theta;
      EXPECT_NEAR(c.value, std::cos(theta) - 1, 1e-9) << to_string(k) << " " << theta;
    }
  }
  const auto [a, b] = cycles_at_angle(ModelKind::Parabolic, 0.0);
  EXPECT_NEAR(check_separation(a, b).value, 0, 1e-9);
}

TEST(Separation, OrthogonalCircles) {
  const Geometry g = model_geometry(ModelKind::Parabolic, 2);
  const auto a = lift_cycle(ModelKind::Parabolic, {0, 0}, 1);
  const auto b = lift_cycle(ModelKind::Parabolic, {std::sqrt(2.0), 0}, 1);
  EXPECT_NEAR(relative_power(g, a.lift, b.lift).to_double(), -1, 1e-9);
}

TEST(Separation, MixedRolesRejected) {
  const auto p = lift_point(ModelKind::Parabolic, {0, 0});
  const auto c = lift_cycle(ModelKind::Parabolic, {0, 0}, 1);
  EXPECT_THROW(check_separation(p, c), Error);
}
