#pragma once

// Floating-point models of the classical real geometries: lifts of points, cycles and lines to
// the Lie quadric, and the closed forms of inversive separation and relative power.

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "ucg/geometry.hpp"

namespace ucg::models {

enum class ModelKind { Elliptic, Hyperbolic, Parabolic, Minkowski2, DeSitter, AntiDeSitter, LaguerreGalilei };

inline const std::vector<ModelKind>& all_kinds() {
  static const std::vector<ModelKind> kinds{ModelKind::Elliptic,     ModelKind::Hyperbolic, ModelKind::Parabolic,
                                            ModelKind::Minkowski2,   ModelKind::DeSitter,   ModelKind::AntiDeSitter,
                                            ModelKind::LaguerreGalilei};
  return kinds;
}

inline const char* to_string(ModelKind k) {
  switch (k) {
    case ModelKind::Elliptic: return "elliptic";
    case ModelKind::Hyperbolic: return "hyperbolic";
    case ModelKind::Parabolic: return "parabolic";
    case ModelKind::Minkowski2: return "minkowski";
    case ModelKind::DeSitter: return "de-sitter";
    case ModelKind::AntiDeSitter: return "anti-de-sitter";
    case ModelKind::LaguerreGalilei: return "laguerre-galilei";
  }
  return "?";
}

inline ModelKind parse_model(std::string_view s) {
  for (ModelKind k : all_kinds())
    if (s == to_string(k)) return k;
  fail(ErrorKind::InvalidInput, "unknown model '" + std::string(s) + "'");
}

enum class RoleHint { Point, Cycle, Line, Paracycle, Hypercycle };

inline const char* to_string(RoleHint r) {
  switch (r) {
    case RoleHint::Point: return "point";
    case RoleHint::Cycle: return "cycle";
    case RoleHint::Line: return "line";
    case RoleHint::Paracycle: return "paracycle";
    case RoleHint::Hypercycle: return "hypercycle";
  }
  return "?";
}

struct ModelObject {
  ModelKind kind;
  RoleHint role_hint;
  std::vector<double> params;  // center / coordinates followed by radius or offset
  Vector lift;
};

inline constexpr double kTolerance = 1e-9;

inline Field model_field() { return Field::approx(kTolerance); }

inline Vector to_vector(const std::vector<double>& xs) {
  const Field f = model_field();
  Vector v;
  for (double x : xs) v.push_back(f.from_double(x));
  return v;
}

inline std::vector<double> to_doubles(const Vector& v) {
  std::vector<double> out;
  for (const auto& x : v) out.push_back(x.to_double());
  return out;
}

/// Geometry dimension the model uses for n (fixed at 2 for the 2-dimensional-only models).
inline void check_dim(ModelKind kind, std::size_t n) {
  switch (kind) {
    case ModelKind::Elliptic:
    case ModelKind::Hyperbolic:
    case ModelKind::Parabolic:
      require(n >= 1, ErrorKind::Unsupported, std::string(to_string(kind)) + " model needs n >= 1");
      break;
    default:
      require(n == 2, ErrorKind::Unsupported, std::string(to_string(kind)) + " model exists for n = 2 only");
  }
}

/// Dimension of the coordinate block c-bar of model points.
inline std::size_t inner_dim(ModelKind kind, std::size_t n) {
  switch (kind) {
    case ModelKind::Elliptic:
    case ModelKind::Hyperbolic: return n + 1;
    case ModelKind::Parabolic: return n;
    case ModelKind::Minkowski2: return 2;
    case ModelKind::DeSitter:
    case ModelKind::AntiDeSitter: return 3;
    case ModelKind::LaguerreGalilei: return 2;
  }
  return 0;
}

/// Signs of the diagonal inner form Q-bar on the c-bar block.
inline std::vector<int> inner_signs(ModelKind kind, std::size_t n) {
  switch (kind) {
    case ModelKind::Elliptic: return std::vector<int>(n + 1, 1);
    case ModelKind::Hyperbolic: {
      std::vector<int> s(n, 1);
      s.push_back(-1);
      return s;
    }
    case ModelKind::Parabolic: return std::vector<int>(n, 1);
    case ModelKind::Minkowski2: return {1, -1};
    case ModelKind::DeSitter: return {1, 1, -1};
    case ModelKind::AntiDeSitter: return {1, -1, -1};
    case ModelKind::LaguerreGalilei: return {};
  }
  return {};
}

inline double inner(ModelKind kind, std::size_t n, const std::vector<double>& a, const std::vector<double>& b) {
  const auto s = inner_signs(kind, n);
  require(a.size() == s.size() && b.size() == s.size(), ErrorKind::InvalidInput,
          std::string(to_string(kind)) + " model: expected " + std::to_string(s.size()) + " coordinates");
  double r = 0;
  for (std::size_t i = 0; i < s.size(); ++i) r += s[i] * a[i] * b[i];
  return r;
}

inline double inner_norm(ModelKind kind, std::size_t n, const std::vector<double>& a) { return inner(kind, n, a, a); }

namespace detail {

inline Geometry build(const Field& f, const std::vector<std::tuple<std::size_t, std::size_t, Scalar>>& terms,
                      std::size_t dim, std::size_t p, std::size_t l, double l_scale = 1.0) {
  Vector P = zero_vector(f, dim), L = zero_vector(f, dim);
  P[p] = f.one();
  L[l] = f.from_double(l_scale);
  return Geometry(QuadraticForm::from_terms(f, dim, terms), P, L);
}

inline Geometry diagonal_model(const std::vector<int>& signs, std::size_t p, std::size_t l) {
  const Field f = model_field();
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> terms;
  for (std::size_t i = 0; i < signs.size(); ++i) terms.emplace_back(i, i, f.from_int(signs[i]));
  return build(f, terms, signs.size(), p, l);
}

/// Q-bar plus x_{k} x_{k+1} plus sign * x_{k+2}^2, with L = 2 e_k and P = e_{k+2}.
inline Geometry null_pair_model(const std::vector<int>& inner_signs, int p_sign) {
  const Field f = model_field();
  const std::size_t k = inner_signs.size();
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> terms;
  for (std::size_t i = 0; i < k; ++i) terms.emplace_back(i, i, f.from_int(inner_signs[i]));
  terms.emplace_back(k, k + 1, f.one());
  terms.emplace_back(k + 2, k + 2, f.from_int(p_sign));
  return build(f, terms, k + 3, k + 2, k, 2.0);
}

}  // namespace detail

/// The model geometry over floating-point reals.
///
/// Elliptic: [1]^{n+1} + [-1 (L), -1 (P)]. Hyperbolic: [1]^n + [-1] + [+1 (L), -1 (P)].
/// Parabolic: |x|^2 + x_{n+1} x_{n+2} - x_{n+3}^2 with L = 2 e_{n+1}, origin O = e_{n+2}, P = e_{n+3};
/// the factor 2 makes the half bilinear pairing of L with O equal to 1.
/// Minkowski: x1^2 - x2^2 + x3 x4 + x5^2 with L = 2 e3, P = e5. De Sitter: [1,1,-1,-1 (L),+1 (P)].
/// Anti-de Sitter: [1,-1,-1,+1 (L),+1 (P)]. Laguerre/Galilei: x1^2 + x3 x4 - x2 x5 with P = e2,
/// O = e3, L = e4, D = e5.
inline Geometry model_geometry(ModelKind kind, std::size_t n) {
  check_dim(kind, n);
  switch (kind) {
    case ModelKind::Elliptic: {
      std::vector<int> s(n + 1, 1);
      s.insert(s.end(), {-1, -1});
      return detail::diagonal_model(s, n + 2, n + 1);
    }
    case ModelKind::Hyperbolic: {
      std::vector<int> s(n, 1);
      s.insert(s.end(), {-1, 1, -1});
      return detail::diagonal_model(s, n + 2, n + 1);
    }
    case ModelKind::Parabolic: return detail::null_pair_model(std::vector<int>(n, 1), -1);
    case ModelKind::Minkowski2: return detail::null_pair_model({1, -1}, 1);
    case ModelKind::DeSitter: return detail::diagonal_model({1, 1, -1, -1, 1}, 4, 3);
    case ModelKind::AntiDeSitter: return detail::diagonal_model({1, -1, -1, 1, 1}, 4, 3);
    case ModelKind::LaguerreGalilei: {
      const Field f = model_field();
      return detail::build(f, {{0, 0, f.one()}, {2, 3, f.one()}, {1, 4, -f.one()}}, 5, 1, 3);
    }
  }
  fail(ErrorKind::Unsupported, "unknown model");
}

/// The Minkowski model with P of negative norm, which carries the hyperbolae and lines missing
/// from the model with P positive.
inline Geometry minkowski_other_half() { return detail::null_pair_model({1, -1}, -1); }

// ----------------------------------------------------------------------------------------------
// Lifts

namespace detail {

inline void require_norm(double got, double want, const std::string& what) {
  require(std::abs(got - want) < 1e-9, ErrorKind::InvalidInput,
          "normalization error: " + what + " must have norm " + std::to_string(want) + ", got " + std::to_string(got));
}

inline std::vector<double> concat(std::vector<double> a, std::initializer_list<double> b) {
  a.insert(a.end(), b);
  return a;
}

inline ModelObject make(ModelKind kind, RoleHint hint, std::vector<double> params, const std::vector<double>& coords) {
  return {kind, hint, std::move(params), to_vector(coords)};
}

}  // namespace detail

/// Lifts a point; the model dimension is read off the number of coordinates.
inline ModelObject lift_point(ModelKind kind, const std::vector<double>& c) {
  const std::size_t n = kind == ModelKind::Elliptic || kind == ModelKind::Hyperbolic ? c.size() - 1
                        : kind == ModelKind::Parabolic                                ? c.size()
                                                                                      : 2;
  check_dim(kind, n);
  switch (kind) {
    case ModelKind::Elliptic:
      detail::require_norm(inner_norm(kind, n, c), 1, "elliptic point");
      return detail::make(kind, RoleHint::Point, c, detail::concat(c, {1, 0}));
    case ModelKind::Hyperbolic:
      detail::require_norm(inner_norm(kind, n, c), -1, "hyperbolic point");
      require(c.back() > 0, ErrorKind::InvalidInput, "normalization error: hyperbolic points lie on the upper sheet");
      return detail::make(kind, RoleHint::Point, c, detail::concat(c, {1, 0}));
    case ModelKind::Parabolic:
    case ModelKind::Minkowski2:
      return detail::make(kind, RoleHint::Point, c, detail::concat(c, {-inner_norm(kind, n, c), 1, 0}));
    case ModelKind::DeSitter:
      detail::require_norm(inner_norm(kind, n, c), 1, "de Sitter point");
      return detail::make(kind, RoleHint::Point, c, detail::concat(c, {1, 0}));
    case ModelKind::AntiDeSitter:
      detail::require_norm(inner_norm(kind, n, c), -1, "anti-de Sitter point");
      return detail::make(kind, RoleHint::Point, c, detail::concat(c, {1, 0}));
    case ModelKind::LaguerreGalilei:
      require(c.size() == 2, ErrorKind::InvalidInput, "Laguerre/Galilei points have coordinates (x, y)");
      return detail::make(kind, RoleHint::Point, c, {c[0], c[1], 1, -c[0] * c[0], 0});
  }
  fail(ErrorKind::Unsupported, "unknown model");
}

/// Lifts an oriented cycle; the sign of the radius selects the orientation. For the
/// Laguerre/Galilei model the cycle is the parabola y - y0 = radius (x - x0)^2 with vertex center.
inline ModelObject lift_cycle(ModelKind kind, const std::vector<double>& c, double r) {
  const std::size_t n = kind == ModelKind::Elliptic || kind == ModelKind::Hyperbolic ? c.size() - 1
                        : kind == ModelKind::Parabolic                                ? c.size()
                                                                                      : 2;
  check_dim(kind, n);
  std::vector<double> params = detail::concat(c, {r});
  switch (kind) {
    case ModelKind::Elliptic:
      detail::require_norm(inner_norm(kind, n, c), 1, "elliptic cycle center");
      return detail::make(kind, RoleHint::Cycle, params, detail::concat(c, {std::cos(r), std::sin(r)}));
    case ModelKind::Hyperbolic:
      detail::require_norm(inner_norm(kind, n, c), -1, "hyperbolic cycle center");
      return detail::make(kind, RoleHint::Cycle, params, detail::concat(c, {std::cosh(r), std::sinh(r)}));
    case ModelKind::Parabolic:
      return detail::make(kind, RoleHint::Cycle, params, detail::concat(c, {r * r - inner_norm(kind, n, c), 1, r}));
    case ModelKind::Minkowski2:
      return detail::make(kind, RoleHint::Cycle, params, detail::concat(c, {-r * r - inner_norm(kind, n, c), 1, r}));
    case ModelKind::DeSitter:
      detail::require_norm(inner_norm(kind, n, c), -1, "de Sitter cycle center");
      return detail::make(kind, RoleHint::Cycle, params, detail::concat(c, {std::sinh(r), std::cosh(r)}));
    case ModelKind::AntiDeSitter:
      detail::require_norm(inner_norm(kind, n, c), -1, "anti-de Sitter cycle center");
      return detail::make(kind, RoleHint::Cycle, params, detail::concat(c, {std::cos(r), std::sin(r)}));
    case ModelKind::LaguerreGalilei: {
      require(c.size() == 2, ErrorKind::InvalidInput, "Laguerre/Galilei parabolae have a vertex (x0, y0)");
      require(r != 0, ErrorKind::InvalidInput, "a parabola needs nonzero curvature");
      const double alpha = r, beta = -2 * r * c[0], gamma = r * c[0] * c[0] + c[1];
      return detail::make(kind, RoleHint::Cycle, params,
                          {beta / 2, beta * beta / 4 - alpha * gamma, -alpha, gamma, 1});
    }
  }
  fail(ErrorKind::Unsupported, "unknown model");
}

/// Lifts the line {x : <normal, x> = offset} (inner form of the model). Elliptic, hyperbolic, de
/// Sitter and anti-de Sitter lines pass through the origin of the ambient model, so the offset
/// must vanish. For the Laguerre/Galilei model the normal is (a, b) for the line a x + b y = offset.
inline ModelObject lift_line(ModelKind kind, const std::vector<double>& nrm, double offset) {
  const std::size_t n = kind == ModelKind::Elliptic || kind == ModelKind::Hyperbolic ? nrm.size() - 1
                        : kind == ModelKind::Parabolic                                ? nrm.size()
                                                                                      : 2;
  check_dim(kind, n);
  std::vector<double> params = detail::concat(nrm, {offset});
  auto central = [&] {
    require(std::abs(offset) < 1e-12, ErrorKind::InvalidInput,
            std::string(to_string(kind)) + " lines are central: the offset must be 0");
  };
  switch (kind) {
    case ModelKind::Elliptic:
      central();
      detail::require_norm(inner_norm(kind, n, nrm), 1, "elliptic line normal");
      return detail::make(kind, RoleHint::Line, params, detail::concat(nrm, {0, 1}));
    case ModelKind::Hyperbolic:
      central();
      detail::require_norm(inner_norm(kind, n, nrm), 1, "hyperbolic line normal");
      return detail::make(kind, RoleHint::Line, params, detail::concat(nrm, {0, 1}));
    case ModelKind::Parabolic:
      detail::require_norm(inner_norm(kind, n, nrm), 1, "line normal");
      return detail::make(kind, RoleHint::Line, params, detail::concat(nrm, {-2 * offset, 0, 1}));
    case ModelKind::Minkowski2:
      require(std::abs(inner_norm(kind, n, nrm) + 1) < 1e-9, ErrorKind::InvalidInput,
              "unliftable line: only normals of norm -1 lift in this Minkowski model (the others live in "
              "minkowski_other_half)");
      return detail::make(kind, RoleHint::Line, params, detail::concat(nrm, {-2 * offset, 0, 1}));
    case ModelKind::DeSitter:
    case ModelKind::AntiDeSitter:
      central();
      detail::require_norm(inner_norm(kind, n, nrm), -1, "line normal");
      return detail::make(kind, RoleHint::Line, params, detail::concat(nrm, {0, 1}));
    case ModelKind::LaguerreGalilei: {
      require(nrm.size() == 2, ErrorKind::InvalidInput, "Laguerre/Galilei lines have a normal (a, b)");
      require(std::abs(nrm[1]) > 1e-12, ErrorKind::InvalidInput,
              "unliftable line: vertical Laguerre/Galilei lines have no lift (t = 0 with u != 0)");
      // y = s x + c  <->  (s/2, s^2/4, 0, c, 1)
      const double s = -nrm[0] / nrm[1], c = offset / nrm[1];
      return detail::make(kind, RoleHint::Line, params, {s / 2, s * s / 4, 0, c, 1});
    }
  }
  fail(ErrorKind::Unsupported, "unknown model");
}

/// Hyperbolic hypercycle at signed distance d from the line with unit space-like normal l.
inline ModelObject lift_hypercycle(const std::vector<double>& l, double d) {
  const std::size_t n = l.size() - 1;
  check_dim(ModelKind::Hyperbolic, n);
  detail::require_norm(inner_norm(ModelKind::Hyperbolic, n, l), 1, "hypercycle normal");
  return detail::make(ModelKind::Hyperbolic, RoleHint::Hypercycle, detail::concat(l, {d}),
                      detail::concat(l, {std::sinh(d), std::cosh(d)}));
}

/// Hyperbolic paracycle (horocycle) with isotropic direction u and parameter lambda.
inline ModelObject lift_paracycle(const std::vector<double>& u, double lambda) {
  const std::size_t n = u.size() - 1;
  check_dim(ModelKind::Hyperbolic, n);
  detail::require_norm(inner_norm(ModelKind::Hyperbolic, n, u), 0, "paracycle direction");
  return detail::make(ModelKind::Hyperbolic, RoleHint::Paracycle, detail::concat(u, {lambda}),
                      detail::concat(u, {lambda, lambda}));
}

/// Model geometry matching an object's coordinates.
inline Geometry geometry_of(const ModelObject& o) {
  const std::size_t dim = o.lift.size();
  return model_geometry(o.kind, o.kind == ModelKind::Elliptic || o.kind == ModelKind::Hyperbolic ? dim - 3
                                : o.kind == ModelKind::Parabolic                               ? dim - 3
                                                                                               : 2);
}

// ----------------------------------------------------------------------------------------------
// Closed forms

struct SeparationCheck {
  std::string quantity;  // "inversive separation" or "relative power"
  double value;
  double expected;
  bool agrees;
};

namespace detail {

inline std::vector<double> head(const ModelObject& o, std::size_t k) {
  return std::vector<double>(o.params.begin(), o.params.begin() + static_cast<std::ptrdiff_t>(k));
}

/// Angle at an intersection point X between the directions (times radius sign) toward the centers.
inline double angle_at(ModelKind kind, std::size_t n, const std::vector<double>& x, const std::vector<double>& c1,
                       const std::vector<double>& c2, double s1, double s2) {
  std::vector<double> t1(x.size()), t2(x.size());
  if (kind == ModelKind::Parabolic) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      t1[i] = s1 * (c1[i] - x[i]);
      t2[i] = s2 * (c2[i] - x[i]);
    }
  } else {
    // tangent projection at x: c - (<c,x>/<x,x>) x
    const double xx = inner_norm(kind, n, x);
    const double a1 = inner(kind, n, c1, x) / xx, a2 = inner(kind, n, c2, x) / xx;
    for (std::size_t i = 0; i < x.size(); ++i) {
      t1[i] = s1 * (c1[i] - a1 * x[i]);
      t2[i] = s2 * (c2[i] - a2 * x[i]);
    }
  }
  auto ip = [&](const std::vector<double>& a, const std::vector<double>& b) {
    if (kind == ModelKind::Parabolic) {
      double r = 0;
      for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
      return r;
    }
    return inner(kind, n, a, b);
  };
  return std::acos(std::clamp(ip(t1, t2) / std::sqrt(ip(t1, t1) * ip(t2, t2)), -1.0, 1.0));
}

/// A common point of two cycles, solved in the plane of the centers (n = 2 models only).
inline std::vector<double> intersection_point(ModelKind kind, std::size_t n, const std::vector<double>& c1,
                                              double r1, const std::vector<double>& c2, double r2) {
  require(n == 2, ErrorKind::Unsupported, "cycle angle closed forms are evaluated for n = 2");
  if (kind == ModelKind::Parabolic) {
    const double dx = c2[0] - c1[0], dy = c2[1] - c1[1], d = std::hypot(dx, dy);
    const double a = (r1 * r1 - r2 * r2 + d * d) / (2 * d);
    const double h2 = r1 * r1 - a * a;
    require(h2 >= -1e-12, ErrorKind::Precondition, "the cycles do not intersect");
    const double h = std::sqrt(std::max(h2, 0.0));
    return {c1[0] + a * dx / d - h * dy / d, c1[1] + a * dy / d + h * dx / d};
  }
  // X = alpha c1 + beta c2 + t w, with <X,c_i> fixed, <X,X> = sigma, w orthogonal to c1, c2
  const double sigma = kind == ModelKind::Elliptic ? 1.0 : -1.0;
  const double k1 = kind == ModelKind::Elliptic ? std::cos(r1) : -std::cosh(r1);
  const double k2 = kind == ModelKind::Elliptic ? std::cos(r2) : -std::cosh(r2);
  const double g11 = inner(kind, n, c1, c1), g12 = inner(kind, n, c1, c2), g22 = inner(kind, n, c2, c2);
  const double det = g11 * g22 - g12 * g12;
  const double alpha = (k1 * g22 - k2 * g12) / det, beta = (k2 * g11 - k1 * g12) / det;
  // w: generalized cross product, then corrected by the signs of the form
  const auto s = inner_signs(kind, n);
  std::vector<double> w{c1[1] * c2[2] - c1[2] * c2[1], c1[2] * c2[0] - c1[0] * c2[2], c1[0] * c2[1] - c1[1] * c2[0]};
  for (std::size_t i = 0; i < 3; ++i) w[i] *= s[i];
  std::vector<double> x0(3);
  for (std::size_t i = 0; i < 3; ++i) x0[i] = alpha * c1[i] + beta * c2[i];
  const double t2 = (sigma - inner_norm(kind, n, x0)) / inner_norm(kind, n, w);
  require(t2 >= -1e-12, ErrorKind::Precondition, "the cycles do not intersect");
  const double t = std::sqrt(std::max(t2, 0.0));
  std::vector<double> x(3);
  for (std::size_t i = 0; i < 3; ++i) x[i] = x0[i] + t * w[i];
  if (kind == ModelKind::Hyperbolic && x[2] < 0)
    for (std::size_t i = 0; i < 3; ++i) x[i] = x0[i] - t * w[i];
  return x;
}

}  // namespace detail

/// Inversive separation of two points or relative power of two cycles, with the closed form:
/// elliptic cos(delta) - 1, hyperbolic 1 - cosh(d), parabolic -d^2/2, cycles cos(theta) - 1.
inline SeparationCheck check_separation(const ModelObject& a, const ModelObject& b) {
  require(a.kind == b.kind && a.lift.size() == b.lift.size(), ErrorKind::InvalidInput,
          "check_separation needs objects of the same model");
  const ModelKind kind = a.kind;
  const Geometry g = geometry_of(a);
  const std::size_t n = g.dim();
  const std::size_t k = inner_dim(kind, n);
  SeparationCheck out;
  if (a.role_hint == RoleHint::Point && b.role_hint == RoleHint::Point) {
    out.quantity = "inversive separation";
    out.value = inversive_separation(g, a.lift, b.lift).to_double();
    const auto c1 = detail::head(a, k), c2 = detail::head(b, k);
    switch (kind) {
      case ModelKind::Elliptic: out.expected = std::cos(std::acos(std::clamp(inner(kind, n, c1, c2), -1.0, 1.0))) - 1; break;
      case ModelKind::Hyperbolic: out.expected = 1 - std::cosh(std::acosh(std::max(1.0, -inner(kind, n, c1, c2)))); break;
      case ModelKind::Parabolic: {
        double d2 = 0;
        for (std::size_t i = 0; i < k; ++i) d2 += (c1[i] - c2[i]) * (c1[i] - c2[i]);
        out.expected = -0.5 * d2;
        break;
      }
      default: fail(ErrorKind::Unsupported, std::string("no point closed form for the ") + to_string(kind) + " model");
    }
  } else if (a.role_hint == RoleHint::Cycle && b.role_hint == RoleHint::Cycle) {
    out.quantity = "relative power";
    out.value = relative_power(g, a.lift, b.lift).to_double();
    require(kind == ModelKind::Elliptic || kind == ModelKind::Hyperbolic || kind == ModelKind::Parabolic,
            ErrorKind::Unsupported, std::string("no cycle closed form for the ") + to_string(kind) + " model");
    const auto c1 = detail::head(a, k), c2 = detail::head(b, k);
    const double r1 = a.params.back(), r2 = b.params.back();
    const auto x = detail::intersection_point(kind, n, c1, std::abs(r1), c2, std::abs(r2));
    const double theta = detail::angle_at(kind, n, x, c1, c2, r1 < 0 ? -1 : 1, r2 < 0 ? -1 : 1);
    out.expected = std::cos(theta) - 1;
  } else {
    fail(ErrorKind::InvalidInput, "check_separation compares two points or two cycles");
  }
  out.agrees = std::abs(out.value - out.expected) < kTolerance;
  return out;
}

// ----------------------------------------------------------------------------------------------
// Parameterized pairs

/// Two elliptic points at spherical distance delta.
inline std::pair<ModelObject, ModelObject> elliptic_points(double delta, std::size_t n = 2) {
  std::vector<double> a(n + 1, 0.0), b(n + 1, 0.0);
  a[0] = 1;
  b[0] = std::cos(delta);
  b[1] = std::sin(delta);
  return {lift_point(ModelKind::Elliptic, a), lift_point(ModelKind::Elliptic, b)};
}

/// Two hyperbolic points at distance d on the hyperboloid.
inline std::pair<ModelObject, ModelObject> hyperbolic_points(double d, std::size_t n = 2) {
  std::vector<double> a(n + 1, 0.0), b(n + 1, 0.0);
  a[n] = 1;
  b[0] = std::sinh(d);
  b[n] = std::cosh(d);
  return {lift_point(ModelKind::Hyperbolic, a), lift_point(ModelKind::Hyperbolic, b)};
}

/// Two Euclidean points at distance d.
inline std::pair<ModelObject, ModelObject> parabolic_points(double d, std::size_t n = 2) {
  std::vector<double> a(n, 0.0), b(n, 0.0);
  b[0] = d;
  return {lift_point(ModelKind::Parabolic, a), lift_point(ModelKind::Parabolic, b)};
}

/// Two positively oriented cycles of radii r1, r2 through a common point whose radii meet at
/// angle theta there (n = 2).
inline std::pair<ModelObject, ModelObject> cycles_at_angle(ModelKind kind, double theta, double r1 = 0.7,
                                                           double r2 = 0.4) {
  switch (kind) {
    case ModelKind::Parabolic: {
      // X at the origin, centers along unit directions at angle theta
      return {lift_cycle(kind, {r1, 0}, r1), lift_cycle(kind, {r2 * std::cos(theta), r2 * std::sin(theta)}, r2)};
    }
    case ModelKind::Elliptic: {
      // X = e3 on the sphere; centers along geodesics leaving X in directions at angle theta
      auto center = [](double phi, double r) {
        return std::vector<double>{std::sin(r) * std::cos(phi), std::sin(r) * std::sin(phi), std::cos(r)};
      };
      return {lift_cycle(kind, center(0, r1), r1), lift_cycle(kind, center(theta, r2), r2)};
    }
    case ModelKind::Hyperbolic: {
      auto center = [](double phi, double r) {
        return std::vector<double>{std::sinh(r) * std::cos(phi), std::sinh(r) * std::sin(phi), std::cosh(r)};
      };
      return {lift_cycle(kind, center(0, r1), r1), lift_cycle(kind, center(theta, r2), r2)};
    }
    default: fail(ErrorKind::Unsupported, "cycles_at_angle supports elliptic, hyperbolic and parabolic models");
  }
}

}  // namespace ucg::models
