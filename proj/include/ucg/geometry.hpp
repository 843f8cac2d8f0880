#pragma once

// Universal conformal geometries (V, Q, P, L): roles of hypercycles, incidence, relative power
// and inversive separation, the pointspace P^perp with projections, subcycles and subplanes,
// antipodal classes and the Poincare / Cayley-Klein models.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ucg/enumerate.hpp"
#include "ucg/quadform.hpp"

namespace ucg {

/// A projective point: a nonzero vector whose first nonzero coordinate is 1.
using ProjPoint = Vector;

inline ProjPoint projective_point(const Vector& v) {
  require(!is_zero_vector(v), ErrorKind::InvalidInput, "the zero vector is not a projective point");
  return normalize(v);
}

enum class Role { Point, Hyperplane, Ideal, GenericCycle };

inline const char* to_string(Role r) {
  switch (r) {
    case Role::Point: return "point";
    case Role::Hyperplane: return "hyperplane";
    case Role::Ideal: return "ideal";
    case Role::GenericCycle: return "cycle";
  }
  return "?";
}

class Geometry {
 public:
  /// Validates and stores (Q, P, L); P and L keep the given representatives.
  Geometry(QuadraticForm q, Vector p, Vector l) : q_(std::move(q)), p_(std::move(p)), l_(std::move(l)) {
    const std::size_t n = q_.dim();
    require(n >= 4, ErrorKind::InvalidInput, "invalid geometry: the form needs dimension at least 4");
    require(p_.size() == n && l_.size() == n, ErrorKind::InvalidInput,
            "invalid geometry: P and L must have the dimension of the form");
    require(!is_zero_vector(p_) && !is_zero_vector(l_), ErrorKind::InvalidInput,
            "invalid geometry: P and L must be nonzero");
    require(q_.polar(p_, l_).is_zero(), ErrorKind::InvalidInput, "invalid geometry: P and L must be orthogonal");
    require(rank(std::vector<Vector>{p_, l_}) == 2, ErrorKind::InvalidInput,
            "invalid geometry: P and L must be distinct projective points");
    require(bilinear_radical(q_).empty(), ErrorKind::InvalidInput,
            "invalid geometry: the associated bilinear form is degenerate");
  }

  const QuadraticForm& form() const noexcept { return q_; }
  const Vector& P() const noexcept { return p_; }
  const Vector& L() const noexcept { return l_; }
  const Field& field() const noexcept { return q_.field(); }
  std::size_t vector_dim() const noexcept { return q_.dim(); }
  /// Geometry dimension n, so that dim V = n + 3.
  std::size_t dim() const noexcept { return q_.dim() - 3; }

  Scalar Q(const Vector& v) const { return q_(v); }
  Scalar B(const Vector& u, const Vector& v) const { return q_.polar(u, v); }

  friend bool operator==(const Geometry&, const Geometry&) = default;

 private:
  QuadraticForm q_;
  Vector p_, l_;
};

inline Geometry new_geometry(const QuadraticForm& q, const Vector& p, const Vector& l) { return Geometry(q, p, l); }

inline Geometry dual_geometry(const Geometry& g) { return Geometry(g.form(), g.L(), g.P()); }

/// The same geometry after the change of coordinates x = M y: Q'(y) = Q(M y), P' = M^-1 P.
inline Geometry pull_back(const Geometry& g, const Matrix& m) {
  auto inv = inverse(m);
  require(inv.has_value(), ErrorKind::InvalidInput, "pull_back needs an invertible matrix");
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return Geometry(g.form().restrict(cols), *inv * g.P(), *inv * g.L());
}

/// The geometry (Q, hP, hL) for an isometry h of Q.
inline Geometry apply_isometry(const Geometry& g, const Matrix& h) {
  require(is_isometry(g.form(), h), ErrorKind::InvalidInput, "apply_isometry needs an isometry of the form");
  return Geometry(g.form(), h * g.P(), h * g.L());
}

inline bool on_lie_quadric(const Geometry& g, const Vector& c) { return g.Q(c).is_zero(); }

namespace detail {
inline void require_hypercycle(const Geometry& g, const Vector& c) {
  require(c.size() == g.vector_dim(), ErrorKind::InvalidInput, "hypercycle of the wrong dimension");
  require(!is_zero_vector(c), ErrorKind::InvalidInput, "the zero vector is not a hypercycle");
  require(on_lie_quadric(g, c), ErrorKind::InvalidInput, "not a hypercycle: Q(c) must vanish");
}
}  // namespace detail

inline Role role(const Geometry& g, const Vector& c) {
  detail::require_hypercycle(g, c);
  bool point = g.B(g.P(), c).is_zero();
  bool hyperplane = g.B(g.L(), c).is_zero();
  if (point && hyperplane) return Role::Ideal;
  if (point) return Role::Point;
  if (hyperplane) return Role::Hyperplane;
  return Role::GenericCycle;
}

inline bool is_point(const Geometry& g, const Vector& c) {
  Role r = role(g, c);
  return r == Role::Point || r == Role::Ideal;
}

inline bool is_hyperplane(const Geometry& g, const Vector& c) {
  Role r = role(g, c);
  return r == Role::Hyperplane || r == Role::Ideal;
}

inline bool incident(const Geometry& g, const Vector& c1, const Vector& c2) {
  detail::require_hypercycle(g, c1);
  detail::require_hypercycle(g, c2);
  return g.B(c1, c2).is_zero();
}

inline Scalar relative_power(const Geometry& g, const Vector& c1, const Vector& c2) {
  g.field().require_odd_characteristic("relative_power");
  const Scalar d1 = half_polar(g.form(), c1, g.P()), d2 = half_polar(g.form(), c2, g.P());
  require(!d1.is_zero() && !d2.is_zero(), ErrorKind::Precondition,
          "relative power needs cycles not orthogonal to P (ideal denominator)");
  return half_polar(g.form(), c1, c2) / (d1 * d2);
}

inline Scalar inversive_separation(const Geometry& g, const Vector& c1, const Vector& c2) {
  g.field().require_odd_characteristic("inversive_separation");
  const Scalar d1 = half_polar(g.form(), c1, g.L()), d2 = half_polar(g.form(), c2, g.L());
  require(!d1.is_zero() && !d2.is_zero(), ErrorKind::Precondition,
          "inversive separation needs cycles not orthogonal to L (ideal denominator)");
  return half_polar(g.form(), c1, c2) / (d1 * d2);
}

// ----------------------------------------------------------------------------------------------
// Global properties

/// Witt index at least 2: the geometry has an incident non-ideal point and hyperplane.
inline bool non_degenerate_geometry(const Geometry& g) { return witt_index(g.form()) >= 2; }

/// Whether the geometry has points besides P itself, decided from the form invariants.
inline bool non_empty(const Geometry& g) {
  const Field& f = g.field();
  f.require_odd_characteristic("non_empty");
  f.require_exact("non_empty");
  const QuadraticForm& q = g.form();
  const Scalar qp = g.Q(g.P());
  const std::size_t n = q.dim();
  if (f.kind() == FieldKind::RationalAsReal) {
    Signature s = signature(q);
    if (qp.is_zero()) return s.positive >= 2 && s.negative >= 2;
    bool pos = qp.rational() > 0;
    return s.positive >= 1 + (pos ? 1 : 0) && s.negative >= 1 + (pos ? 0 : 1);
  }
  if (qp.is_zero()) return witt_index(q) >= 2;
  // [Q(P), 1, -1] embeds iff Q has a hyperbolic plane whose complement represents Q(P);
  // a complement of dimension >= 2 represents every nonzero value over a finite field.
  if (witt_index(q) < 1) return false;
  if (n - 2 >= 2) return true;
  return det_class(q) == square_class(-qp);
}

// ----------------------------------------------------------------------------------------------
// Enumeration

inline std::vector<ProjPoint> lie_quadric_points(const Geometry& g) {
  check_enumerable(g.field(), g.vector_dim());
  std::vector<ProjPoint> out;
  for (auto& v : projective_points(g.field(), g.vector_dim()))
    if (g.Q(v).is_zero()) out.push_back(std::move(v));
  return out;
}

/// Isotropic projective points of an arbitrary form (used for bare forms such as [1,-e]).
inline std::vector<ProjPoint> isotropic_points(const QuadraticForm& q) {
  check_enumerable(q.field(), q.dim());
  std::vector<ProjPoint> out;
  for (auto& v : projective_points(q.field(), q.dim()))
    if (q(v).is_zero()) out.push_back(std::move(v));
  return out;
}

/// All points of the geometry: Lie quadric points orthogonal to P.
inline std::vector<ProjPoint> geometry_points(const Geometry& g) {
  std::vector<ProjPoint> out;
  for (auto& v : lie_quadric_points(g))
    if (g.B(g.P(), v).is_zero()) out.push_back(std::move(v));
  return out;
}

/// All oriented hyperplanes of the geometry (Lie quadric points orthogonal to L).
inline std::vector<ProjPoint> geometry_hyperplanes(const Geometry& g) {
  std::vector<ProjPoint> out;
  for (auto& v : lie_quadric_points(g))
    if (g.B(g.L(), v).is_zero()) out.push_back(std::move(v));
  return out;
}

/// [[c]]: the points of the geometry incident with c.
inline std::vector<ProjPoint> points_of(const Geometry& g, const Vector& c) {
  detail::require_hypercycle(g, c);
  std::vector<ProjPoint> out;
  for (auto& v : geometry_points(g))
    if (g.B(c, v).is_zero()) out.push_back(std::move(v));
  return out;
}

// ----------------------------------------------------------------------------------------------
// Pointspace

struct Pointspace {
  std::vector<Vector> basis;  // basis of P^perp in ambient coordinates
  QuadraticForm form;         // Q restricted to the basis
  Vector L_coords;            // coordinates of L in the basis
};

inline Pointspace pointspace(const Geometry& g) {
  Matrix row(g.field(), 1, g.vector_dim());
  for (std::size_t j = 0; j < g.vector_dim(); ++j) row(0, j) = g.B(g.P(), unit_vector(g.field(), g.vector_dim(), j));
  std::vector<Vector> basis = nullspace(row);
  auto coords = coordinates(basis, g.L());
  require(coords.has_value(), ErrorKind::Internal, "L not in the pointspace");
  QuadraticForm restricted = g.form().restrict(basis);
  return {std::move(basis), std::move(restricted), std::move(*coords)};
}

/// c - B(P,c)/B(P,P) P, the projection through P onto P^perp, with no rescaling.
inline Vector project_vector(const Geometry& g, const Vector& c) {
  const Scalar bpp = g.B(g.P(), g.P());
  require(!bpp.is_zero(), ErrorKind::Precondition, "no canonical projection: P is isotropic");
  return c - (g.B(g.P(), c) / bpp) * g.P();
}

inline ProjPoint project_cycle(const Geometry& g, const Vector& c) { return projective_point(project_vector(g, c)); }

/// [[x]]^P for x in P^perp, enumerated inside the pointspace coordinates.
inline std::vector<ProjPoint> pointspace_points_of(const Geometry& g, const Vector& x) {
  require(g.B(g.P(), x).is_zero(), ErrorKind::InvalidInput, "pointspace_points_of needs a vector orthogonal to P");
  const Pointspace ps = pointspace(g);
  check_enumerable(g.field(), ps.basis.size());
  std::vector<ProjPoint> out;
  for (const auto& c : projective_points(g.field(), ps.basis.size())) {
    if (!ps.form(c).is_zero()) continue;
    Vector v = combine(ps.basis, c);
    if (g.B(v, x).is_zero()) out.push_back(normalize(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool antipodal(const Geometry& g, const Vector& p, const Vector& q) {
  require(is_point(g, p) && is_point(g, q), ErrorKind::InvalidInput, "antipodal needs two points of the geometry");
  return rank(std::vector<Vector>{p, q, g.L()}) <= 2;
}

// ----------------------------------------------------------------------------------------------
// Subcycles

struct Subcycle {
  std::vector<Vector> basis;   // basis of a subspace of P^perp
  bool is_subplane = false;    // the span contains L
  std::optional<bool> actual;  // determined over finite fields only

  /// Dimension as a subcycle: a subspace of vector dimension k+2 is a k-dimensional subcycle.
  int dimension() const { return static_cast<int>(basis.size()) - 2; }
};

namespace detail {

inline std::vector<Vector> perp_of(const Geometry& g, const std::vector<Vector>& rows) {
  Matrix m(g.field(), rows.size(), g.vector_dim());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < g.vector_dim(); ++j) m(i, j) = g.B(rows[i], unit_vector(g.field(), g.vector_dim(), j));
  return nullspace(m);
}

/// Actual iff the orthogonal complement is spanned by P and isotropic vectors.
inline std::optional<bool> actuality(const Geometry& g, const std::vector<Vector>& basis, bool subplane) {
  if (!g.field().is_finite()) return std::nullopt;
  std::vector<Vector> complement = perp_of(g, basis);
  check_enumerable(g.field(), complement.size());
  std::vector<Vector> gens{g.P()};
  for (const auto& c : span_points(g.field(), complement, g.vector_dim())) {
    if (!g.Q(c).is_zero()) continue;
    if (subplane && !g.B(c, g.L()).is_zero()) continue;
    gens.push_back(c);
  }
  return rank(gens) == complement.size();
}

inline Subcycle make_subcycle(const Geometry& g, std::vector<Vector> basis) {
  for (const auto& b : basis)
    require(g.B(g.P(), b).is_zero(), ErrorKind::InvalidInput, "subcycle vectors must be orthogonal to P");
  Subcycle s;
  s.is_subplane = in_span(basis, g.L());
  s.actual = actuality(g, basis, s.is_subplane);
  s.basis = canonical_span(basis);
  return s;
}

}  // namespace detail

/// The virtual subcycle spanned by independent points (dimension k-2 for k points).
inline Subcycle span_subcycle(const Geometry& g, const std::vector<Vector>& points) {
  require(!points.empty(), ErrorKind::InvalidInput, "span_subcycle needs at least one point");
  for (const auto& p : points) require(is_point(g, p), ErrorKind::InvalidInput, "span_subcycle needs points");
  require(linearly_independent(points), ErrorKind::InvalidInput, "span_subcycle: the points are dependent");
  return detail::make_subcycle(g, points);
}

/// The virtual subplane through independent points without antipodal pairs (dimension k-1).
inline Subcycle subplane_through(const Geometry& g, const std::vector<Vector>& points) {
  for (const auto& p : points) require(is_point(g, p), ErrorKind::InvalidInput, "subplane_through needs points");
  std::vector<Vector> rows = points;
  rows.push_back(g.L());
  require(linearly_independent(rows), ErrorKind::InvalidInput,
          "subplane_through: the points together with L are dependent");
  return detail::make_subcycle(g, rows);
}

/// The subplane <P, l_1, ..., l_k>^perp of dimension n-k.
inline Subcycle intersect_hyperplanes(const Geometry& g, const std::vector<Vector>& hyperplanes) {
  std::vector<Vector> rows{g.P()};
  for (const auto& l : hyperplanes) {
    require(is_hyperplane(g, l), ErrorKind::InvalidInput, "intersect_hyperplanes needs hyperplanes");
    rows.push_back(l);
  }
  require(linearly_independent(rows), ErrorKind::InvalidInput,
          "intersect_hyperplanes: the hyperplanes are dependent modulo P");
  return detail::make_subcycle(g, detail::perp_of(g, rows));
}

/// Isotropic projective points of a subcycle.
inline std::vector<ProjPoint> subcycle_points(const Geometry& g, const Subcycle& s) {
  std::vector<ProjPoint> out;
  for (auto& v : span_points(g.field(), s.basis, g.vector_dim()))
    if (g.Q(v).is_zero()) out.push_back(std::move(v));
  return out;
}

/// Quasi-ideal: Q restricted to the subplane is degenerate.
inline bool quasi_ideal(const Geometry& g, const Subcycle& s) {
  require(!s.basis.empty(), ErrorKind::InvalidInput, "quasi_ideal of an empty subspace");
  return !bilinear_radical(g.form().restrict(s.basis)).empty();
}

/// All oriented hyperplanes l (l not a multiple of P) incident with the given points.
///
/// The linear conditions B(l,p_i) = B(l,L) = 0 cut out <P, w>; the quadric meets that line in
/// the (at most two) orientations of one unoriented hyperplane.
inline std::vector<ProjPoint> hyperplanes_through(const Geometry& g, const std::vector<Vector>& points) {
  for (const auto& p : points) require(is_point(g, p), ErrorKind::InvalidInput, "hyperplane_through needs points");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      require(!antipodal(g, points[i], points[j]), ErrorKind::Precondition,
              "hyperplane_through: the points contain an antipodal pair");
  std::vector<Vector> rows = points;
  rows.push_back(g.L());
  std::vector<Vector> kernel = detail::perp_of(g, rows);  // always contains P
  require(kernel.size() <= 2, ErrorKind::Precondition,
          "hyperplane_through: the points do not determine a hyperplane (too few points)");
  std::vector<ProjPoint> out;
  auto w_it = std::find_if(kernel.begin(), kernel.end(),
                           [&](const Vector& k) { return rank(std::vector<Vector>{g.P(), k}) == 2; });
  if (w_it == kernel.end()) return out;
  const Vector w = *w_it;
  const Field& f = g.field();
  if (f.is_finite()) {
    for (auto& v : span_points(f, {g.P(), w}, g.vector_dim()))
      if (g.Q(v).is_zero() && rank(std::vector<Vector>{v, g.P()}) == 2) out.push_back(std::move(v));
    return out;
  }
  // l = w + t P with Q(w) + t B(w,P) + t^2 Q(P) = 0
  const Scalar a = g.Q(g.P()), b = g.B(w, g.P()), c = g.Q(w);
  if (a.is_zero()) {
    if (!b.is_zero()) out.push_back(normalize(w - (c / b) * g.P()));
    else if (c.is_zero()) out.push_back(normalize(w));
  } else {
    Scalar disc = b * b - f.from_int(4) * a * c;
    if (auto r = sqrt_if_square(disc)) {
      Scalar two_a = a + a;
      out.push_back(normalize(w + ((-b + *r) / two_a) * g.P()));
      if (!r->is_zero()) out.push_back(normalize(w + ((-b - *r) / two_a) * g.P()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The lexicographically first orientation of the unique hyperplane through the points, if any.
inline std::optional<ProjPoint> hyperplane_through(const Geometry& g, const std::vector<Vector>& points) {
  auto all = hyperplanes_through(g, points);
  if (all.empty()) return std::nullopt;
  return all.front();
}

/// Unoriented line key: the canonical span of <P, l>.
inline std::vector<Vector> unoriented_key(const Geometry& g, const Vector& c) {
  return canonical_span({g.P(), c});
}

// ----------------------------------------------------------------------------------------------
// Models

/// The Poincare (inversive) model is the pointspace with its quadric.
inline Pointspace poincare_model(const Geometry& g) { return pointspace(g); }

/// Points of the geometry grouped into antipodal classes (lines through L).
inline std::vector<std::vector<ProjPoint>> cayley_klein_points(const Geometry& g) {
  std::map<std::vector<Vector>, std::vector<ProjPoint>> classes;
  for (auto& p : geometry_points(g)) classes[canonical_span({p, g.L()})].push_back(std::move(p));
  std::vector<std::vector<ProjPoint>> out;
  for (auto& [key, members] : classes) out.push_back(std::move(members));
  return out;
}

}  // namespace ucg
