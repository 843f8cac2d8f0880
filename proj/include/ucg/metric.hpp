#pragma once

// Distances as group elements. A line of a 2-geometry is the 3-dimensional space <P,l>^perp; the
// determinant-1 isometries of it fixing the vector L form the group Gamma, which is a split
// torus, a non-split torus or the additive group. Oriented distances are elements of Gamma
// expressed in a canonical chart of the line.

#include <optional>
#include <string>
#include <vector>

#include "ucg/geometry.hpp"

namespace ucg {

enum class LineGroupTag { NonSplitTorus, Additive, SplitTorus };

inline const char* to_string(LineGroupTag t) {
  switch (t) {
    case LineGroupTag::NonSplitTorus: return "non-split-torus";
    case LineGroupTag::Additive: return "additive";
    case LineGroupTag::SplitTorus: return "split-torus";
  }
  return "?";
}

struct LineGroupClass {
  LineGroupTag tag;
  std::optional<std::int64_t> order;  // q+1, q, q-1 over F_q

  bool operator==(const LineGroupClass&) const = default;
};

inline LineGroupClass make_line_group_class(LineGroupTag tag, const Field& f) {
  LineGroupClass c{tag, std::nullopt};
  if (f.is_finite()) {
    const std::int64_t q = f.order();
    c.order = tag == LineGroupTag::NonSplitTorus ? q + 1 : tag == LineGroupTag::Additive ? q : q - 1;
  }
  return c;
}

namespace detail {

/// Sign-like class of a scalar: square classes for exact fields, signs for approximate reals.
inline SquareClass real_or_square_class(const Scalar& x) {
  if (x.field().kind() != FieldKind::ApproxReal) return square_class(x);
  if (x.is_zero()) return SquareClass::Zero;
  return x.to_double() > 0 ? SquareClass::Unit : SquareClass::NonResidue;
}

inline SquareClass form_det_class(const QuadraticForm& q) {
  if (q.field().kind() != FieldKind::ApproxReal) return det_class(q);
  return real_or_square_class(determinant(q.gram()));
}

inline LineGroupTag tag_from_class(SquareClass c) {
  switch (c) {
    case SquareClass::Zero: return LineGroupTag::Additive;
    case SquareClass::Unit: return LineGroupTag::SplitTorus;
    case SquareClass::NonResidue: return LineGroupTag::NonSplitTorus;
  }
  return LineGroupTag::Additive;
}

}  // namespace detail

// ----------------------------------------------------------------------------------------------
// Line spaces and charts

struct LineSpace {
  std::vector<Vector> basis;  // basis of <P,l>^perp
  QuadraticForm form;         // restricted form
  Vector L_coords;
};

inline void require_metric_geometry(const Geometry& g) {
  g.field().require_odd_characteristic("distance");
  require(g.dim() == 2, ErrorKind::Unsupported, "distances are implemented for 2-dimensional geometries");
}

inline LineSpace line_space(const Geometry& g, const Vector& l) {
  require_metric_geometry(g);
  require(is_hyperplane(g, l), ErrorKind::InvalidInput, "line_space needs a hyperplane");
  require(!g.B(g.P(), l).is_zero(), ErrorKind::Precondition, "degenerate line: the hyperplane is ideal");
  std::vector<Vector> basis = detail::perp_of(g, {g.P(), l});
  QuadraticForm form = g.form().restrict(basis);
  auto coords = coordinates(basis, g.L());
  require(coords.has_value(), ErrorKind::Internal, "L is not on the line");
  return {std::move(basis), std::move(form), std::move(*coords)};
}

/// Canonical chart (L, c1, c2) of a line.
///
/// Split torus: c1, c2 isotropic in W = L^perp, c1 the lexicographically smaller direction.
/// Non-split torus: c1, c2 an orthogonal basis of W, with eps = -Q(c2)/Q(c1).
/// Additive: c2 isotropic with B(L,c2) = 1 and c1 spanning <L,c2>^perp.
struct LineChart {
  LineGroupClass cls;
  std::vector<Vector> basis;  // ambient vectors L, c1, c2
  QuadraticForm form;         // Q in chart coordinates
  Scalar eps;                 // non-split torus only
  Scalar qu;                  // additive only: Q(c1)

  bool same_chart(const LineChart& o) const { return basis == o.basis; }
};

namespace detail {

inline std::vector<Vector> isotropic_directions(const QuadraticForm& q, const std::vector<Vector>& w) {
  const Field& f = q.field();
  std::vector<Vector> out;
  if (f.is_finite()) {
    for (auto& v : span_points(f, w, q.dim()))
      if (q(v).is_zero()) out.push_back(std::move(v));
    return out;
  }
  // Q(x w0 + w1) = a x^2 + b x + c, plus the direction w0 itself
  const Scalar a = q(w[0]), b = q.polar(w[0], w[1]), c = q(w[1]);
  if (a.is_zero()) {
    out.push_back(normalize(w[0]));
    if (!b.is_zero()) out.push_back(normalize(w[1] - (c / b) * w[0]));
  } else if (auto r = sqrt_if_square(b * b - f.from_int(4) * a * c)) {
    Scalar two_a = a + a;
    out.push_back(normalize((-b + *r) / two_a * w[0] + w[1]));
    out.push_back(normalize((-b - *r) / two_a * w[0] + w[1]));
  } else {
    fail(ErrorKind::Unsupported, "isotropic directions of the line are not defined over the field");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

inline LineChart line_chart(const Geometry& g, const Vector& l) {
  const LineSpace ls = line_space(g, l);
  const Field& f = g.field();
  const QuadraticForm& Q = g.form();
  const Vector& L = g.L();
  std::vector<Vector> w = detail::perp_within(Q, ls.basis, {L});
  require(w.size() == 2, ErrorKind::Internal, "L^perp inside the line is not 2-dimensional");
  const SquareClass cl = detail::real_or_square_class(g.Q(L));
  LineChart chart{make_line_group_class(LineGroupTag::Additive, f), {}, QuadraticForm(f, 3), f.zero(), f.zero()};
  if (cl == SquareClass::Zero) {
    auto y = std::find_if(ls.basis.begin(), ls.basis.end(), [&](const Vector& b) { return !Q.polar(L, b).is_zero(); });
    require(y != ls.basis.end(), ErrorKind::Internal, "line space orthogonal to L");
    Vector v = Q.polar(L, *y).inverse() * *y;
    v = v - Q(v) * L;
    auto u = detail::perp_within(Q, ls.basis, {L, v});
    require(u.size() == 1, ErrorKind::Internal, "additive chart: no complement");
    chart.basis = {L, normalize(u[0]), v};
    chart.qu = Q(chart.basis[1]);
  } else {
    auto iso = detail::isotropic_directions(Q, w);
    if (!iso.empty()) {
      require(iso.size() == 2, ErrorKind::Internal, "split line without two isotropic directions");
      chart.cls = make_line_group_class(LineGroupTag::SplitTorus, f);
      chart.basis = {L, iso[0], iso[1]};
    } else {
      chart.cls = make_line_group_class(LineGroupTag::NonSplitTorus, f);
      Vector w1 = normalize(w[0]);
      auto rest = detail::perp_within(Q, w, {w1});
      Vector w2 = normalize(rest.at(0));
      chart.basis = {L, w1, w2};
      chart.eps = -Q(w2) / Q(w1);
    }
  }
  chart.form = Q.restrict(chart.basis);
  return chart;
}

/// Line group class from the geometry invariants (2-geometries, char != 2).
///
/// The class of Q(L) is read after normalizing the form to determinant class 1, which makes it
/// independent of rescaling Q.
inline LineGroupClass gamma_class(const Geometry& g) {
  require_metric_geometry(g);
  require(g.field().kind() == FieldKind::ApproxReal || non_degenerate_geometry(g), ErrorKind::Precondition,
          "gamma_class needs a non-degenerate geometry (Witt index at least 2)");
  SquareClass c = detail::form_det_class(g.form()) * detail::real_or_square_class(g.Q(g.L()));
  return make_line_group_class(detail::tag_from_class(c), g.field());
}

// ----------------------------------------------------------------------------------------------
// Motion elements

struct MotionElement {
  LineGroupClass cls;
  std::vector<Scalar> normal_form;  // (mu), (a, b) or (tau)
  Matrix matrix;                    // action on chart coordinates (L, c1, c2), columns are images
  LineChart chart;
};

inline Matrix chart_matrix(const LineChart& chart, const std::vector<Scalar>& nf) {
  const Field& f = chart.form.field();
  Matrix m = Matrix::identity(f, 3);
  switch (chart.cls.tag) {
    case LineGroupTag::SplitTorus:
      m(1, 1) = nf.at(0);
      m(2, 2) = nf.at(0).inverse();
      break;
    case LineGroupTag::NonSplitTorus:
      m(1, 1) = nf.at(0);
      m(2, 1) = nf.at(1);
      m(1, 2) = chart.eps * nf.at(1);
      m(2, 2) = nf.at(0);
      break;
    case LineGroupTag::Additive: {
      const Scalar tau = nf.at(0);
      const Scalar alpha = -tau / (chart.qu + chart.qu);
      m(0, 1) = tau;
      m(1, 2) = alpha;
      m(0, 2) = -alpha * alpha * chart.qu;
      break;
    }
  }
  return m;
}

inline MotionElement make_motion(const LineChart& chart, std::vector<Scalar> nf) {
  Matrix m = chart_matrix(chart, nf);
  return {chart.cls, std::move(nf), std::move(m), chart};
}

/// Reads the normal form off a determinant-1 chart matrix fixing L.
inline MotionElement motion_from_matrix(const LineChart& chart, const Matrix& m) {
  std::vector<Scalar> nf;
  switch (chart.cls.tag) {
    case LineGroupTag::SplitTorus: nf = {m(1, 1)}; break;
    case LineGroupTag::NonSplitTorus: nf = {m(1, 1), m(2, 1)}; break;
    case LineGroupTag::Additive: nf = {m(0, 1)}; break;
  }
  MotionElement e = make_motion(chart, nf);
  require(e.matrix == m, ErrorKind::InvalidInput, "matrix is not an element of the line group");
  return e;
}

inline MotionElement identity_motion(const LineChart& chart) {
  const Field& f = chart.form.field();
  switch (chart.cls.tag) {
    case LineGroupTag::SplitTorus: return make_motion(chart, {f.one()});
    case LineGroupTag::NonSplitTorus: return make_motion(chart, {f.one(), f.zero()});
    case LineGroupTag::Additive: return make_motion(chart, {f.zero()});
  }
  fail(ErrorKind::Internal, "unknown line group");
}

inline bool is_identity(const MotionElement& e) { return e.matrix == Matrix::identity(e.matrix.field(), 3); }

inline void require_same_chart(const MotionElement& a, const MotionElement& b) {
  require(a.cls == b.cls && a.chart.same_chart(b.chart), ErrorKind::InvalidInput,
          "incompatible lines: motion elements live in different charts");
}

inline MotionElement compose(const MotionElement& a, const MotionElement& b) {
  require_same_chart(a, b);
  const LineChart& c = a.chart;
  switch (c.cls.tag) {
    case LineGroupTag::SplitTorus: return make_motion(c, {a.normal_form[0] * b.normal_form[0]});
    case LineGroupTag::NonSplitTorus: {
      const Scalar &a1 = a.normal_form[0], &b1 = a.normal_form[1], &a2 = b.normal_form[0], &b2 = b.normal_form[1];
      return make_motion(c, {a1 * a2 + c.eps * b1 * b2, a1 * b2 + b1 * a2});
    }
    case LineGroupTag::Additive: return make_motion(c, {a.normal_form[0] + b.normal_form[0]});
  }
  fail(ErrorKind::Internal, "unknown line group");
}

inline MotionElement invert(const MotionElement& a) {
  const LineChart& c = a.chart;
  switch (c.cls.tag) {
    case LineGroupTag::SplitTorus: return make_motion(c, {a.normal_form[0].inverse()});
    case LineGroupTag::NonSplitTorus: return make_motion(c, {a.normal_form[0], -a.normal_form[1]});
    case LineGroupTag::Additive: return make_motion(c, {-a.normal_form[0]});
  }
  fail(ErrorKind::Internal, "unknown line group");
}

inline bool equal_motion(const MotionElement& a, const MotionElement& b) {
  require_same_chart(a, b);
  return a.matrix == b.matrix;
}

/// Unoriented distance comparison, gamma1 in {gamma2, gamma2^-1}.
///
/// Within one chart this is a direct comparison. Across the charts of two lines it compares
/// conjugation invariants: the trace for the tori and tau^2 / Q(c1) for the additive group.
inline bool same_distance(const MotionElement& a, const MotionElement& b) {
  require(a.cls == b.cls, ErrorKind::InvalidInput, "incompatible lines: different line group classes");
  if (a.chart.same_chart(b.chart)) return a.matrix == b.matrix || a.matrix == invert(b).matrix;
  switch (a.cls.tag) {
    case LineGroupTag::SplitTorus:
    case LineGroupTag::NonSplitTorus: {
      Scalar ta = a.matrix(0, 0) + a.matrix(1, 1) + a.matrix(2, 2);
      Scalar tb = b.matrix(0, 0) + b.matrix(1, 1) + b.matrix(2, 2);
      return ta == tb;
    }
    case LineGroupTag::Additive: {
      const Scalar& ta = a.normal_form[0];
      const Scalar& tb = b.normal_form[0];
      return ta * ta / a.chart.qu == tb * tb / b.chart.qu;
    }
  }
  return false;
}

// ----------------------------------------------------------------------------------------------
// Points on lines and translations

/// Chart coordinates of an ambient vector of the line.
inline Vector chart_coordinates(const LineChart& chart, const Vector& v) {
  auto c = coordinates(chart.basis, v);
  require(c.has_value(), ErrorKind::InvalidInput, "the vector does not lie on the line");
  return *c;
}

inline Vector from_chart(const LineChart& chart, const Vector& c) { return combine(chart.basis, c); }

inline MotionElement translation_between(const Geometry& g, const Vector& l, const Vector& p1, const Vector& p2) {
  const LineChart chart = line_chart(g, l);
  for (const Vector* p : {&p1, &p2}) {
    require(is_point(g, *p), ErrorKind::InvalidInput, "translation_between needs points");
    require(!g.B(*p, g.L()).is_zero(), ErrorKind::Precondition, "ideal point: translations act on non-ideal points");
    require(g.B(*p, l).is_zero(), ErrorKind::InvalidInput, "point is not incident with the line");
  }
  Vector x = chart_coordinates(chart, p1), y = chart_coordinates(chart, p2);
  switch (chart.cls.tag) {
    case LineGroupTag::SplitTorus: {
      x = x[0].inverse() * x;
      y = y[0].inverse() * y;
      return make_motion(chart, {y[1] / x[1]});
    }
    case LineGroupTag::NonSplitTorus: {
      x = x[0].inverse() * x;
      y = y[0].inverse() * y;
      const Scalar& e = chart.eps;
      Scalar n = x[1] * x[1] - e * x[2] * x[2];
      Scalar a = (y[1] * x[1] - e * y[2] * x[2]) / n;
      Scalar b = (y[2] * x[1] - y[1] * x[2]) / n;
      return make_motion(chart, {a, b});
    }
    case LineGroupTag::Additive: {
      x = x[2].inverse() * x;
      y = y[2].inverse() * y;
      Scalar two_qu = chart.qu + chart.qu;
      return make_motion(chart, {two_qu * (x[1] - y[1])});
    }
  }
  fail(ErrorKind::Internal, "unknown line group");
}

/// Applies a motion element to an ambient vector of its line.
inline Vector apply_motion(const MotionElement& e, const Vector& v) {
  return from_chart(e.chart, e.matrix * chart_coordinates(e.chart, v));
}

/// Non-ideal points of the line <P,l>^perp (finite fields).
inline std::vector<ProjPoint> line_points(const Geometry& g, const Vector& l) {
  const LineSpace ls = line_space(g, l);
  check_enumerable(g.field(), ls.basis.size(), {3, 1 << 20});
  std::vector<ProjPoint> out;
  for (auto& v : span_points(g.field(), ls.basis, g.vector_dim()))
    if (g.Q(v).is_zero() && !g.B(v, g.L()).is_zero()) out.push_back(std::move(v));
  return out;
}

/// Non-ideal hyperplanes of the geometry, one orientation per unoriented line.
inline std::vector<ProjPoint> non_ideal_lines(const Geometry& g) {
  std::map<std::vector<Vector>, ProjPoint> lines;
  for (auto& h : geometry_hyperplanes(g)) {
    if (g.B(h, g.P()).is_zero()) continue;
    lines.try_emplace(unoriented_key(g, h), h);
  }
  std::vector<ProjPoint> out;
  for (auto& [k, h] : lines) out.push_back(h);
  return out;
}

/// All isometries of the line fixing the vector L, as chart matrices (determinant +-1).
inline std::vector<Matrix> full_line_stabilizer(const LineChart& chart) {
  const QuadraticForm& F = chart.form;
  const Field& f = F.field();
  check_enumerable(f, 3, {3, 1 << 20});
  const Vector e0 = unit_vector(f, 3, 0), e1 = unit_vector(f, 3, 1), e2 = unit_vector(f, 3, 2);
  std::vector<Vector> y1s, y2s;
  for_each_vector(f, 3, [&](const Vector& y) {
    if (F(y) == F(e1) && F.polar(y, e0) == F.polar(e1, e0)) y1s.push_back(y);
    if (F(y) == F(e2) && F.polar(y, e0) == F.polar(e2, e0)) y2s.push_back(y);
  });
  std::vector<Matrix> out;
  for (const auto& y1 : y1s)
    for (const auto& y2 : y2s) {
      if (F.polar(y1, y2) != F.polar(e1, e2)) continue;
      Matrix m = Matrix::from_columns(f, {e0, y1, y2}, 3);
      if (determinant(m).is_zero()) continue;
      out.push_back(std::move(m));
    }
  return out;
}

/// Gamma: the determinant-1 part of the line stabilizer, as motion elements.
inline std::vector<MotionElement> stabilizer_group(const Geometry& g, const Vector& l) {
  require(g.field().is_finite(), ErrorKind::Unsupported, "stabilizer enumeration needs a finite field");
  const LineChart chart = line_chart(g, l);
  std::vector<MotionElement> out;
  for (const auto& m : full_line_stabilizer(chart))
    if (determinant(m).is_one()) out.push_back(motion_from_matrix(chart, m));
  return out;
}

}  // namespace ucg
