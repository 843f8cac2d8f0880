#pragma once

// Verification suites: each property is checked exhaustively or on seeded random samples
// against brute-force oracles, and the first counterexample is kept.

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ucg/classify.hpp"
#include "ucg/geometry.hpp"
#include "ucg/io.hpp"
#include "ucg/metric.hpp"
#include "ucg/models.hpp"
#include "ucg/oracle.hpp"
#include "ucg/quadform.hpp"

namespace ucg::verify {

struct PropertyResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string counterexample;

  bool passed() const { return failures == 0 && checked > 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<std::string> fields;
  std::vector<PropertyResult> properties;
  std::vector<std::string> notes;
  double seconds = 0;

  bool passed() const {
    for (const auto& p : properties)
      if (!p.passed()) return false;
    return !properties.empty();
  }

  PropertyResult& property(const std::string& name) {
    for (auto& p : properties)
      if (p.name == name) return p;
    properties.push_back({name, 0, 0, {}});
    return properties.back();
  }

  template <class Describe>
  void check(const std::string& name, bool ok, Describe&& describe) {
    PropertyResult& p = property(name);
    ++p.checked;
    if (!ok) {
      if (p.failures == 0) p.counterexample = describe();
      ++p.failures;
    }
  }

  void check(const std::string& name, bool ok) {
    check(name, ok, [] { return std::string(); });
  }

  /// Runs fn; an exception counts as one failure of the named property.
  template <class Fn>
  void guarded(const std::string& name, const std::string& context, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      check(name, false, [&] { return context + ": " + e.what(); });
    }
  }
};

const std::vector<std::string>& suite_names();

namespace detail {

using Rng = std::mt19937_64;

inline Vector random_vector(const Field& f, std::size_t n, Rng& rng) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(f, rng));
  return v;
}

inline QuadraticForm random_form(const Field& f, std::size_t n, Rng& rng) {
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> terms;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) terms.emplace_back(i, j, random_scalar(f, rng));
  return QuadraticForm::from_terms(f, n, terms);
}

/// Calls fn on every diagonal form of the given dimension with nonzero entries.
template <class Fn>
void for_each_diagonal(const Field& f, std::size_t n, Fn&& fn) {
  std::vector<Scalar> nonzero;
  for (const auto& x : f.elements())
    if (!x.is_zero()) nonzero.push_back(x);
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<Scalar> d;
    for (auto i : idx) d.push_back(nonzero[i]);
    fn(QuadraticForm::diagonal(f, d));
    std::size_t k = n;
    while (k > 0 && ++idx[k - 1] == nonzero.size()) idx[--k] = 0;
    if (k == 0) return;
  }
}

inline std::string show(const Vector& v) { return to_string(v); }

inline std::string show_list(const std::vector<Vector>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + to_string(vs[i]);
  return s + "}";
}

inline std::string label(const Field& f) { return "[" + f.name() + "]"; }

inline std::vector<Geometry> atlas_geometries(const Field& f) {
  std::vector<Geometry> out;
  for (const auto& c : enumerate_classes(f, 2)) out.push_back(representative(c));
  return out;
}

inline std::string class_name(const Geometry& g) { return classify(g).name.value_or("?"); }

inline std::string pl_string(const Geometry& g) {
  return class_name(g) + " P=" + to_string(g.P()) + " L=" + to_string(g.L());
}

struct LimitsGuard {
  EnumerationLimits saved = default_limits();
  explicit LimitsGuard(std::int64_t max_q) { default_limits().max_q = std::max(default_limits().max_q, max_q); }
  ~LimitsGuard() { default_limits() = saved; }
};

// ----------------------------------------------------------------------------------------------

inline void polarization(SuiteReport& r, const std::vector<Field>& fields, Rng& rng) {
  for (const Field& f : fields) {
    const std::string tag = " " + label(f);
    for (std::size_t n = 1; n <= 5; ++n)
      for (int k = 0; k < 3; ++k) {
        const QuadraticForm q = random_form(f, n, rng);
        const BilinearForm b = assoc_bilinear(q);
        const Matrix& gm = b.matrix();
        bool entries = true;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) {
            const Scalar want = i == j ? q.coeff(i, i) + q.coeff(i, i) : q.coeff(std::min(i, j), std::max(i, j));
            entries = entries && gm(i, j) == want;
          }
        r.check("B_ii = 2 c_ii and B_ij = c_ij" + tag, entries, [&] { return q.to_string(); });
        for (int s = 0; s < 200; ++s) {
          const Vector u = random_vector(f, n, rng), v = random_vector(f, n, rng);
          const Scalar lam = random_scalar(f, rng);
          r.check("B(u,v) = Q(u+v) - Q(u) - Q(v)" + tag, b(u, v) == q(u + v) - q(u) - q(v),
                  [&] { return q.to_string() + " u=" + show(u) + " v=" + show(v); });
          r.check("B symmetric" + tag, b(u, v) == b(v, u));
          r.check("Q(lambda v) = lambda^2 Q(v)" + tag, q(lam * v) == lam * lam * q(v),
                  [&] { return q.to_string() + " v=" + show(v) + " lambda=" + lam.to_string(); });
          if (f.characteristic() != 2)
            r.check("half form: B_half(v,v) = Q(v)" + tag, half_bilinear(q)(v, v) == q(v),
                    [&] { return q.to_string() + " v=" + show(v); });
        }
      }
  }
}

// ----------------------------------------------------------------------------------------------

inline bool valid_ortho_set(const QuadraticForm& q, const std::vector<Vector>& s) {
  if (!linearly_independent(s)) return false;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const Scalar b = q.polar(s[i], s[j]);
      if (b.is_zero()) continue;
      if (!(b.is_one() && q.polar(s[i], s[i]).is_zero() && q.polar(s[j], s[j]).is_zero())) return false;
    }
  return true;
}

/// Structural check of a generalized orthogonal basis containing s; empty string when valid.
inline std::string basis_defect(const QuadraticForm& q, const std::vector<Vector>& s, const GenOrthoBasis& gb) {
  const auto& vs = gb.vectors;
  if (vs.size() != q.dim() || !linearly_independent(vs)) return "not a basis";
  for (const auto& x : s)
    if (std::find(vs.begin(), vs.end(), x) == vs.end()) return "does not contain " + to_string(x);
  std::vector<int> partner(vs.size(), -1);
  for (auto [i, j] : gb.couples) {
    if (i >= vs.size() || j >= vs.size() || i == j || partner[i] != -1 || partner[j] != -1) return "bad couple indices";
    partner[i] = static_cast<int>(j);
    partner[j] = static_cast<int>(i);
    if (!q.polar(vs[i], vs[j]).is_one()) return "couple with B != 1";
    if (!q.polar(vs[i], vs[i]).is_zero() || !q.polar(vs[j], vs[j]).is_zero()) return "couple of non-symplectic vectors";
  }
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (partner[i] != static_cast<int>(j) && !q.polar(vs[i], vs[j]).is_zero())
        return "unmarked pair " + std::to_string(i) + "," + std::to_string(j) + " not orthogonal";
  if (s.size() == 2 && !q.polar(s[0], s[1]).is_zero()) {
    auto a = std::find(vs.begin(), vs.end(), s[0]) - vs.begin();
    auto b = std::find(vs.begin(), vs.end(), s[1]) - vs.begin();
    if (partner[static_cast<std::size_t>(a)] != b) return "couple of S not marked";
  }
  return {};
}

inline std::vector<QuadraticForm> gob_forms(const Field& f) {
  std::vector<QuadraticForm> forms;
  if (f.characteristic() != 2) {
    for (std::size_t n = 1; n <= 4; ++n) for_each_diagonal(f, n, [&](const QuadraticForm& q) { forms.push_back(q); });
    forms.push_back(QuadraticForm::from_terms(f, 2, {{0, 1, f.one()}}));
    forms.push_back(QuadraticForm::from_terms(f, 4, {{0, 1, f.one()}, {2, 3, f.one()}}));
    forms.push_back(QuadraticForm::from_terms(f, 3, {{0, 0, f.one()}, {1, 2, f.one()}}));
  } else {
    const Scalar a = f.order() == 4 ? f.element(2) : f.one();  // x^2 + xy + a y^2 is anisotropic
    forms.push_back(QuadraticForm::from_terms(f, 2, {{0, 1, f.one()}}));
    forms.push_back(QuadraticForm::from_terms(f, 2, {{0, 0, f.one()}, {0, 1, f.one()}, {1, 1, a}}));
    forms.push_back(QuadraticForm::from_terms(f, 4, {{0, 1, f.one()}, {2, 3, f.one()}}));
    forms.push_back(QuadraticForm::from_terms(f, 4, {{0, 0, f.one()}, {0, 1, f.one()}, {1, 1, a}, {2, 3, f.one()}}));
  }
  return forms;
}

inline void gen_ortho_basis(SuiteReport& r, const std::vector<Field>& fields, Rng& rng) {
  for (const Field& f : fields) {
    const std::string tag = " " + label(f);
    for (const auto& q : gob_forms(f)) {
      std::vector<Vector> vecs;
      for_each_vector(f, q.dim(), [&](const Vector& v) {
        if (!is_zero_vector(v)) vecs.push_back(v);
      });
      std::vector<std::vector<Vector>> sets{{}};
      for (const auto& v : vecs) sets.push_back({v});
      const bool exhaustive = vecs.size() <= 100;
      if (exhaustive) {
        for (std::size_t i = 0; i < vecs.size(); ++i)
          for (std::size_t j = i + 1; j < vecs.size(); ++j) sets.push_back({vecs[i], vecs[j]});
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, vecs.size() - 1);
        for (int k = 0; k < 3000; ++k) sets.push_back({vecs[pick(rng)], vecs[pick(rng)]});
      }
      std::size_t invalid_seen = 0;
      for (const auto& s : sets) {
        const bool valid = valid_ortho_set(q, s);
        if (valid) {
          r.guarded("basis extends S with valid structure" + tag, q.to_string() + " S=" + show_list(s), [&] {
            const GenOrthoBasis gb = generalized_orthogonal_basis(q, s);
            const std::string defect = basis_defect(q, s, gb);
            r.check("basis extends S with valid structure" + tag, defect.empty(),
                    [&] { return q.to_string() + " S=" + show_list(s) + ": " + defect; });
          });
        } else if (invalid_seen++ < 200) {
          bool rejected = false;
          try {
            generalized_orthogonal_basis(q, s);
          } catch (const Error& e) {
            rejected = e.kind() == ErrorKind::InvalidInput;
          }
          r.check("invalid sets are rejected" + tag, rejected, [&] { return q.to_string() + " S=" + show_list(s); });
        }
      }
    }
    // forms with degenerate vectors are refused
    QuadraticForm deg = f.characteristic() == 2 ? QuadraticForm::from_terms(f, 3, {{0, 0, f.one()}, {1, 2, f.one()}})
                                                : QuadraticForm::diagonal(f, {1, 0});
    bool refused = false;
    try {
      generalized_orthogonal_basis(deg);
    } catch (const Error& e) {
      refused = e.kind() == ErrorKind::Precondition;
    }
    r.check("forms with degenerate vectors are refused" + tag, refused, [&] { return deg.to_string(); });
  }
}

// ----------------------------------------------------------------------------------------------

inline void witt_oracle(SuiteReport& r, const std::vector<Field>& fields, Rng&) {
  for (const Field& f : fields) {
    const std::string tag = " " + label(f);
    if (f.characteristic() == 2) {
      for (const auto& q : gob_forms(f))
        r.check("witt index = maximal singular subspace" + tag, witt_index(q) == oracle::max_singular_dim(q),
                [&] { return q.to_string(); });
      continue;
    }
    for (std::size_t n = 1; n <= 5; ++n)
      for_each_diagonal(f, n, [&](const QuadraticForm& q) {
        const std::size_t got = witt_index(q), want = oracle::max_singular_dim(q);
        r.check("witt index = maximal singular subspace" + tag, got == want, [&] {
          return q.to_string() + ": closed form " + std::to_string(got) + ", search " + std::to_string(want);
        });
      });
  }
}

// ----------------------------------------------------------------------------------------------

inline QuadraticForm atlas_form(const Field& f, bool scaled) {
  const Scalar s = scaled ? canonical_nonresidue(f) : f.one();
  std::vector<Scalar> d;
  for (int x : {1, 1, 1, -1, -1}) d.push_back(s * f.from_int(x));
  return QuadraticForm::diagonal(f, d);
}

inline void orbit_atlas(SuiteReport& r, const std::vector<Field>& fields, Rng&) {
  for (const Field& f : fields) {
    const std::string tag = " " + label(f);
    const auto expected = enumerate_classes(f, 2);
    for (bool scaled : {false, true}) {
      const QuadraticForm q = atlas_form(f, scaled);
      const auto atlas = oracle::orbit_atlas(q);
      const std::string form = q.to_string();
      r.check("exactly 9 classes occur" + tag, atlas.classes.size() == 9,
              [&] { return form + ": " + std::to_string(atlas.classes.size()) + " classes"; });
      std::vector<GeometryClass> seen;
      std::string summary;
      for (const auto& c : atlas.classes) {
        seen.push_back(c.cls);
        r.check("each class is a single isometry orbit" + tag, c.orbits == 1, [&] {
          return form + ": " + c.cls.name.value_or("?") + " splits into " + std::to_string(c.orbits) + " orbits";
        });
        summary += " " + c.cls.name.value_or("?") + ":" + std::to_string(c.pairs);
      }
      r.check("classes match enumerate_classes" + tag, seen == expected, [&] { return form; });
      r.notes.push_back(f.name() + " " + form + ": " + std::to_string(atlas.pairs) + " pairs," + summary);
    }
    const QuadraticForm q = atlas_form(f, false);
    for (const auto& [norm, orbits] : oracle::vector_norm_orbits(q))
      r.check("vectors of one norm form one reflection orbit" + tag, orbits == 1,
              [&, norm = norm, orbits = orbits] {
                return "norm " + norm.to_string() + ": " + std::to_string(orbits) + " orbits";
              });
  }
}

// ----------------------------------------------------------------------------------------------

inline void incidence_theorems(SuiteReport& r, const std::vector<Field>& fields, Rng& rng) {
  for (const Field& f : fields) {
    const std::string tag = " " + label(f);
    for (const Geometry& g : atlas_geometries(f)) {
      const std::string name = class_name(g);
      // the theorems concern proper points and lines; ideal cycles are both at once
      std::vector<ProjPoint> points, planes;
      for (auto& p : geometry_points(g))
        if (role(g, p) == Role::Point) points.push_back(p);
      for (auto& l : geometry_hyperplanes(g))
        if (role(g, l) == Role::Hyperplane) planes.push_back(l);
      const auto all_points = geometry_points(g);
      std::vector<ProjPoint> all_planes;
      for (auto& l : geometry_hyperplanes(g))
        if (rank(std::vector<Vector>{g.P(), l}) == 2) all_planes.push_back(l);
      auto on = [&](const Vector& p, const Vector& l) { return g.B(p, l).is_zero(); };

      for (std::size_t a = 0; a < planes.size(); ++a)
        for (std::size_t b = a + 1; b < planes.size(); ++b) {
          const Vector &l1 = planes[a], &l2 = planes[b];
          if (rank(std::vector<Vector>{g.P(), l1, l2}) < 3) continue;
          std::vector<ProjPoint> common;
          for (const auto& p : points)
            if (on(p, l1) && on(p, l2)) common.push_back(p);
          bool antip = true;
          for (std::size_t i = 0; i < common.size(); ++i)
            for (std::size_t j = i + 1; j < common.size(); ++j) antip = antip && antipodal(g, common[i], common[j]);
          auto ctx = [&] { return name + " l1=" + show(l1) + " l2=" + show(l2) + " meet " + show_list(common); };
          r.check("two independent lines meet in at most 2 points" + tag, common.size() <= 2, ctx);
          r.check("common points of two lines are antipodal" + tag, antip, ctx);
          r.guarded("intersect_hyperplanes agrees with the exhaustive list" + tag, ctx(), [&] {
            std::vector<ProjPoint> all_common;
            for (const auto& p : all_points)
              if (on(p, l1) && on(p, l2)) all_common.push_back(p);
            const auto sub = subcycle_points(g, intersect_hyperplanes(g, {l1, l2}));
            r.check("intersect_hyperplanes agrees with the exhaustive list" + tag, sub == all_common, ctx);
          });
        }

      for (std::size_t a = 0; a < points.size(); ++a)
        for (std::size_t b = a + 1; b < points.size(); ++b) {
          const Vector &p = points[a], &q = points[b];
          if (antipodal(g, p, q)) continue;
          std::vector<ProjPoint> through;
          std::set<std::vector<Vector>> lines;
          for (const auto& l : all_planes)
            if (on(p, l) && on(q, l)) {
              through.push_back(l);
              lines.insert(unoriented_key(g, l));
            }
          auto ctx = [&] { return name + " p=" + show(p) + " q=" + show(q) + " lines " + show_list(through); };
          r.check("two non-antipodal points lie on at most one line" + tag, lines.size() <= 1, ctx);
          r.guarded("hyperplanes_through agrees with the exhaustive list" + tag, ctx(), [&] {
            auto got = hyperplanes_through(g, {p, q});
            std::sort(got.begin(), got.end());
            r.check("hyperplanes_through agrees with the exhaustive list" + tag, got == through, ctx);
            r.check("hyperplane_through finds a line iff one exists" + tag,
                    hyperplane_through(g, {p, q}).has_value() == !through.empty(), ctx);
          });
        }

      const Geometry d = dual_geometry(g);
      for (const auto& c : lie_quadric_points(g)) {
        r.check("points of g are the hyperplanes of the dual" + tag,
                (role(g, c) == Role::Point || role(g, c) == Role::Ideal) ==
                    (role(d, c) == Role::Hyperplane || role(d, c) == Role::Ideal),
                [&] { return name + " c=" + show(c); });
      }

      const auto classes = cayley_klein_points(g);
      std::size_t total = 0;
      for (const auto& cls : classes) {
        total += cls.size();
        const auto proper = std::count_if(cls.begin(), cls.end(), [&](const Vector& p) { return role(g, p) == Role::Point; });
        r.check("antipodal classes have at most 2 proper points" + tag, proper <= 2,
                [&] { return name + " class " + show_list(cls); });
      }
      r.check("antipodal classes partition the points" + tag, total == all_points.size(), [&] { return name; });

      const auto quad = lie_quadric_points(g);
      std::uniform_int_distribution<std::size_t> pick(0, quad.size() - 1);
      for (int k = 0; k < 100; ++k) {
        const Vector &c1 = quad[pick(rng)], &c2 = quad[pick(rng)];
        const Scalar s = f.from_int(2);
        r.check("incidence is symmetric and scale invariant" + tag,
                incident(g, c1, c2) == incident(g, c2, c1) && incident(g, s * c1, c2) == incident(g, c1, c2),
                [&] { return name + " " + show(c1) + " " + show(c2); });
      }
    }
  }
}

// ----------------------------------------------------------------------------------------------

inline void projection_identity(SuiteReport& r, const std::vector<Field>& fields, Rng&) {
  for (const Field& f : fields) {
    const std::string tag = " " + label(f);
    for (const Geometry& g : atlas_geometries(f)) {
      if (g.Q(g.P()).is_zero()) continue;
      const std::string name = class_name(g);
      const Scalar four_qp = f.from_int(4) * g.Q(g.P());
      for (const auto& c : lie_quadric_points(g)) {
        auto ctx = [&] { return name + " c=" + show(c); };
        const Vector proj = project_cycle(g, c);
        r.check("projection lies in the pointspace" + tag, g.B(g.P(), proj).is_zero(), ctx);
        r.check("points of a cycle = points of its projection" + tag,
                points_of(g, c) == pointspace_points_of(g, proj), ctx);
        if (is_hyperplane(g, c) && !g.B(g.P(), c).is_zero()) {
          const Scalar b = g.B(g.P(), c);
          r.check("Q(l^P) = -B(P,l)^2 / (4 Q(P))" + tag, g.Q(project_vector(g, c)) == -(b * b) / four_qp, ctx);
        }
      }
    }
  }
}

// ----------------------------------------------------------------------------------------------

inline std::int64_t expected_gamma_order(const Geometry& g) {
  const std::int64_t q = g.field().order();
  switch (square_class(g.Q(g.L()))) {
    case SquareClass::NonResidue: return q + 1;
    case SquareClass::Zero: return q;
    case SquareClass::Unit: return q - 1;
  }
  return 0;
}

inline void gamma_orders(SuiteReport& r, const std::vector<Field>& fields, Rng&) {
  std::int64_t top = 7;
  for (const Field& f : fields) top = std::max(top, f.order());
  LimitsGuard guard(top);
  for (const Field& f : fields) {
    const std::string tag = " " + label(f);
    const std::int64_t p = f.order();
    std::map<LineGroupTag, std::set<std::size_t>> measured;
    for (const Geometry& g : atlas_geometries(f)) {
      const std::string name = class_name(g);
      const std::int64_t want = expected_gamma_order(g);
      const LineGroupClass cls = gamma_class(g);
      r.check("gamma class follows the class of Q(L)" + tag, cls.order && *cls.order == want,
              [&] { return name + ": " + to_string(cls.tag); });
      const auto lines = non_ideal_lines(g);
      const std::size_t n_lines = p <= 7 ? lines.size() : std::min<std::size_t>(lines.size(), 4);
      for (std::size_t li = 0; li < n_lines; ++li) {
        const Vector& l = lines[li];
        auto ctx = [&] { return name + " line " + show(l); };
        r.guarded("|Gamma| = q+1, q, q-1 for Q(L) = e, 0, 1" + tag, ctx(), [&] {
          const LineChart chart = line_chart(g, l);
          r.check("every line has the same group class" + tag, chart.cls == cls, ctx);
          const auto stab = stabilizer_group(g, l);
          measured[chart.cls.tag].insert(stab.size());
          r.check("|Gamma| = q+1, q, q-1 for Q(L) = e, 0, 1" + tag, static_cast<std::int64_t>(stab.size()) == want,
                  [&] { return ctx() + ": " + std::to_string(stab.size()) + " elements"; });
          r.check("full stabilizer has 2|Gamma| elements" + tag,
                  full_line_stabilizer(chart).size() == 2 * stab.size(), ctx);
          const auto pts = line_points(g, l);
          r.check("|Gamma| = number of non-ideal points" + tag, pts.size() == stab.size(), ctx);
          // free transitivity: orbit of every point is the whole line, stabilizers are trivial
          const std::size_t n_pts = p <= 5 ? pts.size() : std::min<std::size_t>(pts.size(), 2);
          for (std::size_t pi = 0; pi < n_pts; ++pi) {
            std::vector<ProjPoint> images;
            std::size_t fixing = 0;
            for (const auto& e : stab) {
              ProjPoint im = normalize(apply_motion(e, pts[pi]));
              if (im == pts[pi]) ++fixing;
              images.push_back(std::move(im));
            }
            std::sort(images.begin(), images.end());
            r.check("Gamma acts freely and transitively" + tag, images == pts && fixing == 1,
                    [&] { return ctx() + " at " + show(pts[pi]); });
          }
          if (li == 0 && p <= 5) {
            const LineSpace ls = line_space(g, l);
            const auto brute = oracle::isometries_fixing(ls.form, {ls.L_coords});
            std::size_t det_one = 0;
            for (const auto& m : brute)
              if (determinant(m).is_one()) ++det_one;
            r.check("stabilizer matches matrix search" + tag, det_one == stab.size() && brute.size() == 2 * det_one,
                    [&] {
                      return ctx() + ": search found " + std::to_string(brute.size()) + " / " +
                             std::to_string(det_one) + " with det 1";
                    });
          }
          if (li == 0 && chart.cls.tag == LineGroupTag::Additive) {
            for (const auto& t1 : f.elements())
              for (const auto& t2 : f.elements())
                r.check("T_t1 o T_t2 = T_(t1+t2)" + tag,
                        equal_motion(compose(make_motion(chart, {t1}), make_motion(chart, {t2})),
                                     make_motion(chart, {t1 + t2})),
                        [&] { return ctx() + " tau=" + t1.to_string() + "," + t2.to_string(); });
          }
        });
      }
    }
    auto orders = [&](LineGroupTag t) {
      std::string s;
      for (auto n : measured[t]) s += (s.empty() ? "" : ",") + std::to_string(n);
      return s.empty() ? std::string("-") : s;
    };
    r.notes.push_back(f.name() + ": orders q-1/q/q+1 = " + orders(LineGroupTag::SplitTorus) + "/" +
                      orders(LineGroupTag::Additive) + "/" + orders(LineGroupTag::NonSplitTorus));
  }
}

// ----------------------------------------------------------------------------------------------

/// A random isometry fixing P and L, from a randomized Witt extension of the identity on <P,L>.
inline Matrix random_pl_isometry(const Geometry& g, Rng& rng) {
  return extend_isometry(g.form(), {g.P(), g.L()}, {g.P(), g.L()}, &rng);
}

inline Vector apply(const Matrix& h, const Vector& v) {
  return h * v;
}

inline void distance_additivity(SuiteReport& r, const std::vector<Field>& fields, Rng& rng) {
  for (const Field& f : fields) {
    const std::string tag = " " + label(f);
    struct LineData {
      Vector l;
      std::vector<ProjPoint> pts;
    };
    std::vector<Geometry> geoms = atlas_geometries(f);
    std::vector<std::vector<LineData>> lines;
    for (const auto& g : geoms) {
      std::vector<LineData> ls;
      for (const auto& l : non_ideal_lines(g)) ls.push_back({l, line_points(g, l)});
      lines.push_back(std::move(ls));
    }
    std::uniform_int_distribution<std::size_t> pick_geom(0, geoms.size() - 1);
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

    for (int k = 0; k < 100; ++k) {
      const std::size_t gi = pick_geom(rng);
      const Geometry& g = geoms[gi];
      const LineData& ld = lines[gi][pick(lines[gi].size())];
      const Vector &A = ld.pts[pick(ld.pts.size())], &B = ld.pts[pick(ld.pts.size())], &C = ld.pts[pick(ld.pts.size())];
      auto ctx = [&] { return class_name(g) + " line " + show(ld.l) + " A=" + show(A) + " B=" + show(B) + " C=" + show(C); };
      r.guarded("d(A,C) = d(B,C) o d(A,B)" + tag, ctx(), [&] {
        const auto ab = translation_between(g, ld.l, A, B), bc = translation_between(g, ld.l, B, C);
        const auto ac = translation_between(g, ld.l, A, C);
        r.check("d(A,C) = d(B,C) o d(A,B)" + tag, equal_motion(ac, compose(bc, ab)), ctx);
        r.check("swapping the points inverts" + tag, equal_motion(translation_between(g, ld.l, B, A), invert(ab)), ctx);
        r.check("d(A,A) is the identity" + tag, is_identity(translation_between(g, ld.l, A, A)), ctx);
      });
    }

    std::size_t moved = 0;
    for (int k = 0; k < 100; ++k) {
      const std::size_t gi = pick_geom(rng);
      const Geometry& g = geoms[gi];
      const LineData& ld = lines[gi][pick(lines[gi].size())];
      const Vector &p1 = ld.pts[pick(ld.pts.size())], &p2 = ld.pts[pick(ld.pts.size())];
      auto ctx = [&] { return class_name(g) + " line " + show(ld.l) + " p1=" + show(p1) + " p2=" + show(p2); };
      r.guarded("same_distance is invariant under isometries fixing P and L" + tag, ctx(), [&] {
        const Matrix h = random_pl_isometry(g, rng);
        if (!(h == Matrix::identity(f, g.vector_dim()))) ++moved;
        r.check("random isometry fixes P and L" + tag,
                is_isometry(g.form(), h) && apply(h, g.P()) == g.P() && apply(h, g.L()) == g.L(), ctx);
        const auto d1 = translation_between(g, ld.l, p1, p2);
        const auto d2 = translation_between(g, normalize(apply(h, ld.l)), normalize(apply(h, p1)), normalize(apply(h, p2)));
        r.check("same_distance is invariant under isometries fixing P and L" + tag, same_distance(d1, d2), ctx);
      });
    }

    r.notes.push_back(f.name() + ": " + std::to_string(moved) + " of 100 random isometries are not the identity");

    if (f.order() == 5) {
      for (std::size_t gi = 0; gi < geoms.size(); ++gi)
        for (const auto& ld : lines[gi]) {
          std::vector<std::vector<std::optional<MotionElement>>> d(ld.pts.size(),
                                                                   std::vector<std::optional<MotionElement>>(ld.pts.size()));
          for (std::size_t a = 0; a < ld.pts.size(); ++a)
            for (std::size_t b = 0; b < ld.pts.size(); ++b) d[a][b] = translation_between(geoms[gi], ld.l, ld.pts[a], ld.pts[b]);
          for (std::size_t a = 0; a < ld.pts.size(); ++a)
            for (std::size_t b = 0; b < ld.pts.size(); ++b)
              for (std::size_t c = 0; c < ld.pts.size(); ++c)
                r.check("additivity on every collinear triple" + tag, equal_motion(*d[a][c], compose(*d[b][c], *d[a][b])),
                        [&] { return class_name(geoms[gi]) + " line " + show(ld.l); });
        }
    }
  }
}

// ----------------------------------------------------------------------------------------------

inline std::string class_label(const GeometryClass& c) { return c.name.value_or("?"); }

inline void cycle_equivalence(SuiteReport& r, const std::vector<Field>& fields, Rng&) {
  for (const Field& f : fields) {
    const std::string tag = " " + label(f);
    const auto classes = enumerate_classes(f, 2);
    std::vector<Geometry> geoms;
    for (const auto& c : classes) geoms.push_back(representative(c));
    const std::size_t n = classes.size();
    std::vector<std::vector<bool>> eq(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) eq[i][j] = cycle_equivalent(geoms[i], geoms[j]);

    for (std::size_t i = 0; i < n; ++i) {
      r.check("cycle equivalence is reflexive" + tag, eq[i][i]);
      for (std::size_t j = 0; j < n; ++j) {
        r.check("cycle equivalence is symmetric" + tag, eq[i][j] == eq[j][i]);
        for (std::size_t k = 0; k < n; ++k)
          if (eq[i][j] && eq[j][k]) r.check("cycle equivalence is transitive" + tag, eq[i][k]);
      }
      std::set<GeometryClass> partners;
      for (const auto& c : cycle_equivalence_partners(classes[i])) partners.insert(c);
      std::set<GeometryClass> related;
      for (std::size_t j = 0; j < n; ++j)
        if (eq[i][j] && j != i) related.insert(classes[j]);
      std::set<GeometryClass> partners_other = partners;
      partners_other.erase(classes[i]);
      r.check("partners list the cycle-equivalent classes" + tag, partners_other == related,
              [&] { return class_label(classes[i]); });
    }

    std::vector<std::string> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (eq[i][j]) pairs.push_back(class_label(classes[i]) + " ~ " + class_label(classes[j]));

    if (f.kind() == FieldKind::RationalAsReal) {
      std::set<std::set<std::string>> got;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (eq[i][j]) got.insert({class_label(classes[i]), class_label(classes[j])});
      const std::set<std::set<std::string>> want{{"dual hyperbolic", "anti-de Sitter"}};
      r.check("over the reals only dual hyperbolic ~ anti-de Sitter" + tag, got == want, [&] {
        std::string s;
        for (const auto& p : pairs) s += p + "; ";
        return s;
      });
      // the two Minkowski models: P of positive and of negative norm
      const Field& q = f;
      const Vector P = unit_vector(q, 5, 4), L = make_vector(q, {0, 0, 2, 0, 0});
      auto minkowski = [&](int sign) {
        return Geometry(QuadraticForm::from_terms(
                            q, 5, {{0, 0, q.one()}, {1, 1, -q.one()}, {2, 3, q.one()}, {4, 4, q.from_int(sign)}}),
                        P, L);
      };
      const Geometry m1 = minkowski(1), m2 = minkowski(-1);
      r.check("the two Minkowski models are cycle equivalent" + tag, cycle_equivalent(m1, m2));
      r.check("both Minkowski models classify as Minkowski" + tag,
              class_name(m1) == "Minkowski" && class_name(m2) == "Minkowski");
      const auto mp = cycle_equivalence_partners(classify(m1));
      r.check("Minkowski lists itself as its second model" + tag,
              std::find(mp.begin(), mp.end(), classify(m1)) != mp.end());
    } else {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const bool brute = oracle::pointspace_similarity(geoms[i], geoms[j]).has_value();
          r.check("cycle_equivalent = explicit pointspace isometry search" + tag, brute == eq[i][j], [&] {
            return class_label(classes[i]) + " vs " + class_label(classes[j]) + ": search " + (brute ? "found" : "none");
          });
        }
      for (std::size_t i = 0; i < n; ++i) {
        const auto& c = classes[i];
        if (c.qP == SquareClass::Zero) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i) continue;
          const auto& d = classes[j];
          const bool swapped = d.qP == c.qP && c.qL != SquareClass::Zero && d.qL == (c.qL == SquareClass::Unit ? SquareClass::NonResidue : SquareClass::Unit);
          r.check("for Q(P) != 0 the partner swaps Q(L) with e Q(L)" + tag, eq[i][j] == swapped,
                  [&] { return class_label(c) + " vs " + class_label(d); });
        }
      }
    }
    std::string s;
    for (const auto& p : pairs) s += (s.empty() ? "" : "; ") + p;
    r.notes.push_back(f.name() + " cycle-equivalent pairs: " + (s.empty() ? "none" : s));
  }
}

// ----------------------------------------------------------------------------------------------

inline void separations(SuiteReport& r, const std::vector<Field>&, Rng& rng) {
  using namespace ucg::models;
  const std::vector<double> params{0.1, 0.5, 1.0, 2.0};
  for (double t : params) {
    auto record = [&](const std::string& what, const SeparationCheck& c) {
      r.check(what, c.agrees, [&] {
        std::ostringstream os;
        os << "t=" << t << " value " << c.value << " expected " << c.expected;
        return os.str();
      });
    };
    {
      auto [a, b] = elliptic_points(t);
      const auto c = check_separation(a, b);
      record("elliptic points: cos(delta) - 1", c);
      r.check("elliptic points: cos(delta) - 1", std::abs(c.value - (std::cos(t) - 1)) < kTolerance);
    }
    {
      auto [a, b] = hyperbolic_points(t);
      const auto c = check_separation(a, b);
      record("hyperbolic points: 1 - cosh(d)", c);
      r.check("hyperbolic points: 1 - cosh(d)", std::abs(c.value - (1 - std::cosh(t))) < kTolerance);
    }
    {
      auto [a, b] = parabolic_points(t);
      const auto c = check_separation(a, b);
      record("parabolic points: -d^2/2", c);
      r.check("parabolic points: -d^2/2", std::abs(c.value + 0.5 * t * t) < kTolerance);
    }
    for (ModelKind k : {ModelKind::Elliptic, ModelKind::Hyperbolic, ModelKind::Parabolic}) {
      auto [a, b] = cycles_at_angle(k, t);
      const auto c = check_separation(a, b);
      const std::string what = std::string(to_string(k)) + " cycles: cos(theta) - 1";
      record(what, c);
      r.check(what, std::abs(c.value - (std::cos(t) - 1)) < kTolerance);
    }
  }

  // random lifts stay on the quadric with the intended role
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  auto unit = [&](std::size_t n) {
    std::vector<double> v(n);
    double s = 0;
    do {
      s = 0;
      for (auto& x : v) {
        x = u(rng);
        s += x * x;
      }
    } while (s < 1e-6);
    for (auto& x : v) x /= std::sqrt(s);
    return v;
  };
  auto expect_role = [&](const ModelObject& o, Role want) {
    const Geometry g = geometry_of(o);
    const std::string what = std::string(to_string(o.kind)) + " lifts lie on the quadric with the right role";
    const double qv = g.Q(o.lift).to_double();
    r.check(what, std::abs(qv) < kTolerance && role(g, o.lift) == want, [&] {
      return std::string(to_string(o.role_hint)) + " " + to_string(o.lift) + " Q=" + std::to_string(qv);
    });
  };
  for (int k = 0; k < 1000; ++k) {
    const double r1 = u(rng) * 0.9 + (u(rng) > 0 ? 0.05 : -0.05);
    // elliptic
    expect_role(lift_point(ModelKind::Elliptic, unit(3)), Role::Point);
    expect_role(lift_line(ModelKind::Elliptic, unit(3), 0), Role::Hyperplane);
    expect_role(lift_cycle(ModelKind::Elliptic, unit(3), 0.3 + std::abs(r1) / 2), Role::GenericCycle);
    // hyperbolic: points cosh/sinh parametrized
    {
      const double a = u(rng), phi = u(rng);
      std::vector<double> c{std::sinh(a) * std::cos(phi), std::sinh(a) * std::sin(phi), std::cosh(a)};
      expect_role(lift_point(ModelKind::Hyperbolic, c), Role::Point);
      expect_role(lift_cycle(ModelKind::Hyperbolic, c, 0.2 + std::abs(r1)), Role::GenericCycle);
      std::vector<double> l{std::cosh(a) * std::cos(phi), std::cosh(a) * std::sin(phi), std::sinh(a)};
      expect_role(lift_line(ModelKind::Hyperbolic, l, 0), Role::Hyperplane);
      expect_role(lift_hypercycle(l, 0.2 + std::abs(r1)), Role::GenericCycle);
      expect_role(lift_paracycle({std::cos(phi), std::sin(phi), 1}, 0.5 + std::abs(a)), Role::GenericCycle);
    }
    // parabolic
    {
      std::vector<double> c{u(rng), u(rng)};
      expect_role(lift_point(ModelKind::Parabolic, c), Role::Point);
      expect_role(lift_cycle(ModelKind::Parabolic, c, r1), Role::GenericCycle);
      expect_role(lift_line(ModelKind::Parabolic, unit(2), u(rng)), Role::Hyperplane);
    }
    // Minkowski, de Sitter, anti-de Sitter, Laguerre/Galilei
    {
      const double a = u(rng), b = u(rng);
      expect_role(lift_point(ModelKind::Minkowski2, {a, b}), Role::Point);
      expect_role(lift_cycle(ModelKind::Minkowski2, {a, b}, r1), Role::GenericCycle);
      expect_role(lift_line(ModelKind::Minkowski2, {std::sinh(a), std::cosh(a)}, b), Role::Hyperplane);
      std::vector<double> ds{std::cosh(a) * std::cos(b), std::cosh(a) * std::sin(b), std::sinh(a)};
      std::vector<double> tl{std::sinh(a) * std::cos(b), std::sinh(a) * std::sin(b), std::cosh(a)};
      expect_role(lift_point(ModelKind::DeSitter, ds), Role::Point);
      expect_role(lift_cycle(ModelKind::DeSitter, tl, 0.2 + std::abs(r1)), Role::GenericCycle);
      expect_role(lift_line(ModelKind::DeSitter, tl, 0), Role::Hyperplane);
      // anti-de Sitter: <c,c> = -1 for x1^2 - x2^2 - x3^2
      std::vector<double> ad{std::sinh(a), std::cosh(a) * std::cos(b), std::cosh(a) * std::sin(b)};
      expect_role(lift_point(ModelKind::AntiDeSitter, ad), Role::Point);
      expect_role(lift_cycle(ModelKind::AntiDeSitter, ad, 0.2 + std::abs(r1) / 2), Role::GenericCycle);
      expect_role(lift_line(ModelKind::AntiDeSitter, ad, 0), Role::Hyperplane);
      expect_role(lift_point(ModelKind::LaguerreGalilei, {a, b}), Role::Point);
      expect_role(lift_line(ModelKind::LaguerreGalilei, {a, 1}, b), Role::Hyperplane);
      expect_role(lift_cycle(ModelKind::LaguerreGalilei, {a, b}, r1), Role::GenericCycle);
    }
  }

  // incidence of lifts matches the underlying geometry
  for (int k = 0; k < 200; ++k) {
    const double x = u(rng), s = u(rng), c = u(rng);
    const Geometry g = model_geometry(ModelKind::LaguerreGalilei, 2);
    const auto pt = lift_point(ModelKind::LaguerreGalilei, {x, s * x + c});
    const auto ln = lift_line(ModelKind::LaguerreGalilei, {-s, 1}, c);
    r.check("Laguerre/Galilei point on line y = s x + c is incident", incident(g, pt.lift, ln.lift));
    const auto par = lift_cycle(ModelKind::LaguerreGalilei, {x, c}, s);
    const double x2 = u(rng);
    const auto on = lift_point(ModelKind::LaguerreGalilei, {x2, c + s * (x2 - x) * (x2 - x)});
    r.check("Laguerre/Galilei point on a parabola is incident", incident(g, on.lift, par.lift));
    const double ang = u(rng);
    const auto ep = lift_point(ModelKind::Elliptic, {std::cos(ang), std::sin(ang), 0});
    const auto el = lift_line(ModelKind::Elliptic, {-std::sin(ang), std::cos(ang), 0}, 0);
    r.check("elliptic point on its polar line is incident", incident(model_geometry(ModelKind::Elliptic, 2), ep.lift, el.lift));
  }

  // tangency of oriented parabolic cycles
  for (int k = 0; k < 200; ++k) {
    const Geometry g = model_geometry(ModelKind::Parabolic, 2);
    const double r1 = 0.2 + std::abs(u(rng)), r2 = 0.2 + std::abs(u(rng)), phi = u(rng);
    auto at = [&](double dist) { return std::vector<double>{dist * std::cos(phi), dist * std::sin(phi)}; };
    const auto c1 = lift_cycle(ModelKind::Parabolic, {0, 0}, r1);
    // internal tangency, same orientation: |r1 - r2| = d
    const auto inner = lift_cycle(ModelKind::Parabolic, at(std::abs(r1 - r2)), r2);
    // external tangency, opposite orientation: r1 + r2 = d
    const auto outer = lift_cycle(ModelKind::Parabolic, at(r1 + r2), -r2);
    const auto outer_wrong = lift_cycle(ModelKind::Parabolic, at(r1 + r2), r2);
    r.check("tangent cycles with compatible orientation are incident",
            incident(g, c1.lift, inner.lift) && incident(g, c1.lift, outer.lift));
    r.check("tangent cycles with incompatible orientation are not incident", !incident(g, c1.lift, outer_wrong.lift));
  }

  auto unliftable = [&](const std::string& what, auto&& fn) {
    bool thrown = false;
    try {
      fn();
    } catch (const Error& e) {
      thrown = e.kind() == ErrorKind::InvalidInput;
    }
    r.check(what, thrown);
  };
  unliftable("vertical Laguerre/Galilei lines are reported unliftable",
             [] { lift_line(ModelKind::LaguerreGalilei, {1, 0}, 2); });
  unliftable("Minkowski lines of the other half are reported unliftable",
             [] { lift_line(ModelKind::Minkowski2, {1, 0}, 0); });
  unliftable("non-normalized elliptic points are rejected", [] { lift_point(ModelKind::Elliptic, {1, 1, 0}); });

  {
    const Geometry g = model_geometry(ModelKind::Parabolic, 2);
    const auto a = lift_cycle(ModelKind::Parabolic, {0, 0}, 1), b = lift_cycle(ModelKind::Parabolic, {std::sqrt(2.0), 0}, 1);
    r.check("orthogonal unit circles at distance sqrt 2 have relative power -1",
            std::abs(relative_power(g, a.lift, b.lift).to_double() + 1) < kTolerance);
    const auto [p, q] = elliptic_points(std::numbers::pi / 2);
    r.check("elliptic points at pi/2 have separation -1", std::abs(check_separation(p, q).value + 1) < kTolerance);
    const auto [h1, h2] = hyperbolic_points(0);
    r.check("coincident hyperbolic points have separation 0", std::abs(check_separation(h1, h2).value) < kTolerance);
  }
}

// ----------------------------------------------------------------------------------------------

/// Calls fn on every form over f of dimension n (all upper-triangular coefficient tables).
template <class Fn>
void for_each_form(const Field& f, std::size_t n, Fn&& fn) {
  const std::size_t terms = n * (n + 1) / 2;
  for_each_vector(f, terms, [&](const Vector& c) {
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> t;
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) t.emplace_back(i, j, c[k++]);
    fn(QuadraticForm::from_terms(f, n, t));
  });
}

inline void char2_lemmas(SuiteReport& r, const std::vector<Field>& fields, Rng& rng) {
  for (const Field& f : fields) {
    const std::string tag = " " + label(f);
    auto parity = [&](const QuadraticForm& q) {
      if (!is_nondegenerate_form(q)) return;
      const std::size_t rad = bilinear_radical(q).size();
      r.check("radical has dim 1 iff the dimension is odd" + tag, rad == (q.dim() % 2 == 1 ? 1u : 0u),
              [&] { return q.to_string() + ": radical dim " + std::to_string(rad); });
    };
    auto arf_and_witt = [&](const QuadraticForm& q) {
      if (q.dim() % 2 != 0 || !is_nondegenerate_bilinear(q)) return;
      r.check("Arf invariant = zero-count class" + tag, arf_invariant(q).value == oracle::arf_from_zero_count(q),
              [&] { return q.to_string(); });
      r.check("witt index = maximal singular subspace" + tag, witt_index(q) == oracle::max_singular_dim(q),
              [&] { return q.to_string(); });
    };
    for (std::size_t n = 1; n <= 5; ++n) {
      if (std::pow(static_cast<double>(f.order()), n * (n + 1) / 2.0) <= 70000) {
        for_each_form(f, n, [&](const QuadraticForm& q) {
          parity(q);
          if (n <= 4) arf_and_witt(q);
        });
      } else {
        for (int k = 0; k < 2000; ++k) {
          const QuadraticForm q = random_form(f, n, rng);
          parity(q);
          if (n <= 4 && k < 300) arf_and_witt(q);
        }
      }
    }
    const QuadraticForm x2yz = QuadraticForm::from_terms(f, 3, {{0, 0, f.one()}, {1, 2, f.one()}});
    const auto rad = bilinear_radical(x2yz);
    r.check("x^2 + yz has radical span{(1,0,0)} and is nondegenerate" + tag,
            rad.size() == 1 && normalize(rad[0]) == make_vector(f, {1, 0, 0}) && is_nondegenerate_form(x2yz));
    const QuadraticForm xy = QuadraticForm::from_terms(f, 2, {{0, 1, f.one()}});
    for (const auto& lam : f.elements()) {
      const auto w = represents(xy, lam);
      r.check("xy represents every value" + tag, w.has_value() && xy(*w) == lam);
    }
  }
}

}  // namespace detail

struct SuiteSpec {
  std::string name;
  std::vector<std::string> default_fields;
  std::function<void(SuiteReport&, const std::vector<Field>&, detail::Rng&)> run;
};

inline const std::vector<SuiteSpec>& suites() {
  static const std::vector<SuiteSpec> all{
      {"polarization", {"fp:3", "fp:5", "fp:7", "f2", "f4", "rational"}, detail::polarization},
      {"gen-ortho-basis", {"fp:3", "f2", "f4"}, detail::gen_ortho_basis},
      {"witt-oracle", {"fp:3", "fp:5"}, detail::witt_oracle},
      {"orbit-atlas", {"fp:3", "fp:5"}, detail::orbit_atlas},
      {"incidence-theorems", {"fp:3"}, detail::incidence_theorems},
      {"projection-identity", {"fp:3", "fp:5"}, detail::projection_identity},
      {"gamma-orders", {"fp:3", "fp:5", "fp:7", "fp:11"}, detail::gamma_orders},
      {"distance-additivity", {"fp:3", "fp:5", "fp:7"}, detail::distance_additivity},
      {"cycle-equivalence", {"rational", "fp:3", "fp:5"}, detail::cycle_equivalence},
      {"separations", {"approx"}, detail::separations},
      {"char2-lemmas", {"f2", "f4"}, detail::char2_lemmas},
  };
  return all;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& s : suites()) n.push_back(s.name);
    return n;
  }();
  return names;
}

/// Runs one suite on the given fields (its default fields when empty).
inline SuiteReport run_suite(const std::string& name, const std::vector<std::string>& fields = {},
                             std::uint64_t seed = 1) {
  for (const auto& s : suites()) {
    if (s.name != name) continue;
    SuiteReport r;
    r.suite = name;
    r.fields = fields.empty() ? s.default_fields : fields;
    std::vector<Field> fs;
    for (const auto& f : r.fields) fs.push_back(parse_field(f));
    detail::Rng rng(seed);
    const auto t0 = std::chrono::steady_clock::now();
    r.guarded("suite ran to completion", name, [&] { s.run(r, fs, rng); });
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  fail(ErrorKind::InvalidInput, "unknown suite '" + name + "'");
}

inline std::vector<SuiteReport> run_all(std::uint64_t seed = 1) {
  std::vector<SuiteReport> out;
  for (const auto& n : suite_names()) out.push_back(run_suite(n, {}, seed));
  return out;
}

inline std::string to_text(const SuiteReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << " [";
  for (std::size_t i = 0; i < r.fields.size(); ++i) os << (i ? " " : "") << r.fields[i];
  os << "]: " << (r.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& p : r.properties) {
    os << "  " << (p.passed() ? "PASS " : "FAIL ") << p.name << " (" << p.checked << " checked";
    if (p.failures) os << ", " << p.failures << " failed";
    os << ")\n";
    if (p.failures) os << "    counterexample: " << p.counterexample << "\n";
  }
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  return os.str();
}

inline io::json to_json(const SuiteReport& r) {
  io::json props = io::json::array();
  for (const auto& p : r.properties) {
    io::json j{{"name", p.name}, {"checked", p.checked}, {"failures", p.failures}, {"passed", p.passed()}};
    if (p.failures) j["counterexample"] = p.counterexample;
    props.push_back(j);
  }
  return {{"suite", r.suite}, {"fields", r.fields}, {"passed", r.passed()}, {"properties", props}, {"notes", r.notes}};
}

}  // namespace ucg::verify
