#pragma once

// Isomorphism classes of geometries: the invariant tuple (form class, class of Q(P), class of
// Q(L)) up to rescaling of Q, class enumeration per field and dimension, canonical
// representatives, the Cayley-Klein names of 2-geometries and cycle equivalence.

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ucg/geometry.hpp"
#include "ucg/metric.hpp"

namespace ucg {

enum class FormInvariantKind { Signature, Determinant, Arf, Closed };

inline const char* to_string(FormInvariantKind k) {
  switch (k) {
    case FormInvariantKind::Signature: return "signature";
    case FormInvariantKind::Determinant: return "det";
    case FormInvariantKind::Arf: return "arf";
    case FormInvariantKind::Closed: return "closed";
  }
  return "?";
}

/// Isometry class of the form up to scalar multiples.
struct FormInvariant {
  FormInvariantKind kind = FormInvariantKind::Closed;
  std::size_t positive = 0, negative = 0;  // signature
  SquareClass det = SquareClass::Unit;     // determinant class
  int arf = 0;                             // Arf class

  auto operator<=>(const FormInvariant&) const = default;

  std::string to_string() const {
    switch (kind) {
      case FormInvariantKind::Signature: return "(" + std::to_string(positive) + "," + std::to_string(negative) + ")";
      case FormInvariantKind::Determinant: return std::string("det=") + ucg::to_string(det);
      case FormInvariantKind::Arf: return "arf=" + std::to_string(arf);
      case FormInvariantKind::Closed: return "closed";
    }
    return "?";
  }
};

struct GeometryClass {
  std::string field;  // field name, or "closed" for a quadratically closed field
  std::size_t geom_dim = 0;
  FormInvariant form;
  SquareClass qP = SquareClass::Zero, qL = SquareClass::Zero;
  std::optional<std::string> name;

  auto key() const { return std::tie(field, geom_dim, form, qP, qL); }
  friend bool operator==(const GeometryClass& a, const GeometryClass& b) { return a.key() == b.key(); }
  friend bool operator<(const GeometryClass& a, const GeometryClass& b) { return a.key() < b.key(); }
};

namespace detail {

inline SquareClass flip(SquareClass c) {
  switch (c) {
    case SquareClass::Unit: return SquareClass::NonResidue;
    case SquareClass::NonResidue: return SquareClass::Unit;
    default: return c;
  }
}

/// Chooses between (a,b) and the rescaled pair (flip a, flip b): the first nonzero entry is Unit.
inline std::pair<SquareClass, SquareClass> canonical_pair(SquareClass a, SquareClass b) {
  SquareClass lead = a != SquareClass::Zero ? a : b;
  if (lead == SquareClass::NonResidue) return {flip(a), flip(b)};
  return {a, b};
}

/// Row/column label of a square class in the Cayley-Klein table.
inline int ck_index(SquareClass c) {
  switch (c) {
    case SquareClass::NonResidue: return 0;
    case SquareClass::Zero: return 1;
    case SquareClass::Unit: return 2;
  }
  return 1;
}

inline constexpr std::array<std::array<const char*, 3>, 3> kCayleyKleinNames{{
    {"elliptic", "parabolic", "hyperbolic"},
    {"dual parabolic", "Laguerre/Galilei", "dual Minkowski"},
    {"dual hyperbolic", "Minkowski", "anti-de Sitter"},
}};

inline std::optional<std::string> ck_name(const GeometryClass& c) {
  if (c.geom_dim != 2) return std::nullopt;
  if (c.form.kind != FormInvariantKind::Signature && c.form.kind != FormInvariantKind::Determinant)
    return std::nullopt;
  return std::string(kCayleyKleinNames[ck_index(c.qP)][ck_index(c.qL)]);
}

inline SquareClass value_class(const Scalar& x) {
  if (x.field().kind() == FieldKind::CharTwoField) return x.is_zero() ? SquareClass::Zero : SquareClass::Unit;
  return real_or_square_class(x);
}

}  // namespace detail

/// Invariant tuple of a geometry, canonicalized under rescaling of Q.
inline GeometryClass classify(const Geometry& g) {
  const Field& f = g.field();
  GeometryClass c;
  c.field = f.name();
  c.geom_dim = g.dim();
  c.qP = detail::value_class(g.Q(g.P()));
  c.qL = detail::value_class(g.Q(g.L()));
  const std::size_t n = g.vector_dim();
  switch (f.kind()) {
    case FieldKind::RationalAsReal:
    case FieldKind::ApproxReal: {
      Signature s = signature(g.form());
      c.form.kind = FormInvariantKind::Signature;
      if (s.positive < s.negative) {
        std::swap(s.positive, s.negative);
        c.qP = detail::flip(c.qP);
        c.qL = detail::flip(c.qL);
      } else if (s.positive == s.negative) {
        std::tie(c.qP, c.qL) = detail::canonical_pair(c.qP, c.qL);
      }
      c.form.positive = s.positive;
      c.form.negative = s.negative;
      break;
    }
    case FieldKind::PrimeField: {
      c.form.kind = FormInvariantKind::Determinant;
      SquareClass d = det_class(g.form());
      if (n % 2 == 1) {
        // rescaling by a non-residue multiplies the determinant class by e
        if (d == SquareClass::NonResidue) {
          c.qP = detail::flip(c.qP);
          c.qL = detail::flip(c.qL);
        }
        c.form.det = SquareClass::Unit;
      } else {
        c.form.det = d;
        std::tie(c.qP, c.qL) = detail::canonical_pair(c.qP, c.qL);
      }
      break;
    }
    case FieldKind::CharTwoField:
      c.form.kind = FormInvariantKind::Arf;
      c.form.arf = arf_invariant(g.form()).value;
      break;
  }
  c.name = detail::ck_name(c);
  return c;
}

// ----------------------------------------------------------------------------------------------
// Enumeration of classes

/// The 4 classes over a quadratically closed field: Q(P), Q(L) in {0, 1}.
inline std::vector<GeometryClass> enumerate_closed_classes(std::size_t geom_dim) {
  require(geom_dim >= 1, ErrorKind::Unsupported, "geometry dimension must be at least 1");
  std::vector<GeometryClass> out;
  for (SquareClass p : {SquareClass::Zero, SquareClass::Unit})
    for (SquareClass l : {SquareClass::Zero, SquareClass::Unit}) {
      GeometryClass c;
      c.field = "closed";
      c.geom_dim = geom_dim;
      c.qP = p;
      c.qL = l;
      out.push_back(c);
    }
  return out;
}

/// All isomorphism classes of non-degenerate geometries of the given dimension.
inline std::vector<GeometryClass> enumerate_classes(const Field& f, std::size_t geom_dim) {
  f.require_exact("enumerate_classes");
  require(geom_dim >= 1, ErrorKind::Unsupported, "geometry dimension must be at least 1");
  const std::size_t n = geom_dim + 3;
  const std::array<SquareClass, 3> all{SquareClass::NonResidue, SquareClass::Zero, SquareClass::Unit};
  std::vector<GeometryClass> out;
  auto push = [&](FormInvariant form, SquareClass p, SquareClass l) {
    GeometryClass c;
    c.field = f.name();
    c.geom_dim = geom_dim;
    c.form = form;
    c.qP = p;
    c.qL = l;
    c.name = detail::ck_name(c);
    out.push_back(c);
  };
  switch (f.kind()) {
    case FieldKind::RationalAsReal:
      for (std::size_t neg = 2; 2 * neg <= n; ++neg) {
        FormInvariant form{FormInvariantKind::Signature, n - neg, neg};
        for (auto p : all)
          for (auto l : all)
            if (n - neg != neg || detail::canonical_pair(p, l) == std::pair{p, l}) push(form, p, l);
      }
      break;
    case FieldKind::PrimeField:
      if (n % 2 == 1) {
        FormInvariant form{FormInvariantKind::Determinant};
        for (auto p : all)
          for (auto l : all) push(form, p, l);
      } else {
        const SquareClass hyperbolic_det = (n / 2) % 2 == 0 ? SquareClass::Unit : square_class(f.from_int(-1));
        for (SquareClass d : {SquareClass::Unit, SquareClass::NonResidue}) {
          const std::size_t witt = d == hyperbolic_det ? n / 2 : n / 2 - 1;
          if (witt < 2) continue;
          FormInvariant form{FormInvariantKind::Determinant, 0, 0, d};
          for (auto p : all)
            for (auto l : all)
              if (detail::canonical_pair(p, l) == std::pair{p, l}) push(form, p, l);
        }
      }
      break;
    case FieldKind::CharTwoField:
      require(geom_dim >= 3 && geom_dim % 2 == 1, ErrorKind::Unsupported,
              "characteristic-2 classification needs an odd geometry dimension of at least 3");
      for (int arf : {0, 1}) {
        FormInvariant form{FormInvariantKind::Arf, 0, 0, SquareClass::Unit, arf};
        for (SquareClass p : {SquareClass::Zero, SquareClass::Unit})
          for (SquareClass l : {SquareClass::Zero, SquareClass::Unit}) push(form, p, l);
      }
      break;
    default: fail(ErrorKind::Unsupported, "enumerate_classes over " + f.name());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ----------------------------------------------------------------------------------------------
// Canonical representatives

namespace detail {

/// First vector (in enumeration order) satisfying pred, normalized.
template <class Pred>
std::optional<Vector> first_vector(const Field& f, std::size_t n, Pred&& pred) {
  std::optional<Vector> found;
  for_each_vector(f, n, [&](const Vector& v) {
    if (is_zero_vector(v) || normalize(v) != v || !pred(v)) return false;
    found = v;
    return true;
  });
  return found;
}

inline Geometry finite_representative(const QuadraticForm& q, SquareClass p, SquareClass l) {
  const Field& f = q.field();
  auto P = first_vector(f, q.dim(), [&](const Vector& v) { return value_class(q(v)) == p; });
  require(P.has_value(), ErrorKind::Internal, "no vector of the requested norm for P");
  auto L = first_vector(f, q.dim(), [&](const Vector& v) {
    return value_class(q(v)) == l && q.polar(*P, v).is_zero() && v != *P;
  });
  require(L.has_value(), ErrorKind::Internal, "no vector of the requested norm for L");
  return Geometry(q, *P, *L);
}

}  // namespace detail

/// A geometry with the given class: diagonal form, P and L from standard vectors or e_i + e_j
/// patterns over the reals, lexicographically first vectors over finite fields.
inline Geometry representative(const GeometryClass& c) {
  require(c.field != "closed", ErrorKind::Unsupported, "no exact quadratically closed field is available");
  const Field f = parse_field(c.field);
  const std::size_t n = c.geom_dim + 3;
  switch (c.form.kind) {
    case FormInvariantKind::Signature: {
      require(f.kind() == FieldKind::RationalAsReal, ErrorKind::Unsupported, "signature classes need the reals");
      require(c.form.positive + c.form.negative == n, ErrorKind::InvalidInput,
              "signature does not match dim V = " + std::to_string(n));
      auto needs = [&](SquareClass a, SquareClass b) {
        return std::size_t(c.qP == a || c.qP == b) + std::size_t(c.qL == a || c.qL == b);
      };
      require(needs(SquareClass::Unit, SquareClass::Zero) <= c.form.positive &&
                  needs(SquareClass::NonResidue, SquareClass::Zero) <= c.form.negative,
              ErrorKind::InvalidInput, "no orthogonal P, L with these values exist for this signature");
      std::vector<Scalar> entries;
      for (std::size_t i = 0; i < c.form.positive; ++i) entries.push_back(f.one());
      for (std::size_t i = 0; i < c.form.negative; ++i) entries.push_back(-f.one());
      QuadraticForm q = QuadraticForm::diagonal(f, entries);
      std::size_t next_pos = 0, next_neg = c.form.positive;
      auto take = [&](SquareClass cl) {
        Vector v = zero_vector(f, n);
        if (cl != SquareClass::NonResidue) v[next_pos++] = f.one();
        if (cl != SquareClass::Unit) v[next_neg++] = f.one();
        return v;
      };
      Vector P = take(c.qP);
      Vector L = take(c.qL);
      return Geometry(q, P, L);
    }
    case FormInvariantKind::Determinant: {
      require(f.kind() == FieldKind::PrimeField, ErrorKind::Unsupported, "determinant classes need an odd prime field");
      std::vector<Scalar> entries(n - 2, f.one());
      entries.push_back(-f.one());
      entries.push_back(c.form.det == SquareClass::Unit ? -f.one() : -canonical_nonresidue(f));
      return detail::finite_representative(QuadraticForm::diagonal(f, entries), c.qP, c.qL);
    }
    case FormInvariantKind::Arf: {
      require(f.characteristic() == 2, ErrorKind::Unsupported, "Arf classes need characteristic 2");
      require(n % 2 == 0, ErrorKind::Unsupported, "Arf classes need an even dim V");
      std::vector<std::tuple<std::size_t, std::size_t, Scalar>> terms;
      for (std::size_t i = 0; i + 1 < n; i += 2) terms.emplace_back(i, i + 1, f.one());
      if (c.form.arf == 1) {
        terms.emplace_back(0, 0, f.one());
        terms.emplace_back(1, 1, f.order() == 2 ? f.one() : f.element(2));
      }
      return detail::finite_representative(QuadraticForm::from_terms(f, n, terms), c.qP, c.qL);
    }
    case FormInvariantKind::Closed: break;
  }
  fail(ErrorKind::Unsupported, "no representative for this class");
}

// ----------------------------------------------------------------------------------------------
// Cayley-Klein table

struct CayleyKleinTable {
  std::array<std::string, 3> labels;  // Q values indexing rows (Q(P)) and columns (Q(L))
  std::array<std::array<std::string, 3>, 3> names;
};

/// The 3x3 table of 2-geometries, each cell obtained by classifying a representative.
inline CayleyKleinTable ck_table(const Field& f) {
  require(f.kind() == FieldKind::RationalAsReal || f.kind() == FieldKind::PrimeField, ErrorKind::Unsupported,
          "the Cayley-Klein table needs the reals or a finite field of odd characteristic");
  CayleyKleinTable t;
  t.labels = {f.kind() == FieldKind::RationalAsReal ? "-1" : "e", "0", "1"};
  for (const auto& c : enumerate_classes(f, 2)) {
    GeometryClass got = classify(representative(c));
    t.names[detail::ck_index(got.qP)][detail::ck_index(got.qL)] = got.name.value_or("?");
  }
  return t;
}

inline std::string to_string(const CayleyKleinTable& t) {
  std::string s = "Q(P) \\ Q(L)";
  for (const auto& l : t.labels) s += "\t" + l;
  s += "\n";
  for (std::size_t i = 0; i < 3; ++i) {
    s += t.labels[i];
    for (std::size_t j = 0; j < 3; ++j) s += "\t" + t.names[i][j];
    s += "\n";
  }
  return s;
}

// ----------------------------------------------------------------------------------------------
// Cycle equivalence

/// Isometry data of (P^perp, Q^P, L): radical dimension, class of the nondegenerate part and the
/// class of Q(L).
struct PointspaceInvariant {
  std::size_t radical = 0;
  std::size_t positive = 0, negative = 0;  // reals
  std::size_t rank = 0;
  SquareClass det = SquareClass::Unit;  // finite fields
  SquareClass qL = SquareClass::Zero;

  bool operator==(const PointspaceInvariant&) const = default;
};

inline PointspaceInvariant pointspace_invariant(const Geometry& g) {
  g.field().require_exact("cycle_equivalent");
  g.field().require_odd_characteristic("cycle_equivalent");
  const Pointspace ps = pointspace(g);
  PointspaceInvariant inv;
  for (const auto& a : diagonalize(ps.form).entries) {
    if (a.is_zero()) {
      ++inv.radical;
      continue;
    }
    ++inv.rank;
    inv.det = inv.det * square_class(a);
    if (g.field().kind() == FieldKind::RationalAsReal) ++(a.rational() > 0 ? inv.positive : inv.negative);
  }
  inv.qL = square_class(g.Q(g.L()));
  return inv;
}

/// The invariant after rescaling the form by the non-square class (-1 over the reals).
inline PointspaceInvariant rescaled(const PointspaceInvariant& inv) {
  PointspaceInvariant r = inv;
  std::swap(r.positive, r.negative);
  if (inv.rank % 2 == 1) r.det = detail::flip(r.det);
  r.qL = detail::flip(r.qL);
  return r;
}

/// Whether the pointspaces (P^perp, Q^P, L) are isomorphic up to rescaling of Q.
inline bool cycle_equivalent(const Geometry& a, const Geometry& b) {
  require(a.field() == b.field(), ErrorKind::InvalidInput, "cycle_equivalent: field mismatch");
  require(a.dim() == b.dim(), ErrorKind::InvalidInput, "cycle_equivalent: dimension mismatch");
  const PointspaceInvariant ia = pointspace_invariant(a), ib = pointspace_invariant(b);
  return ia == ib || rescaled(ia) == ib;
}

/// Classes cycle equivalent to the given one. The class itself is listed when its pointspace is
/// isomorphic to its own rescaling by a non-square, which yields a second model.
inline std::vector<GeometryClass> cycle_equivalence_partners(const GeometryClass& c) {
  require(c.geom_dim == 2, ErrorKind::Unsupported, "cycle equivalence partners are computed for 2-geometries");
  const Field f = parse_field(c.field);
  require(f.kind() == FieldKind::RationalAsReal || f.kind() == FieldKind::PrimeField, ErrorKind::Unsupported,
          "cycle equivalence partners need the reals or a finite field of odd characteristic");
  const PointspaceInvariant inv = pointspace_invariant(representative(c));
  std::vector<GeometryClass> out;
  for (const auto& other : enumerate_classes(f, c.geom_dim)) {
    const PointspaceInvariant o = pointspace_invariant(representative(other));
    if (other == c ? rescaled(inv) == inv : (o == inv || rescaled(inv) == o)) out.push_back(other);
  }
  return out;
}

}  // namespace ucg
