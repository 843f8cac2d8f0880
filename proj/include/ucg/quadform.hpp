#pragma once

// Quadratic forms stored as upper-triangular coefficient tables, so that the diagonal x_i^2
// coefficients survive in characteristic 2, together with their associated bilinear forms,
// radicals, diagonalization, generalized orthogonal bases, Witt index, isometry tests, the Arf
// invariant and extension of isometries.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "ucg/enumerate.hpp"
#include "ucg/linalg.hpp"

namespace ucg {

class QuadraticForm {
 public:
  /// The zero form on K^dim.
  QuadraticForm(const Field& f, std::size_t dim) : field_(f), dim_(dim), coeffs_(f, dim, dim) {
    require(dim > 0, ErrorKind::InvalidInput, "quadratic form needs positive dimension");
  }

  static QuadraticForm diagonal(const Field& f, const std::vector<Scalar>& entries) {
    QuadraticForm q(f, entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) q.coeffs_(i, i) = entries[i];
    return q;
  }

  static QuadraticForm diagonal(const Field& f, std::initializer_list<std::int64_t> entries) {
    std::vector<Scalar> s;
    for (auto e : entries) s.push_back(f.from_int(e));
    return diagonal(f, s);
  }

  /// Sums the terms c * x_i * x_j (indices 0-based, any order).
  static QuadraticForm from_terms(const Field& f, std::size_t dim,
                                  const std::vector<std::tuple<std::size_t, std::size_t, Scalar>>& terms) {
    QuadraticForm q(f, dim);
    for (const auto& [i0, j0, c] : terms) {
      std::size_t i = std::min(i0, j0), j = std::max(i0, j0);
      require(j < dim, ErrorKind::InvalidInput, "term index out of range");
      q.coeffs_(i, j) += c;
    }
    return q;
  }

  const Field& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }

  /// Coefficient of x_i x_j for i <= j.
  const Scalar& coeff(std::size_t i, std::size_t j) const {
    require(i <= j && j < dim_, ErrorKind::InvalidInput, "coefficient index must satisfy i <= j < dim");
    return coeffs_(i, j);
  }

  Scalar operator()(const Vector& v) const {
    check_size(v);
    Scalar s = field_.zero();
    for (std::size_t i = 0; i < dim_; ++i) {
      if (v[i].is_zero()) continue;
      for (std::size_t j = i; j < dim_; ++j)
        if (!coeffs_(i, j).is_zero()) s += coeffs_(i, j) * v[i] * v[j];
    }
    return s;
  }

  /// Associated bilinear form B(u,v) = Q(u+v) - Q(u) - Q(v), without the factor 1/2.
  Scalar polar(const Vector& u, const Vector& v) const {
    check_size(u);
    check_size(v);
    Scalar s = field_.zero();
    for (std::size_t i = 0; i < dim_; ++i) {
      if (!coeffs_(i, i).is_zero()) s += (coeffs_(i, i) + coeffs_(i, i)) * u[i] * v[i];
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (!coeffs_(i, j).is_zero()) s += coeffs_(i, j) * (u[i] * v[j] + u[j] * v[i]);
    }
    return s;
  }

  /// Gram matrix of the associated (full) bilinear form.
  Matrix gram() const {
    Matrix g(field_, dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      g(i, i) = coeffs_(i, i) + coeffs_(i, i);
      for (std::size_t j = i + 1; j < dim_; ++j) g(i, j) = g(j, i) = coeffs_(i, j);
    }
    return g;
  }

  /// Form in the coordinates of the given basis rows: Q'(c) = Q(sum c_i b_i).
  QuadraticForm restrict(const std::vector<Vector>& basis) const {
    require(!basis.empty(), ErrorKind::InvalidInput, "restriction to the zero subspace");
    QuadraticForm r(field_, basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      r.coeffs_(i, i) = (*this)(basis[i]);
      for (std::size_t j = i + 1; j < basis.size(); ++j) r.coeffs_(i, j) = polar(basis[i], basis[j]);
    }
    return r;
  }

  QuadraticForm scaled(const Scalar& s) const {
    QuadraticForm r = *this;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j) r.coeffs_(i, j) *= s;
    return r;
  }

  QuadraticForm direct_sum(const QuadraticForm& other) const {
    require(field_ == other.field_, ErrorKind::InvalidInput, "direct sum across fields");
    QuadraticForm r(field_, dim_ + other.dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j) r.coeffs_(i, j) = coeffs_(i, j);
    for (std::size_t i = 0; i < other.dim_; ++i)
      for (std::size_t j = i; j < other.dim_; ++j) r.coeffs_(dim_ + i, dim_ + j) = other.coeffs_(i, j);
    return r;
  }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (!coeffs_(i, j).is_zero()) return false;
    return true;
  }

  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> terms() const {
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> out;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j)
        if (!coeffs_(i, j).is_zero()) out.emplace_back(i, j, coeffs_(i, j));
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& [i, j, c] : terms()) {
      if (!s.empty()) s += " + ";
      if (!c.is_one()) s += c.to_string() + "*";
      s += "x" + std::to_string(i + 1);
      s += i == j ? "^2" : "*x" + std::to_string(j + 1);
    }
    return s.empty() ? "0" : s;
  }

  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void check_size(const Vector& v) const {
    require(v.size() == dim_, ErrorKind::InvalidInput,
            "vector of size " + std::to_string(v.size()) + " for a form of dimension " + std::to_string(dim_));
  }

  Field field_;
  std::size_t dim_;
  Matrix coeffs_;  // upper triangular
};

class BilinearForm {
 public:
  explicit BilinearForm(Matrix m) : matrix_(std::move(m)) {}

  std::size_t dim() const noexcept { return matrix_.rows(); }
  const Matrix& matrix() const noexcept { return matrix_; }

  Scalar operator()(const Vector& u, const Vector& v) const {
    Scalar s = matrix_.field().zero();
    for (std::size_t i = 0; i < dim(); ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim(); ++j) s += u[i] * matrix_(i, j) * v[j];
    }
    return s;
  }

 private:
  Matrix matrix_;
};

inline BilinearForm assoc_bilinear(const QuadraticForm& q) { return BilinearForm(q.gram()); }

/// The conventional bilinear form with B(v,v) = Q(v); needs characteristic different from 2.
inline BilinearForm half_bilinear(const QuadraticForm& q) {
  q.field().require_odd_characteristic("half_bilinear");
  Matrix g = q.gram();
  Scalar half = q.field().from_int(2).inverse();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= half;
  return BilinearForm(std::move(g));
}

inline Scalar half_polar(const QuadraticForm& q, const Vector& u, const Vector& v) {
  q.field().require_odd_characteristic("half_bilinear");
  return q.polar(u, v) / q.field().from_int(2);
}

/// Basis of the degenerate vectors {v : B(v,u) = 0 for all u}.
inline std::vector<Vector> bilinear_radical(const QuadraticForm& q) { return nullspace(q.gram()); }

inline bool is_nondegenerate_bilinear(const QuadraticForm& q) { return bilinear_radical(q).empty(); }

/// True when Q does not split off a zero summand.
inline bool is_nondegenerate_form(const QuadraticForm& q) {
  q.field().require_exact("is_nondegenerate_form");
  const auto rad = bilinear_radical(q);
  if (rad.empty()) return true;
  if (q.field().characteristic() != 2) return false;
  // Perfect characteristic 2: Q is additive and Frobenius-semilinear on the radical, so a
  // radical of dimension >= 2 always has a nonzero zero of Q.
  if (rad.size() >= 2) return false;
  return !q(rad[0]).is_zero();
}

// ----------------------------------------------------------------------------------------------
// Diagonalization

struct Diagonalization {
  std::vector<Scalar> entries;
  std::vector<Vector> basis;  // basis[i] has Q(basis[i]) = entries[i]; pairwise orthogonal
};

inline Diagonalization diagonalize(const QuadraticForm& q) {
  const Field& f = q.field();
  f.require_odd_characteristic("diagonalize (use generalized_orthogonal_basis)");
  const std::size_t n = q.dim();
  std::vector<Vector> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back(unit_vector(f, n, i));
  std::vector<Scalar> entries;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t j = k; j < n; ++j)
      if (!q(b[j]).is_zero()) {
        pivot = j;
        break;
      }
    if (pivot == n) {
      // all remaining vectors isotropic: polarize the first non-orthogonal pair
      for (std::size_t i = k; i < n && pivot == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!q.polar(b[i], b[j]).is_zero()) {
            b[i] = b[i] + b[j];
            pivot = i;
            break;
          }
    }
    if (pivot == n) {
      for (std::size_t j = k; j < n; ++j) entries.push_back(f.zero());
      break;
    }
    std::swap(b[k], b[pivot]);
    const Scalar a = q(b[k]);
    const Scalar two_a = a + a;
    for (std::size_t j = k + 1; j < n; ++j) {
      Scalar c = q.polar(b[j], b[k]);
      if (!c.is_zero()) b[j] = b[j] - (c / two_a) * b[k];
    }
    entries.push_back(a);
  }
  return {std::move(entries), std::move(b)};
}

struct Signature {
  std::size_t positive = 0, negative = 0, zero = 0;
  bool operator==(const Signature&) const = default;
};

inline Signature signature(const QuadraticForm& q) {
  require(q.field().is_real(), ErrorKind::Unsupported, "signature needs a real field, got " + q.field().name());
  Signature s;
  for (const auto& a : diagonalize(q).entries) {
    if (a.is_zero())
      ++s.zero;
    else if (a.to_double() > 0)
      ++s.positive;
    else
      ++s.negative;
  }
  return s;
}

/// Square class of the discriminant prod a_i of a diagonalization (Zero when degenerate).
inline SquareClass det_class(const QuadraticForm& q) {
  q.field().require_exact("det_class");
  SquareClass c = SquareClass::Unit;
  for (const auto& a : diagonalize(q).entries) c = c * square_class(a);
  return c;
}

// ----------------------------------------------------------------------------------------------
// Generalized orthogonal bases

struct GenOrthoBasis {
  std::vector<Vector> vectors;
  std::vector<std::pair<std::size_t, std::size_t>> couples;  // indices into vectors
};

namespace detail {

/// Basis rows of {w in span(space) : B(w, x) = 0 for every x in against}.
inline std::vector<Vector> perp_within(const QuadraticForm& q, const std::vector<Vector>& space,
                                       const std::vector<Vector>& against) {
  if (space.empty() || against.empty()) return space;
  Matrix m(q.field(), against.size(), space.size());
  for (std::size_t k = 0; k < against.size(); ++k)
    for (std::size_t l = 0; l < space.size(); ++l) m(k, l) = q.polar(against[k], space[l]);
  std::vector<Vector> out;
  for (const auto& c : nullspace(m)) out.push_back(combine(space, c));
  return out;
}

struct OrthoSetStructure {
  std::vector<int> partner;  // index of the couple partner, -1 for unpaired vectors
};

inline OrthoSetStructure analyse_ortho_set(const QuadraticForm& q, const std::vector<Vector>& s) {
  require(linearly_independent(s), ErrorKind::InvalidInput, "generalized orthogonal set must be independent");
  OrthoSetStructure st{std::vector<int>(s.size(), -1)};
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      Scalar b = q.polar(s[i], s[j]);
      if (b.is_zero()) continue;
      require(b.is_one() && q.polar(s[i], s[i]).is_zero() && q.polar(s[j], s[j]).is_zero() && st.partner[i] < 0 &&
                  st.partner[j] < 0,
              ErrorKind::InvalidInput,
              "not a generalized orthogonal set: vectors " + std::to_string(i) + " and " + std::to_string(j) +
                  " are neither orthogonal nor a symplectic couple");
      st.partner[i] = static_cast<int>(j);
      st.partner[j] = static_cast<int>(i);
    }
  return st;
}

}  // namespace detail

/// Extends a generalized orthogonal set to a generalized orthogonal basis by peeling off a
/// non-symplectic vector, a symplectic couple, or completing a lone symplectic vector.
inline GenOrthoBasis generalized_orthogonal_basis(const QuadraticForm& q, const std::vector<Vector>& s = {}) {
  const Field& f = q.field();
  f.require_exact("generalized_orthogonal_basis");
  require(bilinear_radical(q).empty(), ErrorKind::Precondition,
          "generalized orthogonal bases need a form without degenerate vectors");
  for (const auto& v : s)
    require(v.size() == q.dim() && !is_zero_vector(v), ErrorKind::InvalidInput, "bad vector in orthogonal set");
  const auto structure = detail::analyse_ortho_set(q, s);

  struct Pending {
    Vector v;
    std::optional<Vector> partner;
  };
  std::vector<Pending> pending;
  for (std::size_t i = 0; i < s.size(); ++i) {
    int p = structure.partner[i];
    if (p < 0)
      pending.push_back({s[i], std::nullopt});
    else if (static_cast<std::size_t>(p) > i)
      pending.push_back({s[i], s[static_cast<std::size_t>(p)]});
  }

  std::vector<Vector> space;
  for (std::size_t i = 0; i < q.dim(); ++i) space.push_back(unit_vector(f, q.dim(), i));

  GenOrthoBasis out;
  auto add_couple = [&](const Vector& a, const Vector& b) {
    out.vectors.push_back(a);
    out.vectors.push_back(b);
    out.couples.emplace_back(out.vectors.size() - 2, out.vectors.size() - 1);
    space = detail::perp_within(q, space, {a, b});
  };
  auto add_single = [&](const Vector& a) {
    out.vectors.push_back(a);
    space = detail::perp_within(q, space, {a});
  };
  // Given symplectic v and u with B(u,v) != 0, rescale and shift u into a couple partner.
  auto make_partner = [&](const Vector& v, Vector u) {
    u = q.polar(u, v).inverse() * u;
    if (f.characteristic() != 2) {
      Scalar buu = q.polar(u, u);
      if (!buu.is_zero()) u = u - (buu / f.from_int(2)) * v;
    }
    return u;
  };

  while (out.vectors.size() < q.dim()) {
    require(!space.empty(), ErrorKind::Internal, "generalized orthogonal basis construction ran out of space");
    if (pending.empty()) {
      auto it = std::find_if(space.begin(), space.end(), [&](const Vector& w) { return !q.polar(w, w).is_zero(); });
      if (it != space.end()) {
        add_single(*it);
        continue;
      }
      const Vector v = space.front();
      auto partner = std::find_if(space.begin(), space.end(), [&](const Vector& w) { return !q.polar(w, v).is_zero(); });
      require(partner != space.end(), ErrorKind::Internal, "degenerate vector inside a nondegenerate subspace");
      add_couple(v, make_partner(v, *partner));
      continue;
    }
    auto nonsymp = std::find_if(pending.begin(), pending.end(),
                                [&](const Pending& p) { return !p.partner && !q.polar(p.v, p.v).is_zero(); });
    if (nonsymp != pending.end()) {
      Vector v = nonsymp->v;
      pending.erase(nonsymp);
      add_single(v);
      continue;
    }
    auto couple = std::find_if(pending.begin(), pending.end(), [](const Pending& p) { return p.partner.has_value(); });
    if (couple != pending.end()) {
      Vector a = couple->v, b = *couple->partner;
      pending.erase(couple);
      add_couple(a, b);
      continue;
    }
    // only pairwise orthogonal symplectic vectors remain
    Vector v = pending.front().v;
    pending.erase(pending.begin());
    std::vector<Vector> rest;
    for (const auto& p : pending) rest.push_back(p.v);
    auto candidates = detail::perp_within(q, space, rest);
    auto partner =
        std::find_if(candidates.begin(), candidates.end(), [&](const Vector& w) { return !q.polar(w, v).is_zero(); });
    require(partner != candidates.end(), ErrorKind::Internal, "no couple partner for a symplectic vector");
    add_couple(v, make_partner(v, *partner));
  }
  return out;
}

// ----------------------------------------------------------------------------------------------
// Arf invariant (characteristic 2)

struct ArfInvariant {
  Scalar sum;  // sum of Q(a_i) Q(b_i) over a symplectic basis
  int value;   // 0 when sum lies in {tau^2 + tau}, 1 otherwise
};

inline int arf_class(const Scalar& s) {
  // F_2: tau^2 + tau is always 0.  F_4: tau^2 + tau takes the values {0, 1}.
  if (s.field().order() == 2) return static_cast<int>(s.residue());
  return s.residue() >= 2 ? 1 : 0;
}

inline ArfInvariant arf_invariant(const QuadraticForm& q) {
  const Field& f = q.field();
  require(f.kind() == FieldKind::CharTwoField, ErrorKind::Unsupported, "the Arf invariant needs characteristic 2");
  require(q.dim() % 2 == 0, ErrorKind::Precondition, "the Arf invariant needs an even-dimensional form");
  require(bilinear_radical(q).empty(), ErrorKind::Precondition,
          "the Arf invariant needs a nondegenerate bilinear form");
  GenOrthoBasis basis = generalized_orthogonal_basis(q);
  Scalar sum = f.zero();
  for (const auto& [i, j] : basis.couples) sum += q(basis.vectors[i]) * q(basis.vectors[j]);
  return {sum, arf_class(sum)};
}

// ----------------------------------------------------------------------------------------------
// Witt index and isometry classes

/// Half the dimension of a maximal symplectic subspace.
inline std::size_t witt_index(const QuadraticForm& q) {
  const Field& f = q.field();
  const std::size_t n = q.dim();
  if (f.is_real()) {
    Signature s = signature(q);
    require(s.zero == 0, ErrorKind::Precondition, "witt_index needs a nondegenerate form");
    return std::min(s.positive, s.negative);
  }
  require(is_nondegenerate_form(q), ErrorKind::Precondition, "witt_index needs a nondegenerate form");
  switch (f.kind()) {
    case FieldKind::PrimeField: {
      if (n % 2 == 1) return (n - 1) / 2;
      SquareClass minus_one_power = (n / 2) % 2 == 0 ? SquareClass::Unit : square_class(f.from_int(-1));
      return det_class(q) == minus_one_power ? n / 2 : n / 2 - 1;
    }
    case FieldKind::CharTwoField:
      if (n % 2 == 1) return (n - 1) / 2;
      return arf_invariant(q).value == 0 ? n / 2 : n / 2 - 1;
    default: break;
  }
  fail(ErrorKind::Unsupported, "witt_index over " + f.name());
}

/// Isometry test for nondegenerate forms in characteristic different from 2.
inline bool isometric(const QuadraticForm& a, const QuadraticForm& b) {
  require(a.field() == b.field(), ErrorKind::InvalidInput, "isometric: field mismatch");
  require(a.dim() == b.dim(), ErrorKind::InvalidInput, "isometric: dimension mismatch");
  a.field().require_exact("isometric");
  a.field().require_odd_characteristic("isometric (use arf_invariant)");
  require(is_nondegenerate_form(a) && is_nondegenerate_form(b), ErrorKind::Precondition,
          "isometric needs nondegenerate forms");
  if (a.field().kind() == FieldKind::RationalAsReal) return signature(a) == signature(b);
  return det_class(a) == det_class(b);
}

// ----------------------------------------------------------------------------------------------
// Representation of values

/// A nonzero vector v with Q(v) = lambda, or none.
///
/// A coordinate pair carrying a pure product term handles every value directly. Finite fields
/// fall back to lexicographic enumeration. Over the rationals representability is decided over
/// the reals by signs; a rational witness is then searched among small vectors and an
/// Unsupported error reports the rare case where none is found.
inline std::optional<Vector> represents(const QuadraticForm& q, const Scalar& lambda) {
  const Field& f = q.field();
  f.require_exact("represents");
  const std::size_t n = q.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (q.coeff(i, i).is_zero() && q.coeff(j, j).is_zero() && !q.coeff(i, j).is_zero()) {
        Vector v = zero_vector(f, n);
        v[i] = lambda / q.coeff(i, j);
        v[j] = f.one();
        return v;
      }
  if (f.is_finite()) {
    double total = std::pow(static_cast<double>(f.order()), static_cast<double>(n));
    require(total <= 2e7, ErrorKind::Unsupported, "represents: search space too large");
    std::optional<Vector> found;
    for_each_vector(f, n, [&](const Vector& v) {
      if (!found && !is_zero_vector(v) && q(v) == lambda) found = v;
    });
    return found;
  }
  // rationals standing in for the reals
  Diagonalization d = diagonalize(q);
  bool has_pos = false, has_neg = false, has_zero = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar& a = d.entries[i];
    if (a.is_zero()) {
      has_zero = true;
      if (lambda.is_zero()) return d.basis[i];
      continue;
    }
    (a.rational() > 0 ? has_pos : has_neg) = true;
    if (auto r = sqrt_if_square(lambda / a); r && !r->is_zero()) return *r * d.basis[i];
  }
  bool possible = lambda.is_zero() ? (has_pos && has_neg) || has_zero
                                   : (lambda.rational() > 0 ? has_pos : has_neg);
  if (!possible) return std::nullopt;
  // Small search in the diagonal basis: coefficient windows [-6, 6].
  std::optional<Vector> found;
  std::vector<std::int64_t> c(n, -6);
  while (!found) {
    Vector coeffs;
    for (auto x : c) coeffs.push_back(f.from_int(x));
    if (!is_zero_vector(coeffs)) {
      Scalar value = f.zero();
      for (std::size_t i = 0; i < n; ++i) value += d.entries[i] * coeffs[i] * coeffs[i];
      if (!value.is_zero() || lambda.is_zero()) {
        if (value == lambda) {
          found = combine(d.basis, coeffs);
          break;
        }
        if (!lambda.is_zero()) {
          if (auto r = sqrt_if_square(lambda / value)) {
            found = *r * combine(d.basis, coeffs);
            break;
          }
        }
      }
    }
    std::size_t k = 0;
    while (k < n && ++c[k] > 6) c[k++] = -6;
    if (k == n) break;
  }
  if (!found) fail(ErrorKind::Unsupported, "value is represented over the reals but no small rational witness exists");
  return found;
}

// ----------------------------------------------------------------------------------------------
// Isometries

/// Matrix of the reflection v -> v - B(v,a)/Q(a) a (valid in every characteristic).
inline Matrix reflection(const QuadraticForm& q, const Vector& a) {
  const Scalar qa = q(a);
  require(!qa.is_zero(), ErrorKind::Precondition, "reflection in an isotropic vector");
  const std::size_t n = q.dim();
  Matrix m = Matrix::identity(q.field(), n);
  for (std::size_t j = 0; j < n; ++j) {
    Scalar coeff = q.polar(unit_vector(q.field(), n, j), a) / qa;
    if (coeff.is_zero()) continue;
    for (std::size_t i = 0; i < n; ++i) m(i, j) -= coeff * a[i];
  }
  return m;
}

/// True when g (acting on columns) is invertible and preserves Q.
inline bool is_isometry(const QuadraticForm& q, const Matrix& g) {
  if (g.rows() != q.dim() || g.cols() != q.dim()) return false;
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < g.cols(); ++j) cols.push_back(g.column(j));
  return determinant(g) != q.field().zero() && q.restrict(cols) == q;
}

namespace detail {

inline void check_partial_isometry(const QuadraticForm& w, const std::vector<Vector>& u, const std::vector<Vector>& v) {
  require(u.size() == v.size(), ErrorKind::InvalidInput, "extend_isometry: bases of different sizes");
  require(!u.empty(), ErrorKind::InvalidInput, "extend_isometry: empty bases");
  require(linearly_independent(u) && linearly_independent(v), ErrorKind::InvalidInput,
          "extend_isometry: bases must be independent");
  require(w.restrict(u) == w.restrict(v), ErrorKind::InvalidInput, "extend_isometry: the map is not an isometry");
}

inline bool meets_radical(const QuadraticForm& w, const std::vector<Vector>& basis) {
  auto rad = bilinear_radical(w);
  if (rad.empty()) return false;
  std::vector<Vector> both = basis;
  both.insert(both.end(), rad.begin(), rad.end());
  return rank(both) < basis.size() + rad.size();
}

/// Image of x -> y by at most two reflections when Q(x) = Q(y), char != 2.
inline std::optional<Matrix> reflection_map(const QuadraticForm& q, const Vector& x, const Vector& y) {
  const std::size_t n = q.dim();
  if (x == y) return Matrix::identity(q.field(), n);
  Vector diff = x - y;
  if (!q(diff).is_zero()) return reflection(q, diff);
  Vector sum = x + y;
  if (!q(sum).is_zero() && !q(y).is_zero()) return reflection(q, y) * reflection(q, sum);
  return std::nullopt;
}

template <class Rng>
bool extend_search(const QuadraticForm& w, const std::vector<Vector>& basis, std::vector<Vector>& images,
                   Rng* rng) {
  const Field& f = w.field();
  const std::size_t j = images.size();
  if (j == basis.size()) return true;
  const std::size_t n = w.dim();
  const Vector& target = basis[j];
  std::optional<Vector> particular;
  std::vector<Vector> kernel;
  if (images.empty()) {
    particular = zero_vector(f, n);
    for (std::size_t i = 0; i < n; ++i) kernel.push_back(unit_vector(f, n, i));
  } else {
    Matrix m(f, images.size(), n);
    Vector rhs;
    for (std::size_t i = 0; i < images.size(); ++i) {
      for (std::size_t c = 0; c < n; ++c) m(i, c) = w.polar(images[i], unit_vector(f, n, c));
      rhs.push_back(w.polar(basis[i], target));
    }
    particular = solve(m, rhs);
    if (!particular) return false;
    kernel = nullspace(m);
  }
  const Scalar want = w(target);
  std::vector<Vector> candidates;
  for_each_vector(f, kernel.size(), [&](const Vector& c) {
    Vector y = kernel.empty() ? *particular : *particular + combine(kernel, c);
    if (w(y) == want) candidates.push_back(std::move(y));
  });
  if (rng) std::shuffle(candidates.begin(), candidates.end(), *rng);
  for (auto& y : candidates) {
    images.push_back(y);
    if (linearly_independent(images) && extend_search(w, basis, images, rng)) return true;
    images.pop_back();
  }
  return false;
}

}  // namespace detail

/// An isometry g of W with g(u_i) = v_i, as a matrix acting on column vectors.
///
/// The identity map (u = v) without randomness returns the identity. In characteristic
/// different from 2 a single vector is moved by at most two reflections. Otherwise the images of
/// a completed basis are found by backtracking over the affine solution sets of the linear
/// constraints they must satisfy; this needs a finite field. Passing an rng randomizes the
/// search, which yields a random extension.
template <class Rng = std::mt19937_64>
Matrix extend_isometry(const QuadraticForm& w, const std::vector<Vector>& u, const std::vector<Vector>& v,
                       Rng* rng = nullptr) {
  const Field& f = w.field();
  f.require_exact("extend_isometry");
  detail::check_partial_isometry(w, u, v);
  require(!detail::meets_radical(w, u) && !detail::meets_radical(w, v), ErrorKind::Precondition,
          "extend_isometry: the subspaces must not contain degenerate vectors");
  const std::size_t n = w.dim();
  if (!rng && u == v) return Matrix::identity(f, n);
  if (!rng && u.size() == 1 && f.characteristic() != 2)
    if (auto g = detail::reflection_map(w, u[0], v[0])) return *g;
  require(f.is_finite(), ErrorKind::Unsupported, "extend_isometry: search-based extension needs a finite field");
  std::vector<Vector> basis = complete_basis(u, f, n);
  std::vector<Vector> images = v;
  if (!detail::extend_search(w, basis, images, rng))
    fail(ErrorKind::Internal, "extend_isometry: no extension found although one must exist");
  Matrix source = Matrix::from_columns(f, basis, n);
  Matrix target = Matrix::from_columns(f, images, n);
  Matrix g = target * *inverse(source);
  require(is_isometry(w, g), ErrorKind::Internal, "extend_isometry produced a non-isometry");
  return g;
}

}  // namespace ucg
