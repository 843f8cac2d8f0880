#pragma once

// Brute-force enumeration of vectors and projective points over small finite fields.

#include <algorithm>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "ucg/linalg.hpp"

namespace ucg {

/// Caps on exhaustive enumeration so that accidental calls stay desk-scale.
struct EnumerationLimits {
  std::size_t max_dim = 7;
  std::int64_t max_q = 7;
};

inline EnumerationLimits& default_limits() {
  static EnumerationLimits limits;
  return limits;
}

inline void check_enumerable(const Field& f, std::size_t dim, const EnumerationLimits& limits = default_limits()) {
  require(f.is_finite(), ErrorKind::Unsupported, "enumeration needs a finite field, got " + f.name());
  require(dim <= limits.max_dim && f.order() <= limits.max_q, ErrorKind::Unsupported,
          "enumeration over " + f.name() + " in dimension " + std::to_string(dim) + " exceeds the limits (dim <= " +
              std::to_string(limits.max_dim) + ", q <= " + std::to_string(limits.max_q) + ")");
}

/// Scales v so that its first nonzero coordinate is 1. The zero vector is returned unchanged.
inline Vector normalize(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return x.inverse() * v;
  return v;
}

/// Calls fn on every vector of K^dim, in lexicographic residue order. A bool-returning fn stops
/// the enumeration by returning true.
template <class Fn>
void for_each_vector(const Field& f, std::size_t dim, Fn&& fn) {
  f.require_finite("vector enumeration");
  const std::vector<Scalar> elems = f.elements();
  std::vector<std::size_t> idx(dim, 0);
  Vector v(dim, f.zero());
  while (true) {
    if constexpr (std::is_same_v<std::invoke_result_t<Fn&, const Vector&>, bool>) {
      if (fn(static_cast<const Vector&>(v))) return;
    } else {
      fn(static_cast<const Vector&>(v));
    }
    std::size_t k = dim;
    while (k > 0) {
      --k;
      if (++idx[k] < elems.size()) {
        v[k] = elems[idx[k]];
        break;
      }
      idx[k] = 0;
      v[k] = elems[0];
      if (k == 0) return;
    }
    if (dim == 0) return;
  }
}

/// All normalized nonzero vectors of K^dim, sorted lexicographically.
inline std::vector<Vector> projective_points(const Field& f, std::size_t dim) {
  std::vector<Vector> out;
  for (std::size_t lead = 0; lead < dim; ++lead) {
    const std::size_t tail = dim - lead - 1;
    for_each_vector(f, tail, [&](const Vector& t) {
      Vector v(dim, f.zero());
      v[lead] = f.one();
      std::copy(t.begin(), t.end(), v.begin() + static_cast<std::ptrdiff_t>(lead + 1));
      out.push_back(std::move(v));
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Integer code of a vector over a finite field, sum residue_i * q^i.
inline std::int64_t vector_code(const Vector& v) {
  std::int64_t code = 0, mult = 1;
  for (const auto& x : v) {
    code += x.residue() * mult;
    mult *= x.field().order();
  }
  return code;
}

/// All vectors of the span of the given rows (finite fields only).
inline std::vector<Vector> span_elements(const Field& f, const std::vector<Vector>& basis, std::size_t dim) {
  std::vector<Vector> out;
  if (basis.empty()) {
    out.push_back(zero_vector(f, dim));
    return out;
  }
  for_each_vector(f, basis.size(), [&](const Vector& c) { out.push_back(combine(basis, c)); });
  return out;
}

/// Normalized projective points of the span of the given rows.
inline std::vector<Vector> span_points(const Field& f, const std::vector<Vector>& basis, std::size_t) {
  std::vector<Vector> out;
  if (basis.empty()) return out;
  for (const auto& c : projective_points(f, basis.size())) out.push_back(normalize(combine(basis, c)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ucg
