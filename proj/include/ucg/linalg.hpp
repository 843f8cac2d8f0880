#pragma once

// Dense exact linear algebra over a runtime Field: row reduction, kernels, ranks, inverses.
// Vectors are plain std::vector<Scalar>; subspaces are given by lists of spanning rows.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ucg/field.hpp"

namespace ucg {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, f.zero()); }

inline Vector unit_vector(const Field& f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = f.one();
  return v;
}

inline Vector make_vector(const Field& f, std::initializer_list<std::int64_t> entries) {
  Vector v;
  for (auto e : entries) v.push_back(f.from_int(e));
  return v;
}

inline bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

inline Vector operator+(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), ErrorKind::InvalidInput, "vector size mismatch");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Vector operator-(const Vector& a, const Vector& b) {
  require(a.size() == b.size(), ErrorKind::InvalidInput, "vector size mismatch");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Vector operator*(const Scalar& s, const Vector& v) {
  Vector r = v;
  for (auto& x : r) x *= s;
  return r;
}

/// Linear combination sum_i coeffs[i] * rows[i].
inline Vector combine(const std::vector<Vector>& rows, const Vector& coeffs) {
  require(!rows.empty() && rows.size() == coeffs.size(), ErrorKind::InvalidInput, "combination size mismatch");
  Vector r = zero_vector(coeffs[0].field(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!coeffs[i].is_zero())
      for (std::size_t j = 0; j < r.size(); ++j) r[j] += coeffs[i] * rows[i][j];
  return r;
}

inline std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].to_string();
  }
  return s + ")";
}

class Matrix {
 public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

  static Matrix identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }

  static Matrix from_rows(const Field& f, const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require(rows[i].size() == cols, ErrorKind::InvalidInput, "ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(const Field& f, const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      require(cols[j].size() == rows, ErrorKind::InvalidInput, "ragged matrix columns");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const { return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

  Vector column(std::size_t j) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  std::vector<Vector> row_list() const {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, ErrorKind::InvalidInput, "matrix product shape mismatch");
    Matrix r(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend Vector operator*(const Matrix& a, const Vector& v) {
    require(a.cols_ == v.size(), ErrorKind::InvalidInput, "matrix-vector shape mismatch");
    Vector r = zero_vector(a.field_, a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (std::size_t i = 0; i < m.rows_; ++i) os << to_string(m.row(i)) << (i + 1 < m.rows_ ? "\n" : "");
    return os;
  }

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form. Approx fields use partial pivoting on magnitude.
inline RowEchelon row_reduce(Matrix m) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t best = m.rows();
    if (f.is_exact()) {
      for (std::size_t i = r; i < m.rows(); ++i)
        if (!m(i, c).is_zero()) {
          best = i;
          break;
        }
    } else {
      double mag = 0;
      for (std::size_t i = r; i < m.rows(); ++i)
        if (!m(i, c).is_zero() && std::abs(m(i, c).real()) > mag) {
          mag = std::abs(m(i, c).real());
          best = i;
        }
    }
    if (best == m.rows()) continue;
    if (best != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(best, j));
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar factor = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

inline std::size_t rank(const std::vector<Vector>& rows) {
  if (rows.empty()) return 0;
  return rank(Matrix::from_rows(rows[0][0].field(), rows, rows[0].size()));
}

inline bool linearly_independent(const std::vector<Vector>& rows) { return rank(rows) == rows.size(); }

/// Basis of {x : m x = 0}.
inline std::vector<Vector> nullspace(const Matrix& m) {
  const Field& f = m.field();
  RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(f, m.cols());
    v[free] = f.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some solution of m x = b, or none.
inline std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  require(b.size() == m.rows(), ErrorKind::InvalidInput, "right-hand side size mismatch");
  const Field& f = m.field();
  Matrix aug(f, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  RowEchelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(f, m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
  return x;
}

inline Scalar determinant(Matrix m) {
  require(m.rows() == m.cols(), ErrorKind::InvalidInput, "determinant of a non-square matrix");
  const Field& f = m.field();
  Scalar det = f.one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (!m(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv == n) return f.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
      det = -det;
    }
    det *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar factor = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= factor * m(c, j);
    }
  }
  return det;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  require(m.rows() == m.cols(), ErrorKind::InvalidInput, "inverse of a non-square matrix");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  Matrix aug(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  RowEchelon e = row_reduce(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

/// Coefficients c with sum c_i basis[i] = v, when v lies in the span.
inline std::optional<Vector> coordinates(const std::vector<Vector>& basis, const Vector& v) {
  require(!basis.empty(), ErrorKind::InvalidInput, "empty basis");
  return solve(Matrix::from_columns(v[0].field(), basis, v.size()), v);
}

inline bool in_span(const std::vector<Vector>& basis, const Vector& v) {
  if (is_zero_vector(v)) return true;
  if (basis.empty()) return false;
  return coordinates(basis, v).has_value();
}

/// Extends an independent list to a basis of K^n using standard basis vectors (lowest index first).
inline std::vector<Vector> complete_basis(std::vector<Vector> basis, const Field& f, std::size_t n) {
  require(linearly_independent(basis), ErrorKind::InvalidInput, "cannot complete a dependent list");
  for (std::size_t i = 0; i < n && basis.size() < n; ++i) {
    basis.push_back(unit_vector(f, n, i));
    if (!linearly_independent(basis)) basis.pop_back();
  }
  return basis;
}

/// Canonical row basis of the span (reduced echelon rows); equal spans give equal results.
inline std::vector<Vector> canonical_span(const std::vector<Vector>& rows) {
  if (rows.empty()) return {};
  RowEchelon e = row_reduce(Matrix::from_rows(rows[0][0].field(), rows, rows[0].size()));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) out.push_back(e.reduced.row(i));
  return out;
}

/// Basis of a maximal independent sub-list, preserving order.
inline std::vector<Vector> independent_subset(const std::vector<Vector>& rows) {
  std::vector<Vector> out;
  for (const auto& r : rows) {
    out.push_back(r);
    if (!linearly_independent(out)) out.pop_back();
  }
  return out;
}

}  // namespace ucg
