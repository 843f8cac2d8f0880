#pragma once

// Brute-force reference computations over small finite fields, used to cross-check the
// closed forms: isotropic subspace search, zero counts, isometry and similarity search,
// reflection orbits.

#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "ucg/classify.hpp"
#include "ucg/enumerate.hpp"
#include "ucg/geometry.hpp"
#include "ucg/quadform.hpp"

namespace ucg::oracle {

/// Largest dimension of a subspace on which Q vanishes identically, by depth-first search over
/// singular points.
inline std::size_t max_singular_dim(const QuadraticForm& q) {
  const Field& f = q.field();
  check_enumerable(f, q.dim());
  std::vector<Vector> sing;
  for (const auto& p : projective_points(f, q.dim()))
    if (q(p).is_zero()) sing.push_back(p);
  const std::size_t cap = q.dim() / 2;
  std::size_t best = 0;
  std::vector<Vector> chosen;
  std::function<void(std::size_t)> dfs = [&](std::size_t start) {
    best = std::max(best, chosen.size());
    if (best == cap) return;
    for (std::size_t i = start; i < sing.size() && best < cap; ++i) {
      bool ok = true;
      for (const auto& c : chosen)
        if (!q.polar(c, sing[i]).is_zero()) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(sing[i]);
      if (linearly_independent(chosen)) dfs(i + 1);
      chosen.pop_back();
    }
  };
  dfs(0);
  return best;
}

/// Number of vectors v (including 0) with Q(v) = 0.
inline std::int64_t count_zeros(const QuadraticForm& q) {
  std::int64_t n = 0;
  for_each_vector(q.field(), q.dim(), [&](const Vector& v) {
    if (q(v).is_zero()) ++n;
  });
  return n;
}

/// Arf class read off the zero count of an even-dimensional form in characteristic 2:
/// q^{2m-1} + q^m - q^{m-1} zeros for class 0, q^{2m-1} - q^m + q^{m-1} for class 1.
inline int arf_from_zero_count(const QuadraticForm& q) {
  const std::int64_t qq = q.field().order();
  std::int64_t base = 1;
  for (std::size_t i = 0; i + 1 < q.dim(); ++i) base *= qq;
  return count_zeros(q) > base ? 0 : 1;
}

/// Linear maps M from (V1, q1) to (V2, q2) with q2(Mv) = lambda q1(v), built by backtracking over
/// images of a basis of V1 whose first vector is `anchor1` (if given), mapped into the line of
/// `anchor2`. Returns the first invertible solution for some lambda in `lambdas`.
struct Similarity {
  Scalar lambda;
  Matrix map;  // dim2 x dim1, columns are images of the standard basis
};

inline std::optional<Similarity> similarity_search(const QuadraticForm& q1, const QuadraticForm& q2,
                                                   const std::vector<Scalar>& lambdas,
                                                   const std::optional<Vector>& anchor1 = std::nullopt,
                                                   const std::optional<Vector>& anchor2 = std::nullopt) {
  const Field& f = q1.field();
  const std::size_t n = q1.dim();
  if (q2.dim() != n) return std::nullopt;
  check_enumerable(f, n);
  std::vector<Vector> basis;
  if (anchor1) basis.push_back(*anchor1);
  basis = complete_basis(basis, f, n);
  std::vector<Scalar> self(n);
  std::vector<std::vector<Scalar>> cross(n, std::vector<Scalar>(n, f.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    self[i] = q1(basis[i]);
    for (std::size_t j = 0; j < i; ++j) cross[i][j] = q1.polar(basis[i], basis[j]);
  }
  std::vector<Vector> targets;
  std::vector<Scalar> target_q;
  for_each_vector(f, n, [&](const Vector& v) {
    if (is_zero_vector(v)) return;
    targets.push_back(v);
    target_q.push_back(q2(v));
  });

  for (const Scalar& lambda : lambdas) {
    std::vector<Vector> images;
    std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
      if (i == n) return true;
      for (std::size_t t = 0; t < targets.size(); ++t) {
        const Vector& w = targets[t];
        if (target_q[t] != lambda * self[i]) continue;
        if (i == 0 && anchor2 && rank(std::vector<Vector>{w, *anchor2}) != 1) continue;
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) ok = q2.polar(w, images[j]) == lambda * cross[i][j];
        if (!ok) continue;
        images.push_back(w);
        if (linearly_independent(images) && extend(i + 1)) return true;
        images.pop_back();
      }
      return false;
    };
    if (!extend(0)) continue;
    // M basis = images  =>  M = W B^{-1}
    const Matrix bm = Matrix::from_columns(f, basis, n);
    const Matrix wm = Matrix::from_columns(f, images, n);
    auto binv = inverse(bm);
    require(binv.has_value(), ErrorKind::Internal, "basis not invertible");
    return Similarity{lambda, wm * *binv};
  }
  return std::nullopt;
}

/// One representative per nonzero square class, used as rescaling factors.
inline std::vector<Scalar> square_class_representatives(const Field& f) {
  if (f.kind() == FieldKind::CharTwoField) return {f.one()};
  return {f.one(), canonical_nonresidue(f)};
}

/// Cycle equivalence decided by searching for a similarity of the pointspaces carrying L into
/// the line of L.
inline std::optional<Similarity> pointspace_similarity(const Geometry& a, const Geometry& b) {
  const Pointspace pa = pointspace(a), pb = pointspace(b);
  if (pa.basis.size() != pb.basis.size()) return std::nullopt;
  return similarity_search(pa.form, pb.form, square_class_representatives(a.field()), pa.L_coords, pb.L_coords);
}

/// All matrices g with q(g v) = q(v) and g x = x for every x in `fixed`, by backtracking over
/// the images of the standard basis.
inline std::vector<Matrix> isometries_fixing(const QuadraticForm& q, const std::vector<Vector>& fixed) {
  const Field& f = q.field();
  const std::size_t n = q.dim();
  check_enumerable(f, n, {n, 1 << 20});
  std::vector<Vector> all;
  for_each_vector(f, n, [&](const Vector& v) {
    if (!is_zero_vector(v)) all.push_back(v);
  });
  std::vector<Vector> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vector(f, n, i));
  std::vector<Matrix> out;
  std::vector<Vector> cols;
  std::function<void(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) {
      Matrix m = Matrix::from_columns(f, cols, n);
      for (const auto& x : fixed)
        if (!(m * Matrix::from_columns(f, {x}, n) == Matrix::from_columns(f, {x}, n))) return;
      if (!linearly_independent(cols)) return;
      out.push_back(std::move(m));
      return;
    }
    for (const auto& w : all) {
      if (q(w) != q(e[i])) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = q.polar(w, cols[j]) == q.polar(e[i], e[j]);
      if (!ok) continue;
      cols.push_back(w);
      extend(i + 1);
      cols.pop_back();
    }
  };
  extend(0);
  return out;
}

// ----------------------------------------------------------------------------------------------
// Reflection orbits

namespace detail {

struct PointIndex {
  std::vector<Vector> points;
  std::vector<std::int64_t> by_code;  // vector_code -> index, -1 if not a normalized point

  explicit PointIndex(const Field& f, std::size_t n) : points(projective_points(f, n)) {
    std::int64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= f.order();
    by_code.assign(static_cast<std::size_t>(total), -1);
    for (std::size_t i = 0; i < points.size(); ++i)
      by_code[static_cast<std::size_t>(vector_code(points[i]))] = static_cast<std::int64_t>(i);
  }
  std::size_t index(const Vector& v) const {
    return static_cast<std::size_t>(by_code[static_cast<std::size_t>(vector_code(normalize(v)))]);
  }
};

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

inline Vector reflect(const QuadraticForm& q, const Vector& a, const Scalar& qa, const Vector& x) {
  return x - (q.polar(x, a) / qa) * a;
}

}  // namespace detail

/// Permutations of the projective points induced by the reflections in all anisotropic vectors.
inline std::vector<std::vector<std::size_t>> reflection_permutations(const QuadraticForm& q,
                                                                     const detail::PointIndex& idx) {
  std::vector<std::vector<std::size_t>> perms;
  for (const auto& a : idx.points) {
    const Scalar qa = q(a);
    if (qa.is_zero()) continue;
    std::vector<std::size_t> perm(idx.points.size());
    for (std::size_t i = 0; i < idx.points.size(); ++i) perm[i] = idx.index(detail::reflect(q, a, qa, idx.points[i]));
    perms.push_back(std::move(perm));
  }
  return perms;
}

struct AtlasClass {
  GeometryClass cls;
  std::size_t pairs = 0;
  std::size_t orbits = 0;
};

struct OrbitAtlas {
  std::size_t pairs = 0;
  std::vector<AtlasClass> classes;
};

/// Partitions all projective pairs (P, L) with P orthogonal to L and P != L by GeometryClass, and
/// counts the orbits of the reflection group inside each class.
inline OrbitAtlas orbit_atlas(const QuadraticForm& q) {
  const Field& f = q.field();
  f.require_odd_characteristic("orbit_atlas");
  check_enumerable(f, q.dim());
  const detail::PointIndex idx(f, q.dim());
  const std::size_t N = idx.points.size();
  std::vector<std::int64_t> pair_id(N * N, -1);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j && q.polar(idx.points[i], idx.points[j]).is_zero()) {
        pair_id[i * N + j] = static_cast<std::int64_t>(pairs.size());
        pairs.emplace_back(i, j);
      }
  detail::UnionFind uf(pairs.size());
  for (const auto& perm : reflection_permutations(q, idx))
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto [i, j] = pairs[k];
      uf.unite(k, static_cast<std::size_t>(pair_id[perm[i] * N + perm[j]]));
    }
  std::map<GeometryClass, std::pair<std::size_t, std::set<std::size_t>>> groups;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    auto& slot = groups[classify(Geometry(q, idx.points[i], idx.points[j]))];
    ++slot.first;
    slot.second.insert(uf.find(k));
  }
  OrbitAtlas atlas;
  atlas.pairs = pairs.size();
  for (const auto& [cls, data] : groups) atlas.classes.push_back({cls, data.first, data.second.size()});
  return atlas;
}

/// Number of reflection-group orbits on the nonzero vectors of each norm.
inline std::map<Scalar, std::size_t> vector_norm_orbits(const QuadraticForm& q) {
  const Field& f = q.field();
  f.require_odd_characteristic("vector_norm_orbits");
  check_enumerable(f, q.dim());
  std::vector<Vector> vecs;
  for_each_vector(f, q.dim(), [&](const Vector& v) { vecs.push_back(v); });
  std::vector<std::size_t> at(vecs.size());
  for (std::size_t i = 0; i < vecs.size(); ++i) at[static_cast<std::size_t>(vector_code(vecs[i]))] = i;
  detail::UnionFind uf(vecs.size());
  for (const auto& a : projective_points(f, q.dim())) {
    const Scalar qa = q(a);
    if (qa.is_zero()) continue;
    for (std::size_t i = 0; i < vecs.size(); ++i)
      uf.unite(i, at[static_cast<std::size_t>(vector_code(detail::reflect(q, a, qa, vecs[i])))]);
  }
  std::map<Scalar, std::set<std::size_t>> roots;
  for (std::size_t i = 0; i < vecs.size(); ++i)
    if (!is_zero_vector(vecs[i])) roots[q(vecs[i])].insert(uf.find(i));
  std::map<Scalar, std::size_t> out;
  for (const auto& [norm, r] : roots) out[norm] = r.size();
  return out;
}

}  // namespace ucg::oracle
