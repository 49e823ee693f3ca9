#pragma once

// Exact rational convex geometry: cones given by rays and halfspaces,
// polyhedra with a recession cone, double description and fiber vertices.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "trinom/error.hpp"
#include "trinom/exactla.hpp"

namespace trinom {

using Rational = boost::multiprecision::cpp_rational;
using QVector = std::vector<Rational>;

/// num / den; den != 0 and may be negative.
inline Rational ratio(const Int& num, const Int& den) {
  if (den == 0) throw Error(ErrorKind::InternalInconsistency, "zero denominator");
  return den < 0 ? Rational(Int(-num), Int(-den)) : Rational(num, den);
}

inline std::string to_string(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline Rational floor_of(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  return Rational(floor_div(numerator(q), denominator(q)));
}

inline QVector to_qvector(const IntVector& v) { return {v.begin(), v.end()}; }

template <class A, class B>
Rational dot(const std::vector<A>& a, const std::vector<B>& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * Rational(b[i]);
  return s;
}

inline Int dot_int(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot product");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline QVector apply_matrix(const IntMatrix& A, const QVector& x) {
  if (A.cols() != x.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
  QVector y(A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t k = 0; k < A.cols(); ++k)
      if (A(i, k) != 0) y[i] += Rational(A(i, k)) * x[k];
  return y;
}

/// Divide out the content; zero vectors are returned unchanged.
inline IntVector primitive(IntVector v) {
  Int g = 0;
  for (const Int& x : v) g = gcd_int(g, x);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

/// Smallest positive integer multiple of a rational direction, made primitive.
inline IntVector primitive(const QVector& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  Int l = 1;
  for (const Rational& x : v) l = lcm_int(l, denominator(x));
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = numerator(Rational(v[i] * l));
  return primitive(std::move(out));
}

inline bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

/// Rational polyhedral cone carrying both descriptions. `rays` are the
/// primitive extreme rays modulo `lineality`; for every cone this artifact
/// builds from a pp-divisor the lineality is empty.
struct QCone {
  std::size_t dim = 0;
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;
  std::vector<IntVector> halfspaces;

  bool is_pointed() const { return lineality.empty(); }

  bool contains(const QVector& x) const {
    return std::all_of(halfspaces.begin(), halfspaces.end(),
                       [&](const IntVector& a) { return dot(a, x) >= 0; });
  }

  // Same set; halfspace lists may differ.
  friend bool operator==(const QCone& a, const QCone& b) {
    return a.dim == b.dim && a.rays == b.rays && a.lineality == b.lineality;
  }
};

namespace detail {

inline std::size_t rank_of_rows(const std::vector<IntVector>& rows, std::size_t dim) {
  if (rows.empty()) return 0;
  return rank_of(IntMatrix::from_rows(rows, dim));
}

inline std::vector<IntVector> canonical_lineality(const std::vector<IntVector>& lin, std::size_t dim) {
  if (lin.empty()) return {};
  IntMatrix H = row_hermite_form(IntMatrix::from_rows(lin, dim));
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < H.rows(); ++i) out.push_back(H.row(i));
  return out;
}

}  // namespace detail

/// Extreme rays of {y : a.y >= 0 for every normal a} by the double
/// description method. Lineality is eliminated by pivoting, the remaining
/// steps use the algebraic adjacency test.
inline QCone extreme_rays(const std::vector<IntVector>& halfspaces, std::size_t dim) {
  for (const auto& a : halfspaces)
    if (a.size() != dim) throw Error(ErrorKind::DimensionMismatch, "halfspace normal of wrong dimension");

  std::vector<IntVector> lineality;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim);
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<IntVector> rays;
  std::vector<IntVector> processed;

  for (const IntVector& a : halfspaces) {
    if (is_zero(a)) continue;
    auto pivot = std::find_if(lineality.begin(), lineality.end(),
                              [&](const IntVector& l) { return dot_int(a, l) != 0; });
    if (pivot != lineality.end()) {
      IntVector l0 = *pivot;
      lineality.erase(pivot);
      Int al0 = dot_int(a, l0);
      if (al0 < 0) {
        for (Int& x : l0) x = -x;
        al0 = -al0;
      }
      auto project = [&](IntVector& v) {
        Int av = dot_int(a, v);
        if (av == 0) return;
        for (std::size_t i = 0; i < dim; ++i) v[i] = al0 * v[i] - av * l0[i];
        v = primitive(std::move(v));
      };
      for (IntVector& l : lineality) project(l);
      for (IntVector& r : rays) project(r);
      rays.push_back(primitive(std::move(l0)));
      processed.push_back(a);
      continue;
    }

    processed.push_back(a);
    std::vector<IntVector> pos, zero, neg;
    for (IntVector& r : rays) {
      Int ar = dot_int(a, r);
      (ar > 0 ? pos : ar < 0 ? neg : zero).push_back(std::move(r));
    }
    std::vector<IntVector> next = pos;
    next.insert(next.end(), zero.begin(), zero.end());

    const std::size_t edge_rank = dim - lineality.size() >= 2 ? dim - lineality.size() - 2 : 0;
    auto tight = [&](const IntVector& r) {
      std::vector<bool> t(processed.size() - 1);
      for (std::size_t k = 0; k + 1 < processed.size(); ++k) t[k] = dot_int(processed[k], r) == 0;
      return t;
    };
    std::vector<std::vector<bool>> tight_pos, tight_neg;
    for (const auto& p : pos) tight_pos.push_back(tight(p));
    for (const auto& q : neg) tight_neg.push_back(tight(q));

    for (std::size_t i = 0; i < pos.size(); ++i)
      for (std::size_t j = 0; j < neg.size(); ++j) {
        std::vector<IntVector> common;
        for (std::size_t k = 0; k + 1 < processed.size(); ++k)
          if (tight_pos[i][k] && tight_neg[j][k]) common.push_back(processed[k]);
        if (common.size() < edge_rank || detail::rank_of_rows(common, dim) != edge_rank) continue;
        const Int ap = dot_int(a, pos[i]), aq = dot_int(a, neg[j]);
        IntVector r(dim);
        for (std::size_t c = 0; c < dim; ++c) r[c] = ap * neg[j][c] - aq * pos[i][c];
        next.push_back(primitive(std::move(r)));
      }
    rays = std::move(next);
  }

  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  QCone c;
  c.dim = dim;
  c.rays = std::move(rays);
  c.lineality = detail::canonical_lineality(lineality, dim);
  c.halfspaces = halfspaces;
  return c;
}

/// The dual cone {u : <u, v> >= 0 for all v in c}.
inline QCone dual_cone(const QCone& c) {
  std::vector<IntVector> normals = c.rays;
  for (const IntVector& l : c.lineality) {
    normals.push_back(l);
    IntVector neg = l;
    for (Int& x : neg) x = -x;
    normals.push_back(std::move(neg));
  }
  return extreme_rays(normals, c.dim);
}

/// Cone generated by the given rays, with its halfspace description.
inline QCone cone_from_rays(const std::vector<IntVector>& generators, std::size_t dim) {
  QCone gen;
  gen.dim = dim;
  for (const auto& g : generators) {
    if (g.size() != dim) throw Error(ErrorKind::DimensionMismatch, "generator of wrong dimension");
    if (!is_zero(g)) gen.rays.push_back(primitive(g));
  }
  QCone dual = dual_cone(gen);
  QCone c = dual_cone(dual);
  c.halfspaces = dual.rays;
  for (const IntVector& l : dual.lineality) {
    c.halfspaces.push_back(l);
    IntVector neg = l;
    for (Int& x : neg) x = -x;
    c.halfspaces.push_back(std::move(neg));
  }
  return c;
}

struct QPolyhedron {
  std::vector<QVector> vertices;
  QCone recession;

  bool equals_recession() const {
    return vertices.size() == 1 &&
           std::all_of(vertices[0].begin(), vertices[0].end(), [](const Rational& x) { return x == 0; });
  }

  friend bool operator==(const QPolyhedron& a, const QPolyhedron& b) {
    return a.vertices == b.vertices && a.recession == b.recession;
  }
};

/// Drop duplicates and every point lying in (another point) + recession;
/// remaining vertices are sorted lexicographically.
inline QPolyhedron normalize_polyhedron(std::vector<QVector> vertices, const QCone& recession) {
  if (vertices.empty()) throw Error(ErrorKind::EmptyInput, "polyhedron needs at least one point");
  for (const auto& v : vertices)
    if (v.size() != recession.dim) throw Error(ErrorKind::DimensionMismatch, "vertex of wrong dimension");
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  auto diff = [](const QVector& p, const QVector& q) {
    QVector d(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) d[i] = p[i] - q[i];
    return d;
  };
  QPolyhedron out;
  out.recession = recession;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < vertices.size() && !dominated; ++j) {
      if (i == j || !recession.contains(diff(vertices[i], vertices[j]))) continue;
      // mutual containment only happens along lineality; keep the first
      dominated = !recession.contains(diff(vertices[j], vertices[i])) || j < i;
    }
    if (!dominated) out.vertices.push_back(vertices[i]);
  }
  return out;
}

/// Minimum of <u, .> over p, attained at a vertex.
inline Rational min_linear(const QPolyhedron& p, const QVector& u) {
  for (const IntVector& r : p.recession.rays)
    if (dot(u, r) < 0) throw Error(ErrorKind::Unbounded, "functional is negative on a recession ray");
  for (const IntVector& l : p.recession.lineality)
    if (dot(u, l) != 0) throw Error(ErrorKind::Unbounded, "functional is nonzero on the lineality space");
  if (p.vertices.empty()) throw Error(ErrorKind::EmptyInput, "polyhedron without vertices");
  Rational best = dot(u, p.vertices.front());
  for (const QVector& v : p.vertices) best = std::min(best, dot(u, v));
  return best;
}

/// Vertices of {x >= 0 : L x = u} for a two-row L, mapped through S. The
/// vertices are the basic feasible solutions, whose supports have size <= 2.
inline std::vector<QVector> fiber_vertices(const IntMatrix& L, const QVector& u, const IntMatrix& S) {
  if (L.rows() != 2 || u.size() != 2 || S.cols() != L.cols())
    throw Error(ErrorKind::DimensionMismatch, "fiber_vertices expects a 2 x n matrix and a section with n columns");
  const std::size_t n = L.cols();
  std::vector<QVector> points;

  if (u[0] == 0 && u[1] == 0) points.emplace_back(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k) {
    const Rational c0(L(0, k)), c1(L(1, k));
    if (c0 * u[1] - c1 * u[0] != 0) continue;
    const Rational norm = c0 * c0 + c1 * c1;
    if (norm == 0) continue;
    const Rational t = (c0 * u[0] + c1 * u[1]) / norm;
    if (t <= 0) continue;
    QVector x(n, Rational(0));
    x[k] = t;
    points.push_back(std::move(x));
  }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      const Rational a(L(0, j)), b(L(0, k)), c(L(1, j)), d(L(1, k));
      const Rational det = a * d - b * c;
      if (det == 0) continue;
      const Rational xj = (u[0] * d - b * u[1]) / det;
      const Rational xk = (a * u[1] - c * u[0]) / det;
      if (xj < 0 || xk < 0) continue;
      QVector x(n, Rational(0));
      x[j] = xj;
      x[k] = xk;
      points.push_back(std::move(x));
    }
  if (points.empty()) throw Error(ErrorKind::EmptyFiber, "no nonnegative solution of L x = u");

  std::vector<QVector> images;
  for (const QVector& x : points) images.push_back(apply_matrix(S, x));
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

}  // namespace trinom
