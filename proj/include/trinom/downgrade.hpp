#pragma once

// Lattice setup of the torus action: N = ker L with embedding F and section
// S, the grading of the coordinates, and the image lattice N' = Im L with its
// primitive ray generators u_0, u_1, u_2.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "trinom/error.hpp"
#include "trinom/exactla.hpp"
#include "trinom/trinomial.hpp"

namespace trinom {

using Vec2 = std::array<Int, 2>;

struct TorusData {
  IntMatrix L;  // 2 x n
  IntMatrix F;  // n x (n-2), columns span ker L
  IntMatrix S;  // (n-2) x n, S F = I
  std::vector<IntVector> degrees;  // degrees[k] = row k of F
  std::array<Vec2, 3> v;           // generators of Im L
  std::array<Vec2, 3> u;           // primitive ray generators of Im L

  std::size_t rank() const { return F.cols(); }
};

struct RayGenerator {
  Int a;
  IntVector u;
};

/// For generators v_i with sum q_i v_i = 0 (q_i > 0, gcd 1): a_i is the gcd
/// of the q_j with j != i and u_i = v_i / a_i generates Q_{>=0} v_i ∩ N.
inline std::vector<RayGenerator> ray_generators(const std::vector<IntVector>& v, const std::vector<Int>& q) {
  if (v.size() != q.size() || v.size() < 2) throw Error(ErrorKind::BadRelation, "need matching vectors and coefficients");
  const std::size_t dim = v.front().size();
  Int g = 0;
  for (const Int& qi : q) {
    if (qi <= 0) throw Error(ErrorKind::BadRelation, "relation coefficients must be positive");
    g = gcd_int(g, qi);
  }
  if (g != 1) throw Error(ErrorKind::BadRelation, "relation coefficients must be coprime");
  for (std::size_t c = 0; c < dim; ++c) {
    Int s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].size() != dim) throw Error(ErrorKind::BadRelation, "vectors of different dimension");
      s += q[i] * v[i][c];
    }
    if (s != 0) throw Error(ErrorKind::BadRelation, "sum q_i v_i is not zero");
  }

  std::vector<RayGenerator> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Int a = 0;
    for (std::size_t j = 0; j < q.size(); ++j)
      if (j != i) a = gcd_int(a, q[j]);
    IntVector u(dim);
    for (std::size_t c = 0; c < dim; ++c) {
      if (v[i][c] % a != 0) throw Error(ErrorKind::BadRelation, "v_i is not divisible by a_i");
      u[c] = v[i][c] / a;
    }
    out.push_back({a, std::move(u)});
  }
  return out;
}

/// v_0 = (-d0,-d0), v_1 = (d1,0), v_2 = (0,d2).
inline std::array<Vec2, 3> image_lattice_vectors(const GcdInvariants& g) {
  return {Vec2{-g.d0, -g.d0}, Vec2{g.d1, 0}, Vec2{0, g.d2}};
}

/// q_i = lcm(d0,d1,d2) / d_i, divided by the common gcd.
inline std::vector<Int> trinomial_relation(const GcdInvariants& g) {
  const Int l = lcm_int(lcm_int(g.d0, g.d1), g.d2);
  std::vector<Int> q{l / g.d0, l / g.d1, l / g.d2};
  const Int c = gcd_int(gcd_int(q[0], q[1]), q[2]);
  for (Int& x : q) x /= c;
  return q;
}

/// Closed form: u_0 = d d01 d02 (-1,-1), u_1 = d d01 d12 (1,0), u_2 = d d02 d12 (0,1).
inline std::array<Vec2, 3> image_generators(const GcdInvariants& g) {
  const Int c0 = Int(g.d) * g.d01 * g.d02;
  const Int c1 = Int(g.d) * g.d01 * g.d12;
  const Int c2 = Int(g.d) * g.d02 * g.d12;
  return {Vec2{-c0, -c0}, Vec2{c1, 0}, Vec2{0, c2}};
}

/// Assemble L, F, S and the derived data. Overrides are validated: L F = 0,
/// F saturated of rank n - 2 and S F = I.
inline TorusData build_torus_data(const TrinomialInput& t, const std::optional<IntMatrix>& F_override = std::nullopt,
                                  const std::optional<IntMatrix>& S_override = std::nullopt) {
  TorusData td;
  td.L = build_L(t);
  const std::size_t n = t.n();

  if (F_override) {
    const IntMatrix& F = *F_override;
    if (F.rows() != n || F.cols() != n - 2)
      throw Error(ErrorKind::BadOverride, "F must be " + std::to_string(n) + " x " + std::to_string(n - 2));
    if (!(td.L * F).is_zero()) throw Error(ErrorKind::BadOverride, "L * F != 0");
    if (!is_saturated(F)) throw Error(ErrorKind::BadOverride, "columns of F do not form a basis of ker L");
    td.F = F;
  } else {
    td.F = kernel_basis(td.L);
  }

  if (S_override) {
    const IntMatrix& S = *S_override;
    if (S.rows() != n - 2 || S.cols() != n)
      throw Error(ErrorKind::BadOverride, "S must be " + std::to_string(n - 2) + " x " + std::to_string(n));
    if (!(S * td.F == IntMatrix::identity(n - 2))) throw Error(ErrorKind::BadOverride, "S * F != identity");
    td.S = S;
  } else {
    td.S = left_inverse(td.F);
  }

  for (std::size_t k = 0; k < n; ++k) td.degrees.push_back(td.F.row(k));
  const GcdInvariants g = gcd_invariants(t);
  td.v = image_lattice_vectors(g);
  td.u = image_generators(g);
  return td;
}

}  // namespace trinom
