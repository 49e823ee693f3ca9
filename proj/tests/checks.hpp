#pragma once

// Checks shared by the property tests and the acceptance runner. Each returns
// an empty string on success and a description of the failure otherwise.

#include <sstream>
#include <string>

#include "trinom/downgrade.hpp"
#include "trinom/ppdivisor.hpp"
#include "trinom/report.hpp"
#include "trinom/trinomial.hpp"

namespace trinom::samples {

/// Closed-form vertices against the vertices of the fibers L^-1(u_i) ∩ Q^n_{>=0}.
inline std::string theorem_matches_fibers(const TrinomialInput& t) {
  const GcdInvariants g = gcd_invariants(t);
  const TorusData td = build_torus_data(t);
  const QCone sigma = tail_cone(td);
  const auto theorem = theorem_vertices(t, g, td);
  for (std::size_t i = 0; i < 3; ++i) {
    const QVector u{Rational(td.u[i][0]), Rational(td.u[i][1])};
    const QPolyhedron a = normalize_polyhedron(theorem[i], sigma);
    const QPolyhedron b = normalize_polyhedron(fiber_vertices(td.L, u, td.S), sigma);
    if (!(a == b)) {
      std::ostringstream os;
      os << input_json(t).dump() << " block " << i << ": formula " << coefficient_text(a) << ", fiber "
         << coefficient_text(b);
      return os.str();
    }
  }
  return {};
}

inline std::string lattice_identities(const TrinomialInput& t) {
  const TorusData td = build_torus_data(t);
  const std::string where = input_json(t).dump();
  if (td.F.rows() != t.n() || td.F.cols() != t.n() - 2) return where + ": F has the wrong shape";
  if (!(td.L * td.F).is_zero()) return where + ": L F != 0";
  if (!(td.S * td.F == IntMatrix::identity(t.n() - 2))) return where + ": S F != I";
  const SmithForm s = smith_normal_form(td.F);
  if (s.rank != t.n() - 2) return where + ": F is rank deficient";
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.D(i, i) != 1) return where + ": F has invariant factor " + s.D(i, i).str();
  return {};
}

/// genus >= 0 and genus 0 exactly under the Type I / Type II conditions.
inline std::string classification_consistent(Exponent d0, Exponent d1, Exponent d2) {
  const GcdInvariants g = invariants_from_block_gcds(d0, d1, d2);
  std::ostringstream where;
  where << "(" << d0 << "," << d1 << "," << d2 << ")";
  Exponent genus = 0;
  try {
    genus = genus_of(g);
  } catch (const Error& e) {
    return where.str() + ": " + e.what();
  }
  if (genus < 0) return where.str() + ": negative genus";
  const int ones = (g.d01 == 1) + (g.d02 == 1) + (g.d12 == 1);
  const bool type1 = g.d == 1 && ones >= 2;
  const bool type2 = g.d == 2 && ones == 3;
  if ((genus == 0) != (type1 || type2)) return where.str() + ": genus " + std::to_string(genus) + " vs type conditions";
  const Classification c = classify_invariants(g);
  if ((c.tag == RationalType::NonRational) != (genus != 0)) return where.str() + ": tag disagrees with genus";
  if (c.tag == RationalType::FactorialRational && !(g.d == 1 && ones == 3))
    return where.str() + ": factorial with nontrivial gcds";
  return {};
}

}  // namespace trinom::samples
