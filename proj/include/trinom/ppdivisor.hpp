#pragma once

// The polyhedral divisor of the complexity-one torus action on a trinomial
// hypersurface: base curve Y in P(d12, d02, d01), support divisors
// D_i = Y ∩ {w_i = 0}, coefficients Delta_i and the tail cone sigma.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trinom/convexq.hpp"
#include "trinom/downgrade.hpp"
#include "trinom/error.hpp"
#include "trinom/exactla.hpp"
#include "trinom/trinomial.hpp"

namespace trinom {

/// exp(2 pi i * exponent / order), kept in lowest terms with 0 <= exponent < order.
struct RootOfUnity {
  Int order = 1;
  Int exponent = 0;

  static RootOfUnity from_angle(const Rational& turns) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    Rational frac = turns - floor_of(turns);
    return {denominator(frac), numerator(frac)};
  }

  Rational angle() const { return Rational(exponent, order); }
  RootOfUnity pow(const Int& k) const { return from_angle(angle() * Rational(k)); }
  RootOfUnity operator*(const RootOfUnity& o) const { return from_angle(angle() + o.angle()); }

  bool is_one() const { return exponent == 0; }
  bool is_minus_one() const { return order == 2; }

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

/// A point [w0 : w1 : w2] of the weighted projective plane with exactly one
/// vanishing coordinate; the other two are roots of unity.
struct WeightedPoint {
  std::size_t zero_index = 0;
  std::array<RootOfUnity, 3> entries;  // entries[zero_index] is unused

  friend bool operator==(const WeightedPoint&, const WeightedPoint&) = default;
};

/// Point of P^1 in the rational model of a genus-0 base curve.
struct P1Point {
  enum class Kind { Zero, Infinity, Root };
  Kind kind = Kind::Zero;
  RootOfUnity root;

  static P1Point zero() { return {Kind::Zero, {}}; }
  static P1Point infinity() { return {Kind::Infinity, {}}; }
  static P1Point unit(const RootOfUnity& r) { return {Kind::Root, r}; }

  friend bool operator==(const P1Point&, const P1Point&) = default;
};

inline std::string to_string(const P1Point& p) {
  switch (p.kind) {
    case P1Point::Kind::Zero: return "0";
    case P1Point::Kind::Infinity: return "inf";
    case P1Point::Kind::Root: break;
  }
  const RootOfUnity& r = p.root;
  if (r.is_one()) return "1";
  if (r.is_minus_one()) return "-1";
  if (r.order == 4) return r.exponent == 1 ? "i" : "-i";
  return "zeta_" + r.order.str() + "^" + r.exponent.str();
}

struct BaseCurve {
  std::array<Exponent, 3> weights{};             // (d12, d02, d01)
  std::array<Exponent, 3> equation_exponents{};  // (d~/d12, d~/d02, d~/d01)
  Exponent genus = 0;
  Exponent cover_exponent = 1;                  // d~
  std::array<Exponent, 3> quotient_orders{};    // (d12, d02, d01)
  Exponent d = 1;
  Classification classification;
};

struct SupportDivisor {
  std::size_t vanishing_coordinate = 0;
  Exponent cardinality = 0;
  std::vector<WeightedPoint> points;
  std::optional<std::vector<P1Point>> p1_model;
};

struct PPTerm {
  QPolyhedron polyhedron;
  SupportDivisor support;
  bool equals_tail = false;
};

struct PPDivisor {
  BaseCurve curve;
  std::array<PPTerm, 3> terms;
  QCone tail;
  std::size_t lattice_rank = 0;
};

/// sigma = {y : F y >= 0}; the image S(Q^n_{>=0} ∩ N_Q) for any section S.
inline QCone tail_cone(const TorusData& td) {
  std::vector<IntVector> normals;
  for (std::size_t k = 0; k < td.F.rows(); ++k) normals.push_back(td.F.row(k));
  return extreme_rays(normals, td.F.cols());
}

/// Numerators c_i = d d01 d02, d d01 d12, d d02 d12 of the vertex formula
/// S((c_i / l_ij) e_k).
inline std::array<Int, 3> vertex_numerators(const GcdInvariants& g) {
  return {Int(g.d) * g.d01 * g.d02, Int(g.d) * g.d01 * g.d12, Int(g.d) * g.d02 * g.d12};
}

/// Closed-form vertex lists S((c_i / l_ij) e_k), one list per block.
inline std::array<std::vector<QVector>, 3> theorem_vertices(const TrinomialInput& t, const GcdInvariants& g,
                                                            const TorusData& td) {
  const auto c = vertex_numerators(g);
  std::array<std::vector<QVector>, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t off = t.offset(i);
    for (std::size_t j = 0; j < t.block_size(i); ++j) {
      QVector x(t.n(), Rational(0));
      x[off + j] = Rational(c[i], t.block(i)[j]);
      out[i].push_back(apply_matrix(td.S, x));
    }
  }
  return out;
}

inline BaseCurve base_curve(const GcdInvariants& g, const Classification& cls) {
  BaseCurve c;
  c.weights = {g.d12, g.d02, g.d01};
  c.quotient_orders = c.weights;
  c.cover_exponent = g.dtilde;
  for (std::size_t i = 0; i < 3; ++i) c.equation_exponents[i] = g.dtilde / c.weights[i];
  c.genus = genus_of(g);
  c.d = g.d;
  c.classification = cls;
  return c;
}

/// Whether p satisfies w0^e0 + w1^e1 + w2^e2 = 0 as a root-of-unity identity.
inline bool satisfies_curve_equation(const WeightedPoint& p, const BaseCurve& c) {
  std::vector<RootOfUnity> terms;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != p.zero_index) terms.push_back(p.entries[i].pow(c.equation_exponents[i]));
  return terms.size() == 2 && RootOfUnity::from_angle(terms[0].angle() - terms[1].angle()).is_minus_one();
}

/// Points of D_i = Y ∩ {w_i = 0}. With j < k the other two indices, each
/// point is normalized to w_j = 1 and w_k = omega with omega^{e_k} = -1;
/// omega = exp(pi i (1 + 2m) / e_k) for m = 0 .. d * weight_i - 1 are
/// representatives of the mu_{weight_j} orbits.
inline std::array<SupportDivisor, 3> support_points(const GcdInvariants& g) {
  const std::array<Exponent, 3> w{g.d12, g.d02, g.d01};
  std::array<SupportDivisor, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = i == 0 ? 1 : 0;
    const std::size_t k = i == 2 ? 1 : 2;
    const Exponent ek = g.dtilde / w[k];
    SupportDivisor& D = out[i];
    D.vanishing_coordinate = i;
    D.cardinality = g.d * w[i];
    for (Exponent m = 0; m < D.cardinality; ++m) {
      WeightedPoint p;
      p.zero_index = i;
      p.entries[j] = RootOfUnity{};
      p.entries[k] = RootOfUnity::from_angle(Rational(1 + 2 * m, 2 * ek));
      D.points.push_back(p);
    }
  }
  return out;
}

/// Support points on P^1 for a rational base curve. Factorial: {0}, {1},
/// {inf}. Type I(s): the s-th roots of unity for the block carrying s
/// points, {0} and {inf} for the other two in block order. Type II:
/// {1, -1}, {i, -i}, {0, inf}.
inline std::array<std::vector<P1Point>, 3> rational_model(const BaseCurve& curve) {
  const Classification& cls = curve.classification;
  switch (cls.tag) {
    case RationalType::FactorialRational:
      return {std::vector{P1Point::zero()}, std::vector{P1Point::unit({})}, std::vector{P1Point::infinity()}};
    case RationalType::TypeI: {
      std::array<std::vector<P1Point>, 3> out;
      bool first = true;
      for (std::size_t i = 0; i < 3; ++i) {
        if (i == cls.special_block) {
          for (Exponent k = 0; k < cls.s; ++k) out[i].push_back(P1Point::unit(RootOfUnity::from_angle(Rational(k, cls.s))));
        } else {
          out[i].push_back(first ? P1Point::zero() : P1Point::infinity());
          first = false;
        }
      }
      return out;
    }
    case RationalType::TypeII:
      return {std::vector{P1Point::unit({}), P1Point::unit({2, 1})},
              std::vector{P1Point::unit({4, 1}), P1Point::unit({4, 3})},
              std::vector{P1Point::zero(), P1Point::infinity()}};
    case RationalType::NonRational: break;
  }
  throw Error(ErrorKind::NotRational, "base curve has genus " + std::to_string(curve.genus));
}

inline PPDivisor compute_ppdivisor(const TrinomialInput& t, const std::optional<IntMatrix>& F_override = std::nullopt,
                                   const std::optional<IntMatrix>& S_override = std::nullopt) {
  const GcdInvariants g = gcd_invariants(t);
  const Classification cls = classify(g, t);
  const TorusData td = build_torus_data(t, F_override, S_override);

  PPDivisor dv;
  dv.lattice_rank = td.rank();
  dv.tail = tail_cone(td);
  dv.curve = base_curve(g, cls);
  auto supports = support_points(g);
  if (dv.curve.genus == 0) {
    auto model = rational_model(dv.curve);
    for (std::size_t i = 0; i < 3; ++i) supports[i].p1_model = std::move(model[i]);
  }
  auto vertices = theorem_vertices(t, g, td);
  for (std::size_t i = 0; i < 3; ++i) {
    PPTerm& term = dv.terms[i];
    term.polyhedron = normalize_polyhedron(std::move(vertices[i]), dv.tail);
    term.support = std::move(supports[i]);
    term.equals_tail = term.polyhedron.equals_recession();
  }
  return dv;
}

/// Replace the vertex set of one coefficient, keeping the tail cone.
inline PPDivisor with_coefficient(PPDivisor dv, std::size_t i, std::vector<QVector> vertices) {
  dv.terms.at(i).polyhedron = normalize_polyhedron(std::move(vertices), dv.tail);
  dv.terms[i].equals_tail = dv.terms[i].polyhedron.equals_recession();
  return dv;
}

struct Evaluation {
  std::array<Rational, 3> coefficients;
  Rational degree;
  Int floor_degree;
};

inline bool in_dual_cone(const QCone& tail, const IntVector& u) {
  for (const IntVector& r : tail.rays)
    if (dot_int(r, u) < 0) return false;
  for (const IntVector& l : tail.lineality)
    if (dot_int(l, u) != 0) return false;
  return true;
}

/// D(u) = sum_i min_{v in Delta_i} <u, v> D_i, with its degree and the
/// degree of its round-down.
inline Evaluation evaluate(const PPDivisor& dv, const IntVector& u) {
  if (u.size() != dv.lattice_rank) throw Error(ErrorKind::DimensionMismatch, "u has the wrong dimension");
  if (!in_dual_cone(dv.tail, u)) throw Error(ErrorKind::OutsideDualCone, "u is negative on a tail ray");
  Evaluation e;
  e.degree = 0;
  e.floor_degree = 0;
  const QVector uq = to_qvector(u);
  for (std::size_t i = 0; i < 3; ++i) {
    e.coefficients[i] = min_linear(dv.terms[i].polyhedron, uq);
    const Int card = dv.terms[i].support.cardinality;
    e.degree += e.coefficients[i] * Rational(card);
    e.floor_degree += boost::multiprecision::numerator(floor_of(e.coefficients[i])) * card;
  }
  return e;
}

/// Degree-based check on the curve: deg D(u) >= 0 on the rays of the dual
/// tail cone, deg D(u) > 0 at their sum (a relative interior point). This is
/// not a full semiampleness certificate: a degree-zero class on a curve of
/// positive genus is semiample only if torsion.
struct ProperReport {
  std::vector<std::pair<IntVector, Rational>> ray_degrees;
  IntVector relint_sample;
  Rational relint_degree;
  bool semiample_ok = false;
  bool big_ok = false;

  bool proper() const { return semiample_ok && big_ok; }
};

inline ProperReport properness_report(const PPDivisor& dv) {
  ProperReport rep;
  const QCone dual = dual_cone(dv.tail);
  rep.relint_sample.assign(dv.lattice_rank, Int(0));
  rep.semiample_ok = true;
  for (const IntVector& r : dual.rays) {
    const Evaluation e = evaluate(dv, r);
    rep.ray_degrees.emplace_back(r, e.degree);
    if (e.degree < 0) rep.semiample_ok = false;
    for (std::size_t c = 0; c < r.size(); ++c) rep.relint_sample[c] += r[c];
  }
  rep.relint_degree = evaluate(dv, rep.relint_sample).degree;
  rep.big_ok = rep.relint_degree > 0;
  return rep;
}

/// Pham-Brieskorn surface x0^d0 + x1^d1 + x2^d2 = 0: F is the column
/// f = (D/d0, D/d1, D/d2) with D = lcm(d0, d1, d2), so sigma = Q_{>=0},
/// and S is the row s with <f, s> = 1 (canonical when not supplied).
inline PPDivisor pham_brieskorn(Exponent d0, Exponent d1, Exponent d2,
                                const std::optional<std::array<Exponent, 3>>& s = std::nullopt) {
  const TrinomialInput t = validate({ExponentBlock{d0}, ExponentBlock{d1}, ExponentBlock{d2}});
  const Int l = lcm_int(lcm_int(d0, d1), d2);
  IntMatrix F(3, 1);
  F(0, 0) = l / d0;
  F(1, 0) = l / d1;
  F(2, 0) = l / d2;
  IntMatrix S(1, 3);
  if (s) {
    for (std::size_t i = 0; i < 3; ++i) S(0, i) = (*s)[i];
  } else {
    S = left_inverse(F);
  }
  return compute_ppdivisor(t, F, S);
}

}  // namespace trinom
