#pragma once

// Brute-force check of the graded pieces of K[X] against the section spaces
// of D(m) on the base curve.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "trinom/convexq.hpp"
#include "trinom/downgrade.hpp"
#include "trinom/exactla.hpp"
#include "trinom/ppdivisor.hpp"
#include "trinom/trinomial.hpp"

namespace trinom {

/// Counts monomials of a given M-degree in K[T] and standard monomials of
/// K[T]/(T0^l0 + T1^l1 + T2^l2).
///
/// The integer solutions of F^T a = m form the affine lattice S^T m + K Z^2,
/// K a basis of ker F^T. Since the rows of L span a plane that meets the
/// positive orthant only at 0, the polygon {z : S^T m + K z >= 0} is bounded
/// and is scanned row by row.
class HilbertCounter {
 public:
  HilbertCounter(const TrinomialInput& t, const TorusData& td)
      : input_(t), FT_(td.F.transposed()), ST_(td.S.transposed()), K_(kernel_basis(td.F.transposed())) {
    if (K_.cols() != 2) throw Error(ErrorKind::InternalInconsistency, "grading kernel is not two-dimensional");
  }

  /// dim K[X]_m: monomials of degree m not divisible by T_b^{l_b}, b = leading_block.
  Int hilbert_dim(const IntVector& m, std::size_t leading_block = 0) const {
    const IntVector lead = input_.monomial_exponents(leading_block);
    Int count = 0;
    for_each_monomial(m, [&](const IntVector& a) {
      for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] < lead[k]) {
          ++count;
          return;
        }
    });
    return count;
  }

  /// Number of monomials of degree m in the polynomial ring.
  Int monomial_count(const IntVector& m) const {
    Int count = 0;
    for_each_monomial(m, [&](const IntVector&) { ++count; });
    return count;
  }

  template <class Fn>
  void for_each_monomial(const IntVector& m, Fn&& fn) const {
    if (m.size() != FT_.rows()) throw Error(ErrorKind::DimensionMismatch, "degree has the wrong dimension");
    const std::size_t n = K_.rows();
    const IntVector base = ST_ * m;

    // polygon K z >= -base; its vertices bound the scan in z0
    std::optional<Rational> lo, hi;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Int det = K_(i, 0) * K_(j, 1) - K_(i, 1) * K_(j, 0);
        if (det == 0) continue;
        const Int bi = -base[i], bj = -base[j];
        const Int num0 = bi * K_(j, 1) - K_(i, 1) * bj;
        const Int num1 = K_(i, 0) * bj - bi * K_(j, 0);
        const Rational z0 = ratio(num0, det), z1 = ratio(num1, det);
        bool feasible = true;
        for (std::size_t k = 0; k < n && feasible; ++k)
          feasible = Rational(K_(k, 0)) * z0 + Rational(K_(k, 1)) * z1 + Rational(base[k]) >= 0;
        if (!feasible) continue;
        if (!lo || z0 < *lo) lo = z0;
        if (!hi || z0 > *hi) hi = z0;
      }
    if (!lo) return;

    IntVector a(n);
    const Int z0_end = boost::multiprecision::numerator(floor_of(*hi));
    for (Int z0 = -boost::multiprecision::numerator(floor_of(-*lo)); z0 <= z0_end; ++z0) {
      std::optional<Int> z1_lo, z1_hi;
      bool empty = false;
      for (std::size_t k = 0; k < n && !empty; ++k) {
        const Int rest = base[k] + K_(k, 0) * z0;  // rest + K_k1 z1 >= 0
        const Int& c = K_(k, 1);
        if (c == 0) {
          empty = rest < 0;
        } else if (c > 0) {
          const Int bound = -floor_div(rest, c);  // ceil(-rest / c)
          if (!z1_lo || bound > *z1_lo) z1_lo = bound;
        } else {
          const Int bound = floor_div(rest, -c);
          if (!z1_hi || bound < *z1_hi) z1_hi = bound;
        }
      }
      if (empty || !z1_lo || !z1_hi) continue;
      for (Int z1 = *z1_lo; z1 <= *z1_hi; ++z1) {
        for (std::size_t k = 0; k < n; ++k) a[k] = base[k] + K_(k, 0) * z0 + K_(k, 1) * z1;
        fn(a);
      }
    }
  }

 private:
  TrinomialInput input_;
  IntMatrix FT_;
  IntMatrix ST_;
  IntMatrix K_;
};

inline Int hilbert_dim(const TrinomialInput& t, const TorusData& td, const IntVector& m, std::size_t leading_block = 0) {
  return HilbertCounter(t, td).hilbert_dim(m, leading_block);
}

/// h^0 of D(m) on the base curve from the degree of its round-down. Genus 0:
/// max(0, deg + 1). Genus 1: deg when deg >= 1, 0 when negative, undefined
/// for degree 0 (principality is not decided). Higher genus: undefined.
inline std::optional<Int> section_dim_from_floor(Exponent genus, const Int& floor_degree) {
  if (genus == 0) return floor_degree >= 0 ? Int(floor_degree + 1) : Int(0);
  if (genus == 1) {
    if (floor_degree >= 1) return floor_degree;
    if (floor_degree < 0) return Int(0);
    return std::nullopt;
  }
  return std::nullopt;
}

inline std::optional<Int> section_dim(const PPDivisor& dv, const IntVector& m) {
  return section_dim_from_floor(dv.curve.genus, evaluate(dv, m).floor_degree);
}

struct Mismatch {
  IntVector degree;
  Int hilbert;
  Int sections;
};

struct VerifyReport {
  std::size_t checked = 0;
  std::vector<Mismatch> mismatches;
  std::vector<IntVector> skipped;

  bool passed() const { return mismatches.empty(); }
};

/// Compare hilbert_dim and section_dim at every m in sigma^dual ∩ M with
/// all |m_i| <= bound. Degrees are visited in lexicographic order.
inline VerifyReport verify_divisor(const TrinomialInput& t, const TorusData& td, const PPDivisor& dv, long bound) {
  const HilbertCounter counter(t, td);
  const std::size_t r = dv.lattice_rank;
  VerifyReport rep;
  IntVector m(r, Int(-bound));
  for (;;) {
    if (in_dual_cone(dv.tail, m)) {
      const std::optional<Int> sections = section_dim(dv, m);
      if (!sections) {
        rep.skipped.push_back(m);
      } else {
        ++rep.checked;
        const Int h = counter.hilbert_dim(m);
        if (h != *sections) rep.mismatches.push_back({m, h, *sections});
      }
    }
    std::size_t c = r;
    while (c > 0 && m[c - 1] == bound) m[--c] = -bound;
    if (c == 0) break;
    ++m[c - 1];
  }
  return rep;
}

inline VerifyReport verify_equality(const TrinomialInput& t, const std::optional<IntMatrix>& F_override,
                                    const std::optional<IntMatrix>& S_override, long bound) {
  const TorusData td = build_torus_data(t, F_override, S_override);
  return verify_divisor(t, td, compute_ppdivisor(t, F_override, S_override), bound);
}

}  // namespace trinom
