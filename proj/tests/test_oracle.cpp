#include <gtest/gtest.h>

#include "support.hpp"
#include "trinom/oracle.hpp"

using namespace trinom;
using trinom::samples::iv;

TEST(HilbertDim, FactorialExample) {
  const auto fx = samples::factorial_fixture();
  const TorusData td = build_torus_data(fx.input, fx.F, fx.S);
  EXPECT_EQ(hilbert_dim(fx.input, td, iv({0, 0})), 1);
  EXPECT_EQ(hilbert_dim(fx.input, td, iv({5, 0})), 1);
  EXPECT_EQ(hilbert_dim(fx.input, td, iv({15, 0})), 2);
  EXPECT_EQ(HilbertCounter(fx.input, td).monomial_count(iv({15, 0})), 3);
}

TEST(HilbertDim, ZeroOutsideDualCone) {
  for (const auto& fx : samples::all_fixtures()) {
    const TorusData td = build_torus_data(fx.input, fx.F, fx.S);
    const PPDivisor dv = compute_ppdivisor(fx.input, fx.F, fx.S);
    const HilbertCounter counter(fx.input, td);
    const QCone dual = dual_cone(dv.tail);
    // step off each dual ray, at a few distances
    for (const IntVector& r : dual.rays)
      for (long k = 1; k <= 4; ++k)
        for (long j = 1; j <= 3; ++j) {
          IntVector m = r;
          for (Int& x : m) x *= k;
          if (dv.lattice_rank == 1) {
            m[0] = -m[0] * j;
          } else {
            // rotate r by 90 degrees towards the outside
            IntVector out{-r[1], r[0]};
            if (dot_int(out, dual.rays[0] == r ? dual.rays[1] : dual.rays[0]) > 0) out = {r[1], -r[0]};
            for (std::size_t c = 0; c < 2; ++c) m[c] += out[c] * j;
          }
          ASSERT_FALSE(in_dual_cone(dv.tail, m)) << fx.name;
          EXPECT_EQ(counter.hilbert_dim(m), 0) << fx.name;
        }
  }
}

TEST(HilbertDim, LeadingBlockIndependence) {
  for (const auto& fx : samples::all_fixtures()) {
    const TorusData td = build_torus_data(fx.input, fx.F, fx.S);
    const HilbertCounter counter(fx.input, td);
    const long b = 6;
    for (long x = -b; x <= b; ++x)
      for (long y = -b; y <= b; ++y) {
        const IntVector m = td.rank() == 1 ? iv({x}) : iv({x, y});
        const Int h0 = counter.hilbert_dim(m, 0);
        EXPECT_EQ(counter.hilbert_dim(m, 1), h0) << fx.name;
        EXPECT_EQ(counter.hilbert_dim(m, 2), h0) << fx.name;
      }
  }
}

TEST(SectionDim, Policies) {
  EXPECT_EQ(section_dim_from_floor(0, 0), 1);
  EXPECT_EQ(section_dim_from_floor(0, -2), 0);
  EXPECT_EQ(section_dim_from_floor(0, 4), 5);
  EXPECT_EQ(section_dim_from_floor(1, 3), 3);
  EXPECT_EQ(section_dim_from_floor(1, -1), 0);
  EXPECT_FALSE(section_dim_from_floor(1, 0).has_value());
  EXPECT_FALSE(section_dim_from_floor(2, 5).has_value());
}

TEST(SectionDim, MonotoneInFloorDegree) {
  for (Exponent genus : {0, 1})
    for (long f = -5; f < 10; ++f) {
      const auto a = section_dim_from_floor(genus, f), b = section_dim_from_floor(genus, f + 1);
      if (a && b) {
        EXPECT_LE(*a, *b);
      }
    }
}

TEST(SectionDim, Examples) {
  const auto fx = samples::factorial_fixture();
  const PPDivisor dv = compute_ppdivisor(fx.input, fx.F, fx.S);
  EXPECT_EQ(section_dim(dv, iv({5, 0})), 1);
  EXPECT_EQ(section_dim(dv, iv({0, 0})), 1);
  const PPDivisor pb = pham_brieskorn(2, 3, 6, std::array<Exponent, 3>{1, -1, 0});
  EXPECT_EQ(section_dim(pb, iv({1})), 1);
  EXPECT_EQ(hilbert_dim(samples::pham_brieskorn_fixture().input,
                        build_torus_data(samples::pham_brieskorn_fixture().input, samples::pham_brieskorn_fixture().F,
                                         samples::pham_brieskorn_fixture().S),
                        iv({1})),
            1);
}

TEST(Verify, FixturesAgree) {
  for (const auto& fx : {samples::factorial_fixture(), samples::type2_fixture(), samples::type1_fixture()}) {
    const VerifyReport r = verify_equality(fx.input, fx.F, fx.S, 8);
    EXPECT_TRUE(r.passed()) << fx.name;
    EXPECT_TRUE(r.skipped.empty()) << fx.name;
    EXPECT_GT(r.checked, 0u) << fx.name;
  }
}

TEST(Verify, GenusOneSkipsDegreeZeroFloors) {
  const auto fx = samples::pham_brieskorn_fixture();
  const VerifyReport r = verify_equality(fx.input, fx.F, fx.S, 12);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.skipped, (std::vector<IntVector>{iv({0})}));
  EXPECT_EQ(r.checked, 12u);
}

TEST(Verify, ShrunkenTypeOneCoefficientsDisagree) {
  const auto fx = samples::type1_fixture();
  const TorusData td = build_torus_data(fx.input, fx.F, fx.S);
  PPDivisor dv = compute_ppdivisor(fx.input, fx.F, fx.S);
  dv = with_coefficient(dv, 1, {samples::qv({samples::q(-1, 3), 0})});
  dv = with_coefficient(dv, 2, {samples::qv({0, 0}), samples::qv({0, samples::q(1, 3)})});
  EXPECT_FALSE(verify_divisor(fx.input, td, dv, 6).passed());
}
