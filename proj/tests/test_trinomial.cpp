#include <gtest/gtest.h>

#include "support.hpp"
#include "trinom/trinomial.hpp"

using namespace trinom;

namespace {

ErrorKind kind_of(const std::array<ExponentBlock, 3>& blocks) {
  try {
    validate(blocks);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST(Validate, RejectsMalformedBlocks) {
  EXPECT_EQ(kind_of({ExponentBlock{}, ExponentBlock{2}, ExponentBlock{2}}), ErrorKind::EmptyBlock);
  EXPECT_EQ(kind_of({ExponentBlock{2}, ExponentBlock{0}, ExponentBlock{2}}), ErrorKind::ZeroExponent);
  EXPECT_EQ(kind_of({ExponentBlock{2}, ExponentBlock{-3}, ExponentBlock{2}}), ErrorKind::ZeroExponent);
  EXPECT_EQ(kind_of({ExponentBlock{2}, ExponentBlock{3}, ExponentBlock{1}}), ErrorKind::LinearTerm);
}

TEST(Validate, AcceptsLinearFactorsInLargerBlocks) {
  const TrinomialInput t = validate({ExponentBlock{3}, ExponentBlock{5}, ExponentBlock{1, 1}});
  EXPECT_EQ(t.n(), 4u);
  EXPECT_EQ(t.offset(2), 2u);
  EXPECT_EQ(t.block_of(3), 2u);
  EXPECT_FALSE(t.is_pham_brieskorn());
}

TEST(Invariants, FactorialExample) {
  const GcdInvariants g = gcd_invariants(samples::factorial_fixture().input);
  EXPECT_EQ(g.d0, 3);
  EXPECT_EQ(g.d1, 5);
  EXPECT_EQ(g.d2, 1);
  EXPECT_EQ(g.d, 1);
  EXPECT_EQ(g.dtilde, 1);
  const Classification c = classify(g, samples::factorial_fixture().input);
  EXPECT_EQ(c.tag, RationalType::FactorialRational);
  EXPECT_EQ(c.genus, 0);
}

TEST(Invariants, TypeOneExample) {
  const TrinomialInput t = samples::type1_fixture().input;
  const GcdInvariants g = gcd_invariants(t);
  EXPECT_EQ(g.d, 1);
  EXPECT_EQ(g.d01, 1);
  EXPECT_EQ(g.d02, 1);
  EXPECT_EQ(g.d12, 3);
  EXPECT_EQ(g.dtilde, 3);
  const Classification c = classify(g, t);
  EXPECT_EQ(c.tag, RationalType::TypeI);
  EXPECT_EQ(c.s, 3);
  EXPECT_EQ(c.special_block, 0u);
  EXPECT_EQ(c.genus, 0);
}

TEST(Invariants, TypeTwoExample) {
  const GcdInvariants g = gcd_invariants(samples::type2_fixture().input);
  EXPECT_EQ(g.d, 2);
  EXPECT_EQ(g.d01, 1);
  EXPECT_EQ(g.d02, 1);
  EXPECT_EQ(g.d12, 1);
  EXPECT_EQ(classify_invariants(g).tag, RationalType::TypeII);
  EXPECT_EQ(genus_of(g), 0);
}

TEST(Invariants, GenusOneCurves) {
  for (const auto& fx : {samples::pham_brieskorn_fixture(), samples::nonrational_fixture()}) {
    const GcdInvariants g = gcd_invariants(fx.input);
    EXPECT_EQ(g.d02, 2) << fx.name;
    EXPECT_EQ(g.d12, 3) << fx.name;
    EXPECT_EQ(g.dtilde, 6) << fx.name;
    const Classification c = classify(g, fx.input);
    EXPECT_EQ(c.tag, RationalType::NonRational) << fx.name;
    EXPECT_EQ(c.genus, 1) << fx.name;
  }
  EXPECT_TRUE(classify(gcd_invariants(samples::pham_brieskorn_fixture().input), samples::pham_brieskorn_fixture().input)
                  .pham_brieskorn);
}

TEST(Invariants, HighGenusFermatCurve) {
  // x^5 + y^5 + z^5: plane quintic
  const GcdInvariants g = invariants_from_block_gcds(5, 5, 5);
  EXPECT_EQ(g.d, 5);
  EXPECT_EQ(genus_of(g), 6);
}

TEST(BuildL, BlockLayout) {
  const IntMatrix L = build_L(samples::nonrational_fixture().input);
  EXPECT_EQ(L, (IntMatrix{{-2, 3, 0, 0}, {-2, 0, 6, 6}}));
}
