#include <gtest/gtest.h>

#include "support.hpp"
#include "trinom/exactla.hpp"

using namespace trinom;
using trinom::samples::iv;

namespace {

bool is_diagonal_chain(const SmithForm& s) {
  const IntMatrix& D = s.D;
  for (std::size_t i = 0; i < D.rows(); ++i)
    for (std::size_t j = 0; j < D.cols(); ++j)
      if (i != j && D(i, j) != 0) return false;
  for (std::size_t i = 0; i + 1 < s.rank; ++i)
    if (D(i + 1, i + 1) % D(i, i) != 0) return false;
  return true;
}

}  // namespace

TEST(SmithForm, KnownInvariantFactors) {
  const IntMatrix A{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const SmithForm s = smith_normal_form(A);
  EXPECT_EQ(s.U * A * s.V, s.D);
  EXPECT_EQ(s.rank, 3u);
  EXPECT_EQ(s.D(0, 0), 2);
  EXPECT_EQ(s.D(1, 1), 6);
  EXPECT_EQ(s.D(2, 2), 12);
  EXPECT_TRUE(is_diagonal_chain(s));
  EXPECT_EQ(abs_int(determinant(s.U)), 1);
  EXPECT_EQ(abs_int(determinant(s.V)), 1);
}

TEST(SmithForm, ZeroAndRectangular) {
  const SmithForm z = smith_normal_form(IntMatrix(2, 3));
  EXPECT_EQ(z.rank, 0u);
  const IntMatrix L{{-3, 5, 0, 0}, {-3, 0, 1, 1}};
  const SmithForm s = smith_normal_form(L);
  EXPECT_EQ(s.U * L * s.V, s.D);
  EXPECT_EQ(s.rank, 2u);
  EXPECT_EQ(s.D(0, 0), 1);
  EXPECT_EQ(s.D(1, 1), 1);
}

TEST(HermiteForm, RowEchelonWithReducedEntries) {
  const IntMatrix A{{4, 6, 2}, {2, 3, 7}, {6, 9, 9}};
  const IntMatrix H = row_hermite_form(A);
  ASSERT_EQ(H.rows(), 2u);  // third row is a combination
  EXPECT_EQ(H, (IntMatrix{{2, 3, 7}, {0, 0, 12}}));
}

TEST(KernelBasis, CanonicalBasisOfTrinomialMatrix) {
  const IntMatrix L{{-3, 5, 0, 0}, {-3, 0, 1, 1}};
  const IntMatrix F = kernel_basis(L);
  EXPECT_EQ(F, (IntMatrix{{5, 0}, {3, 0}, {0, 1}, {15, -1}}));
  EXPECT_TRUE((L * F).is_zero());
  EXPECT_TRUE(is_saturated(F));
}

TEST(KernelBasis, RankDeficientRows) {
  const IntMatrix A{{1, 2, 3}, {2, 4, 6}};
  try {
    kernel_basis(A);
    FAIL() << "expected RankDeficient";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RankDeficient);
  }
}

TEST(KernelBasis, FullRankSquareHasEmptyKernel) {
  EXPECT_EQ(kernel_basis(IntMatrix{{1, 0}, {0, 1}}).cols(), 0u);
}

TEST(LeftInverse, CanonicalSection) {
  const IntMatrix F{{5, 0}, {3, 0}, {0, 1}, {15, -1}};
  const IntMatrix S = left_inverse(F);
  EXPECT_EQ(S * F, IntMatrix::identity(2));
  EXPECT_EQ(S, (IntMatrix{{2, 2, -1, -1}, {0, 0, 1, 0}}));
}

TEST(LeftInverse, NonSaturatedColumn) {
  try {
    left_inverse(IntMatrix{{2}, {4}});
    FAIL() << "expected NotPrimitive";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrimitive);
  }
}

TEST(Lattice, Membership) {
  const IntMatrix G{{2, 0}, {0, 3}};
  EXPECT_TRUE(in_lattice(G, iv({4, -3})));
  EXPECT_FALSE(in_lattice(G, iv({1, 3})));
  EXPECT_FALSE(in_lattice(IntMatrix{{1}, {1}}, iv({1, 2})));
}

TEST(Lattice, Saturation) {
  EXPECT_TRUE(is_saturated(IntMatrix{{1, 0}, {0, 1}, {5, 7}}));
  EXPECT_FALSE(is_saturated(IntMatrix{{2, 0}, {0, 1}, {4, 1}}));
  EXPECT_FALSE(is_saturated(IntMatrix{{1, 2}, {1, 2}}));
}

TEST(Determinant, Bareiss) {
  EXPECT_EQ(determinant(IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}), 4);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(IntMatrix{{1, 2}, {2, 4}}), 0);
}

TEST(IntegerHelpers, FloorDivisionAndGcd) {
  EXPECT_EQ(floor_div(Int(-7), Int(2)), -4);
  EXPECT_EQ(floor_div(Int(7), Int(-2)), -4);
  EXPECT_EQ(floor_div(Int(6), Int(3)), 2);
  EXPECT_EQ(gcd_int(Int(-12), Int(18)), 6);
  EXPECT_EQ(lcm_int(Int(4), Int(6)), 12);
}
