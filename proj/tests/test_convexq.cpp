#include <gtest/gtest.h>

#include "support.hpp"
#include "trinom/convexq.hpp"

using namespace trinom;
using trinom::samples::iv;
using trinom::samples::q;
using trinom::samples::qv;

TEST(Rationals, NegativeDenominatorAndPrinting) {
  EXPECT_EQ(ratio(Int(3), Int(-6)), q(-1, 2));
  EXPECT_EQ(to_string(q(-3, 5)), "-3/5");
  EXPECT_EQ(to_string(q(4, 2)), "2");
  EXPECT_EQ(floor_of(q(-1, 3)), -1);
  EXPECT_EQ(floor_of(q(7, 3)), 2);
}

TEST(Primitive, IntegerAndRationalVectors) {
  EXPECT_EQ(primitive(iv({4, -6, 0})), iv({2, -3, 0}));
  EXPECT_EQ(primitive(qv({q(1, 2), q(-1, 3)})), iv({3, -2}));
}

TEST(ExtremeRays, TailConeOfFactorialExample) {
  // rows of F as inequalities
  const QCone c = extreme_rays({iv({5, 0}), iv({3, 0}), iv({0, 1}), iv({15, -1})}, 2);
  EXPECT_TRUE(c.is_pointed());
  EXPECT_EQ(c.rays, (std::vector<IntVector>{iv({1, 0}), iv({1, 15})}));
}

TEST(ExtremeRays, HalfPlaneHasLineality) {
  const QCone c = extreme_rays({iv({1, 0})}, 2);
  EXPECT_FALSE(c.is_pointed());
  EXPECT_EQ(c.rays, (std::vector<IntVector>{iv({1, 0})}));
  EXPECT_EQ(c.lineality.size(), 1u);
}

TEST(ExtremeRays, PositiveOrthantIn3D) {
  const QCone c = extreme_rays({iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})}, 3);
  EXPECT_EQ(c.rays.size(), 3u);
}

TEST(DualCone, RaysAndContainment) {
  const QCone sigma = cone_from_rays({iv({1, 0}), iv({1, 15})}, 2);
  const QCone dual = dual_cone(sigma);
  EXPECT_EQ(dual.rays, (std::vector<IntVector>{iv({0, 1}), iv({15, -1})}));
  EXPECT_TRUE(dual.contains(qv({15, 0})));
  EXPECT_FALSE(dual.contains(qv({0, -1})));
  EXPECT_EQ(dual_cone(dual), sigma);
}

TEST(Polyhedron, NormalizeDropsDominatedPoints) {
  const QCone sigma = cone_from_rays({iv({1, 0}), iv({1, 15})}, 2);
  const QPolyhedron p = normalize_polyhedron({qv({2, 0}), qv({0, 0}), qv({0, 1}), qv({0, 0})}, sigma);
  EXPECT_EQ(p.vertices, (std::vector<QVector>{qv({0, 0}), qv({0, 1})}));
  EXPECT_FALSE(p.equals_recession());
  EXPECT_TRUE(normalize_polyhedron({qv({0, 0})}, sigma).equals_recession());
}

TEST(Polyhedron, EmptyInput) {
  const QCone sigma = cone_from_rays({iv({1})}, 1);
  try {
    normalize_polyhedron({}, sigma);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyInput);
  }
}

TEST(MinLinear, VertexMinimumAndUnbounded) {
  const QCone sigma = cone_from_rays({iv({1, 0}), iv({1, 15})}, 2);
  const QPolyhedron p = normalize_polyhedron({qv({0, 0}), qv({0, 1})}, sigma);
  EXPECT_EQ(min_linear(p, qv({15, -1})), -1);
  EXPECT_EQ(min_linear(p, qv({0, 1})), 0);
  try {
    min_linear(p, qv({-1, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Unbounded);
  }
}

TEST(FiberVertices, FactorialExample) {
  const IntMatrix L{{-3, 5, 0, 0}, {-3, 0, 1, 1}};
  const IntMatrix S{{2, -3, 0, 0}, {0, 0, 1, 0}};
  EXPECT_EQ(fiber_vertices(L, qv({-1, -1}), S), (std::vector<QVector>{qv({q(2, 3), 0})}));
  EXPECT_EQ(fiber_vertices(L, qv({1, 0}), S), (std::vector<QVector>{qv({q(-3, 5), 0})}));
  EXPECT_EQ(fiber_vertices(L, qv({0, 1}), S), (std::vector<QVector>{qv({0, 0}), qv({0, 1})}));
}

TEST(FiberVertices, EmptyFiber) {
  const IntMatrix I{{1, 0}, {0, 1}};
  try {
    fiber_vertices(I, qv({-1, 0}), I);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyFiber);
  }
}
