#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "gut/error.hpp"
#include "gut/interval.hpp"
#include "support/generators.hpp"

namespace gut {
namespace {

void expect_interval(const GUInterval& actual, double left, double right, double tol = 1e-12) {
  EXPECT_NEAR(actual.left(), left, tol);
  EXPECT_NEAR(actual.right(), right, tol);
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected gut::Error";
  return ErrorKind::Domain;
}

TEST(GUInterval, KeepsOrientationAsGiven) {
  const GUInterval proper(0.1, 0.2);
  EXPECT_TRUE(proper.is_proper());
  EXPECT_TRUE(proper.is_measure_valid());

  const GUInterval inv(0.9, 0.8);
  EXPECT_TRUE(inv.is_inverse());
  EXPECT_EQ(inv.left(), 0.9);
  EXPECT_EQ(inv.right(), 0.8);
  EXPECT_FALSE(inv.is_measure_valid());

  EXPECT_FALSE(GUInterval(0.5, 1.5).is_measure_valid());
}

TEST(GUInterval, RejectsNonFinite) {
  EXPECT_EQ(kind_of([] { GUInterval(std::nan(""), 0.5); }), ErrorKind::Construction);
  EXPECT_EQ(kind_of([] { GUInterval(0.0, std::numeric_limits<double>::infinity()); }), ErrorKind::Construction);
}

TEST(Arith, EndpointWise) {
  expect_interval(arith(ArithOp::Add, {0.1, 0.2}, {0.2, 0.3}), 0.3, 0.5);
  expect_interval(arith(ArithOp::Div, {0.1, 0.2}, {0.5, 0.8}), 0.2, 0.25);
  expect_interval(arith(ArithOp::Mul, {0.1, 0.2}, {0.2, 0.3}), 0.02, 0.06);

  const auto diff = arith(ArithOp::Sub, {0.3, 0.4}, {0.1, 0.3});
  expect_interval(diff, 0.2, 0.1);
  EXPECT_TRUE(diff.is_inverse());
}

TEST(Arith, DivisionNeedsNonzeroDenominatorEndpoints) {
  EXPECT_EQ(kind_of([] { arith(ArithOp::Div, {0.1, 0.2}, {0.0, 0.5}); }), ErrorKind::DivisionDomain);
  EXPECT_EQ(kind_of([] { arith(ArithOp::Div, {0.1, 0.2}, {0.5, 0.0}); }), ErrorKind::DivisionDomain);
  // Zero numerator endpoints are fine.
  expect_interval(arith(ArithOp::Div, {0.0, 0.0}, {0.5, 0.5}), 0.0, 0.0);
}

TEST(Complement, LiteralFormula) {
  expect_interval(complement({0.1, 0.2}), 0.9, 0.8);
  expect_interval(complement({0.5, 0.5}), 0.5, 0.5);
  // 0.1 is off the 2^-53 grid, so the round trip is only exact to an ulp.
  EXPECT_EQ(compare(complement(complement({0.1, 0.2})), {0.1, 0.2}, 1e-15), Relation::Equal);
  EXPECT_EQ(complement(complement({0.125, 0.75})), GUInterval(0.125, 0.75));
  expect_interval(complement({0.2, 0.1}), 0.8, 0.9);
  EXPECT_EQ(kind_of([] { complement({-0.1, 0.5}); }), ErrorKind::Domain);
  EXPECT_EQ(kind_of([] { complement({0.2, 1.1}); }), ErrorKind::Domain);
}

TEST(Orientation, InverseAndNormalize) {
  EXPECT_EQ(inverse({0.2, 0.7}), GUInterval(0.7, 0.2));
  EXPECT_EQ(normalize({0.9, 0.8}), GUInterval(0.8, 0.9));
  EXPECT_EQ(normalize({0.1, 0.2}), GUInterval(0.1, 0.2));
}

TEST(Gud, LengthOfProperInterval) {
  EXPECT_NEAR(gud({0.5, 0.7}), 0.2, 1e-15);
  EXPECT_EQ(gud({0.3, 0.3}), 0.0);
  EXPECT_EQ(gud({105, 159}), 54.0);
  EXPECT_EQ(kind_of([] { gud({0.7, 0.5}); }), ErrorKind::Domain);
}

TEST(Compare, PaperTableRows) {
  EXPECT_EQ(compare({104, 157}, {105, 159}), Relation::WeaklySmaller);
  EXPECT_EQ(compare({106, 159}, {105, 159}), Relation::PartlySmaller);
  EXPECT_EQ(compare({93, 140}, {71, 107}), Relation::WeaklyGreater);
  EXPECT_EQ(compare({0.1, 0.2}, {0.5, 0.7}), Relation::StronglySmaller);
}

TEST(Compare, BoundaryCases) {
  EXPECT_EQ(compare({0.1, 0.2}, {0.1, 0.2}), Relation::Equal);
  EXPECT_EQ(compare({0.1, 0.2}, {0.1 + 1e-12, 0.2}), Relation::Equal);
  // Touching intervals are interlaced, not separated.
  EXPECT_EQ(compare({0.0, 0.5}, {0.5, 1.0}), Relation::WeaklySmaller);
  // Inclusion sharing the lower endpoint is interlaced.
  EXPECT_EQ(compare({0.1, 0.3}, {0.1, 0.5}), Relation::WeaklySmaller);
  // Inclusion sharing the upper endpoint, or strictly inside, is partly.
  EXPECT_EQ(compare({0.2, 0.5}, {0.1, 0.5}), Relation::PartlySmaller);
  EXPECT_EQ(compare({0.2, 0.4}, {0.1, 0.5}), Relation::PartlySmaller);
  // Reverse inclusion is the mirror.
  EXPECT_EQ(compare({0.1, 0.5}, {0.2, 0.4}), Relation::PartlyGreater);
  EXPECT_EQ(compare({0.3, 0.3}, {0.1, 0.5}), Relation::PartlySmaller);
}

TEST(Compare, RejectsInverse) {
  EXPECT_EQ(kind_of([] { compare({0.5, 0.1}, {0.1, 0.2}); }), ErrorKind::Domain);
}

TEST(Compare, MirrorAndTotalityProperty) {
  testing::Gen gen(20240611);
  for (int i = 0; i < 5000; ++i) {
    const auto [a, b] = gen.boundary_pair();
    const auto ab = compare(a, b);
    const auto ba = compare(b, a);
    ASSERT_EQ(ba, mirror(ab)) << a << " vs " << b;
  }
}

TEST(DeltaNeighbour, Examples) {
  EXPECT_TRUE(delta_neighbour({0.1, 0.2}, {0.12, 0.18}, 0.05));
  EXPECT_FALSE(delta_neighbour({0.1, 0.2}, {0.5, 0.6}, 0.05));
  EXPECT_TRUE(delta_neighbour({0.3, 0.4}, {0.3, 0.4}, 0.0));
  EXPECT_EQ(kind_of([] { delta_neighbour({0.1, 0.2}, {0.1, 0.2}, -1.0); }), ErrorKind::Domain);
}

TEST(DeltaNeighbour, SymmetricReflexiveMonotone) {
  testing::Gen gen(7);
  for (int i = 0; i < 2000; ++i) {
    const auto a = gen.proper(), b = gen.proper();
    const double d = gen.uniform(0.0, 0.5);
    EXPECT_TRUE(delta_neighbour(a, a, 0.0));
    EXPECT_EQ(delta_neighbour(a, b, d), delta_neighbour(b, a, d));
    if (delta_neighbour(a, b, d)) EXPECT_TRUE(delta_neighbour(a, b, d + gen.uniform(0.0, 0.5)));
  }
}

TEST(UncertaintyOrder, StrongOnly) {
  EXPECT_EQ(uncertainty_order({0.1, 0.2}, {0.5, 0.7}), SystemOrder::Higher);
  EXPECT_EQ(uncertainty_order({0.5, 0.7}, {0.1, 0.2}), SystemOrder::Lower);
  EXPECT_EQ(uncertainty_order({0.1, 0.2}, {0.1, 0.2}), SystemOrder::Incomparable);
  EXPECT_EQ(uncertainty_order({0.1, 0.6}, {0.2, 0.5}), SystemOrder::Incomparable);
}

TEST(Arith, AddThenSubtractRecovers) {
  testing::Gen gen(99);
  for (int i = 0; i < 2000; ++i) {
    const GUInterval a(gen.dyadic(), gen.dyadic());
    const GUInterval b(gen.dyadic(), gen.dyadic());
    EXPECT_EQ((a + b) - b, a);
  }
}

TEST(Gud, ZeroIffDegenerate) {
  testing::Gen gen(3);
  for (int i = 0; i < 1000; ++i) {
    const auto a = gen.coin() ? GUInterval::point(gen.uniform(0, 1)) : gen.proper();
    EXPECT_EQ(gud(a) == 0.0, a.left() == a.right());
  }
}

}  // namespace
}  // namespace gut
