// Copyright 2026 The Unicon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "unicon/bounds.h"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "test_support.h"

namespace unicon::bounds {
namespace {

using testing::Gen;

constexpr double kPi = std::numbers::pi;

TEST(Union, Examples) {
  EXPECT_DOUBLE_EQ(UnionUpper(1, 1, 2, 4), 9.0);
  EXPECT_NEAR(UnionUpper(1, 1e-12, 2, 4), 4.0, 1e-9);
  EXPECT_NEAR(UnionUpper(1, 1, 2, kPi), 2.25 * kPi, 1e-12);
  EXPECT_DOUBLE_EQ(UnionLower(1.3, 1, 3, 1, 2.0), std::pow(1.3, 3) * 2.0);
  EXPECT_DOUBLE_EQ(UnionLower(1, 1, 2, 4, 4), 9.0);
  EXPECT_DOUBLE_EQ(UnionLower(1, 1, 2, 9, 4), 16.0);
  EXPECT_THROW(UnionUpper(0, 1, 2, 4), Error);
}

TEST(Intersection, Examples) {
  EXPECT_NEAR(IntersectionLowerBohnenblust(2, 1, 2, 4), 16.0 / 9.0 * 4, 1e-12);
  EXPECT_EQ(IntersectionLowerBohnenblust(2.0 / 3.0, 1, 2, 4), 0.0);
  EXPECT_EQ(IntersectionLowerBohnenblust(0.5, 1, 2, 4), 0.0);
  EXPECT_NEAR(IntersectionLowerBohnenblust(1.5, 1e-12, 2, 4), 9.0, 1e-9);
  EXPECT_DOUBLE_EQ(IntersectionUpper(3, 1, 2, 9, 4), 16.0);
  EXPECT_EQ(IntersectionUpper(3, 1, 2, 1000000, 4), 0.0);
  EXPECT_DOUBLE_EQ(IntersectionUpper(3, 1, 2, 1, 4), 36.0);
}

TEST(BlaschkeSantalo, Examples) {
  EXPECT_NEAR(BlaschkeSantaloBound(4.0, 2.0, 2, 4.0), 4.0, 1e-12);
  EXPECT_NEAR(BlaschkeSantaloBound(1e-30, 2.0, 3, 1.5), 8.0 * 1.5, 1e-8);
  EXPECT_THROW(BlaschkeSantaloBound(16.0, 2.0, 2, 4.0), Error);
  // A = packing of N balls of radius lambda/2, r replaced by r + lambda/2.
  for (int c = 0; c < 100; ++c) {
    Gen g(61, c);
    const int d = g.Int(2, 6);
    const uint64_t n = static_cast<uint64_t>(g.Int(1, 50));
    const double lambda = g.Uniform(0.1, 2.0), vk = g.Uniform(0.5, 5.0);
    const double a = n * std::pow(lambda / 2, d) * vk;
    const double r = g.Uniform(0.0, 5.0) + std::pow(n, 1.0 / d) * lambda / 2;
    const double expect = IntersectionUpper(r, lambda, d, n, vk);
    EXPECT_NEAR(BlaschkeSantaloBound(a, r + lambda / 2, d, vk), expect, 1e-9 * (1 + expect));
  }
}

TEST(Quermass, Examples) {
  EXPECT_NEAR(QuermassUnionUpper(1, 1, 2, 1), 1.5 * kPi, 1e-12);
  EXPECT_NEAR(QuermassUnionLower(1, 1, 2, 4, 1), 1.5 * kPi, 1e-12);
  EXPECT_NEAR(QuermassUnionUpper(1, 2, 3, 1), 16 * kPi / 3, 1e-12);
  EXPECT_NEAR(QuermassUnionLower(1, 2, 3, 8, 1), 16 * kPi / 3, 1e-12);
  EXPECT_NEAR(QuermassUnionUpper(1, 1, 3, 0), UnionUpper(1, 1, 3, UnitBallVolume(3)), 1e-12);
  EXPECT_THROW(QuermassUnionUpper(1, 1, 3, 3), Error);
}

// At N = 2^d the two union bounds coincide for every (r, lambda).
TEST(Union, ThresholdCoincidence) {
  for (int d = 2; d <= 10; ++d) {
    const uint64_t n = uint64_t{1} << d;
    EXPECT_EQ(NthRoot(n, d), 2.0);
    for (int c = 0; c < 200; ++c) {
      Gen g(62, 1000 * d + c);
      const double r = g.Uniform(0.01, 10), lambda = g.Uniform(0.01, 10);
      const double up = UnionUpper(r, lambda, d, 1.0), lo = UnionLower(r, lambda, d, n, 1.0);
      EXPECT_LE(std::abs(up - lo), 1e-12 * up);
      // Away from the threshold the order is strict in the expected direction.
      EXPECT_GT(UnionLower(r, lambda, d, n + 1, 1.0), up);
      EXPECT_LT(UnionLower(r, lambda, d, n - 1, 1.0), up);
    }
  }
}

TEST(Schramm, Examples) {
  EXPECT_NEAR(SchrammF(2, 2 - 1e-15, 1.7), 0.0, 1e-7);
  EXPECT_NEAR(SchrammF(1, 0.5, 1e8), 0.0, 1e-7);
  EXPECT_GT(SchrammF(1, 0.5, 1e8), 0.0);
  const double f2 = std::sqrt(1 + 4.0) - 2;
  EXPECT_NEAR(SchrammF(std::sqrt(2.0), 1, 2), f2, 1e-15);
  EXPECT_GT(SchrammF(std::sqrt(2.0), 1, 2), SchrammF(std::sqrt(2.0), 1, 3));
  EXPECT_NEAR(SchrammIntersectionLower(2, 1, 2), kPi * std::pow(std::sqrt(4 - 1.0 / 12) - 0.5, 2),
              1e-12);
  EXPECT_NEAR(SchrammIntersectionLower(2, 1e-9, 3), UnitBallVolume(3) * 8, 1e-6);
  EXPECT_THROW(SchrammIntersectionLower(0.5, 1, 2), Error);
}

TEST(Radii, Examples) {
  EXPECT_NEAR(JungRadius(1, 2), 1 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(BohnenblustRadius(1, 2), 2.0 / 3.0, 1e-15);
  EXPECT_LT(JungRadius(1, 1000000), 0.7865);
  EXPECT_NEAR(JungRadius(1, 100000000), std::sqrt(2.0) / 2, 1e-8);
  for (int d = 1; d <= 200; ++d) EXPECT_LT(JungRadius(1, d), 0.7865);
  EXPECT_NEAR(KlDensity(10), std::pow(2.0, -5.99), 1e-15);
}

TEST(Thresholds, Examples) {
  EXPECT_TRUE(MeetsThreshold(4, 2, 2));
  EXPECT_FALSE(MeetsThreshold(4, 2, 3));
  EXPECT_TRUE(MeetsThreshold(9, 2, 3));
  EXPECT_FALSE(MeetsThreshold(3, 2, 2));
  EXPECT_TRUE(MeetsThreshold(14, 3, 2.359));  // 2.359^3 = 13.13
  EXPECT_FALSE(MeetsThreshold(13, 3, 2.359));
}

TEST(Ineq, AnchorValue) {
  const double x = 1.573;
  const Inequality q = Ineq21(x / 2, 1.0);
  ASSERT_TRUE(q.applicable);
  EXPECT_TRUE(q.holds);
  EXPECT_NEAR(q.lhs, 2.358780, 1e-6);
  EXPECT_NEAR(q.margin(), 0.000219, 1e-6);
  EXPECT_FALSE(Ineq21(0.4, 1.0).applicable);
  // x - sqrt(x^2 - 1) is decreasing: f(2) = 2 - sqrt(3) > f(3) = 3 - sqrt(8).
  EXPECT_NEAR(Ineq21(1.0, 1.0).lhs - 2, 2 - std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(Ineq21(1.5, 1.0).lhs - 2, 3 - std::sqrt(8.0), 1e-15);
}

TEST(Ineq, NineteenEquivalentToTwenty) {
  int checked = 0;
  for (int c = 0; c < 10000; ++c) {
    Gen g(63, c);
    const int d = g.Int(2, 12);
    const uint64_t n = static_cast<uint64_t>(g.Int(1, 5000));
    const double lambda = g.Uniform(0.05, 3), r = g.Uniform(0.3, 4) * lambda;
    const Inequality a = Ineq19(r, lambda, d, n), b = Ineq20(r, lambda, d, n);
    ASSERT_EQ(a.applicable, b.applicable);
    if (!a.applicable) continue;
    // Borderline tuples can split under rounding; both margins must then be tiny.
    if (a.holds != b.holds) {
      EXPECT_LT(std::abs(a.margin()), 1e-12 * (1 + r));
    }
    ++checked;
  }
  EXPECT_GT(checked, 9000);
}

// With N >= 2.359^d and 2r/lambda >= 1.573, (21) forces (20).
TEST(Ineq, ChainAtThreshold) {
  for (int d = 2; d <= 12; ++d) {
    const uint64_t n = static_cast<uint64_t>(std::ceil(std::pow(2.359, d)));
    for (int c = 0; c < 50; ++c) {
      Gen g(64, 100 * d + c);
      const double lambda = g.Uniform(0.1, 2), x = g.Uniform(1.573, 6);
      const double r = x * lambda / 2;
      ASSERT_TRUE(Ineq21(r, lambda).holds);
      EXPECT_TRUE(Ineq20(r, lambda, d, n).holds) << d;
    }
  }
}

TEST(Evaluate, Report) {
  BoundsInputs in;
  in.r = 1;
  in.lambda = 1;
  in.d = 2;
  in.n = 4;
  in.vk = 4;
  const BoundsReport rep = Evaluate(in);
  ASSERT_NE(rep.Find("union-2"), nullptr);
  EXPECT_DOUBLE_EQ(*rep.Find("union-2")->value, 9.0);
  EXPECT_DOUBLE_EQ(*rep.Find("union-4")->value, 9.0);
  EXPECT_TRUE(*rep.Find("threshold-2d")->holds);
  EXPECT_FALSE(*rep.Find("threshold-3d")->holds);
  EXPECT_FALSE(rep.Find("union-22222")->applicable);
  EXPECT_TRUE(rep.Find("schramm-lower")->applicable);
  // Preconditions failing turn into not-applicable entries.
  BoundsInputs small = in;
  small.r = 0.5;
  EXPECT_FALSE(Evaluate(small).Find("schramm-lower")->applicable);

  in.r = 3;
  in.n = 9;
  const BoundsReport rep2 = Evaluate(in);
  EXPECT_DOUBLE_EQ(*rep2.Find("intersection-7")->value, 16.0);
  EXPECT_NEAR(*rep2.Find("intersection-3")->value, std::pow(3 - 2.0 / 3, 2) * 4, 1e-12);

  in.k = 1;
  in.d0 = 5;
  const BoundsReport rep3 = Evaluate(in);
  ASSERT_NE(rep3.Find("union-22222"), nullptr);
  EXPECT_NE(rep3.Find("ineq-20")->note.find("d0"), std::string::npos);
}

}  // namespace
}  // namespace unicon::bounds
