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

#include "unicon/rng.h"

#include <cmath>
#include <set>

#include <gtest/gtest.h>

namespace unicon {
namespace {

using Counter = Philox4x32::Counter;

// Known-answer vectors of the Random123 reference implementation.
TEST(Philox, KnownAnswerZero) {
  EXPECT_EQ(Philox4x32::Generate({0, 0, 0, 0}, {0, 0}),
            (Counter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
}

TEST(Philox, KnownAnswerOnes) {
  EXPECT_EQ(Philox4x32::Generate({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                                 {0xffffffff, 0xffffffff}),
            (Counter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
}

TEST(Philox, KnownAnswerPi) {
  EXPECT_EQ(Philox4x32::Generate({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                                 {0xa4093822, 0x299f31d0}),
            (Counter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(CounterStream, ReproducibleAndIndependent) {
  CounterStream a(42, StreamPurpose::kMonteCarloVolume, 7);
  CounterStream b(42, StreamPurpose::kMonteCarloVolume, 7);
  CounterStream c(42, StreamPurpose::kMonteCarloVolume, 8);
  CounterStream e(42, StreamPurpose::kDirections, 7);
  bool differs_c = false, differs_e = false;
  for (int i = 0; i < 64; ++i) {
    const uint64_t x = a();
    EXPECT_EQ(x, b());
    differs_c |= x != c();
    differs_e |= x != e();
  }
  EXPECT_TRUE(differs_c);
  EXPECT_TRUE(differs_e);
}

TEST(CounterStream, UniformMoments) {
  CounterStream s(1, StreamPurpose::kPropertyTest, 0);
  const int n = 200000;
  double sum = 0, sum2 = 0;
  for (int i = 0; i < n; ++i) {
    const double u = s.Uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    sum2 += u * u;
  }
  EXPECT_NEAR(sum / n, 0.5, 5e-3);
  EXPECT_NEAR(sum2 / n, 1.0 / 3.0, 5e-3);
}

TEST(CounterStream, NormalMoments) {
  CounterStream s(2, StreamPurpose::kPropertyTest, 0);
  const int n = 200000;
  double sum = 0, sum2 = 0;
  for (int i = 0; i < n; ++i) {
    const double z = s.Normal();
    sum += z;
    sum2 += z * z;
  }
  EXPECT_NEAR(sum / n, 0.0, 1e-2);
  EXPECT_NEAR(sum2 / n, 1.0, 2e-2);
}

TEST(DeriveSeed, DistinctChildren) {
  std::set<uint64_t> seen;
  for (uint64_t tag = 0; tag < 4; ++tag)
    for (uint64_t i = 0; i < 256; ++i) seen.insert(DeriveSeed(99, tag, i));
  EXPECT_EQ(seen.size(), 4u * 256u);
  EXPECT_EQ(DeriveSeed(5, 1, 2), DeriveSeed(5, 1, 2));
}

}  // namespace
}  // namespace unicon
