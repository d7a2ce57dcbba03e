// Copyright 2026 The Baysec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "baysec/composition.h"

#include <cmath>

#include "baysec/error.h"
#include "baysec/mechanisms.h"
#include "baysec/metrics.h"
#include "baysec/minimizer.h"
#include "gtest/gtest.h"
#include "support/test_channels.h"

namespace baysec {
namespace {

using testing::CounterexampleChannel;
using testing::IdentityChannel;
using testing::NoLeakageChannel;
using testing::RandomChannel;

TEST(ParallelTest, OuterProductRows) {
  const Channel c = Channel::FromRows({{0.4, 0.6}, {0.0, 1.0}});
  const Channel composed = Parallel(c, c);
  EXPECT_EQ(composed.secret_count(), 2u);
  EXPECT_EQ(composed.observable_count(), 4u);
  const std::vector<double> expected{0.16, 0.24, 0.24, 0.36, 0.0, 0.0, 0.0,
                                     1.0};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(composed.data()[i], expected[i], 1e-15) << "entry " << i;
  }
  // Tightness witness for the parallel bound: 0.36 = 0.6^2.
  EXPECT_NEAR(BetaStarExhaustive(composed).beta_star, 0.36, 1e-12);
  EXPECT_NEAR(BetaStarExhaustive(c).beta_star, 0.6, 1e-12);
}

TEST(ParallelTest, NoLeakageFactorPreservesBetaStar) {
  const Channel c = CounterexampleChannel();
  const Channel composed = Parallel(c, NoLeakageChannel(4, 5));
  EXPECT_NEAR(BetaStarExhaustive(composed).beta_star,
              BetaStarExhaustive(c).beta_star, 1e-12);
}

// The minimizing pair of C||C is not the minimizing pair of C: (0,2)
// minimizes C but sits strictly above the minimum of C||C, where 0.36 is
// attained by (1,3) in a three-way tie with (0,3) and (2,3). Lowest-index
// tie-breaking reports (0,3).
TEST(ParallelTest, MinimizingPairIsNotPreserved) {
  const Channel c = CounterexampleChannel();
  const Channel composed = Parallel(c, c);
  const BetaStarReport base = BetaStarExhaustive(c);
  const BetaStarReport report = BetaStarExhaustive(composed);
  EXPECT_EQ(base.pair, (std::pair<std::size_t, std::size_t>{0, 2}));
  EXPECT_NEAR(report.beta_star, 0.36, 1e-12);
  EXPECT_NEAR(Beta(TwoPointPrior(4, 1, 3), composed), 0.36, 1e-12);
  EXPECT_GT(Beta(TwoPointPrior(4, 0, 2), composed),
            report.beta_star + 0.05);
  EXPECT_EQ(report.pair, (std::pair<std::size_t, std::size_t>{0, 3}));
}

TEST(ParallelTest, RejectsMismatchedSecretSpaces) {
  try {
    Parallel(IdentityChannel(2), IdentityChannel(3));
    FAIL() << "mismatched secret spaces accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSecretSpaceMismatch);
  }
}

TEST(CascadeTest, IdentityIsNeutral) {
  const Channel c = CounterexampleChannel();
  const Channel composed = Cascade(c, IdentityChannel(3));
  EXPECT_EQ(composed.data(), c.data());
}

TEST(CascadeTest, NonInterferingPostProcessing) {
  const Channel composed =
      Cascade(CounterexampleChannel(), NoLeakageChannel(3, 4));
  EXPECT_NEAR(BetaStarExhaustive(composed).beta_star, 1.0, 1e-12);
}

TEST(CascadeTest, RandomizedResponseSelfCascade) {
  const Channel rr = RrChannel(2, std::log(3.0));
  const Channel composed = Cascade(rr, rr);
  EXPECT_NEAR(composed.at(0, 0), 0.625, 1e-15);
  EXPECT_NEAR(composed.at(0, 1), 0.375, 1e-15);
  EXPECT_NEAR(composed.at(1, 0), 0.375, 1e-15);
  EXPECT_NEAR(composed.at(1, 1), 0.625, 1e-15);
  EXPECT_NEAR(BetaStarExhaustive(composed).beta_star, 0.75, 1e-12);
}

TEST(CascadeTest, RejectsInnerDimensionMismatch) {
  try {
    Cascade(IdentityChannel(2), IdentityChannel(3));
    FAIL() << "inner dimension mismatch accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInnerDimensionMismatch);
  }
}

TEST(CompositionBoundsTest, ParallelBoundOnRandomPairs) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 2 + seed % 5;
    const Channel c1 = RandomChannel(n, 2 + seed % 4, seed);
    const Channel c2 = RandomChannel(n, 2 + (seed * 3) % 4, seed + 1001);
    const double lhs = BetaStarExhaustive(Parallel(c1, c2)).beta_star;
    const double rhs = BetaStarExhaustive(c1).beta_star *
                       BetaStarExhaustive(c2).beta_star;
    EXPECT_GE(lhs, rhs - 1e-12);
  }
}

TEST(CompositionBoundsTest, CascadeBoundOnRandomPairs) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 2 + seed % 5;
    const std::size_t mid = 2 + (seed * 7) % 5;
    const Channel c1 = RandomChannel(n, mid, seed);
    const Channel c2 = RandomChannel(mid, 2 + seed % 6, seed + 2002);
    const double lhs = BetaStarExhaustive(Cascade(c1, c2)).beta_star;
    const double rhs = std::max(BetaStarExhaustive(c1).beta_star,
                                BetaStarExhaustive(c2).beta_star);
    EXPECT_GE(lhs, rhs - 1e-12);
  }
}

TEST(CompositionTest, OutputsAreStochastic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 2 + seed % 4;
    const Channel c1 = RandomChannel(n, 3, seed);
    const Channel c2 = RandomChannel(n, 4, seed + 1);
    for (const Channel& c :
         {Parallel(c1, c2), Cascade(c1, RandomChannel(3, 5, seed + 2))}) {
      for (std::size_t s = 0; s < c.secret_count(); ++s) {
        double sum = 0.0;
        for (std::size_t o = 0; o < c.observable_count(); ++o) {
          sum += c.at(s, o);
        }
        EXPECT_NEAR(sum, 1.0, 1e-12);
      }
    }
  }
}

TEST(SelfParallelTest, RepeatedObservations) {
  const Channel rr = RrChannel(2, 1.0);
  const Channel three = SelfParallel(rr, 3);
  EXPECT_EQ(three.observable_count(), 8u);
  EXPECT_EQ(SelfParallel(rr, 1).data(), rr.data());
  // One more observation can only leak more.
  EXPECT_LE(BetaStarExhaustive(three).beta_star,
            BetaStarExhaustive(SelfParallel(rr, 2)).beta_star + 1e-12);
  EXPECT_THROW(SelfParallel(rr, 0), Error);
}

}  // namespace
}  // namespace baysec
