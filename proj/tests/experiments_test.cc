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
#include "baysec/experiments.h"

#include <cmath>

#include "baysec/error.h"
#include "baysec/mechanisms.h"
#include "baysec/metrics.h"
#include "baysec/minimizer.h"
#include "gtest/gtest.h"

namespace baysec {
namespace {

TEST(ZipfDistributionTest, ShapeAndNormalization) {
  const std::vector<double> p = ZipfDistribution(400, 1.0);
  ASSERT_EQ(p.size(), 400u);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    sum += p[i];
    if (i > 0) EXPECT_LT(p[i], p[i - 1]);
  }
  EXPECT_NEAR(sum, 1.0, 1e-12);
  EXPECT_NEAR(p[0] / p[1], 2.0, 1e-12);
}

TEST(SparsityExperimentTest, ProducesAllLevels) {
  const auto rows = SparsityExperiment(SparsityChannelKind::kRandom, 4, 8,
                                       0.1, 10, 99);
  EXPECT_EQ(rows.size(), 3u * 10u);
  for (const auto& row : rows) {
    EXPECT_LE(row.sparsity, 2u);
    EXPECT_GE(row.gap_beta, 0.0);
    EXPECT_GE(row.gap_leakage, 0.0);
    EXPECT_EQ(row.channel_kind, "random");
  }
  const auto medians = MedianGapBetaBySparsity(rows, 4);
  EXPECT_EQ(medians.size(), 3u);
}

TEST(SparsityExperimentTest, DeterministicCsv) {
  const auto one = SparsityExperiment(SparsityChannelKind::kGeometric, 4, 12,
                                      0.1, 10, 7);
  const auto two = SparsityExperiment(SparsityChannelKind::kGeometric, 4, 12,
                                      0.1, 10, 7);
  EXPECT_EQ(ExperimentRowsToCsv(one), ExperimentRowsToCsv(two));
  EXPECT_THROW(
      SparsityExperiment(SparsityChannelKind::kRandom, 4, 8, 0.1, 5, 1),
      Error);
}

TEST(SparsityExperimentTest, UniformPriorRealizesCapacity) {
  const Channel c = RandomSimplexChannel(6, 40, 3);
  EXPECT_NEAR(MultLeakage(UniformPrior(6), c), Capacity(c), 1e-12);
}

TEST(SparsityExperimentTest, MinimizerPairRealizesBetaStar) {
  const Channel c = RandomSimplexChannel(6, 40, 4);
  const BetaStarReport report = BetaStarExhaustive(c);
  EXPECT_NEAR(
      Beta(TwoPointPrior(6, report.pair.first, report.pair.second), c),
      report.beta_star, 1e-12);
}

TEST(RrUtilityTest, HighEpsilonRecoversTheDistribution) {
  const auto result =
      RrUtilityExperiment(ZipfDistribution(10, 1.0), 8.0, 50000, 11);
  EXPECT_GT(result.utility, 0.95);
  EXPECT_LT(result.beta_star, 0.01);
}

TEST(RrUtilityTest, EstimateTracksClosedForm) {
  const auto result =
      RrUtilityExperiment(ZipfDistribution(10, 1.0), 1.0, 100000, 5);
  EXPECT_NEAR(result.beta_star, RrBetaStar(10, 1.0), 1e-15);
  EXPECT_NEAR(result.beta_star_estimate, result.beta_star, 0.03);
}

TEST(RrUtilityTest, Deterministic) {
  const auto one = RrUtilityExperiment(ZipfDistribution(8, 1.0), 2.0, 5000, 3);
  const auto two = RrUtilityExperiment(ZipfDistribution(8, 1.0), 2.0, 5000, 3);
  EXPECT_DOUBLE_EQ(one.utility, two.utility);
  EXPECT_DOUBLE_EQ(one.beta_star_estimate, two.beta_star_estimate);
}

TEST(RrUtilityTest, SingularDebiasAtZeroEpsilon) {
  try {
    RrUtilityExperiment(ZipfDistribution(8, 1.0), 0.0, 5000, 3);
    FAIL() << "eps = 0 accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularDebias);
  }
  EXPECT_THROW(RrUtilityExperiment({1.0}, 1.0, 5000, 3), Error);
  EXPECT_THROW(RrUtilityExperiment(ZipfDistribution(8, 1.0), 1.0, 10, 3),
               Error);
}

TEST(RrBoundsSweepTest, CentroidBoundsAreExactOnRr) {
  const auto rows = RrBoundsSweep(2, {std::log(3.0)});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_NEAR(rows[0].beta_star, 0.5, 1e-12);
  EXPECT_NEAR(rows[0].centroid_lower, 0.5, 1e-12);
  EXPECT_NEAR(rows[0].centroid_upper, 0.75, 1e-12);
}

// The mean-row reference is the most accurate lower bound on randomized
// response, as in the bound-quality study.
TEST(RrBoundsSweepTest, MeanRowBeatsFixedRow) {
  const auto rows = RrBoundsSweep(10, {0.25, 0.5, 1.0, 2.0});
  for (const auto& row : rows) {
    EXPECT_LE(row.centroid_lower, row.beta_star + 1e-12);
    EXPECT_LE(row.fixed_row_lower, row.beta_star + 1e-12);
    EXPECT_GE(row.centroid_lower, row.fixed_row_lower - 1e-12);
    EXPECT_GE(row.centroid_upper, row.beta_star - 1e-12);
  }
  const std::string csv = RrBoundsRowsToCsv(rows);
  EXPECT_NE(csv.find("centroid_lower"), std::string::npos);
}

}  // namespace
}  // namespace baysec
