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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "baysec/blackbox.h"
#include "baysec/error.h"
#include "baysec/mechanisms.h"
#include "baysec/metrics.h"
#include "baysec/minimizer.h"
#include "baysec/rng.h"

namespace baysec {

namespace {

// Uniform point of the simplex over `support`, via normalized
// exponential spacings.
std::vector<double> SampleSparsePrior(std::size_t n,
                                      const std::vector<std::size_t>& support,
                                      Rng& rng) {
  std::vector<double> weights(n, 0.0);
  double total = 0.0;
  std::vector<double> draws(support.size());
  for (auto& d : draws) {
    d = rng.Exponential();
    total += d;
  }
  for (std::size_t i = 0; i < support.size(); ++i) {
    weights[support[i]] = draws[i] / total;
  }
  return weights;
}

}  // namespace

Channel RandomSimplexChannel(std::size_t n, std::size_t m,
                             std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<double>> rows(n, std::vector<double>(m));
  for (auto& row : rows) {
    for (auto& v : row) v = rng.Exponential();
  }
  return Channel::FromRows(std::move(rows), /*renormalize=*/true);
}

std::vector<ExperimentRow> SparsityExperiment(SparsityChannelKind kind,
                                              std::size_t n, std::size_t m,
                                              double nu, std::size_t trials,
                                              std::uint64_t seed) {
  if (n < 2 || m < n || trials < 10) {
    throw Error(ErrorCode::kInvalidParameters,
                "sparsity experiment needs n >= 2, m >= n, trials >= 10");
  }
  const Channel channel =
      kind == SparsityChannelKind::kRandom
          ? RandomSimplexChannel(n, m, DeriveSeed(seed, 0))
          : GeometricChannel(n, m, nu);
  const double beta_star = BetaStarExhaustive(channel).beta_star;
  const double capacity = Capacity(channel);
  const char* kind_name =
      kind == SparsityChannelKind::kRandom ? "random" : "geometric";

  std::vector<ExperimentRow> rows;
  rows.reserve((n - 1) * trials);
  std::vector<std::size_t> all_secrets(n);
  std::iota(all_secrets.begin(), all_secrets.end(), 0);
  for (std::size_t sigma = 0; sigma + 1 < n; ++sigma) {
    for (std::size_t trial = 0; trial < trials; ++trial) {
      const std::uint64_t trial_seed =
          DeriveSeed(seed, 1 + sigma * trials + trial);
      Rng rng(trial_seed);
      std::vector<std::size_t> support = all_secrets;
      for (std::size_t i = 0; i < sigma; ++i) {
        const std::size_t pick = rng.UniformInt(support.size());
        support.erase(support.begin() + pick);
      }
      const Prior prior =
          Prior::FromWeights(SampleSparsePrior(n, support, rng));
      ExperimentRow row;
      row.sparsity = sigma;
      row.gap_beta = std::abs(Beta(prior, channel) - beta_star);
      row.gap_leakage = std::abs(MultLeakage(prior, channel) - capacity);
      row.channel_kind = kind_name;
      row.trial = trial;
      row.seed = trial_seed;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string ExperimentRowsToCsv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  out << "sparsity,gap_beta,gap_leakage,channel_kind,trial,seed\n";
  out.precision(17);
  for (const auto& row : rows) {
    out << row.sparsity << ',' << row.gap_beta << ',' << row.gap_leakage
        << ',' << row.channel_kind << ',' << row.trial << ',' << row.seed
        << '\n';
  }
  return out.str();
}

std::vector<double> MedianGapBetaBySparsity(
    const std::vector<ExperimentRow>& rows, std::size_t n) {
  std::vector<std::vector<double>> by_level(n - 1);
  for (const auto& row : rows) {
    by_level.at(row.sparsity).push_back(row.gap_beta);
  }
  std::vector<double> medians;
  medians.reserve(n - 1);
  for (auto& values : by_level) {
    if (values.empty()) {
      throw Error(ErrorCode::kInvalidParameters,
                  "missing sparsity level in experiment rows");
    }
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    medians.push_back(values.size() % 2 == 1
                          ? values[mid]
                          : 0.5 * (values[mid - 1] + values[mid]));
  }
  return medians;
}

std::vector<double> ZipfDistribution(std::size_t n, double exponent) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidDistribution, "empty distribution");
  }
  std::vector<double> p(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = 1.0 / std::pow(static_cast<double>(i + 1), exponent);
    total += p[i];
  }
  for (double& v : p) v /= total;
  return p;
}

RrUtilityResult RrUtilityExperiment(const std::vector<double>& true_distribution,
                                    double epsilon, std::size_t sample_count,
                                    std::uint64_t seed) {
  const std::size_t n = true_distribution.size();
  if (n < 2) {
    throw Error(ErrorCode::kInvalidDistribution,
                "need a distribution over at least two values");
  }
  double total = 0.0;
  for (double v : true_distribution) {
    if (!(v >= 0.0)) {
      throw Error(ErrorCode::kInvalidDistribution,
                  "distribution entries must be non-negative");
    }
    total += v;
  }
  if (std::abs(total - 1.0) > kStochasticTolerance) {
    throw Error(ErrorCode::kInvalidDistribution,
                "distribution does not sum to 1");
  }
  if (sample_count < 1000) {
    throw Error(ErrorCode::kInsufficientSamples,
                "utility experiment needs at least 1000 samples");
  }
  if (epsilon <= 0.0) {
    // The debiasing matrix (e^eps - 1) I + J is singular at eps = 0.
    throw Error(ErrorCode::kSingularDebias,
                "randomized response is not invertible at epsilon = 0");
  }

  const double e = std::exp(epsilon);
  const double denom = static_cast<double>(n) + e - 1.0;
  const double keep_probability = (e - 1.0) / denom;

  std::vector<double> truth_cdf(n);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += true_distribution[i];
    truth_cdf[i] = acc;
  }
  truth_cdf.back() = 1.0;

  Rng rng(DeriveSeed(seed, 0));
  std::vector<double> histogram(n, 0.0);
  for (std::size_t i = 0; i < sample_count; ++i) {
    const double u = rng.UniformUnit();
    std::size_t s = std::min<std::size_t>(
        std::upper_bound(truth_cdf.begin(), truth_cdf.end(), u) -
            truth_cdf.begin(),
        n - 1);
    // Keep with probability (e-1)/denom, otherwise draw uniformly over
    // all n values; marginally this is exactly the RR channel.
    std::size_t o = s;
    if (rng.UniformUnit() >= keep_probability) {
      o = rng.UniformInt(n);
    }
    histogram[o] += 1.0;
  }
  for (double& v : histogram) v /= static_cast<double>(sample_count);

  // Invert h = ((e-1) p + 1) / denom, clamp negatives, renormalize.
  std::vector<double> estimate(n);
  double estimate_total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    estimate[i] = std::max(0.0, (histogram[i] * denom - 1.0) / (e - 1.0));
    estimate_total += estimate[i];
  }
  if (estimate_total > 0.0) {
    for (double& v : estimate) v /= estimate_total;
  } else {
    estimate.assign(n, 1.0 / static_cast<double>(n));
  }

  RrUtilityResult result;
  result.utility = 1.0 - TvDistance(estimate, true_distribution);
  result.beta_star = RrBetaStar(n, epsilon);

  // All RR secret pairs are equally distant, so one pair suffices.
  const Channel rr = RrChannel(n, epsilon);
  ChannelOracle oracle(rr);
  SampleBatch batch = SampleObservations(oracle, TwoPointPrior(n, 0, 1),
                                         sample_count, DeriveSeed(seed, 1));
  result.beta_star_estimate = PluginBeta(batch, 0, 1);
  return result;
}

std::vector<RrBoundsRow> RrBoundsSweep(std::size_t n,
                                       const std::vector<double>& epsilons) {
  std::vector<RrBoundsRow> rows;
  rows.reserve(epsilons.size());
  for (double eps : epsilons) {
    const Channel channel = RrChannel(n, eps);
    RrBoundsRow row;
    row.epsilon = eps;
    row.n = n;
    row.beta_star = BetaStarExhaustive(channel).beta_star;
    const BetaStarReport centroid = BetaStarBoundsCentroid(channel);
    row.centroid_lower = centroid.lower;
    row.centroid_upper = centroid.upper;
    // Any channel row is itself in the hull of the rows.
    std::vector<double> row0(channel.row(0).begin(), channel.row(0).end());
    const BetaStarReport fixed =
        BetaStarBoundsCentroid(channel, row0, /*reference_in_hull=*/true);
    row.fixed_row_lower = fixed.lower;
    row.fixed_row_upper = fixed.upper;
    rows.push_back(row);
  }
  return rows;
}

std::string RrBoundsRowsToCsv(const std::vector<RrBoundsRow>& rows) {
  std::ostringstream out;
  out << "epsilon,n,beta_star,centroid_lower,centroid_upper,"
         "fixed_row_lower,fixed_row_upper\n";
  out.precision(17);
  for (const auto& row : rows) {
    out << row.epsilon << ',' << row.n << ',' << row.beta_star << ','
        << row.centroid_lower << ',' << row.centroid_upper << ','
        << row.fixed_row_lower << ',' << row.fixed_row_upper << '\n';
  }
  return out.str();
}

}  // namespace baysec
