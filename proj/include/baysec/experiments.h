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
#ifndef BAYSEC_EXPERIMENTS_H_
#define BAYSEC_EXPERIMENTS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "baysec/channel.h"

namespace baysec {

enum class SparsityChannelKind { kRandom, kGeometric };

// One trial of the bound-tightness experiment: the distance of beta and
// of multiplicative leakage from their prior-independent extremes, for a
// sigma-sparse random prior.
struct ExperimentRow {
  std::size_t sparsity = 0;      // zeroed prior entries, 0..n-2
  double gap_beta = 0.0;         // |beta(pi, C) - beta_star(C)|
  double gap_leakage = 0.0;      // |L(pi, C) - capacity(C)|
  std::string channel_kind;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
};

// Channel with i.i.d. uniform-simplex rows (normalized exponentials).
Channel RandomSimplexChannel(std::size_t n, std::size_t m,
                             std::uint64_t seed);

// For every sparsity level sigma in 0..n-2 and every trial, samples a
// sigma-sparse prior uniformly (support chosen uniformly, then a uniform
// point of that sub-simplex) and records both gaps.
std::vector<ExperimentRow> SparsityExperiment(SparsityChannelKind kind,
                                              std::size_t n, std::size_t m,
                                              double nu, std::size_t trials,
                                              std::uint64_t seed);

std::string ExperimentRowsToCsv(const std::vector<ExperimentRow>& rows);

// Median gap_beta per sparsity level, in sparsity order 0..n-2.
std::vector<double> MedianGapBetaBySparsity(
    const std::vector<ExperimentRow>& rows, std::size_t n);

struct RrUtilityResult {
  double utility = 0.0;            // 1 - tv(debias(histogram), truth)
  double beta_star = 0.0;          // closed form at the experiment's n
  double beta_star_estimate = 0.0; // plug-in estimate on one pair
};

// Obfuscates draws from true_distribution with randomized response,
// debiases the output histogram by inverting the mechanism (clamping
// negative estimates to zero and renormalizing), and reports utility next
// to the analytic and estimated Bayes security.
RrUtilityResult RrUtilityExperiment(const std::vector<double>& true_distribution,
                                    double epsilon, std::size_t sample_count,
                                    std::uint64_t seed);

// Zipf distribution with the given exponent over n values: p_i
// proportional to 1/(i+1)^exponent.
std::vector<double> ZipfDistribution(std::size_t n, double exponent);

// One row of the randomized-response bound-quality sweep.
struct RrBoundsRow {
  double epsilon = 0.0;
  std::size_t n = 0;
  double beta_star = 0.0;
  double centroid_lower = 0.0;
  double centroid_upper = 0.0;
  double fixed_row_lower = 0.0;
  double fixed_row_upper = 0.0;
};

// Compares the sandwich bounds against the exact Bayes security of
// randomized response, with the centroid and with row 0 as references.
std::vector<RrBoundsRow> RrBoundsSweep(std::size_t n,
                                       const std::vector<double>& epsilons);

std::string RrBoundsRowsToCsv(const std::vector<RrBoundsRow>& rows);

}  // namespace baysec

#endif  // BAYSEC_EXPERIMENTS_H_
