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
#ifndef BAYSEC_MINIMIZER_H_
#define BAYSEC_MINIMIZER_H_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "baysec/channel.h"

namespace baysec {

// Result of a Bayes-security computation. beta_star is the minimum of
// beta over all priors; it is attained on a uniform two-point prior whose
// secrets are reported in `pair`. For exact methods lower == upper ==
// beta_star; for the bounds method beta_star carries the certified lower
// bound.
struct BetaStarReport {
  double beta_star = 1.0;
  std::pair<std::size_t, std::size_t> pair{0, 1};
  enum class Method { kExhaustive, kPruned, kEmbedding, kBounds } method =
      Method::kExhaustive;
  double lower = 0.0;
  double upper = 1.0;
  std::size_t pair_evaluations = 0;
};

const char* MethodName(BetaStarReport::Method method);
std::string BetaStarReportToJson(const BetaStarReport& report);

// Scans all secret pairs for the maximal row total variation. O(n^2 m).
// Ties resolve to the lexicographically smallest pair.
BetaStarReport BetaStarExhaustive(const Channel& channel);

// Same value as the exhaustive scan, skipping pairs whose triangle-
// inequality upper bound (through already-evaluated anchor pairs) cannot
// beat the current best distance. pair_evaluations counts the distances
// actually computed.
BetaStarReport BetaStarPruned(const Channel& channel);

// Computes the L1 diameter through the isometric embedding of l1^m into
// linf^(2^m): component b of the image of row x is sum_i x_i * (-1)^(b_i).
// Linear in n but needs a 2^m workspace, so m is capped.
inline constexpr std::size_t kDefaultEmbeddingCutoff = 24;
BetaStarReport BetaStarEmbedding(
    const Channel& channel,
    std::size_t observable_cutoff = kDefaultEmbeddingCutoff);

// O(nm) sandwich bounds from a reference distribution q:
// with d = max_s ||C_s - q||_1, beta_star >= 1 - d, and if q lies in the
// convex hull of the rows also beta_star <= 1 - d/2. Defaults to the row
// centroid (which is always in the hull). `reference_in_hull` asserts
// hull membership for a caller-supplied q; without it the upper bound is
// the trivial 1.
BetaStarReport BetaStarBoundsCentroid(
    const Channel& channel,
    const std::optional<std::vector<double>>& reference = std::nullopt,
    bool reference_in_hull = false);

// Image of a vector under the l1 -> linf isometry, one component per
// bitstring: component c is sum_i x_i * (-1)^(bit (m-1-i) of c).
void EmbedLinfComponents(std::span<const double> x, std::span<double> out);
std::vector<double> EmbedLinfComponents(std::span<const double> x);

struct PriorOracleResult {
  double min_beta = 1.0;
  std::vector<double> argmin_prior;
  // Minimum over the simplex grid alone, corner points excluded.
  double grid_min_beta = 1.0;
};

// Brute-force validation oracle: minimizes beta over a regular simplex
// grid (compositions of grid_points into n parts, point masses excluded)
// together with all uniform corner-point priors of support 2..n. Only for
// desk-scale channels (n <= 4).
PriorOracleResult BetaPriorOracle(const Channel& channel,
                                  std::size_t grid_points);

// Minimum of beta over the corner points of support size k, for
// k = 2..n. Element [k-2] of the result corresponds to support size k.
std::vector<double> CornerPointMinima(const Channel& channel);

// The n x k channel whose first k rows form the k x k identity and whose
// remaining rows duplicate row k-1. On it, beta over two-point priors
// within the first k secrets is 0 while beta on the uniform prior is
// (1 - k/n) / (1 - 1/n), the equality case of the uniform-prior gap
// bound.
Channel UniformPriorGapWitness(std::size_t n, std::size_t k);

}  // namespace baysec

#endif  // BAYSEC_MINIMIZER_H_
