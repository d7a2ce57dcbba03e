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
#ifndef BAYSEC_BLACKBOX_H_
#define BAYSEC_BLACKBOX_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "baysec/channel.h"
#include "baysec/rng.h"

namespace baysec {

// A channel treated as an opaque sampler: feed a secret, get one
// observable draw back.
class SampleOracle {
 public:
  virtual ~SampleOracle() = default;

  virtual std::size_t Sample(std::size_t secret, Rng& rng) = 0;

  // Size of the output space when the oracle knows it; black boxes that
  // do not expose it leave estimation to the observed support.
  virtual std::optional<std::size_t> output_count() const {
    return std::nullopt;
  }
};

// In-process sampler for a known channel, drawing by row-CDF inversion
// from the caller's RNG.
class ChannelOracle : public SampleOracle {
 public:
  explicit ChannelOracle(const Channel& channel);

  std::size_t Sample(std::size_t secret, Rng& rng) override;
  std::optional<std::size_t> output_count() const override { return m_; }

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<double> row_cdfs_;  // row-major, n_ x m_
};

// Adapter for a true black box: a child process speaking a line-oriented
// protocol. For each query one line holding the secret index is written
// to its stdin and one line holding the observable index is read from
// its stdout. The child owns its randomness.
class ProcessOracle : public SampleOracle {
 public:
  explicit ProcessOracle(const std::string& command);
  ~ProcessOracle() override;

  ProcessOracle(const ProcessOracle&) = delete;
  ProcessOracle& operator=(const ProcessOracle&) = delete;

  std::size_t Sample(std::size_t secret, Rng& rng) override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Seeded (secret, observable) draws from the indistinguishability game:
// the secret comes from the prior, the observable from the oracle.
struct SampleBatch {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::uint64_t seed = 0;
  std::vector<double> prior_used;
  std::size_t count = 0;
};

SampleBatch SampleObservations(SampleOracle& oracle, const Prior& prior,
                               std::size_t count, std::uint64_t seed);

// Frequentist plug-in estimate of beta for the secret pair the batch was
// drawn under: beta_hat = R_hat / G_hat from the empirical joint over the
// observed support. Throws InsufficientSamples if either secret never
// appears.
double PluginBeta(const SampleBatch& batch, std::size_t a, std::size_t b);

struct PluginEstimate {
  double beta_hat = 0.0;
  double std_error = 0.0;
};

PluginEstimate PluginBetaWithError(const SampleBatch& batch, std::size_t a,
                                   std::size_t b);

struct EstimateReport {
  double beta_hat = 1.0;
  std::pair<std::size_t, std::size_t> pair{0, 1};
  double std_error = 0.0;
  std::size_t samples_per_pair = 0;
  std::size_t pruned_pairs = 0;
};

std::string EstimateReportToJson(const EstimateReport& report);

// Estimates beta_star by scanning secret pairs with per_pair_budget
// samples each. With pruning, pairs are scheduled by ascending triangle
// lower bound on their beta estimate and skipped once that bound exceeds
// the current minimum plus a slack of two standard errors.
EstimateReport PluginBetaStar(SampleOracle& oracle, std::size_t n,
                              std::size_t per_pair_budget, std::uint64_t seed,
                              bool prune);

enum class ReferenceStrategy { kMeanRow, kFixedRow, kUniformOutput };

struct BlackboxBound {
  double lower = 0.0;
  // Present only for the mean-row strategy, whose reference targets the
  // centroid and therefore lies in the convex hull of the rows.
  std::optional<double> upper;
  ReferenceStrategy strategy = ReferenceStrategy::kMeanRow;
};

// Black-box sandwich bound: estimates each row with budget/n draws,
// builds the reference distribution per strategy and returns
// 1 - max_s ||C_hat_s - q_hat||_1 (clamped at 0).
BlackboxBound BlackboxBetaStarBound(SampleOracle& oracle, std::size_t n,
                                    ReferenceStrategy strategy,
                                    std::size_t budget, std::uint64_t seed);

}  // namespace baysec

#endif  // BAYSEC_BLACKBOX_H_
