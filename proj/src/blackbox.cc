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
#include "baysec/blackbox.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "baysec/error.h"
#include "baysec/kernels.h"

namespace baysec {

ChannelOracle::ChannelOracle(const Channel& channel)
    : n_(channel.secret_count()), m_(channel.observable_count()),
      row_cdfs_(n_ * m_) {
  for (std::size_t s = 0; s < n_; ++s) {
    double acc = 0.0;
    const auto row = channel.row(s);
    for (std::size_t o = 0; o < m_; ++o) {
      acc += row[o];
      row_cdfs_[s * m_ + o] = acc;
    }
    row_cdfs_[s * m_ + m_ - 1] = 1.0;  // guard against rounding
  }
}

std::size_t ChannelOracle::Sample(std::size_t secret, Rng& rng) {
  if (secret >= n_) {
    throw Error(ErrorCode::kIndexOutOfRange, "secret index out of range");
  }
  const double u = rng.UniformUnit();
  const double* cdf = row_cdfs_.data() + secret * m_;
  const double* pos = std::upper_bound(cdf, cdf + m_, u);
  return std::min<std::size_t>(pos - cdf, m_ - 1);
}

struct ProcessOracle::Impl {
  pid_t pid = -1;
  FILE* to_child = nullptr;
  FILE* from_child = nullptr;
};

ProcessOracle::ProcessOracle(const std::string& command)
    : impl_(std::make_unique<Impl>()) {
  int to_child[2];
  int from_child[2];
  if (pipe(to_child) != 0 || pipe(from_child) != 0) {
    throw Error(ErrorCode::kOracleFailure, "cannot create oracle pipes");
  }
  const pid_t pid = fork();
  if (pid < 0) {
    throw Error(ErrorCode::kOracleFailure, "cannot fork oracle process");
  }
  if (pid == 0) {
    dup2(to_child[0], STDIN_FILENO);
    dup2(from_child[1], STDOUT_FILENO);
    close(to_child[0]);
    close(to_child[1]);
    close(from_child[0]);
    close(from_child[1]);
    execl("/bin/sh", "sh", "-c", command.c_str(), nullptr);
    _exit(127);
  }
  close(to_child[0]);
  close(from_child[1]);
  impl_->pid = pid;
  impl_->to_child = fdopen(to_child[1], "w");
  impl_->from_child = fdopen(from_child[0], "r");
  if (!impl_->to_child || !impl_->from_child) {
    throw Error(ErrorCode::kOracleFailure, "cannot wrap oracle pipes");
  }
}

ProcessOracle::~ProcessOracle() {
  if (impl_->to_child) fclose(impl_->to_child);
  if (impl_->from_child) fclose(impl_->from_child);
  if (impl_->pid > 0) {
    int status = 0;
    waitpid(impl_->pid, &status, 0);
  }
}

std::size_t ProcessOracle::Sample(std::size_t secret, Rng& rng) {
  (void)rng;  // the child process owns its randomness
  if (std::fprintf(impl_->to_child, "%zu\n", secret) < 0 ||
      std::fflush(impl_->to_child) != 0) {
    throw Error(ErrorCode::kOracleFailure, "oracle process closed stdin");
  }
  char line[64];
  if (!std::fgets(line, sizeof(line), impl_->from_child)) {
    throw Error(ErrorCode::kOracleFailure, "oracle process closed stdout");
  }
  char* end = nullptr;
  const unsigned long value = std::strtoul(line, &end, 10);
  if (end == line) {
    throw Error(ErrorCode::kOracleFailure,
                "oracle produced a non-numeric response");
  }
  return static_cast<std::size_t>(value);
}

SampleBatch SampleObservations(SampleOracle& oracle, const Prior& prior,
                               std::size_t count, std::uint64_t seed) {
  if (count < 1) {
    throw Error(ErrorCode::kInsufficientSamples, "need at least one draw");
  }
  std::vector<double> prior_cdf(prior.size());
  double acc = 0.0;
  for (std::size_t s = 0; s < prior.size(); ++s) {
    acc += prior.at(s);
    prior_cdf[s] = acc;
  }
  prior_cdf.back() = 1.0;

  Rng rng(seed);
  SampleBatch batch;
  batch.seed = seed;
  batch.prior_used = prior.weights();
  batch.count = count;
  batch.pairs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double u = rng.UniformUnit();
    const std::size_t s =
        std::min<std::size_t>(std::upper_bound(prior_cdf.begin(),
                                               prior_cdf.end(), u) -
                                  prior_cdf.begin(),
                              prior.size() - 1);
    const std::size_t o = oracle.Sample(s, rng);
    batch.pairs.emplace_back(static_cast<std::uint32_t>(s),
                             static_cast<std::uint32_t>(o));
  }
  return batch;
}

PluginEstimate PluginBetaWithError(const SampleBatch& batch, std::size_t a,
                                   std::size_t b) {
  std::map<std::uint32_t, std::array<std::size_t, 2>> joint;
  std::size_t count_a = 0;
  std::size_t count_b = 0;
  for (const auto& [s, o] : batch.pairs) {
    if (s == a) {
      ++joint[o][0];
      ++count_a;
    } else if (s == b) {
      ++joint[o][1];
      ++count_b;
    }
  }
  if (count_a == 0 || count_b == 0) {
    throw Error(ErrorCode::kInsufficientSamples,
                "a secret of the pair was never observed");
  }
  const double total = static_cast<double>(count_a + count_b);
  double success = 0.0;
  for (const auto& [o, counts] : joint) {
    success += static_cast<double>(std::max(counts[0], counts[1]));
  }
  const double risk = 1.0 - success / total;
  const double guess_error =
      1.0 - static_cast<double>(std::max(count_a, count_b)) / total;
  PluginEstimate estimate;
  estimate.beta_hat = guess_error > 0.0 ? risk / guess_error : 1.0;
  estimate.beta_hat = std::clamp(estimate.beta_hat, 0.0, 1.0);
  // Binomial error on the risk estimate, scaled through the ratio.
  const double risk_var = std::max(risk * (1.0 - risk), 1.0 / total) / total;
  estimate.std_error =
      guess_error > 0.0 ? std::sqrt(risk_var) / guess_error : 0.0;
  return estimate;
}

double PluginBeta(const SampleBatch& batch, std::size_t a, std::size_t b) {
  return PluginBetaWithError(batch, a, b).beta_hat;
}

std::string EstimateReportToJson(const EstimateReport& report) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["beta_hat"] = report.beta_hat;
  j["pair"] = {report.pair.first, report.pair.second};
  j["std_error"] = report.std_error;
  j["samples_per_pair"] = report.samples_per_pair;
  j["pruned_pairs"] = report.pruned_pairs;
  return j.dump(2) + "\n";
}

namespace {

struct PairState {
  std::size_t a = 0;
  std::size_t b = 0;
  std::uint64_t stream = 0;
  bool evaluated = false;
  bool skipped = false;
  PluginEstimate estimate;
};

double TriangleLowerBound(const std::vector<PairState>& pairs, std::size_t n,
                          std::size_t a, std::size_t b,
                          const std::vector<int>& index_of) {
  double bound = 0.0;  // beta is non-negative
  for (std::size_t c = 0; c < n; ++c) {
    if (c == a || c == b) continue;
    const int ia = index_of[std::min(a, c) * n + std::max(a, c)];
    const int ib = index_of[std::min(b, c) * n + std::max(b, c)];
    if (ia < 0 || ib < 0) continue;
    if (!pairs[ia].evaluated || !pairs[ib].evaluated) continue;
    bound = std::max(bound, pairs[ia].estimate.beta_hat +
                                pairs[ib].estimate.beta_hat - 1.0);
  }
  return bound;
}

}  // namespace

EstimateReport PluginBetaStar(SampleOracle& oracle, std::size_t n,
                              std::size_t per_pair_budget, std::uint64_t seed,
                              bool prune) {
  if (n < 2) {
    throw Error(ErrorCode::kSingleSecret,
                "beta_star estimation needs at least two secrets");
  }
  if (per_pair_budget < 100) {
    throw Error(ErrorCode::kInsufficientSamples,
                "per-pair budget must be >= 100");
  }

  std::vector<PairState> pairs;
  std::vector<int> index_of(n * n, -1);
  for (std::size_t a = 0; a + 1 < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      index_of[a * n + b] = static_cast<int>(pairs.size());
      pairs.push_back(PairState{a, b, pairs.size(), false, false, {}});
    }
  }

  EstimateReport report;
  report.samples_per_pair = per_pair_budget;
  double best = std::numeric_limits<double>::infinity();
  double best_se = 0.0;
  std::pair<std::size_t, std::size_t> best_pair{0, 1};

  auto evaluate = [&](PairState& p) {
    const Prior prior = TwoPointPrior(n, p.a, p.b);
    SampleBatch batch = SampleObservations(oracle, prior, per_pair_budget,
                                           DeriveSeed(seed, p.stream));
    p.estimate = PluginBetaWithError(batch, p.a, p.b);
    p.evaluated = true;
    if (p.estimate.beta_hat < best) {
      best = p.estimate.beta_hat;
      best_se = p.estimate.std_error;
      best_pair = {p.a, p.b};
    }
  };

  if (!prune) {
    for (auto& p : pairs) evaluate(p);
  } else {
    // Schedule by ascending triangle lower bound so promising (small-beta)
    // pairs are measured early; a pair whose lower bound cannot reach the
    // current minimum within the statistical slack is never measured.
    std::size_t remaining = pairs.size();
    while (remaining > 0) {
      double best_bound = std::numeric_limits<double>::infinity();
      PairState* next = nullptr;
      for (auto& p : pairs) {
        if (p.evaluated || p.skipped) continue;
        const double bound = TriangleLowerBound(pairs, n, p.a, p.b, index_of);
        if (bound < best_bound) {
          best_bound = bound;
          next = &p;
        }
      }
      const double slack = 2.0 * best_se;
      if (best < std::numeric_limits<double>::infinity() &&
          best_bound > best + slack) {
        // Every remaining pair has an even larger bound.
        for (auto& p : pairs) {
          if (!p.evaluated && !p.skipped) {
            p.skipped = true;
            ++report.pruned_pairs;
          }
        }
        break;
      }
      evaluate(*next);
      --remaining;
    }
  }

  report.beta_hat = best;
  report.std_error = best_se;
  report.pair = best_pair;
  return report;
}

BlackboxBound BlackboxBetaStarBound(SampleOracle& oracle, std::size_t n,
                                    ReferenceStrategy strategy,
                                    std::size_t budget, std::uint64_t seed) {
  if (n < 1) {
    throw Error(ErrorCode::kSingleSecret, "need at least one secret");
  }
  if (budget < 100 * n) {
    throw Error(ErrorCode::kInsufficientSamples,
                "bound estimation needs a budget of at least 100 per secret");
  }
  const std::size_t per_row = budget / n;

  // Empirical rows over a shared output space, grown as outputs appear.
  std::size_t m = oracle.output_count().value_or(0);
  std::vector<std::vector<double>> rows(n);
  for (std::size_t s = 0; s < n; ++s) {
    rows[s].assign(m, 0.0);
    Rng rng(DeriveSeed(seed, s));
    for (std::size_t i = 0; i < per_row; ++i) {
      const std::size_t o = oracle.Sample(s, rng);
      if (o >= m) {
        m = o + 1;
        for (auto& row : rows) row.resize(m, 0.0);
      }
      rows[s][o] += 1.0;
    }
    for (double& v : rows[s]) v /= static_cast<double>(per_row);
  }
  for (auto& row : rows) row.resize(m, 0.0);

  std::vector<double> reference(m, 0.0);
  switch (strategy) {
    case ReferenceStrategy::kMeanRow:
      for (const auto& row : rows) {
        for (std::size_t o = 0; o < m; ++o) reference[o] += row[o];
      }
      for (double& v : reference) v /= static_cast<double>(n);
      break;
    case ReferenceStrategy::kFixedRow:
      reference = rows[0];
      break;
    case ReferenceStrategy::kUniformOutput:
      reference.assign(m, 1.0 / static_cast<double>(m));
      break;
  }

  double d = 0.0;
  for (const auto& row : rows) {
    d = std::max(d, kernels::l1_distance(row.data(), reference.data(), m));
  }

  BlackboxBound bound;
  bound.strategy = strategy;
  bound.lower = std::max(0.0, 1.0 - d);
  if (strategy == ReferenceStrategy::kMeanRow) {
    bound.upper = 1.0 - 0.5 * d;
  }
  return bound;
}

}  // namespace baysec
