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
#include "baysec/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <json.hpp>

#include "baysec/error.h"
#include "baysec/kernels.h"

namespace baysec {

namespace {

constexpr double kRoundingSlack = 1e-12;

void CheckDimensions(const Prior& prior, const Channel& channel) {
  if (prior.size() != channel.secret_count()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "prior length " + std::to_string(prior.size()) +
                    " does not match secret count " +
                    std::to_string(channel.secret_count()));
  }
}

double ClampUnitInterval(double v) {
  if (v < 0.0 && v >= -kRoundingSlack) return 0.0;
  if (v > 1.0 && v <= 1.0 + kRoundingSlack) return 1.0;
  return v;
}

}  // namespace

double GuessingError(const Prior& prior) {
  return 1.0 - prior.max_weight();
}

double BayesRisk(const Prior& prior, const Channel& channel) {
  CheckDimensions(prior, channel);
  const std::size_t m = channel.observable_count();
  std::vector<double> col_max(m, 0.0);
  for (std::size_t s = 0; s < prior.size(); ++s) {
    const double w = prior.at(s);
    if (w == 0.0) continue;
    kernels::scaled_colmax(col_max.data(), channel.row(s).data(), w, m);
  }
  const double success =
      std::accumulate(col_max.begin(), col_max.end(), 0.0);
  return ClampUnitInterval(1.0 - success);
}

double Beta(const Prior& prior, const Channel& channel) {
  const double g = GuessingError(prior);
  if (g <= 0.0) {
    throw Error(ErrorCode::kDegeneratePrior,
                "beta is undefined for a point-mass prior");
  }
  return ClampUnitInterval(BayesRisk(prior, channel) / g);
}

double MultLeakage(const Prior& prior, const Channel& channel) {
  const double prior_vulnerability = prior.max_weight();
  return (1.0 - BayesRisk(prior, channel)) / prior_vulnerability;
}

double Capacity(const Channel& channel) {
  const std::size_t m = channel.observable_count();
  std::vector<double> col_max(m, 0.0);
  for (std::size_t s = 0; s < channel.secret_count(); ++s) {
    kernels::scaled_colmax(col_max.data(), channel.row(s).data(), 1.0, m);
  }
  return std::accumulate(col_max.begin(), col_max.end(), 0.0);
}

double BetaFromLeakage(const Prior& prior, double leakage) {
  const double max_pi = prior.max_weight();
  if (max_pi >= 1.0) {
    throw Error(ErrorCode::kDegeneratePrior,
                "beta is undefined for a point-mass prior");
  }
  return (1.0 - max_pi * leakage) / (1.0 - max_pi);
}

double PairAdvantage(const Channel& channel, std::size_t a, std::size_t b) {
  if (a >= channel.secret_count() || b >= channel.secret_count()) {
    throw Error(ErrorCode::kIndexOutOfRange, "secret index out of range");
  }
  if (a == b) {
    throw Error(ErrorCode::kEqualIndices,
                "advantage needs two distinct secrets");
  }
  return RowTvDistance(channel, a, b);
}

GainFunction GainFunction::Gain(std::vector<std::vector<double>> table) {
  if (table.empty() || table.front().empty()) {
    throw Error(ErrorCode::kEmptyMatrix, "gain table is empty");
  }
  const std::size_t guesses = table.size();
  const std::size_t secrets = table.front().size();
  std::vector<double> flat;
  flat.reserve(guesses * secrets);
  for (const auto& row : table) {
    if (row.size() != secrets) {
      throw Error(ErrorCode::kLengthMismatch, "ragged gain table");
    }
    for (double v : row) {
      if (!(v >= 0.0)) {
        throw Error(ErrorCode::kNegativeEntry,
                    "gain entries must be non-negative");
      }
      flat.push_back(v);
    }
  }
  return GainFunction(Kind::kGain, guesses, secrets, std::move(flat));
}

GainFunction GainFunction::Loss(std::vector<std::vector<double>> table) {
  if (table.empty() || table.front().empty()) {
    throw Error(ErrorCode::kEmptyMatrix, "loss table is empty");
  }
  const std::size_t guesses = table.size();
  const std::size_t secrets = table.front().size();
  std::vector<double> flat;
  flat.reserve(guesses * secrets);
  for (const auto& row : table) {
    if (row.size() != secrets) {
      throw Error(ErrorCode::kLengthMismatch, "ragged loss table");
    }
    for (double v : row) {
      if (!(v >= 0.0) || v > 1.0) {
        throw Error(ErrorCode::kNegativeEntry,
                    "loss entries must lie in [0, 1]");
      }
      flat.push_back(v);
    }
  }
  return GainFunction(Kind::kLoss, guesses, secrets, std::move(flat));
}

GainFunction GainFunction::ZeroOneLoss(std::size_t n) {
  std::vector<std::vector<double>> table(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i) table[i][i] = 0.0;
  return Loss(std::move(table));
}

GainFunction GainFunction::IdentityGain(std::size_t n) {
  std::vector<std::vector<double>> table(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) table[i][i] = 1.0;
  return Gain(std::move(table));
}

namespace {

void CheckGainDimensions(const Prior& prior, const GainFunction& g) {
  if (g.secret_count() != prior.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "gain/loss table secret count does not match prior");
  }
}

// max_w (or min_w) of sum_s weight_s * table(w,s), where weight is either
// the prior itself or the prior reweighted by a channel column.
template <typename Better>
double BestGuessValue(const GainFunction& table,
                      const std::vector<double>& weights, Better better) {
  double best = 0.0;
  bool first = true;
  for (std::size_t w = 0; w < table.guess_count(); ++w) {
    double v = 0.0;
    for (std::size_t s = 0; s < table.secret_count(); ++s) {
      v += weights[s] * table.at(w, s);
    }
    if (first || better(v, best)) {
      best = v;
      first = false;
    }
  }
  return best;
}

template <typename Better>
double PosteriorValue(const Prior& prior, const Channel& channel,
                      const GainFunction& table, Better better) {
  CheckGainDimensions(prior, table);
  CheckDimensions(prior, channel);
  const std::size_t n = channel.secret_count();
  const std::size_t m = channel.observable_count();
  std::vector<double> weights(n, 0.0);
  double total = 0.0;
  for (std::size_t o = 0; o < m; ++o) {
    double mass = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
      weights[s] = prior.at(s) * channel.at(s, o);
      mass += weights[s];
    }
    if (mass == 0.0) continue;
    total += BestGuessValue(table, weights, better);
  }
  return total;
}

}  // namespace

double GVulnerability(const Prior& prior, const GainFunction& gain) {
  if (gain.kind() != GainFunction::Kind::kGain) {
    throw Error(ErrorCode::kInvalidParameters,
                "GVulnerability requires a gain function");
  }
  CheckGainDimensions(prior, gain);
  return BestGuessValue(gain, prior.weights(), std::greater<double>());
}

double PosteriorGVulnerability(const Prior& prior, const Channel& channel,
                               const GainFunction& gain) {
  if (gain.kind() != GainFunction::Kind::kGain) {
    throw Error(ErrorCode::kInvalidParameters,
                "PosteriorGVulnerability requires a gain function");
  }
  return PosteriorValue(prior, channel, gain, std::greater<double>());
}

double GLeakage(const Prior& prior, const Channel& channel,
                const GainFunction& gain) {
  const double prior_vulnerability = GVulnerability(prior, gain);
  if (prior_vulnerability <= 0.0) {
    throw Error(ErrorCode::kZeroPriorVulnerability,
                "prior g-vulnerability is zero");
  }
  return PosteriorGVulnerability(prior, channel, gain) / prior_vulnerability;
}

double LRisk(const Prior& prior, const GainFunction& loss) {
  if (loss.kind() != GainFunction::Kind::kLoss) {
    throw Error(ErrorCode::kInvalidParameters,
                "LRisk requires a loss function");
  }
  CheckGainDimensions(prior, loss);
  return BestGuessValue(loss, prior.weights(), std::less<double>());
}

double PosteriorLRisk(const Prior& prior, const Channel& channel,
                      const GainFunction& loss) {
  if (loss.kind() != GainFunction::Kind::kLoss) {
    throw Error(ErrorCode::kInvalidParameters,
                "PosteriorLRisk requires a loss function");
  }
  return PosteriorValue(prior, channel, loss, std::less<double>());
}

double BetaLoss(const Prior& prior, const Channel& channel,
                const GainFunction& loss) {
  const double prior_risk = LRisk(prior, loss);
  if (prior_risk <= 0.0) {
    throw Error(ErrorCode::kZeroPriorRisk, "prior l-risk is zero");
  }
  return PosteriorLRisk(prior, channel, loss) / prior_risk;
}

RiskBounds RiskLowerBounds(const Prior& prior, double beta_star,
                           double capacity) {
  const double g = GuessingError(prior);
  RiskBounds bounds;
  bounds.from_beta = std::max(0.0, beta_star * g);
  bounds.from_capacity = std::max(0.0, 1.0 - capacity * (1.0 - g));
  return bounds;
}

MetricReport ComputeMetricReport(const Prior& prior, const Channel& channel) {
  MetricReport report;
  report.guessing_error = GuessingError(prior);
  report.bayes_risk = BayesRisk(prior, channel);
  report.bayes_vulnerability = 1.0 - report.bayes_risk;
  if (report.guessing_error > 0.0) {
    report.beta = Beta(prior, channel);
  }
  report.mult_leakage = MultLeakage(prior, channel);
  report.prior = prior.weights();
  return report;
}

std::string MetricReportToJson(const MetricReport& report) {
  auto check = [](double v) {
    if (std::isnan(v)) {
      throw Error(ErrorCode::kInvalidParameters,
                  "NaN is not representable in a metric report");
    }
    return v;
  };
  nlohmann::json j;
  j["schema_version"] = 1;
  j["guessing_error"] = check(report.guessing_error);
  j["bayes_risk"] = check(report.bayes_risk);
  j["bayes_vulnerability"] = check(report.bayes_vulnerability);
  j["beta"] = report.beta ? nlohmann::json(check(*report.beta))
                          : nlohmann::json(nullptr);
  j["mult_leakage"] = report.mult_leakage
                          ? nlohmann::json(check(*report.mult_leakage))
                          : nlohmann::json(nullptr);
  j["prior"] = report.prior;
  return j.dump(2) + "\n";
}

}  // namespace baysec
