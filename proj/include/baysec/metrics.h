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
#ifndef BAYSEC_METRICS_H_
#define BAYSEC_METRICS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "baysec/channel.h"

namespace baysec {

// Error of the best prior-only guess: 1 - max_s pi_s.
double GuessingError(const Prior& prior);

// Expected error of the Bayes-optimal adversary after one observation:
// 1 - sum_o max_s C(s,o) * pi_s.
double BayesRisk(const Prior& prior, const Channel& channel);

// Multiplicative Bayes risk leakage beta = BayesRisk / GuessingError.
// 1 means no leakage, 0 means the adversary always wins. Undefined
// (DegeneratePrior) for point-mass priors; the limit there is 1.
double Beta(const Prior& prior, const Channel& channel);

// Multiplicative Bayes vulnerability leakage
// (1 - BayesRisk) / (1 - GuessingError), in [1, n].
double MultLeakage(const Prior& prior, const Channel& channel);

// Maximum multiplicative leakage, attained on the uniform prior:
// sum over outputs of the column maximum.
double Capacity(const Channel& channel);

// Recovers beta from a multiplicative leakage value for the same prior:
// (1 - max_pi * leakage) / (1 - max_pi).
double BetaFromLeakage(const Prior& prior, double leakage);

// Advantage of the optimal adversary restricted to secrets {a, b} under a
// uniform two-point prior. Equals the total variation between the rows
// and 1 - Beta(TwoPointPrior(a,b), channel).
double PairAdvantage(const Channel& channel, std::size_t a, std::size_t b);

// Dense gain/loss table over guesses x secrets. Gains must be
// non-negative; losses must lie in [0, 1].
class GainFunction {
 public:
  enum class Kind { kGain, kLoss };

  static GainFunction Gain(std::vector<std::vector<double>> table);
  static GainFunction Loss(std::vector<std::vector<double>> table);

  // 0-1 loss over n secrets: 0 iff the guess equals the secret. BetaLoss
  // with this table reproduces Beta exactly.
  static GainFunction ZeroOneLoss(std::size_t n);
  // Identity gain over n secrets: 1 iff the guess equals the secret.
  // GLeakage with this table reproduces MultLeakage exactly.
  static GainFunction IdentityGain(std::size_t n);

  Kind kind() const { return kind_; }
  std::size_t guess_count() const { return guesses_; }
  std::size_t secret_count() const { return secrets_; }
  double at(std::size_t w, std::size_t s) const {
    return table_[w * secrets_ + s];
  }

 private:
  GainFunction(Kind kind, std::size_t guesses, std::size_t secrets,
               std::vector<double> table)
      : kind_(kind), guesses_(guesses), secrets_(secrets),
        table_(std::move(table)) {}

  Kind kind_;
  std::size_t guesses_;
  std::size_t secrets_;
  std::vector<double> table_;  // row-major, guesses_ x secrets_
};

// Prior g-vulnerability: max_w sum_s pi_s g(w,s).
double GVulnerability(const Prior& prior, const GainFunction& gain);
// Posterior g-vulnerability: sum_o max_w sum_s pi_s C(s,o) g(w,s).
// Outputs with zero probability under the prior contribute nothing.
double PosteriorGVulnerability(const Prior& prior, const Channel& channel,
                               const GainFunction& gain);
// Multiplicative g-leakage: posterior / prior g-vulnerability.
double GLeakage(const Prior& prior, const Channel& channel,
                const GainFunction& gain);

// Prior l-risk: min_w sum_s pi_s l(w,s).
double LRisk(const Prior& prior, const GainFunction& loss);
// Posterior l-risk: sum_o min_w sum_s pi_s C(s,o) l(w,s).
double PosteriorLRisk(const Prior& prior, const Channel& channel,
                      const GainFunction& loss);
// Loss-generalized beta: posterior / prior l-risk.
double BetaLoss(const Prior& prior, const Channel& channel,
                const GainFunction& loss);

struct RiskBounds {
  double from_beta;      // beta_star * GuessingError(prior)
  double from_capacity;  // 1 - capacity * (1 - GuessingError(prior))
};

// Lower bounds on the Bayes risk for a prior of interest, derived from
// beta_star and the channel capacity. Each bound is clamped below at 0.
RiskBounds RiskLowerBounds(const Prior& prior, double beta_star,
                           double capacity);

struct MetricReport {
  double guessing_error = 0.0;
  double bayes_risk = 0.0;
  double bayes_vulnerability = 0.0;
  std::optional<double> beta;          // absent for point-mass priors
  std::optional<double> mult_leakage;
  std::vector<double> prior;
};

MetricReport ComputeMetricReport(const Prior& prior, const Channel& channel);

// JSON with schema_version 1. Throws if any field is NaN.
std::string MetricReportToJson(const MetricReport& report);

}  // namespace baysec

#endif  // BAYSEC_METRICS_H_
