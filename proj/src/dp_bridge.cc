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
#include "baysec/dp_bridge.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <json.hpp>

#include "baysec/error.h"

namespace baysec {

double LdpEpsilon(const Channel& channel) {
  const std::size_t n = channel.secret_count();
  const std::size_t m = channel.observable_count();
  double eps = 0.0;
  for (std::size_t o = 0; o < m; ++o) {
    double col_min = std::numeric_limits<double>::infinity();
    double col_max = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
      const double v = channel.at(s, o);
      col_min = std::min(col_min, v);
      col_max = std::max(col_max, v);
    }
    if (col_max == 0.0) continue;  // unreachable output
    if (col_min == 0.0) return std::numeric_limits<double>::infinity();
    eps = std::max(eps, std::log(col_max / col_min));
  }
  return eps;
}

ApproxLdpResult CheckApproxLdp(const Channel& channel, double epsilon,
                               double delta) {
  if (epsilon < 0.0) {
    throw Error(ErrorCode::kNegativeEpsilon, "epsilon must be >= 0");
  }
  if (delta < 0.0 || delta > 1.0) {
    throw Error(ErrorCode::kInvalidDelta, "delta must lie in [0, 1]");
  }
  const std::size_t n = channel.secret_count();
  const std::size_t m = channel.observable_count();
  const double scale = std::exp(epsilon);
  ApproxLdpResult result;
  result.worst_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      // The excess is maximized on O* = {o : C(i,o) > e^eps C(j,o)}.
      double excess = 0.0;
      for (std::size_t o = 0; o < m; ++o) {
        const double gap = channel.at(i, o) - scale * channel.at(j, o);
        if (gap > 0.0) excess += gap;
      }
      if (excess > result.worst_excess) {
        result.worst_excess = excess;
        result.worst_i = i;
        result.worst_j = j;
      }
    }
  }
  if (n < 2) result.worst_excess = 0.0;
  result.satisfied = result.worst_excess <= delta;
  return result;
}

double ZeroDeltaCorrespondence(double beta_star) {
  if (beta_star < 0.0 || beta_star > 1.0) {
    throw Error(ErrorCode::kInvalidParameters,
                "beta_star must lie in [0, 1]");
  }
  return 1.0 - beta_star;
}

double LdpBetaLowerBound(double epsilon) {
  if (epsilon < 0.0) {
    throw Error(ErrorCode::kNegativeEpsilon, "epsilon must be >= 0");
  }
  return 2.0 / (1.0 + std::exp(epsilon));
}

Channel ExtremalLdpChannel(std::size_t n, std::size_t m, double epsilon,
                           ExtremalVariant variant, std::size_t k) {
  if (n < 2 || m < 2) {
    throw Error(ErrorCode::kInvalidDimensions,
                "extremal channels need n, m >= 2");
  }
  if (epsilon < 0.0) {
    throw Error(ErrorCode::kNegativeEpsilon, "epsilon must be >= 0");
  }
  const double e = std::exp(epsilon);
  std::vector<std::vector<double>> rows(n, std::vector<double>(m, 0.0));

  if (variant == ExtremalVariant::kBlock) {
    if (k < 1 || k >= m) {
      throw Error(ErrorCode::kInvalidSplit, "block split needs 1 <= k < m");
    }
    if (n > 2) {
      // The uniform filler rows must satisfy the e^eps column-ratio
      // constraint against both blocks; outside this range the channel is
      // neither eps-LDP nor extremal.
      const double kd = static_cast<double>(k);
      const double md = static_cast<double>(m);
      if (kd * (1.0 + e) < md - 1e-9 || kd * (1.0 + e) > md * e + 1e-9) {
        throw Error(ErrorCode::kInvalidSplit,
                    "block split k must satisfy m/(1+e^eps) <= k <= "
                    "m*e^eps/(1+e^eps) when n > 2");
      }
    }
    const double high = e / (1.0 + e);
    const double low = 1.0 / (1.0 + e);
    for (std::size_t o = 0; o < m; ++o) {
      const bool left = o < k;
      const double left_width = static_cast<double>(k);
      const double right_width = static_cast<double>(m - k);
      rows[0][o] = left ? high / left_width : low / right_width;
      rows[1][o] = left ? low / left_width : high / right_width;
      for (std::size_t s = 2; s < n; ++s) {
        rows[s][o] = 1.0 / static_cast<double>(m);
      }
    }
  } else {
    if (n > 2 && m < 3) {
      throw Error(ErrorCode::kInvalidDimensions,
                  "corner variant needs m >= 3 when n > 2");
    }
    const double high = e / (1.0 + e);
    const double low = 1.0 / (1.0 + e);
    rows[0][0] = high;
    rows[0][1] = low;
    rows[1][0] = low;
    rows[1][1] = high;
    // Filler rows sit midway between the first two, with half the
    // remaining tv budget spilled onto column 3. The spill keeps every
    // filler within the (0,1)-pair diameter while putting positive mass
    // in a column where rows 0 and 1 are zero, which forces the LDP
    // epsilon to infinity.
    const double spill = (high - low) / 2.0;
    for (std::size_t s = 2; s < n; ++s) {
      rows[s][0] = 0.5 - spill / 2.0;
      rows[s][1] = 0.5 - spill / 2.0;
      rows[s][2] = spill;
    }
  }
  return Channel::FromRows(std::move(rows));
}

double DpCapacityUpperBound(double epsilon, std::size_t v,
                            std::size_t n_records) {
  if (v < 2 || n_records < 1 || epsilon < 0.0) {
    throw Error(ErrorCode::kInvalidParameters,
                "bound needs v >= 2, n_records >= 1, epsilon >= 0");
  }
  const double e = std::exp(epsilon);
  const double base =
      static_cast<double>(v) * e / (static_cast<double>(v) - 1.0 + e);
  return std::pow(base, static_cast<double>(n_records));
}

double DpBetaLowerBound(double epsilon, std::size_t v, std::size_t n_records,
                        double max_prior) {
  if (max_prior <= 0.0 || max_prior >= 1.0) {
    throw Error(ErrorCode::kInvalidParameters,
                "max_prior must lie in (0, 1)");
  }
  const double capacity = DpCapacityUpperBound(epsilon, v, n_records);
  const double bound = (1.0 - max_prior * capacity) / (1.0 - max_prior);
  return std::max(0.0, bound);
}

AdvantageBoundPair AdvantageBounds(double epsilon) {
  if (epsilon < 0.0) {
    throw Error(ErrorCode::kNegativeEpsilon, "epsilon must be >= 0");
  }
  const double e = std::exp(epsilon);
  return AdvantageBoundPair{(e - 1.0) / (e + 1.0), e - 1.0};
}

std::string DpBoundReportToJson(const DpBoundReport& report) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["epsilon"] = report.epsilon;
  j["delta"] = report.delta ? nlohmann::json(*report.delta)
                            : nlohmann::json(nullptr);
  j["beta_lower_bound"] = report.beta_lower_bound;
  j["bound_kind"] = report.bound_kind;
  if (report.v) j["v"] = *report.v;
  if (report.n_records) j["n_records"] = *report.n_records;
  if (report.max_prior) j["max_prior"] = *report.max_prior;
  return j.dump(2) + "\n";
}

}  // namespace baysec
