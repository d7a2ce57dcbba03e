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
#include "baysec/channel.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "baysec/error.h"
#include "baysec/kernels.h"

namespace baysec {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyMatrix: return "EmptyMatrix";
    case ErrorCode::kNegativeEntry: return "NegativeEntry";
    case ErrorCode::kRowSumViolation: return "RowSumViolation";
    case ErrorCode::kZeroRow: return "ZeroRow";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kEqualIndices: return "EqualIndices";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kDegeneratePrior: return "DegeneratePrior";
    case ErrorCode::kZeroPriorVulnerability: return "ZeroPriorVulnerability";
    case ErrorCode::kZeroPriorRisk: return "ZeroPriorRisk";
    case ErrorCode::kSingleSecret: return "SingleSecret";
    case ErrorCode::kObservableSpaceTooLarge: return "ObservableSpaceTooLarge";
    case ErrorCode::kSecretSpaceTooLarge: return "SecretSpaceTooLarge";
    case ErrorCode::kGridTooCoarse: return "GridTooCoarse";
    case ErrorCode::kInvalidK: return "InvalidK";
    case ErrorCode::kSecretSpaceMismatch: return "SecretSpaceMismatch";
    case ErrorCode::kInnerDimensionMismatch: return "InnerDimensionMismatch";
    case ErrorCode::kInvalidN: return "InvalidN";
    case ErrorCode::kNegativeEpsilon: return "NegativeEpsilon";
    case ErrorCode::kInvalidScale: return "InvalidScale";
    case ErrorCode::kTooFewSecrets: return "TooFewSecrets";
    case ErrorCode::kInvalidDelta: return "InvalidDelta";
    case ErrorCode::kInvalidGrid: return "InvalidGrid";
    case ErrorCode::kInvalidParameters: return "InvalidParameters";
    case ErrorCode::kInvalidDimensions: return "InvalidDimensions";
    case ErrorCode::kInvalidSplit: return "InvalidSplit";
    case ErrorCode::kInvalidReference: return "InvalidReference";
    case ErrorCode::kInsufficientSamples: return "InsufficientSamples";
    case ErrorCode::kOracleFailure: return "OracleFailure";
    case ErrorCode::kInvalidDistribution: return "InvalidDistribution";
    case ErrorCode::kSingularDebias: return "SingularDebias";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "UnknownError";
}

Channel Channel::FromRows(std::vector<std::vector<double>> rows,
                          bool renormalize) {
  if (rows.empty() || rows.front().empty()) {
    throw Error(ErrorCode::kEmptyMatrix, "channel matrix is empty");
  }
  const std::size_t n = rows.size();
  const std::size_t m = rows.front().size();
  std::vector<double> data;
  data.reserve(n * m);
  for (std::size_t s = 0; s < n; ++s) {
    const auto& row = rows[s];
    if (row.size() != m) {
      throw Error(ErrorCode::kLengthMismatch,
                  "row " + std::to_string(s) + " has " +
                      std::to_string(row.size()) + " entries, expected " +
                      std::to_string(m));
    }
    double sum = 0.0;
    for (double v : row) {
      if (!(v >= 0.0)) {
        throw Error(ErrorCode::kNegativeEntry,
                    "negative or NaN entry in row " + std::to_string(s));
      }
      sum += v;
    }
    if (renormalize) {
      if (sum <= 0.0) {
        throw Error(ErrorCode::kZeroRow,
                    "cannot renormalize all-zero row " + std::to_string(s));
      }
      for (double v : row) {
        data.push_back(v / sum);
      }
    } else {
      if (std::abs(sum - 1.0) > kStochasticTolerance) {
        throw Error(ErrorCode::kRowSumViolation,
                    "row " + std::to_string(s) + " sums to " +
                        std::to_string(sum));
      }
      data.insert(data.end(), row.begin(), row.end());
    }
  }
  return Channel(std::move(data), n, m);
}

void Channel::set_secret_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n_) {
    throw Error(ErrorCode::kLengthMismatch,
                "secret label count does not match secret count");
  }
  secret_labels_ = std::move(labels);
}

void Channel::set_observable_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != m_) {
    throw Error(ErrorCode::kLengthMismatch,
                "observable label count does not match observable count");
  }
  observable_labels_ = std::move(labels);
}

Prior Prior::FromWeights(std::vector<double> weights) {
  if (weights.empty()) {
    throw Error(ErrorCode::kEmptyMatrix, "prior has no entries");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || w > 1.0) {
      throw Error(ErrorCode::kNegativeEntry,
                  "prior entries must lie in [0, 1]");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > kStochasticTolerance) {
    throw Error(ErrorCode::kRowSumViolation,
                "prior sums to " + std::to_string(sum));
  }
  return Prior(std::move(weights));
}

double Prior::max_weight() const {
  return *std::max_element(weights_.begin(), weights_.end());
}

std::size_t Prior::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(weights_.begin(), weights_.end(),
                    [](double w) { return w > 0.0; }));
}

Prior UniformPrior(std::size_t n) {
  if (n == 0) {
    throw Error(ErrorCode::kEmptyMatrix, "prior has no entries");
  }
  return Prior::FromWeights(std::vector<double>(n, 1.0 / n));
}

Prior TwoPointPrior(std::size_t n, std::size_t a, std::size_t b) {
  if (a >= n || b >= n) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "two-point prior indices out of range");
  }
  if (a == b) {
    throw Error(ErrorCode::kEqualIndices,
                "two-point prior needs distinct secrets");
  }
  std::vector<double> weights(n, 0.0);
  weights[a] = 0.5;
  weights[b] = 0.5;
  return Prior::FromWeights(std::move(weights));
}

double TvDistance(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "distributions have different lengths");
  }
  return 0.5 * kernels::l1_distance(p.data(), q.data(), p.size());
}

double RowTvDistance(const Channel& channel, std::size_t a, std::size_t b) {
  return TvDistance(channel.row(a), channel.row(b));
}

}  // namespace baysec
