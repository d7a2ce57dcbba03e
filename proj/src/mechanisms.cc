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
#include "baysec/mechanisms.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "baysec/error.h"

namespace baysec {

namespace {

double SecretSpread(const std::vector<double>& secrets) {
  if (secrets.size() < 2) {
    throw Error(ErrorCode::kTooFewSecrets,
                "additive mechanisms need at least two secret locations");
  }
  const auto [lo, hi] = std::minmax_element(secrets.begin(), secrets.end());
  return *hi - *lo;
}

double LaplaceCdf(double x, double mu, double scale) {
  const double z = (x - mu) / scale;
  return z < 0.0 ? 0.5 * std::exp(z) : 1.0 - 0.5 * std::exp(-z);
}

}  // namespace

Channel RrChannel(std::size_t n, double epsilon) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidN, "randomized response needs n >= 2");
  }
  if (epsilon < 0.0) {
    throw Error(ErrorCode::kNegativeEpsilon, "epsilon must be >= 0");
  }
  const double denom = static_cast<double>(n) + std::exp(epsilon) - 1.0;
  const double off = 1.0 / denom;
  const double diag = std::exp(epsilon) / denom;
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, off));
  for (std::size_t s = 0; s < n; ++s) rows[s][s] = diag;
  return Channel::FromRows(std::move(rows), /*renormalize=*/true);
}

double RrBetaStar(std::size_t n, double epsilon) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidN, "randomized response needs n >= 2");
  }
  if (epsilon < 0.0) {
    throw Error(ErrorCode::kNegativeEpsilon, "epsilon must be >= 0");
  }
  return static_cast<double>(n) /
         (std::exp(epsilon) + static_cast<double>(n) - 1.0);
}

double LaplaceBetaStar(const std::vector<double>& secrets, double lambda) {
  if (lambda <= 0.0) {
    throw Error(ErrorCode::kInvalidScale, "laplace scale must be positive");
  }
  return std::exp(-SecretSpread(secrets) / (2.0 * lambda));
}

double LaplaceDpBetaStar(double epsilon) {
  if (epsilon < 0.0) {
    throw Error(ErrorCode::kNegativeEpsilon, "epsilon must be >= 0");
  }
  return std::exp(-epsilon / 2.0);
}

double NormalCdf(double x) {
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double GaussianBetaStar(const std::vector<double>& secrets, double sigma) {
  if (sigma <= 0.0) {
    throw Error(ErrorCode::kInvalidScale, "gaussian scale must be positive");
  }
  const double alpha = SecretSpread(secrets) / (2.0 * sigma);
  return 1.0 - (NormalCdf(alpha) - NormalCdf(-alpha));
}

double GaussianDpBetaStar(double epsilon, double delta) {
  if (epsilon <= 0.0) {
    throw Error(ErrorCode::kNegativeEpsilon, "epsilon must be positive");
  }
  if (delta <= 0.0 || delta >= 1.0) {
    throw Error(ErrorCode::kInvalidDelta, "delta must lie in (0, 1)");
  }
  const double alpha = epsilon / (2.0 * std::sqrt(2.0 * std::log(1.25 / delta)));
  return 1.0 - (NormalCdf(alpha) - NormalCdf(-alpha));
}

DiscretizedMechanism DiscretizeAdditiveMechanism(
    const std::vector<double>& secrets, NoiseKind noise, double scale,
    const GridSpec& grid) {
  if (scale <= 0.0) {
    throw Error(ErrorCode::kInvalidScale, "noise scale must be positive");
  }
  SecretSpread(secrets);  // validates the secret list
  if (grid.bins < 1 || !(grid.hi > grid.lo)) {
    throw Error(ErrorCode::kInvalidGrid,
                "grid needs hi > lo and at least one bin");
  }

  const auto [lo_it, hi_it] =
      std::minmax_element(secrets.begin(), secrets.end());
  const bool truncated =
      (*lo_it - 8.0 * scale < grid.lo) || (*hi_it + 8.0 * scale > grid.hi);

  auto cdf = [&](double x, double mu) {
    return noise == NoiseKind::kLaplace
               ? LaplaceCdf(x, mu, scale)
               : NormalCdf((x - mu) / scale);
  };

  const double width = (grid.hi - grid.lo) / static_cast<double>(grid.bins);
  std::vector<std::vector<double>> rows;
  rows.reserve(secrets.size());
  for (double mu : secrets) {
    std::vector<double> row(grid.bins);
    double prev = cdf(grid.lo, mu);
    for (std::size_t i = 0; i < grid.bins; ++i) {
      const double edge =
          (i + 1 == grid.bins) ? grid.hi
                               : grid.lo + width * static_cast<double>(i + 1);
      const double cur = cdf(edge, mu);
      row[i] = cur - prev;
      prev = cur;
    }
    // Tails absorbed into the boundary cells keep the row stochastic.
    row.front() += cdf(grid.lo, mu);
    row.back() += 1.0 - prev;
    rows.push_back(std::move(row));
  }
  DiscretizedMechanism result{
      Channel::FromRows(std::move(rows), /*renormalize=*/true), truncated};
  return result;
}

Channel GeometricChannel(std::size_t n, std::size_t m, double nu) {
  if (n < 2 || m < n || !(nu > 0.0)) {
    throw Error(ErrorCode::kInvalidParameters,
                "geometric channel needs n >= 2, m >= n, nu > 0");
  }
  std::vector<std::vector<double>> rows(n, std::vector<double>(m));
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t o = 0; o < m; ++o) {
      rows[s][o] = std::exp(
          -nu * std::abs(static_cast<double>(o) - static_cast<double>(s)));
    }
  }
  return Channel::FromRows(std::move(rows), /*renormalize=*/true);
}

}  // namespace baysec
