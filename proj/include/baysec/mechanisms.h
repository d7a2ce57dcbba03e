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
#ifndef BAYSEC_MECHANISMS_H_
#define BAYSEC_MECHANISMS_H_

#include <cstddef>
#include <vector>

#include "baysec/channel.h"

namespace baysec {

// Randomized response over n values: diagonal e^eps / (n + e^eps - 1),
// off-diagonal 1 / (n + e^eps - 1).
Channel RrChannel(std::size_t n, double epsilon);

// Closed-form Bayes security of randomized response:
// n / (e^eps + n - 1).
double RrBetaStar(std::size_t n, double epsilon);

// Closed-form Bayes security of the Laplace mechanism on real secret
// locations: exp(-spread / (2 * lambda)) with spread the maximal
// |s_i - s_j|.
double LaplaceBetaStar(const std::vector<double>& secrets, double lambda);

// Laplace mechanism calibrated to eps-DP (scale = sensitivity / eps):
// exp(-eps / 2), independent of the sensitivity.
double LaplaceDpBetaStar(double epsilon);

// Closed-form Bayes security of the Gaussian mechanism:
// 1 - (Phi(alpha) - Phi(-alpha)) with alpha = spread / (2 * sigma).
double GaussianBetaStar(const std::vector<double>& secrets, double sigma);

// Gaussian mechanism calibrated to (eps, delta)-DP:
// alpha = eps / (2 * sqrt(2 * ln(1.25 / delta))). The standard
// calibration is only valid for eps < 1; larger values are accepted but
// the result should be read as the formula value, not a DP guarantee.
double GaussianDpBetaStar(double epsilon, double delta);

// Standard normal CDF, computed from the error function.
double NormalCdf(double x);

enum class NoiseKind { kLaplace, kGaussian };

struct GridSpec {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t bins = 0;
};

struct DiscretizedMechanism {
  Channel channel;
  // Set when the grid does not cover every secret +- 8 scale units; the
  // absorbed tail mass then carries noticeable probability.
  bool truncation_warning = false;
};

// Row s holds the probability of secret s plus additive noise falling in
// each grid cell (CDF differences); the first and last cells absorb the
// tails. A numeric cross-check oracle for the closed forms above.
DiscretizedMechanism DiscretizeAdditiveMechanism(
    const std::vector<double>& secrets, NoiseKind noise, double scale,
    const GridSpec& grid);

// Channel with two-sided geometric rows: entry (s, o) proportional to
// exp(-nu * |o - s|), secrets sitting on the first n cells of the output
// grid.
Channel GeometricChannel(std::size_t n, std::size_t m, double nu);

}  // namespace baysec

#endif  // BAYSEC_MECHANISMS_H_
