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
#include "baysec/kernels.h"

#include <algorithm>
#include <cmath>

namespace baysec::kernels {

double L1DistanceRef(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += std::abs(a[i] - b[i]);
  }
  return acc;
}

double MinOverlapRef(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += std::min(a[i], b[i]);
  }
  return acc;
}

double MaxOverlapRef(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += std::max(a[i], b[i]);
  }
  return acc;
}

void ScaledColMaxRef(double* acc, const double* row, double weight,
                     std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    acc[i] = std::max(acc[i], weight * row[i]);
  }
}

void MinMaxUpdateRef(double* max_acc, double* min_acc, const double* v,
                     std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    max_acc[i] = std::max(max_acc[i], v[i]);
    min_acc[i] = std::min(min_acc[i], v[i]);
  }
}

}  // namespace baysec::kernels
