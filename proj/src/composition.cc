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
#include "baysec/composition.h"

#include <vector>

#include "baysec/error.h"

namespace baysec {

Channel Parallel(const Channel& c1, const Channel& c2) {
  if (c1.secret_count() != c2.secret_count()) {
    throw Error(ErrorCode::kSecretSpaceMismatch,
                "parallel composition needs a shared secret space");
  }
  const std::size_t n = c1.secret_count();
  const std::size_t m1 = c1.observable_count();
  const std::size_t m2 = c2.observable_count();
  std::vector<std::vector<double>> rows(n, std::vector<double>(m1 * m2));
  for (std::size_t s = 0; s < n; ++s) {
    const auto r1 = c1.row(s);
    const auto r2 = c2.row(s);
    auto& out = rows[s];
    for (std::size_t o1 = 0; o1 < m1; ++o1) {
      const double v = r1[o1];
      for (std::size_t o2 = 0; o2 < m2; ++o2) {
        out[o1 * m2 + o2] = v * r2[o2];
      }
    }
  }
  return Channel::FromRows(std::move(rows));
}

Channel Cascade(const Channel& c1, const Channel& c2) {
  if (c1.observable_count() != c2.secret_count()) {
    throw Error(ErrorCode::kInnerDimensionMismatch,
                "cascade needs c1 outputs to match c2 inputs");
  }
  const std::size_t n = c1.secret_count();
  const std::size_t inner = c1.observable_count();
  const std::size_t m = c2.observable_count();
  std::vector<std::vector<double>> rows(n, std::vector<double>(m, 0.0));
  for (std::size_t s = 0; s < n; ++s) {
    const auto r1 = c1.row(s);
    auto& out = rows[s];
    for (std::size_t t = 0; t < inner; ++t) {
      const double w = r1[t];
      if (w == 0.0) continue;
      const auto r2 = c2.row(t);
      for (std::size_t o = 0; o < m; ++o) {
        out[o] += w * r2[o];
      }
    }
  }
  return Channel::FromRows(std::move(rows));
}

Channel SelfParallel(const Channel& channel, std::size_t k) {
  if (k == 0) {
    throw Error(ErrorCode::kInvalidParameters,
                "self-parallel needs k >= 1");
  }
  Channel result = channel;
  for (std::size_t i = 1; i < k; ++i) {
    result = Parallel(result, channel);
  }
  return result;
}

}  // namespace baysec
