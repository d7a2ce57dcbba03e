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

// AVX2 kernel backend. This translation unit is compiled with -mavx2 -mfma
// and only dispatched to after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "baysec/kernels.h"

namespace baysec::kernels {

namespace {

inline double HorizontalSum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d shuf = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

inline __m256d AbsPd(__m256d v) {
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  return _mm256_andnot_pd(sign_mask, v);
}

}  // namespace

double L1DistanceAvx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d va = _mm256_loadu_pd(a + i);
    __m256d vb = _mm256_loadu_pd(b + i);
    acc = _mm256_add_pd(acc, AbsPd(_mm256_sub_pd(va, vb)));
  }
  double tail = 0.0;
  for (; i < n; ++i) {
    tail += std::abs(a[i] - b[i]);
  }
  return HorizontalSum(acc) + tail;
}

double MinOverlapAvx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d va = _mm256_loadu_pd(a + i);
    __m256d vb = _mm256_loadu_pd(b + i);
    acc = _mm256_add_pd(acc, _mm256_min_pd(va, vb));
  }
  double tail = 0.0;
  for (; i < n; ++i) {
    tail += std::min(a[i], b[i]);
  }
  return HorizontalSum(acc) + tail;
}

double MaxOverlapAvx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d va = _mm256_loadu_pd(a + i);
    __m256d vb = _mm256_loadu_pd(b + i);
    acc = _mm256_add_pd(acc, _mm256_max_pd(va, vb));
  }
  double tail = 0.0;
  for (; i < n; ++i) {
    tail += std::max(a[i], b[i]);
  }
  return HorizontalSum(acc) + tail;
}

void ScaledColMaxAvx2(double* acc, const double* row, double weight,
                      std::size_t n) {
  const __m256d w = _mm256_set1_pd(weight);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d va = _mm256_loadu_pd(acc + i);
    __m256d vr = _mm256_mul_pd(w, _mm256_loadu_pd(row + i));
    _mm256_storeu_pd(acc + i, _mm256_max_pd(va, vr));
  }
  for (; i < n; ++i) {
    acc[i] = std::max(acc[i], weight * row[i]);
  }
}

void MinMaxUpdateAvx2(double* max_acc, double* min_acc, const double* v,
                      std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vv = _mm256_loadu_pd(v + i);
    _mm256_storeu_pd(max_acc + i,
                     _mm256_max_pd(_mm256_loadu_pd(max_acc + i), vv));
    _mm256_storeu_pd(min_acc + i,
                     _mm256_min_pd(_mm256_loadu_pd(min_acc + i), vv));
  }
  for (; i < n; ++i) {
    max_acc[i] = std::max(max_acc[i], v[i]);
    min_acc[i] = std::min(min_acc[i], v[i]);
  }
}

}  // namespace baysec::kernels
