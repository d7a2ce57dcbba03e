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

#include <random>
#include <vector>

#include "gtest/gtest.h"

namespace baysec::kernels {
namespace {

std::vector<double> RandomVector(std::size_t n, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(gen);
  return v;
}

TEST(KernelsTest, ReferenceValuesOnSmallInputs) {
  const double a[] = {0.9, 0.1, 0.0};
  const double b[] = {0.5, 0.5, 0.0};
  EXPECT_DOUBLE_EQ(L1DistanceRef(a, b, 3), 0.8);
  EXPECT_DOUBLE_EQ(MinOverlapRef(a, b, 3), 0.6);
  EXPECT_DOUBLE_EQ(MaxOverlapRef(a, b, 3), 1.4);
}

TEST(KernelsTest, ScaledColMaxAccumulates) {
  double acc[3] = {0.0, 0.0, 0.0};
  const double row1[] = {0.9, 0.1, 0.0};
  const double row2[] = {0.5, 0.5, 0.0};
  ScaledColMaxRef(acc, row1, 0.5, 3);
  ScaledColMaxRef(acc, row2, 0.5, 3);
  EXPECT_DOUBLE_EQ(acc[0], 0.45);
  EXPECT_DOUBLE_EQ(acc[1], 0.25);
  EXPECT_DOUBLE_EQ(acc[2], 0.0);
}

TEST(KernelsTest, BackendSelectionRoundTrips) {
  const std::string original = ActiveBackend();
  EXPECT_EQ(SelectBackend("scalar"), "scalar");
  EXPECT_EQ(ActiveBackend(), "scalar");
  SelectBackend("auto");
  EXPECT_EQ(ActiveBackend(), original);
}

#if defined(__AVX2__) || defined(__x86_64__)
// Backend equivalence on awkward lengths (vector width remainders).
TEST(KernelsTest, BackendsAgreeOnRandomInputs) {
  if (SelectBackend("auto") != "avx2") {
    GTEST_SKIP() << "no AVX2 backend on this host";
  }
  for (std::size_t n : {1u, 3u, 4u, 7u, 8u, 129u, 1000u, 2201u}) {
    const auto a = RandomVector(n, 17 + static_cast<unsigned>(n));
    const auto b = RandomVector(n, 91 + static_cast<unsigned>(n));
    EXPECT_NEAR(l1_distance(a.data(), b.data(), n),
                L1DistanceRef(a.data(), b.data(), n), 1e-12);
    EXPECT_NEAR(min_overlap(a.data(), b.data(), n),
                MinOverlapRef(a.data(), b.data(), n), 1e-12);
    EXPECT_NEAR(max_overlap(a.data(), b.data(), n),
                MaxOverlapRef(a.data(), b.data(), n), 1e-12);

    auto acc_simd = RandomVector(n, 5);
    auto acc_ref = acc_simd;
    scaled_colmax(acc_simd.data(), a.data(), 0.37, n);
    ScaledColMaxRef(acc_ref.data(), a.data(), 0.37, n);
    EXPECT_EQ(acc_simd, acc_ref);

    auto max_simd = RandomVector(n, 7);
    auto min_simd = RandomVector(n, 9);
    auto max_ref = max_simd;
    auto min_ref = min_simd;
    minmax_update(max_simd.data(), min_simd.data(), b.data(), n);
    MinMaxUpdateRef(max_ref.data(), min_ref.data(), b.data(), n);
    EXPECT_EQ(max_simd, max_ref);
    EXPECT_EQ(min_simd, min_ref);
  }
  SelectBackend("auto");
}
#endif

}  // namespace
}  // namespace baysec::kernels
