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

#include <mutex>

namespace baysec::kernels {

Reduce2Fn l1_distance = L1DistanceRef;
Reduce2Fn min_overlap = MinOverlapRef;
Reduce2Fn max_overlap = MaxOverlapRef;
ColMaxFn scaled_colmax = ScaledColMaxRef;
MinMaxFn minmax_update = MinMaxUpdateRef;

namespace {

std::string g_backend = "scalar";
std::once_flag g_auto_select_once;

bool CpuSupportsAvx2() {
#if defined(BAYSEC_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

void WireScalar() {
  l1_distance = L1DistanceRef;
  min_overlap = MinOverlapRef;
  max_overlap = MaxOverlapRef;
  scaled_colmax = ScaledColMaxRef;
  minmax_update = MinMaxUpdateRef;
  g_backend = "scalar";
}

#if defined(BAYSEC_HAVE_AVX2)
void WireAvx2() {
  l1_distance = L1DistanceAvx2;
  min_overlap = MinOverlapAvx2;
  max_overlap = MaxOverlapAvx2;
  scaled_colmax = ScaledColMaxAvx2;
  minmax_update = MinMaxUpdateAvx2;
  g_backend = "avx2";
}
#endif

std::string Select(const std::string& preference) {
#if defined(BAYSEC_HAVE_AVX2)
  if (preference == "avx2" || (preference == "auto" && CpuSupportsAvx2())) {
    WireAvx2();
    return g_backend;
  }
#endif
  (void)CpuSupportsAvx2;
  WireScalar();
  return g_backend;
}

}  // namespace

std::string SelectBackend(const std::string& preference) {
  return Select(preference);
}

std::string ActiveBackend() {
  std::call_once(g_auto_select_once, [] { Select("auto"); });
  return g_backend;
}

namespace {
// Auto-select once at load time so library entry points never run on the
// scalar default by accident.
const std::string g_startup_backend = SelectBackend("auto");
}  // namespace

}  // namespace baysec::kernels
