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
#ifndef BAYSEC_KERNELS_H_
#define BAYSEC_KERNELS_H_

#include <cstddef>
#include <string>

// Data-parallel inner loops shared by the whole library. Every kernel has a
// scalar reference implementation; on x86-64 an AVX2 variant is selected at
// runtime when the CPU supports it. The reference implementations stay
// callable so equivalence tests can compare backends on the same inputs.
namespace baysec::kernels {

using Reduce2Fn = double (*)(const double* a, const double* b, std::size_t n);
using ColMaxFn = void (*)(double* acc, const double* row, double weight,
                          std::size_t n);
using MinMaxFn = void (*)(double* max_acc, double* min_acc, const double* v,
                          std::size_t n);

// sum_i |a_i - b_i|
extern Reduce2Fn l1_distance;
// sum_i min(a_i, b_i)
extern Reduce2Fn min_overlap;
// sum_i max(a_i, b_i)
extern Reduce2Fn max_overlap;
// acc_i = max(acc_i, weight * row_i)
extern ColMaxFn scaled_colmax;
// max_acc_i = max(max_acc_i, v_i); min_acc_i = min(min_acc_i, v_i)
extern MinMaxFn minmax_update;

double L1DistanceRef(const double* a, const double* b, std::size_t n);
double MinOverlapRef(const double* a, const double* b, std::size_t n);
double MaxOverlapRef(const double* a, const double* b, std::size_t n);
void ScaledColMaxRef(double* acc, const double* row, double weight,
                     std::size_t n);
void MinMaxUpdateRef(double* max_acc, double* min_acc, const double* v,
                     std::size_t n);

#if defined(BAYSEC_HAVE_AVX2)
double L1DistanceAvx2(const double* a, const double* b, std::size_t n);
double MinOverlapAvx2(const double* a, const double* b, std::size_t n);
double MaxOverlapAvx2(const double* a, const double* b, std::size_t n);
void ScaledColMaxAvx2(double* acc, const double* row, double weight,
                      std::size_t n);
void MinMaxUpdateAvx2(double* max_acc, double* min_acc, const double* v,
                      std::size_t n);
#endif

// Selects a backend: "auto" picks the best supported one, "scalar" and
// "avx2" force a specific backend. Returns the name of the active backend.
// Selection happens automatically on first use; calling this afterwards is
// only needed to force a backend in tests.
std::string SelectBackend(const std::string& preference = "auto");

// Name of the backend currently wired into the function pointers.
std::string ActiveBackend();

}  // namespace baysec::kernels

#endif  // BAYSEC_KERNELS_H_
