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
#ifndef BAYSEC_TESTS_SUPPORT_TEST_CHANNELS_H_
#define BAYSEC_TESTS_SUPPORT_TEST_CHANNELS_H_

#include <cstdint>
#include <vector>

#include "baysec/channel.h"
#include "baysec/rng.h"

namespace baysec::testing {

// The 4x3 channel from the minimizing-pair counterexample:
// beta_star = 0.6 at secrets (0,2); beta_star of the self-parallel
// composition is 0.36 at secrets (1,3).
Channel CounterexampleChannel();

// n x m channel with every row equal (no leakage, beta = 1 everywhere).
Channel NoLeakageChannel(std::size_t n, std::size_t m);

// n x n identity channel (full leakage).
Channel IdentityChannel(std::size_t n);

// Channel with i.i.d. uniform-simplex rows.
Channel RandomChannel(std::size_t n, std::size_t m, std::uint64_t seed);

// Random prior with full support.
Prior RandomPrior(std::size_t n, std::uint64_t seed);

// Random channel guaranteed to be eps-LDP: a random channel mixed with
// the uniform one, with the mixing weight chosen so every column ratio
// stays within e^eps.
Channel RandomLdpChannel(std::size_t n, std::size_t m, double epsilon,
                         std::uint64_t seed);

// Brute-force oracle used to validate the closed-path implementations:
// Bayes risk straight from its definition, one output at a time.
double BayesRiskBruteForce(const Prior& prior, const Channel& channel);

}  // namespace baysec::testing

#endif  // BAYSEC_TESTS_SUPPORT_TEST_CHANNELS_H_
