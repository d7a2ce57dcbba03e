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
#ifndef BAYSEC_RNG_H_
#define BAYSEC_RNG_H_

#include <cstdint>
#include <random>

namespace baysec {

// splitmix64 step; used both as a generator for seed material and to
// derive independent streams from (seed, stream index) pairs.
inline std::uint64_t SplitMix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Deterministic per-stream seed so independent work items (pairs, trials)
// get disjoint streams from one user-facing seed.
inline std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t state = seed ^ (0xD1B54A32D192ED03ull * (stream + 1));
  SplitMix64(state);
  return SplitMix64(state);
}

// The library-wide generator: mt19937_64 seeded through splitmix64.
// Every stochastic operation takes an explicit seed and builds one of
// these, so runs are reproducible bit-for-bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(Scramble(seed)) {}

  double UniformUnit() { return unit_(engine_); }

  std::uint64_t UniformInt(std::uint64_t bound) {  // in [0, bound)
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
  }

  double Exponential() { return exp_(engine_); }

  std::mt19937_64& engine() { return engine_; }

 private:
  static std::uint64_t Scramble(std::uint64_t seed) {
    std::uint64_t state = seed;
    return SplitMix64(state);
  }

  std::mt19937_64 engine_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
  std::exponential_distribution<double> exp_{1.0};
};

}  // namespace baysec

#endif  // BAYSEC_RNG_H_
