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
#ifndef BAYSEC_DP_BRIDGE_H_
#define BAYSEC_DP_BRIDGE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "baysec/channel.h"

namespace baysec {

// Smallest eps such that every column satisfies
// C(i,o) <= e^eps * C(h,o): the max over columns of ln(max / min).
// Columns that are entirely zero describe unreachable outputs and are
// skipped; a column mixing zero and positive entries makes the channel
// non-LDP for every eps, reported as +infinity.
double LdpEpsilon(const Channel& channel);

struct ApproxLdpResult {
  bool satisfied = true;
  // Ordered pair with the largest excess and the excess value
  // sum_{o in O*} (C(i,o) - e^eps * C(j,o)) over its maximizing set
  // O* = {o : C(i,o) > e^eps * C(j,o)}.
  std::size_t worst_i = 0;
  std::size_t worst_j = 0;
  double worst_excess = 0.0;
};

// Checks (eps, delta)-LDP by evaluating every ordered pair's maximal
// excess; satisfied iff the worst excess is <= delta.
ApproxLdpResult CheckApproxLdp(const Channel& channel, double epsilon,
                               double delta);

// A beta_star-secure channel is (0, delta)-LDP with delta = 1 - beta_star.
double ZeroDeltaCorrespondence(double beta_star);

// Lower bound on beta implied by eps-LDP: 2 / (1 + e^eps).
double LdpBetaLowerBound(double epsilon);

enum class ExtremalVariant { kBlock, kCorner };

// Channels attaining the eps-LDP lower bound, beta_star = 2/(1+e^eps).
//
// The block variant splits the output space at column k: the first two
// rows put mass e^eps/(1+e^eps) and 1/(1+e^eps) on opposite blocks
// (spread uniformly inside each block) and any further rows are uniform.
// k must keep the uniform rows within the column-ratio constraint
// (m/(1+e^eps) <= k <= m*e^eps/(1+e^eps) when n > 2), which makes the
// result exactly eps-LDP.
//
// The corner variant concentrates the first two rows on two columns with
// entries e^eps/(1+e^eps) and 1/(1+e^eps); any further rows sit midway
// between them with a small spill onto column 3. It attains the same
// beta_star but mixes zero and positive entries in one column, so its
// LDP epsilon is infinite: Bayes security does not imply an LDP bound.
// Requires m >= 3 when n > 2 (the spill column must exist).
Channel ExtremalLdpChannel(std::size_t n, std::size_t m, double epsilon,
                           ExtremalVariant variant, std::size_t k);

// Upper bound on multiplicative leakage for an eps-DP mechanism over
// databases of n_records records with v values per record:
// (v * e^eps / (v - 1 + e^eps))^n_records.
double DpCapacityUpperBound(double epsilon, std::size_t v,
                            std::size_t n_records);

// The matching lower bound on beta for a prior with maximum weight
// max_prior, clamped below at 0. With max_prior = v^-n_records this is
// the uniform-prior form (v^n - (...)^n) / (v^n - 1).
double DpBetaLowerBound(double epsilon, std::size_t v, std::size_t n_records,
                        double max_prior);

struct AdvantageBoundPair {
  double tight = 0.0;  // (e^eps - 1) / (e^eps + 1)
  double yeom = 0.0;   // e^eps - 1; exceeds 1 (vacuous) for eps > ln 2
};

// Upper bounds on the membership advantage of an eps-DP mechanism.
AdvantageBoundPair AdvantageBounds(double epsilon);

// JSON report for the bound operations above; bound_kind names which
// formula produced it.
struct DpBoundReport {
  double epsilon = 0.0;
  std::optional<double> delta;
  double beta_lower_bound = 0.0;
  std::string bound_kind;  // ldp | dp_database | advantage_tight |
                           // advantage_yeom | zero_delta
  std::optional<std::size_t> v;
  std::optional<std::size_t> n_records;
  std::optional<double> max_prior;
};

std::string DpBoundReportToJson(const DpBoundReport& report);

}  // namespace baysec

#endif  // BAYSEC_DP_BRIDGE_H_
