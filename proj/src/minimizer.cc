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
#include "baysec/minimizer.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include <json.hpp>

#include "baysec/error.h"
#include "baysec/kernels.h"
#include "baysec/metrics.h"

namespace baysec {

namespace {

void RequirePair(const Channel& channel) {
  if (channel.secret_count() < 2) {
    throw Error(ErrorCode::kSingleSecret,
                "beta_star needs at least two secrets");
  }
}

}  // namespace

const char* MethodName(BetaStarReport::Method method) {
  switch (method) {
    case BetaStarReport::Method::kExhaustive: return "exhaustive";
    case BetaStarReport::Method::kPruned: return "pruned";
    case BetaStarReport::Method::kEmbedding: return "embedding";
    case BetaStarReport::Method::kBounds: return "bounds";
  }
  return "unknown";
}

std::string BetaStarReportToJson(const BetaStarReport& report) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["beta_star"] = report.beta_star;
  j["pair"] = {report.pair.first, report.pair.second};
  j["method"] = MethodName(report.method);
  j["lower"] = report.lower;
  j["upper"] = report.upper;
  j["pair_evaluations"] = report.pair_evaluations;
  return j.dump(2) + "\n";
}

BetaStarReport BetaStarExhaustive(const Channel& channel) {
  RequirePair(channel);
  const std::size_t n = channel.secret_count();
  double max_tv = -1.0;
  std::pair<std::size_t, std::size_t> best{0, 1};
  std::size_t evaluations = 0;
  for (std::size_t a = 0; a + 1 < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const double tv = RowTvDistance(channel, a, b);
      ++evaluations;
      if (tv > max_tv) {
        max_tv = tv;
        best = {a, b};
      }
    }
  }
  BetaStarReport report;
  report.beta_star = 1.0 - max_tv;
  report.pair = best;
  report.method = BetaStarReport::Method::kExhaustive;
  report.lower = report.beta_star;
  report.upper = report.beta_star;
  report.pair_evaluations = evaluations;
  return report;
}

BetaStarReport BetaStarPruned(const Channel& channel) {
  RequirePair(channel);
  const std::size_t n = channel.secret_count();
  const double kUnknown = -1.0;
  // tv_cache[a*n+b] holds the computed distance, kUnknown otherwise.
  std::vector<double> tv_cache(n * n, kUnknown);
  double best_tv = -1.0;
  std::pair<std::size_t, std::size_t> best{0, 1};
  std::size_t evaluations = 0;
  for (std::size_t a = 0; a + 1 < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      // tv(a,b) <= tv(a,c) + tv(c,b) for every anchor c with both legs
      // known; if even the tightest such bound cannot beat the current
      // best, the pair cannot improve it.
      double upper = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < n; ++c) {
        const double ac = tv_cache[a * n + c];
        const double bc = tv_cache[b * n + c];
        if (ac != kUnknown && bc != kUnknown) {
          upper = std::min(upper, ac + bc);
        }
      }
      if (upper <= best_tv) continue;
      const double tv = RowTvDistance(channel, a, b);
      ++evaluations;
      tv_cache[a * n + b] = tv;
      tv_cache[b * n + a] = tv;
      if (tv > best_tv) {
        best_tv = tv;
        best = {a, b};
      }
    }
  }
  BetaStarReport report;
  report.beta_star = 1.0 - best_tv;
  report.pair = best;
  report.method = BetaStarReport::Method::kPruned;
  report.lower = report.beta_star;
  report.upper = report.beta_star;
  report.pair_evaluations = evaluations;
  return report;
}

void EmbedLinfComponents(std::span<const double> x, std::span<double> out) {
  const std::size_t m = x.size();
  if (out.size() != (std::size_t{1} << m)) {
    throw Error(ErrorCode::kLengthMismatch,
                "embedding output must have 2^m components");
  }
  // Built by doubling: coordinate i extends every partial sum with a +
  // and a - branch, so after coordinate i the prefix of length 2^(i+1)
  // holds all sign combinations of the first i+1 coordinates, ordered by
  // the bitstring convention above.
  out[0] = 0.0;
  std::size_t filled = 1;
  for (std::size_t i = 0; i < m; ++i) {
    const double v = x[i];
    for (std::size_t t = filled; t-- > 0;) {
      const double base = out[t];
      out[2 * t] = base + v;
      out[2 * t + 1] = base - v;
    }
    filled *= 2;
  }
}

std::vector<double> EmbedLinfComponents(std::span<const double> x) {
  std::vector<double> out(std::size_t{1} << x.size());
  EmbedLinfComponents(x, out);
  return out;
}

BetaStarReport BetaStarEmbedding(const Channel& channel,
                                 std::size_t observable_cutoff) {
  RequirePair(channel);
  const std::size_t n = channel.secret_count();
  const std::size_t m = channel.observable_count();
  if (m > observable_cutoff || m >= 63) {
    throw Error(ErrorCode::kObservableSpaceTooLarge,
                "embedding needs 2^m workspace; m = " + std::to_string(m) +
                    " exceeds cutoff " + std::to_string(observable_cutoff));
  }
  const std::size_t size = std::size_t{1} << m;
  std::vector<double> image(size);
  std::vector<double> comp_max(size, -std::numeric_limits<double>::infinity());
  std::vector<double> comp_min(size, std::numeric_limits<double>::infinity());
  for (std::size_t s = 0; s < n; ++s) {
    EmbedLinfComponents(channel.row(s), image);
    kernels::minmax_update(comp_max.data(), comp_min.data(), image.data(),
                           size);
  }
  double diameter = -1.0;
  std::size_t best_component = 0;
  for (std::size_t c = 0; c < size; ++c) {
    const double spread = comp_max[c] - comp_min[c];
    if (spread > diameter) {
      diameter = spread;
      best_component = c;
    }
  }
  // Recover the attaining rows: a single component of the image is just a
  // signed sum, so one O(nm) pass suffices.
  auto component_value = [&](std::size_t s) {
    const auto row = channel.row(s);
    double value = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const bool negative = (best_component >> (m - 1 - i)) & 1u;
      value += negative ? -row[i] : row[i];
    }
    return value;
  };
  std::size_t r1 = 0;
  std::size_t r2 = 0;
  double best_max = -std::numeric_limits<double>::infinity();
  double best_min = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < n; ++s) {
    const double value = component_value(s);
    if (value > best_max) {
      best_max = value;
      r1 = s;
    }
    if (value < best_min) {
      best_min = value;
      r2 = s;
    }
  }
  BetaStarReport report;
  report.beta_star = 1.0 - 0.5 * diameter;
  report.pair = {std::min(r1, r2), std::max(r1, r2)};
  report.method = BetaStarReport::Method::kEmbedding;
  report.lower = report.beta_star;
  report.upper = report.beta_star;
  report.pair_evaluations = 0;
  return report;
}

BetaStarReport BetaStarBoundsCentroid(
    const Channel& channel, const std::optional<std::vector<double>>& reference,
    bool reference_in_hull) {
  RequirePair(channel);
  const std::size_t n = channel.secret_count();
  const std::size_t m = channel.observable_count();
  std::vector<double> q;
  bool in_hull = false;
  if (reference.has_value()) {
    q = *reference;
    if (q.size() != m) {
      throw Error(ErrorCode::kLengthMismatch,
                  "reference distribution length does not match m");
    }
    double sum = 0.0;
    for (double v : q) {
      if (!(v >= 0.0)) {
        throw Error(ErrorCode::kInvalidReference,
                    "reference is not a distribution");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > kStochasticTolerance) {
      throw Error(ErrorCode::kInvalidReference,
                  "reference is not a distribution");
    }
    in_hull = reference_in_hull;
  } else {
    // Centroid of the rows; a convex combination, so always in the hull.
    q.assign(m, 0.0);
    for (std::size_t s = 0; s < n; ++s) {
      const auto row = channel.row(s);
      for (std::size_t o = 0; o < m; ++o) q[o] += row[o];
    }
    for (double& v : q) v /= static_cast<double>(n);
    in_hull = true;
  }

  double d = -1.0;
  double second = -1.0;
  std::size_t far1 = 0;
  std::size_t far2 = 1;
  for (std::size_t s = 0; s < n; ++s) {
    const double dist =
        kernels::l1_distance(channel.row(s).data(), q.data(), m);
    if (dist > d) {
      second = d;
      far2 = far1;
      d = dist;
      far1 = s;
    } else if (dist > second) {
      second = dist;
      far2 = s;
    }
  }

  BetaStarReport report;
  report.method = BetaStarReport::Method::kBounds;
  report.lower = std::max(0.0, 1.0 - d);
  report.upper = in_hull ? 1.0 - 0.5 * d : 1.0;
  report.beta_star = report.lower;
  // Heuristic candidate pair: the two rows farthest from q.
  report.pair = {std::min(far1, far2), std::max(far1, far2)};
  report.pair_evaluations = 0;
  return report;
}

namespace {

void EnumerateCompositions(
    std::size_t n, std::size_t total,
    std::vector<std::size_t>& parts,
    const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (parts.size() + 1 == n) {
    parts.push_back(total);
    visit(parts);
    parts.pop_back();
    return;
  }
  for (std::size_t c = 0; c <= total; ++c) {
    parts.push_back(c);
    EnumerateCompositions(n, total - c, parts, visit);
    parts.pop_back();
  }
}

}  // namespace

PriorOracleResult BetaPriorOracle(const Channel& channel,
                                  std::size_t grid_points) {
  RequirePair(channel);
  const std::size_t n = channel.secret_count();
  if (n > 4) {
    throw Error(ErrorCode::kSecretSpaceTooLarge,
                "prior oracle is a desk-scale tool; n must be <= 4");
  }
  if (grid_points < 10) {
    throw Error(ErrorCode::kGridTooCoarse, "grid_points must be >= 10");
  }

  PriorOracleResult result;
  result.min_beta = std::numeric_limits<double>::infinity();
  result.grid_min_beta = std::numeric_limits<double>::infinity();

  auto consider = [&](const std::vector<double>& weights) {
    const Prior prior = Prior::FromWeights(weights);
    const double beta = Beta(prior, channel);
    if (beta < result.min_beta) {
      result.min_beta = beta;
      result.argmin_prior = weights;
    }
    return beta;
  };

  std::vector<std::size_t> parts;
  EnumerateCompositions(
      n, grid_points, parts, [&](const std::vector<std::size_t>& counts) {
        std::size_t support = 0;
        for (std::size_t c : counts) support += (c > 0);
        if (support < 2) return;  // beta undefined on point masses
        std::vector<double> weights(n);
        for (std::size_t s = 0; s < n; ++s) {
          weights[s] =
              static_cast<double>(counts[s]) / static_cast<double>(grid_points);
        }
        result.grid_min_beta = std::min(result.grid_min_beta,
                                        consider(weights));
      });

  // Corner points of support 2..n.
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    const int support = __builtin_popcountll(mask);
    if (support < 2) continue;
    std::vector<double> weights(n, 0.0);
    for (std::size_t s = 0; s < n; ++s) {
      if (mask & (std::size_t{1} << s)) weights[s] = 1.0 / support;
    }
    consider(weights);
  }
  return result;
}

std::vector<double> CornerPointMinima(const Channel& channel) {
  RequirePair(channel);
  const std::size_t n = channel.secret_count();
  if (n > 16) {
    throw Error(ErrorCode::kSecretSpaceTooLarge,
                "corner-point enumeration is exponential in n");
  }
  std::vector<double> minima(n - 1,
                             std::numeric_limits<double>::infinity());
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    const int support = __builtin_popcountll(mask);
    if (support < 2) continue;
    std::vector<double> weights(n, 0.0);
    for (std::size_t s = 0; s < n; ++s) {
      if (mask & (std::size_t{1} << s)) weights[s] = 1.0 / support;
    }
    const double beta = Beta(Prior::FromWeights(weights), channel);
    auto& slot = minima[support - 2];
    slot = std::min(slot, beta);
  }
  return minima;
}

Channel UniformPriorGapWitness(std::size_t n, std::size_t k) {
  if (k < 2 || k > n) {
    throw Error(ErrorCode::kInvalidK, "witness needs 2 <= k <= n");
  }
  std::vector<std::vector<double>> rows(n, std::vector<double>(k, 0.0));
  for (std::size_t s = 0; s < n; ++s) {
    rows[s][std::min(s, k - 1)] = 1.0;
  }
  return Channel::FromRows(std::move(rows));
}

}  // namespace baysec
