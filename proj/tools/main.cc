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

// baysec: compute, bound, estimate and compose the Bayes security of
// discrete probabilistic channels.

#include <algorithm>
#include <cmath>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "baysec/blackbox.h"
#include "baysec/channel.h"
#include "baysec/channel_io.h"
#include "baysec/composition.h"
#include "baysec/dp_bridge.h"
#include "baysec/error.h"
#include "baysec/experiments.h"
#include "baysec/mechanisms.h"
#include "baysec/metrics.h"
#include "baysec/minimizer.h"
#include "baysec/rng.h"

namespace {

using nlohmann::json;

struct SweepSpec {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t steps = 2;
};

SweepSpec ParseSweep(const std::string& text) {
  SweepSpec spec;
  const auto first = text.find(':');
  const auto second = text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw CLI::ValidationError("sweep", "expected lo:hi:steps");
  }
  spec.lo = std::stod(text.substr(0, first));
  spec.hi = std::stod(text.substr(first + 1, second - first - 1));
  spec.steps = std::stoul(text.substr(second + 1));
  if (spec.steps < 2 || !(spec.hi >= spec.lo)) {
    throw CLI::ValidationError("sweep", "need hi >= lo and steps >= 2");
  }
  return spec;
}

std::vector<double> SweepValues(const SweepSpec& spec) {
  std::vector<double> values(spec.steps);
  for (std::size_t i = 0; i < spec.steps; ++i) {
    values[i] = spec.lo + (spec.hi - spec.lo) * static_cast<double>(i) /
                              static_cast<double>(spec.steps - 1);
  }
  return values;
}

std::vector<double> ParseNumberList(const std::string& path) {
  std::vector<double> values;
  const std::string text = baysec::ReadTextFile(path);
  std::string token;
  for (char c : text + "\n") {
    if (c == ',' || c == '\n' || c == '\r' || c == ' ' || c == '\t') {
      if (!token.empty()) {
        values.push_back(std::stod(token));
        token.clear();
      }
    } else {
      token.push_back(c);
    }
  }
  return values;
}

void Emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty() || output_path == "-") {
    std::cout << text;
  } else {
    baysec::WriteTextFile(output_path, text);
  }
}

json JsonOrInfinity(double v) {
  if (std::isinf(v)) return json("infinity");
  return json(v);
}

int RunAnalyze(const std::string& path, bool renormalize) {
  const baysec::Channel channel = baysec::LoadChannelAuto(path, renormalize);
  const baysec::BetaStarReport report = baysec::BetaStarExhaustive(channel);
  const baysec::BetaStarReport bounds = baysec::BetaStarBoundsCentroid(channel);
  json j;
  j["schema_version"] = 1;
  j["secret_count"] = channel.secret_count();
  j["observable_count"] = channel.observable_count();
  j["beta_star"] = report.beta_star;
  j["pair"] = {report.pair.first, report.pair.second};
  j["method"] = baysec::MethodName(report.method);
  j["capacity"] = baysec::Capacity(channel);
  j["ldp_epsilon"] = JsonOrInfinity(baysec::LdpEpsilon(channel));
  j["zero_delta"] = baysec::ZeroDeltaCorrespondence(report.beta_star);
  j["centroid_lower"] = bounds.lower;
  j["centroid_upper"] = bounds.upper;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int RunBeta(const std::string& path, const std::string& prior_path,
            const std::vector<std::size_t>& pair, bool renormalize) {
  const baysec::Channel channel = baysec::LoadChannelAuto(path, renormalize);
  baysec::Prior prior = baysec::UniformPrior(channel.secret_count());
  if (!prior_path.empty()) {
    prior = baysec::LoadPriorJson(prior_path);
  } else if (!pair.empty()) {
    prior = baysec::TwoPointPrior(channel.secret_count(), pair.at(0),
                                  pair.at(1));
  }
  std::cout << baysec::MetricReportToJson(
      baysec::ComputeMetricReport(prior, channel));
  return 0;
}

int RunCompose(bool parallel, const std::string& a, const std::string& b,
               const std::string& output) {
  const baysec::Channel c1 = baysec::LoadChannelAuto(a);
  const baysec::Channel c2 = baysec::LoadChannelAuto(b);
  const baysec::Channel composed =
      parallel ? baysec::Parallel(c1, c2) : baysec::Cascade(c1, c2);
  Emit(baysec::FormatChannelCsv(composed), output);
  return 0;
}

void EmitMechReport(const std::string& kind, double beta_star,
                    const json& parameters,
                    const std::optional<baysec::Channel>& channel,
                    const std::string& emit_path, bool truncation_warning) {
  json j;
  j["schema_version"] = 1;
  j["mechanism"] = kind;
  j["beta_star"] = beta_star;
  j["parameters"] = parameters;
  if (channel && !emit_path.empty()) {
    baysec::SaveChannelCsv(*channel, emit_path);
    j["channel_file"] = emit_path;
  }
  if (truncation_warning) {
    j["truncation_warning"] = true;
    std::cerr << "warning: discretization grid does not cover all secrets "
                 "+- 8 scale units\n";
  }
  std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayes security analysis of discrete channels"};
  app.require_subcommand(1);

  // analyze
  std::string analyze_path;
  bool analyze_renormalize = false;
  auto* analyze = app.add_subcommand(
      "analyze", "Report beta_star, capacity and bounds for a channel");
  analyze->add_option("channel", analyze_path, "channel CSV or JSON file")
      ->required();
  analyze->add_flag("--renormalize", analyze_renormalize,
                    "renormalize rows at load");

  // beta
  std::string beta_path;
  std::string beta_prior_path;
  std::vector<std::size_t> beta_pair;
  bool beta_renormalize = false;
  auto* beta = app.add_subcommand(
      "beta", "Prior-dependent metrics for a channel and prior");
  beta->add_option("channel", beta_path, "channel CSV or JSON file")
      ->required();
  beta->add_option("--prior", beta_prior_path, "prior JSON file");
  beta->add_option("--pair", beta_pair,
                   "two secret indices for a two-point prior")
      ->expected(2);
  beta->add_flag("--renormalize", beta_renormalize,
                 "renormalize rows at load");

  // compose
  bool compose_parallel = false;
  bool compose_cascade = false;
  std::vector<std::string> compose_inputs;
  std::string compose_output;
  auto* compose =
      app.add_subcommand("compose", "Parallel or cascade composition");
  compose->add_flag("--parallel", compose_parallel, "outer-product rows");
  compose->add_flag("--cascade", compose_cascade, "matrix product");
  compose->add_option("channels", compose_inputs, "two channel files")
      ->expected(2)
      ->required();
  compose->add_option("-o,--output", compose_output, "output CSV file")
      ->required();

  // mech
  auto* mech = app.add_subcommand(
      "mech", "Closed-form Bayes security of canonical mechanisms");
  mech->require_subcommand(1);
  std::size_t mech_n = 2;
  double mech_eps = 1.0;
  double mech_delta = 1e-6;
  double mech_lambda = 0.0;
  double mech_sigma = 0.0;
  double mech_nu = 0.1;
  std::size_t mech_m = 0;
  std::string mech_secrets_path;
  std::string mech_emit;
  std::size_t mech_bins = 2200;

  auto* mech_rr = mech->add_subcommand("rr", "randomized response");
  mech_rr->add_option("--n", mech_n, "number of values")->required();
  mech_rr->add_option("--eps", mech_eps, "LDP epsilon")->required();
  mech_rr->add_option("--emit-channel", mech_emit, "write the channel CSV");

  auto* mech_laplace = mech->add_subcommand("laplace", "Laplace mechanism");
  mech_laplace->add_option("--eps", mech_eps,
                           "DP epsilon (scale = sensitivity/eps)");
  mech_laplace->add_option("--secrets", mech_secrets_path,
                           "file with real-valued secret locations");
  mech_laplace->add_option("--lambda", mech_lambda, "Laplace scale");
  mech_laplace->add_option("--emit-channel", mech_emit,
                           "write a discretized channel CSV");
  mech_laplace->add_option("--bins", mech_bins, "discretization bins");

  auto* mech_gaussian = mech->add_subcommand("gaussian", "Gaussian mechanism");
  mech_gaussian->add_option("--eps", mech_eps, "DP epsilon");
  mech_gaussian->add_option("--delta", mech_delta, "DP delta");
  mech_gaussian->add_option("--secrets", mech_secrets_path,
                            "file with real-valued secret locations");
  mech_gaussian->add_option("--sigma", mech_sigma, "Gaussian scale");
  mech_gaussian->add_option("--emit-channel", mech_emit,
                            "write a discretized channel CSV");
  mech_gaussian->add_option("--bins", mech_bins, "discretization bins");

  auto* mech_geometric = mech->add_subcommand("geometric",
                                              "two-sided geometric channel");
  mech_geometric->add_option("--n", mech_n, "number of secrets")->required();
  mech_geometric->add_option("--m", mech_m, "number of outputs")->required();
  mech_geometric->add_option("--nu", mech_nu, "noise parameter")->required();
  mech_geometric->add_option("--emit-channel", mech_emit,
                             "write the channel CSV");

  // bounds
  auto* bounds = app.add_subcommand(
      "bounds", "DP/LDP-implied bounds on Bayes security");
  bounds->require_subcommand(1);
  double bounds_eps = 1.0;
  std::size_t bounds_v = 2;
  std::size_t bounds_records = 1;
  double bounds_max_prior = -1.0;
  std::string bounds_sweep;
  std::string bounds_output;

  auto* bounds_ldp = bounds->add_subcommand("ldp", "eps-LDP lower bound");
  bounds_ldp->add_option("--eps", bounds_eps, "LDP epsilon")->required();

  auto* bounds_dp = bounds->add_subcommand(
      "dp", "eps-DP database bound (v values, n records)");
  bounds_dp->add_option("--eps", bounds_eps, "DP epsilon")->required();
  bounds_dp->add_option("--v", bounds_v, "values per record")->required();
  bounds_dp->add_option("--records", bounds_records, "record count")
      ->required();
  bounds_dp->add_option("--max-prior", bounds_max_prior,
                        "max prior weight (defaults to uniform v^-n)");

  auto* bounds_adv = bounds->add_subcommand(
      "adv", "membership advantage bounds (tight vs Yeom)");
  bounds_adv->add_option("--eps", bounds_eps, "DP epsilon");
  bounds_adv->add_option("--sweep", bounds_sweep,
                         "emit CSV over lo:hi:steps");
  bounds_adv->add_option("-o,--output", bounds_output, "CSV output path");

  // check
  auto* check = app.add_subcommand("check", "LDP checkers for a channel");
  check->require_subcommand(1);
  std::string check_path;
  double check_eps = 0.0;
  double check_delta = 0.0;

  auto* check_ldp = check->add_subcommand("ldp", "measure the LDP epsilon");
  check_ldp->add_option("channel", check_path, "channel file")->required();

  auto* check_aldp =
      check->add_subcommand("aldp", "check (eps,delta)-LDP feasibility");
  check_aldp->add_option("channel", check_path, "channel file")->required();
  check_aldp->add_option("--eps", check_eps, "epsilon")->required();
  check_aldp->add_option("--delta", check_delta, "delta")->required();

  // estimate
  std::string estimate_channel;
  std::string estimate_oracle_cmd;
  std::size_t estimate_secret_count = 0;
  std::size_t estimate_budget = 10000;
  std::uint64_t estimate_seed = 1;
  bool estimate_prune = false;
  std::string estimate_bound;
  auto* estimate = app.add_subcommand(
      "estimate", "Black-box estimation of beta_star from samples");
  estimate->add_option("--channel", estimate_channel,
                       "channel file for the in-process oracle");
  estimate->add_option("--oracle-cmd", estimate_oracle_cmd,
                       "external oracle command (line protocol)");
  estimate->add_option("--secrets", estimate_secret_count,
                       "secret count (required with --oracle-cmd)");
  estimate->add_option("--budget", estimate_budget, "samples per pair");
  estimate->add_option("--seed", estimate_seed, "RNG seed");
  estimate->add_flag("--prune", estimate_prune,
                     "triangle-inequality pruning");
  estimate->add_option(
      "--bound", estimate_bound,
      "also report a sandwich bound: mean_row|fixed_row|uniform_output");

  // experiment
  auto* experiment =
      app.add_subcommand("experiment", "desk-scale experiment drivers");
  experiment->require_subcommand(1);
  std::string exp_kind = "random";
  std::size_t exp_n = 10;
  std::size_t exp_m = 1000;
  double exp_nu = 0.1;
  std::size_t exp_trials = 200;
  std::uint64_t exp_seed = 1;
  std::string exp_output;
  double exp_eps = 3.3;
  std::size_t exp_samples = 100000;
  double exp_zipf = 1.0;
  std::string exp_sweep = "0.1:4:10";

  auto* exp_sparsity = experiment->add_subcommand(
      "sparsity", "bound tightness vs prior sparsity");
  exp_sparsity->add_option("--kind", exp_kind, "random|geometric");
  exp_sparsity->add_option("--n", exp_n, "secret count");
  exp_sparsity->add_option("--m", exp_m, "output count");
  exp_sparsity->add_option("--nu", exp_nu, "geometric noise parameter");
  exp_sparsity->add_option("--trials", exp_trials, "trials per level");
  exp_sparsity->add_option("--seed", exp_seed, "RNG seed");
  exp_sparsity->add_option("-o,--output", exp_output, "CSV output path");

  auto* exp_rr = experiment->add_subcommand(
      "rr-utility", "randomized-response utility vs security");
  exp_rr->add_option("--n", exp_n, "value domain size");
  exp_rr->add_option("--eps", exp_eps, "LDP epsilon");
  exp_rr->add_option("--samples", exp_samples, "sample count");
  exp_rr->add_option("--seed", exp_seed, "RNG seed");
  exp_rr->add_option("--zipf-exponent", exp_zipf,
                     "Zipf exponent of the synthetic distribution");

  auto* exp_bounds = experiment->add_subcommand(
      "rr-bounds", "sandwich-bound quality on randomized response");
  exp_bounds->add_option("--n", exp_n, "value domain size");
  exp_bounds->add_option("--eps-sweep", exp_sweep, "lo:hi:steps");
  exp_bounds->add_option("-o,--output", exp_output, "CSV output path");

  // oracle (line-protocol server; counterpart of --oracle-cmd)
  std::string oracle_path;
  std::uint64_t oracle_seed = 1;
  auto* oracle = app.add_subcommand(
      "oracle", "serve a channel over the line-oriented oracle protocol");
  oracle->add_option("channel", oracle_path, "channel file")->required();
  oracle->add_option("--seed", oracle_seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*analyze) return RunAnalyze(analyze_path, analyze_renormalize);
    if (*beta) {
      return RunBeta(beta_path, beta_prior_path, beta_pair, beta_renormalize);
    }
    if (*compose) {
      if (compose_parallel == compose_cascade) {
        std::cerr << "exactly one of --parallel/--cascade is required\n";
        return 2;
      }
      return RunCompose(compose_parallel, compose_inputs[0],
                        compose_inputs[1], compose_output);
    }

    if (*mech_rr) {
      std::optional<baysec::Channel> channel;
      if (!mech_emit.empty()) channel = baysec::RrChannel(mech_n, mech_eps);
      EmitMechReport("rr", baysec::RrBetaStar(mech_n, mech_eps),
                     {{"n", mech_n}, {"epsilon", mech_eps}}, channel,
                     mech_emit, false);
      return 0;
    }
    if (*mech_laplace || *mech_gaussian) {
      const bool laplace = static_cast<bool>(*mech_laplace);
      std::vector<double> secrets;
      double scale = 0.0;
      double beta_star = 0.0;
      json parameters;
      if (!mech_secrets_path.empty()) {
        secrets = ParseNumberList(mech_secrets_path);
        scale = laplace ? mech_lambda : mech_sigma;
        beta_star = laplace ? baysec::LaplaceBetaStar(secrets, scale)
                            : baysec::GaussianBetaStar(secrets, scale);
        parameters = {{laplace ? "lambda" : "sigma", scale},
                      {"secret_count", secrets.size()}};
      } else {
        // DP-parameterized form; the unit-sensitivity channel suffices
        // for emission since beta_star is sensitivity-independent.
        secrets = {0.0, 1.0};
        if (laplace) {
          beta_star = baysec::LaplaceDpBetaStar(mech_eps);
          scale = 1.0 / mech_eps;
          parameters = {{"epsilon", mech_eps}};
        } else {
          beta_star = baysec::GaussianDpBetaStar(mech_eps, mech_delta);
          scale = std::sqrt(2.0 * std::log(1.25 / mech_delta)) / mech_eps;
          parameters = {{"epsilon", mech_eps}, {"delta", mech_delta}};
          if (mech_eps >= 1.0) {
            std::cerr << "warning: the Gaussian DP calibration assumes "
                         "epsilon < 1\n";
          }
        }
      }
      std::optional<baysec::Channel> channel;
      bool truncated = false;
      if (!mech_emit.empty()) {
        const auto [lo, hi] =
            std::minmax_element(secrets.begin(), secrets.end());
        baysec::GridSpec grid{*lo - 8.0 * scale, *hi + 8.0 * scale,
                              mech_bins};
        auto discretized = baysec::DiscretizeAdditiveMechanism(
            secrets,
            laplace ? baysec::NoiseKind::kLaplace
                    : baysec::NoiseKind::kGaussian,
            scale, grid);
        truncated = discretized.truncation_warning;
        channel = std::move(discretized.channel);
      }
      EmitMechReport(laplace ? "laplace" : "gaussian", beta_star, parameters,
                     channel, mech_emit, truncated);
      return 0;
    }
    if (*mech_geometric) {
      const baysec::Channel channel =
          baysec::GeometricChannel(mech_n, mech_m, mech_nu);
      std::optional<baysec::Channel> emit_channel;
      if (!mech_emit.empty()) emit_channel = channel;
      EmitMechReport("geometric",
                     baysec::BetaStarExhaustive(channel).beta_star,
                     {{"n", mech_n}, {"m", mech_m}, {"nu", mech_nu}},
                     emit_channel, mech_emit, false);
      return 0;
    }

    if (*bounds_ldp) {
      baysec::DpBoundReport report;
      report.epsilon = bounds_eps;
      report.beta_lower_bound = baysec::LdpBetaLowerBound(bounds_eps);
      report.bound_kind = "ldp";
      std::cout << baysec::DpBoundReportToJson(report);
      return 0;
    }
    if (*bounds_dp) {
      if (bounds_max_prior <= 0.0) {
        bounds_max_prior = std::pow(static_cast<double>(bounds_v),
                                    -static_cast<double>(bounds_records));
      }
      baysec::DpBoundReport report;
      report.epsilon = bounds_eps;
      report.beta_lower_bound = baysec::DpBetaLowerBound(
          bounds_eps, bounds_v, bounds_records, bounds_max_prior);
      report.bound_kind = "dp_database";
      report.v = bounds_v;
      report.n_records = bounds_records;
      report.max_prior = bounds_max_prior;
      std::cout << baysec::DpBoundReportToJson(report);
      return 0;
    }
    if (*bounds_adv) {
      if (!bounds_sweep.empty()) {
        const SweepSpec spec = ParseSweep(bounds_sweep);
        std::ostringstream csv;
        csv.precision(17);
        csv << "epsilon,tight,yeom,yeom_vacuous\n";
        for (double eps : SweepValues(spec)) {
          const auto pair = baysec::AdvantageBounds(eps);
          csv << eps << ',' << pair.tight << ',' << pair.yeom << ','
              << (pair.yeom > 1.0 ? 1 : 0) << '\n';
        }
        Emit(csv.str(), bounds_output);
        return 0;
      }
      const auto pair = baysec::AdvantageBounds(bounds_eps);
      json j;
      j["schema_version"] = 1;
      j["epsilon"] = bounds_eps;
      j["tight"] = pair.tight;
      j["yeom"] = pair.yeom;
      j["yeom_vacuous"] = pair.yeom > 1.0;
      j["beta_lower_bound"] = 1.0 - pair.tight;
      j["bound_kind"] = "advantage_tight";
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*check_ldp) {
      const baysec::Channel channel = baysec::LoadChannelAuto(check_path);
      const double eps = baysec::LdpEpsilon(channel);
      json j;
      j["schema_version"] = 1;
      j["epsilon"] = JsonOrInfinity(eps);
      j["bound_kind"] = "ldp";
      if (!std::isinf(eps)) {
        j["beta_lower_bound"] = baysec::LdpBetaLowerBound(eps);
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (*check_aldp) {
      const baysec::Channel channel = baysec::LoadChannelAuto(check_path);
      const auto result = baysec::CheckApproxLdp(channel, check_eps,
                                                 check_delta);
      json j;
      j["schema_version"] = 1;
      j["epsilon"] = check_eps;
      j["delta"] = check_delta;
      j["satisfied"] = result.satisfied;
      j["worst_pair"] = {result.worst_i, result.worst_j};
      j["worst_excess"] = result.worst_excess;
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*estimate) {
      std::unique_ptr<baysec::SampleOracle> oracle_impl;
      std::size_t n = 0;
      if (!estimate_channel.empty()) {
        const baysec::Channel channel =
            baysec::LoadChannelAuto(estimate_channel);
        n = channel.secret_count();
        oracle_impl = std::make_unique<baysec::ChannelOracle>(channel);
      } else if (!estimate_oracle_cmd.empty()) {
        if (estimate_secret_count < 2) {
          std::cerr << "--secrets is required with --oracle-cmd\n";
          return 2;
        }
        n = estimate_secret_count;
        oracle_impl =
            std::make_unique<baysec::ProcessOracle>(estimate_oracle_cmd);
      } else {
        std::cerr << "one of --channel/--oracle-cmd is required\n";
        return 2;
      }
      const baysec::EstimateReport report = baysec::PluginBetaStar(
          *oracle_impl, n, estimate_budget, estimate_seed, estimate_prune);
      json j = json::parse(baysec::EstimateReportToJson(report));
      if (!estimate_bound.empty()) {
        baysec::ReferenceStrategy strategy;
        if (estimate_bound == "mean_row") {
          strategy = baysec::ReferenceStrategy::kMeanRow;
        } else if (estimate_bound == "fixed_row") {
          strategy = baysec::ReferenceStrategy::kFixedRow;
        } else if (estimate_bound == "uniform_output") {
          strategy = baysec::ReferenceStrategy::kUniformOutput;
        } else {
          std::cerr << "unknown bound strategy " << estimate_bound << "\n";
          return 2;
        }
        const baysec::BlackboxBound bound = baysec::BlackboxBetaStarBound(
            *oracle_impl, n, strategy, std::max(estimate_budget, 100 * n),
            baysec::DeriveSeed(estimate_seed, 0x626f756e64));
        j["bound"] = {{"strategy", estimate_bound}, {"lower", bound.lower}};
        if (bound.upper) j["bound"]["upper"] = *bound.upper;
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (*exp_sparsity) {
      baysec::SparsityChannelKind kind;
      if (exp_kind == "random") {
        kind = baysec::SparsityChannelKind::kRandom;
      } else if (exp_kind == "geometric") {
        kind = baysec::SparsityChannelKind::kGeometric;
      } else {
        std::cerr << "unknown channel kind " << exp_kind << "\n";
        return 2;
      }
      const auto rows = baysec::SparsityExperiment(kind, exp_n, exp_m,
                                                   exp_nu, exp_trials,
                                                   exp_seed);
      Emit(baysec::ExperimentRowsToCsv(rows), exp_output);
      return 0;
    }
    if (*exp_rr) {
      const auto result = baysec::RrUtilityExperiment(
          baysec::ZipfDistribution(exp_n, exp_zipf), exp_eps, exp_samples,
          exp_seed);
      json j;
      j["schema_version"] = 1;
      j["n"] = exp_n;
      j["epsilon"] = exp_eps;
      j["samples"] = exp_samples;
      j["utility"] = result.utility;
      j["beta_star"] = result.beta_star;
      j["beta_star_estimate"] = result.beta_star_estimate;
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (*exp_bounds) {
      const SweepSpec spec = ParseSweep(exp_sweep);
      const auto rows = baysec::RrBoundsSweep(exp_n, SweepValues(spec));
      Emit(baysec::RrBoundsRowsToCsv(rows), exp_output);
      return 0;
    }

    if (*oracle) {
      const baysec::Channel channel = baysec::LoadChannelAuto(oracle_path);
      baysec::ChannelOracle sampler(channel);
      baysec::Rng rng(oracle_seed);
      std::string line;
      while (std::getline(std::cin, line)) {
        if (line.empty()) continue;
        const std::size_t secret = std::stoul(line);
        std::cout << sampler.Sample(secret, rng) << "\n" << std::flush;
      }
      return 0;
    }
  } catch (const baysec::Error& e) {
    json j;
    j["schema_version"] = 1;
    j["error"] = {{"code", e.code_name()}, {"message", e.what()}};
    std::cerr << j.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    json j;
    j["schema_version"] = 1;
    j["error"] = {{"code", "InternalError"}, {"message", e.what()}};
    std::cerr << j.dump() << "\n";
    return 1;
  }
  return 2;
}
