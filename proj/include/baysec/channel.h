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
#ifndef BAYSEC_CHANNEL_H_
#define BAYSEC_CHANNEL_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "baysec/error.h"

namespace baysec {

// Tolerance used when validating that rows/priors sum to 1.
inline constexpr double kStochasticTolerance = 1e-9;

// A discrete probabilistic channel: a row-stochastic matrix where entry
// (s, o) is the probability of observing output o given secret s.
// Channels are immutable after construction and safe to share across
// threads.
class Channel {
 public:
  // Validates and builds a channel from dense rows. With `renormalize`
  // set, each row is divided by its sum; otherwise each row must already
  // sum to 1 within kStochasticTolerance.
  static Channel FromRows(std::vector<std::vector<double>> rows,
                          bool renormalize = false);

  std::size_t secret_count() const { return n_; }
  std::size_t observable_count() const { return m_; }

  double at(std::size_t s, std::size_t o) const { return data_[s * m_ + o]; }
  std::span<const double> row(std::size_t s) const {
    return std::span<const double>(data_.data() + s * m_, m_);
  }
  const std::vector<double>& data() const { return data_; }

  // Labels are metadata only; algorithms operate on indices.
  const std::vector<std::string>& secret_labels() const {
    return secret_labels_;
  }
  const std::vector<std::string>& observable_labels() const {
    return observable_labels_;
  }
  void set_secret_labels(std::vector<std::string> labels);
  void set_observable_labels(std::vector<std::string> labels);

 private:
  Channel(std::vector<double> data, std::size_t n, std::size_t m)
      : data_(std::move(data)), n_(n), m_(m) {}

  std::vector<double> data_;  // row-major, n_ * m_
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::string> secret_labels_;
  std::vector<std::string> observable_labels_;
};

// A probability distribution over secrets.
class Prior {
 public:
  // Validates entries in [0,1] summing to 1 within kStochasticTolerance.
  static Prior FromWeights(std::vector<double> weights);

  std::size_t size() const { return weights_.size(); }
  double at(std::size_t s) const { return weights_[s]; }
  const std::vector<double>& weights() const { return weights_; }

  double max_weight() const;
  std::size_t support_size() const;

 private:
  explicit Prior(std::vector<double> weights)
      : weights_(std::move(weights)) {}

  std::vector<double> weights_;
};

// Uniform prior over n secrets.
Prior UniformPrior(std::size_t n);

// Prior with weight 1/2 on secrets a and b and 0 elsewhere.
Prior TwoPointPrior(std::size_t n, std::size_t a, std::size_t b);

// Total variation distance between two distributions of equal length:
// half their L1 distance.
double TvDistance(std::span<const double> p, std::span<const double> q);

// Total variation between two channel rows.
double RowTvDistance(const Channel& channel, std::size_t a, std::size_t b);

}  // namespace baysec

#endif  // BAYSEC_CHANNEL_H_
