// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUBMAX_OBJECTIVES_STRESSOR_HPP_
#define SUBMAX_OBJECTIVES_STRESSOR_HPP_

#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "submax/errors.hpp"
#include "submax/oracle.hpp"
#include "submax/random.hpp"

namespace submax {

// Increasing-returns stressor: F(S) = (sum of weights in S)^p, normalized to
// F(V) = 1, with p > 1. Strictly supermodular and monotone.
class SupermodularStressor {
 public:
  SupermodularStressor(std::vector<double> weights, double exponent)
      : weights_(std::move(weights)), exponent_(exponent) {
    if (weights_.empty())
      throw InvalidParameter("SupermodularStressor: needs elements");
    if (!(exponent_ > 1.0))
      throw InvalidParameter("SupermodularStressor: exponent must be > 1");
    for (double w : weights_)
      if (!(w > 0.0))
        throw InvalidParameter("SupermodularStressor: weights must be > 0");
    total_weight_ = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  }

  int size() const { return static_cast<int>(weights_.size()); }
  double exponent() const { return exponent_; }
  const std::vector<double>& weights() const { return weights_; }

  double operator()(std::span<const int> subset) const {
    double sum = 0.0;
    for (int e : subset) sum += weights_.at(e);
    return std::pow(sum / total_weight_, exponent_);
  }

  SetFunction as_function() const {
    return [copy = *this](std::span<const int> s) { return copy(s); };
  }

 private:
  std::vector<double> weights_;
  double exponent_;
  double total_weight_ = 0.0;
};

// Weights are drawn from a narrow band so that greedy's realized gain
// sequence is non-decreasing from the very first step.
inline SupermodularStressor make_stressor(std::uint64_t seed, int m,
                                          double exponent = 2.0) {
  if (m < 1) throw InvalidParameter("make_stressor: m must be >= 1");
  Rng rng(splitmix64(seed) ^ 0x7374726573ULL);
  std::vector<double> weights(m);
  for (double& w : weights) w = rng.next_double(0.8, 1.2);
  return SupermodularStressor(std::move(weights), exponent);
}

}  // namespace submax

#endif  // SUBMAX_OBJECTIVES_STRESSOR_HPP_
