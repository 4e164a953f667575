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

#ifndef SUBMAX_OBJECTIVES_MODULAR_HPP_
#define SUBMAX_OBJECTIVES_MODULAR_HPP_

#include <span>
#include <vector>

#include "submax/errors.hpp"
#include "submax/oracle.hpp"
#include "submax/random.hpp"

namespace submax {

// F(S) = sum of per-element weights. The boundary case between diminishing
// and increasing returns: gains never change, so lazy evaluation is exact.
class ModularInstance {
 public:
  explicit ModularInstance(std::vector<double> weights)
      : weights_(std::move(weights)) {
    if (weights_.empty())
      throw InvalidParameter("ModularInstance: needs at least one element");
  }

  int size() const { return static_cast<int>(weights_.size()); }
  const std::vector<double>& weights() const { return weights_; }

  double operator()(std::span<const int> subset) const {
    double total = 0.0;
    for (int e : subset) total += weights_.at(e);
    return total;
  }

  SetFunction as_function() const {
    return [copy = *this](std::span<const int> s) { return copy(s); };
  }

 private:
  std::vector<double> weights_;
};

inline ModularInstance make_modular(std::uint64_t seed, int m, double lo = 0.5,
                                    double hi = 1.5) {
  if (m < 1) throw InvalidParameter("make_modular: m must be >= 1");
  Rng rng(splitmix64(seed) ^ 0x6D6F64756C61ULL);
  std::vector<double> weights(m);
  for (double& w : weights) w = rng.next_double(lo, hi);
  return ModularInstance(std::move(weights));
}

}  // namespace submax

#endif  // SUBMAX_OBJECTIVES_MODULAR_HPP_
