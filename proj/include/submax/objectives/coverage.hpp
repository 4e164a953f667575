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

#ifndef SUBMAX_OBJECTIVES_COVERAGE_HPP_
#define SUBMAX_OBJECTIVES_COVERAGE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "submax/errors.hpp"
#include "submax/oracle.hpp"
#include "submax/random.hpp"

namespace submax {

// Weighted coverage: F(S) = total weight of the union of the items covered
// by the elements of S. Monotone submodular by construction.
class CoverageInstance {
 public:
  CoverageInstance(int universe_size, std::vector<std::vector<int>> covers,
                   std::vector<double> item_weights)
      : universe_size_(universe_size),
        covers_(std::move(covers)),
        item_weights_(std::move(item_weights)) {
    if (universe_size_ < 1)
      throw InvalidParameter("CoverageInstance: empty universe");
    if (covers_.empty())
      throw InvalidParameter("CoverageInstance: no elements");
    if (static_cast<int>(item_weights_.size()) != universe_size_)
      throw InvalidParameter("CoverageInstance: weight/universe mismatch");
    const std::size_t blocks = (universe_size_ + 63) / 64;
    masks_.assign(covers_.size(), std::vector<std::uint64_t>(blocks, 0));
    for (std::size_t e = 0; e < covers_.size(); ++e) {
      for (int item : covers_[e]) {
        if (item < 0 || item >= universe_size_)
          throw InvalidParameter("CoverageInstance: item out of range");
        masks_[e][item / 64] |= std::uint64_t{1} << (item % 64);
      }
    }
  }

  int size() const { return static_cast<int>(covers_.size()); }
  int universe_size() const { return universe_size_; }
  const std::vector<std::vector<int>>& covers() const { return covers_; }
  const std::vector<double>& item_weights() const { return item_weights_; }

  double operator()(std::span<const int> subset) const {
    const std::size_t blocks = masks_.empty() ? 0 : masks_[0].size();
    std::vector<std::uint64_t> covered(blocks, 0);
    for (int e : subset) {
      const auto& mask = masks_.at(e);
      for (std::size_t b = 0; b < blocks; ++b) covered[b] |= mask[b];
    }
    double total = 0.0;
    for (std::size_t b = 0; b < blocks; ++b) {
      std::uint64_t bits = covered[b];
      while (bits) {
        const int item = static_cast<int>(b * 64) + __builtin_ctzll(bits);
        total += item_weights_[item];
        bits &= bits - 1;
      }
    }
    return total;
  }

  SetFunction as_function() const {
    return [copy = *this](std::span<const int> s) { return copy(s); };
  }

 private:
  int universe_size_;
  std::vector<std::vector<int>> covers_;
  std::vector<double> item_weights_;
  std::vector<std::vector<std::uint64_t>> masks_;
};

// Random coverage instance. Each element covers each item independently with
// probability `density`; elements that would end up empty get one fallback
// item so every singleton has positive value.
inline CoverageInstance make_coverage(std::uint64_t seed, int m, int universe,
                                      double density) {
  if (m < 1 || universe < 1)
    throw InvalidParameter("make_coverage: m and universe must be >= 1");
  if (!(density > 0.0) || density > 1.0)
    throw InvalidParameter("make_coverage: density must be in (0, 1]");
  Rng rng(splitmix64(seed) ^ 0x636F766572ULL);
  std::vector<std::vector<int>> covers(m);
  for (int e = 0; e < m; ++e) {
    for (int item = 0; item < universe; ++item) {
      if (rng.bernoulli(density)) covers[e].push_back(item);
    }
    if (covers[e].empty())
      covers[e].push_back(static_cast<int>(rng.next_below(universe)));
  }
  std::vector<double> weights(universe);
  for (double& w : weights) w = rng.next_double(0.5, 1.5);
  return CoverageInstance(universe, std::move(covers), std::move(weights));
}

}  // namespace submax

#endif  // SUBMAX_OBJECTIVES_COVERAGE_HPP_
