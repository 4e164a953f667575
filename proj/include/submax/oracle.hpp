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

#ifndef SUBMAX_ORACLE_HPP_
#define SUBMAX_ORACLE_HPP_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "submax/errors.hpp"

namespace submax {

// A pure set function F: subsets of {0..m-1} -> R. Implementations must be
// deterministic; they always receive the subset in ascending index order.
using SetFunction = std::function<double(std::span<const int>)>;

// Wraps a SetFunction with evaluation accounting. One unit of the counter is
// one simulated model forward; each evaluate() charges cost_factor units
// (e.g. 2 when a scorer needs two forward passes per set evaluation).
//
// value_of_empty() exposes F(empty) without charging the counter: search
// drivers that never need the baseline magnitude for their decisions use it
// for reporting only. Drivers whose control flow consumes the baseline must
// call evaluate({}) so the cost is visible.
class ScoreOracle {
 public:
  explicit ScoreOracle(SetFunction fn, int cost_factor = 1)
      : fn_(std::move(fn)), cost_factor_(cost_factor) {
    if (cost_factor_ < 1)
      throw InvalidParameter("ScoreOracle: cost_factor must be >= 1");
  }

  ScoreOracle(const ScoreOracle&) = delete;
  ScoreOracle& operator=(const ScoreOracle&) = delete;

  // Counted evaluation. Canonicalizes to ascending order, so memoizing set
  // functions are well-defined. Throws OracleError on non-finite values.
  double evaluate(std::span<const int> subset) {
    call_count_.fetch_add(cost_factor_, std::memory_order_relaxed);
    return evaluate_pure(subset);
  }

  double evaluate(std::initializer_list<int> subset) {
    return evaluate(std::span<const int>(subset.begin(), subset.size()));
  }

  // F(empty), computed once, not charged to the counter.
  double value_of_empty() const {
    if (!empty_value_) {
      empty_value_ = check_finite(fn_({}), {});
    }
    return *empty_value_;
  }

  // Cumulative model evaluation count (cost factor already folded in).
  long long call_count() const {
    return call_count_.load(std::memory_order_relaxed);
  }

  int cost_factor() const { return cost_factor_; }

  void reset_count() { call_count_.store(0, std::memory_order_relaxed); }

 private:
  double evaluate_pure(std::span<const int> subset) const {
    if (std::is_sorted(subset.begin(), subset.end())) {
      return check_finite(fn_(subset), subset);
    }
    std::vector<int> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    return check_finite(fn_(sorted), sorted);
  }

  static double check_finite(double value, std::span<const int> subset) {
    if (!std::isfinite(value)) {
      throw OracleError("oracle returned a non-finite value",
                        std::vector<int>(subset.begin(), subset.end()));
    }
    return value;
  }

  SetFunction fn_;
  int cost_factor_;
  std::atomic<long long> call_count_{0};
  mutable std::optional<double> empty_value_;
};

// Cumulative model evaluation count of an oracle.
inline long long mec(const ScoreOracle& oracle) { return oracle.call_count(); }

}  // namespace submax

#endif  // SUBMAX_ORACLE_HPP_
