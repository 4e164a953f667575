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

#ifndef SUBMAX_SOLUTION_HPP_
#define SUBMAX_SOLUTION_HPP_

#include <set>
#include <string>
#include <vector>

#include "submax/errors.hpp"

namespace submax {

// A selection sequence together with the cumulative objective value and the
// marginal gain realized at every step. step_gains[j] is derived as
// step_values[j] - step_values[j-1] (against the empty-set baseline for
// j = 0), so the telescoping identity holds bit-for-bit.
class OrderedSolution {
 public:
  OrderedSolution() = default;
  explicit OrderedSolution(double empty_value) : empty_value_(empty_value) {}

  void push_step(int element, double value) {
    const double prev = step_values_.empty() ? empty_value_ : step_values_.back();
    order_.push_back(element);
    step_values_.push_back(value);
    step_gains_.push_back(value - prev);
  }

  bool empty() const { return order_.empty(); }
  std::size_t size() const { return order_.size(); }

  const std::vector<int>& order() const { return order_; }
  const std::vector<double>& step_values() const { return step_values_; }
  const std::vector<double>& step_gains() const { return step_gains_; }
  double empty_value() const { return empty_value_; }

  // Final objective value; the baseline when nothing was selected.
  double value() const {
    return step_values_.empty() ? empty_value_ : step_values_.back();
  }

  // Structural invariants: no duplicate elements, indices in range.
  void validate(int ground_size) const {
    std::set<int> seen;
    for (int e : order_) {
      if (e < 0 || e >= ground_size)
        throw ContractViolation("OrderedSolution: element " +
                                std::to_string(e) + " out of range");
      if (!seen.insert(e).second)
        throw ContractViolation("OrderedSolution: duplicate element " +
                                std::to_string(e));
    }
  }

 private:
  std::vector<int> order_;
  std::vector<double> step_values_;
  std::vector<double> step_gains_;
  double empty_value_ = 0.0;
};

}  // namespace submax

#endif  // SUBMAX_SOLUTION_HPP_
