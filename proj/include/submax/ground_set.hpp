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

#ifndef SUBMAX_GROUND_SET_HPP_
#define SUBMAX_GROUND_SET_HPP_

#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "submax/errors.hpp"

namespace submax {

// Indexed candidate elements with per-element area weights. Element identity
// is its index 0..m-1 and is stable for the lifetime of a run.
class GroundSet {
 public:
  // Uniform unit areas.
  explicit GroundSet(int size) : areas_(check_size(size), 1.0) {
    total_area_ = static_cast<double>(size);
  }

  explicit GroundSet(std::vector<double> areas) : areas_(std::move(areas)) {
    check_size(static_cast<int>(areas_.size()));
    for (std::size_t i = 0; i < areas_.size(); ++i) {
      if (!(areas_[i] > 0.0)) {
        throw InvalidParameter("GroundSet: area of element " +
                               std::to_string(i) + " must be positive");
      }
    }
    total_area_ = std::accumulate(areas_.begin(), areas_.end(), 0.0);
  }

  int size() const { return static_cast<int>(areas_.size()); }
  double area(int element) const { return areas_.at(element); }
  const std::vector<double>& areas() const { return areas_; }
  double total_area() const { return total_area_; }

 private:
  static int check_size(int size) {
    if (size < 1) throw InvalidParameter("GroundSet: size must be >= 1");
    return size;
  }

  std::vector<double> areas_;
  double total_area_ = 0.0;
};

}  // namespace submax

#endif  // SUBMAX_GROUND_SET_HPP_
