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

#ifndef SUBMAX_OBJECTIVES_FACILITY_LOCATION_HPP_
#define SUBMAX_OBJECTIVES_FACILITY_LOCATION_HPP_

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "submax/errors.hpp"
#include "submax/oracle.hpp"
#include "submax/random.hpp"

namespace submax {

// F(S) = sum over clients of the best affinity to any open element.
// F(empty) = 0; monotone submodular.
class FacilityLocationInstance {
 public:
  // affinity[client][element], all non-negative.
  explicit FacilityLocationInstance(std::vector<std::vector<double>> affinity)
      : affinity_(std::move(affinity)) {
    if (affinity_.empty() || affinity_[0].empty())
      throw InvalidParameter("FacilityLocationInstance: empty affinity");
    for (const auto& row : affinity_) {
      if (row.size() != affinity_[0].size())
        throw InvalidParameter("FacilityLocationInstance: ragged affinity");
      for (double a : row)
        if (a < 0.0)
          throw InvalidParameter(
              "FacilityLocationInstance: negative affinity");
    }
  }

  int size() const { return static_cast<int>(affinity_[0].size()); }
  int client_count() const { return static_cast<int>(affinity_.size()); }
  const std::vector<std::vector<double>>& affinity() const {
    return affinity_;
  }

  double operator()(std::span<const int> subset) const {
    if (subset.empty()) return 0.0;
    double total = 0.0;
    for (const auto& row : affinity_) {
      double best = 0.0;
      for (int e : subset) best = std::max(best, row.at(e));
      total += best;
    }
    return total;
  }

  SetFunction as_function() const {
    return [copy = *this](std::span<const int> s) { return copy(s); };
  }

 private:
  std::vector<std::vector<double>> affinity_;
};

inline FacilityLocationInstance make_facility_location(std::uint64_t seed,
                                                       int m, int clients) {
  if (m < 1 || clients < 1)
    throw InvalidParameter("make_facility_location: m and clients must be >= 1");
  Rng rng(splitmix64(seed) ^ 0x666C6F63ULL);
  std::vector<std::vector<double>> affinity(clients, std::vector<double>(m));
  for (auto& row : affinity)
    for (double& a : row) a = rng.next_double();
  return FacilityLocationInstance(std::move(affinity));
}

}  // namespace submax

#endif  // SUBMAX_OBJECTIVES_FACILITY_LOCATION_HPP_
