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

#ifndef SUBMAX_GAIN_CACHE_HPP_
#define SUBMAX_GAIN_CACHE_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "submax/errors.hpp"
#include "submax/oracle.hpp"

namespace submax {

// Marginal gains keyed by element, each stamped with the selection size at
// caching time. An entry whose stamp equals the current |S| is exact; older
// entries are stale (upper bounds under diminishing returns). Every entry
// comes from a real oracle call.
class GainCache {
 public:
  struct Entry {
    double gain = 0.0;
    std::size_t stamp = 0;
  };

  void store(int element, double gain, std::size_t stamp) {
    entries_[element] = Entry{gain, stamp};
  }

  bool contains(int element) const { return entries_.count(element) != 0; }

  const Entry& at(int element) const {
    auto it = entries_.find(element);
    if (it == entries_.end())
      throw ContractViolation("GainCache: no entry for element " +
                              std::to_string(element));
    return it->second;
  }

  double gain(int element) const { return at(element).gain; }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Deterministic (ascending element) iteration.
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

 private:
  std::map<int, Entry> entries_;
};

// F(base ∪ {candidate}) - base_value, consuming exactly one oracle
// evaluation. base_value must be F(base_set) computed earlier.
inline double marginal_gain(ScoreOracle& oracle, double base_value,
                            std::span<const int> base_set, int candidate) {
  if (std::find(base_set.begin(), base_set.end(), candidate) != base_set.end())
    throw ContractViolation("marginal_gain: candidate " +
                            std::to_string(candidate) + " already selected");
  std::vector<int> extended(base_set.begin(), base_set.end());
  extended.push_back(candidate);
  return oracle.evaluate(extended) - base_value;
}

// Fresh gains for every remaining element, stamped with |base_set|. Consumes
// exactly |remaining| evaluations, plus one for F(base_set) when base_value
// is not supplied. Empty remaining costs nothing.
inline GainCache full_sweep(ScoreOracle& oracle, std::span<const int> base_set,
                            std::span<const int> remaining,
                            std::optional<double> base_value = std::nullopt) {
  GainCache cache;
  if (remaining.empty()) return cache;
  const double base = base_value ? *base_value : oracle.evaluate(base_set);
  const std::size_t stamp = base_set.size();
  for (int r : remaining) {
    cache.store(r, marginal_gain(oracle, base, base_set, r), stamp);
  }
  return cache;
}

}  // namespace submax

#endif  // SUBMAX_GAIN_CACHE_HPP_
