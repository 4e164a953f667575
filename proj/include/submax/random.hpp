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

// Deterministic randomness helpers. All stochastic behavior in the library
// flows through Rng so that runs are reproducible bit-for-bit across
// compilers; std::uniform_*_distribution is avoided on purpose (its output
// is implementation-defined).

#ifndef SUBMAX_RANDOM_HPP_
#define SUBMAX_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace submax {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of precision.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [lo, hi).
  double next_double(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  // Uniform integer in [0, n). Unbiased via rejection.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % n;
  }

  bool bernoulli(double p) { return next_double() < p; }

 private:
  std::mt19937_64 engine_;
};

// First `count` positions of a Fisher-Yates shuffle; order of the sample is
// the draw order. `count > items.size()` is clamped.
template <typename T>
std::vector<T> sample_without_replacement(std::vector<T> items,
                                          std::size_t count, Rng& rng) {
  if (count >= items.size()) return items;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + rng.next_below(items.size() - i);
    std::swap(items[i], items[j]);
  }
  items.resize(count);
  return items;
}

}  // namespace submax

#endif  // SUBMAX_RANDOM_HPP_
