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

// Curvature diagnostics: sampled returns-regime classification for arbitrary
// oracles, and exhaustive verification for small ground sets.

#ifndef SUBMAX_OBJECTIVES_DIAGNOSTICS_HPP_
#define SUBMAX_OBJECTIVES_DIAGNOSTICS_HPP_

#include <cstdint>
#include <vector>

#include "submax/errors.hpp"
#include "submax/oracle.hpp"
#include "submax/random.hpp"

namespace submax {

struct CurvatureDiagnosis {
  // Fraction of sampled (A ⊆ B, x ∉ B) triples satisfying diminishing
  // returns, and the fraction satisfying increasing returns. Ties count to
  // both, so the fractions sum to at least 1.
  double submodular_fraction = 0.0;
  double supermodular_fraction = 0.0;
  int samples = 0;
};

// Classifies sampled chain triples by comparing the marginal gain of x at A
// against its gain at B ⊇ A. Comparisons use a 1e-9 absolute tolerance.
inline CurvatureDiagnosis check_submodularity(ScoreOracle& oracle, int m,
                                              int samples,
                                              std::uint64_t seed) {
  if (m < 1) throw InvalidParameter("check_submodularity: m must be >= 1");
  if (samples < 1)
    throw InvalidParameter("check_submodularity: samples must be >= 1");
  constexpr double kTol = 1e-9;
  Rng rng(splitmix64(seed) ^ 0x747269706CULL);
  int sub = 0, sup = 0;
  for (int s = 0; s < samples; ++s) {
    // Random B excluding one pivot x, then A as a random subset of B.
    const int x = static_cast<int>(rng.next_below(m));
    std::vector<int> b_set, a_set;
    for (int e = 0; e < m; ++e) {
      if (e == x) continue;
      if (rng.bernoulli(0.5)) {
        b_set.push_back(e);
        if (rng.bernoulli(0.5)) a_set.push_back(e);
      }
    }
    const double fa = oracle.evaluate(a_set);
    const double fb = oracle.evaluate(b_set);
    a_set.push_back(x);
    b_set.push_back(x);
    const double gain_a = oracle.evaluate(a_set) - fa;
    const double gain_b = oracle.evaluate(b_set) - fb;
    if (gain_a >= gain_b - kTol) ++sub;
    if (gain_b >= gain_a - kTol) ++sup;
  }
  return CurvatureDiagnosis{static_cast<double>(sub) / samples,
                            static_cast<double>(sup) / samples, samples};
}

struct ExhaustiveCheck {
  bool monotone = true;
  bool submodular = true;
  bool supermodular = true;
};

// Enumerates every (A ⊆ B ⊆ V, x ∉ B) triple over a table of all 2^m set
// values. Bypasses oracle accounting; intended for m <= ~12.
inline ExhaustiveCheck exhaustive_curvature_check(const SetFunction& fn,
                                                  int m, double tol = 1e-9) {
  if (m < 1 || m > 20)
    throw InvalidParameter("exhaustive_curvature_check: m out of range");
  const std::uint32_t count = std::uint32_t{1} << m;
  std::vector<double> value(count);
  std::vector<int> scratch;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    scratch.clear();
    for (int e = 0; e < m; ++e)
      if (mask & (std::uint32_t{1} << e)) scratch.push_back(e);
    value[mask] = fn(scratch);
  }

  ExhaustiveCheck result;
  for (std::uint32_t b = 0; b < count; ++b) {
    for (int x = 0; x < m; ++x) {
      const std::uint32_t bit = std::uint32_t{1} << x;
      if (b & bit) continue;
      const double gain_b = value[b | bit] - value[b];
      if (gain_b < -tol) result.monotone = false;
      // All A ⊆ B via submask iteration (including the empty set).
      std::uint32_t a = b;
      while (true) {
        const double gain_a = value[a | bit] - value[a];
        if (gain_a < gain_b - tol) result.submodular = false;
        if (gain_a > gain_b + tol) result.supermodular = false;
        if (a == 0) break;
        a = (a - 1) & b;
      }
    }
  }
  return result;
}

}  // namespace submax

#endif  // SUBMAX_OBJECTIVES_DIAGNOSTICS_HPP_
