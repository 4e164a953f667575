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

#ifndef SUBMAX_REPORT_HPP_
#define SUBMAX_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "submax/solution.hpp"

namespace submax {

// Outcome record of one search run. insertion_auc and ac_ratio are filled by
// the analysis layer once the ground set is known; search drivers leave them
// empty. ac_ratio = insertion_auc * 1000 / mec whenever mec > 0.
struct RunReport {
  std::string algorithm;
  std::string instance_id;
  OrderedSolution solution;
  long long mec = 0;
  std::optional<double> insertion_auc;
  std::optional<double> ac_ratio;
  // Selection steps for flat searches, phases for phased ones.
  int wall_steps = 0;
  // Why the run stopped: "target-size", "exhausted", "no-positive-gain",
  // "ratio-stop".
  std::string termination;
  // Fraction of phases ended by a supervised early exit (phased searches).
  std::optional<double> early_exit_fraction;
  // Anomalies observed while running, e.g. a stale bound exceeded fresh
  // re-evaluation (submodularity violated).
  std::vector<std::string> divergence_flags;

  double objective_value() const { return solution.value(); }
};

}  // namespace submax

#endif  // SUBMAX_REPORT_HPP_
