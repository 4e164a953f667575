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

#ifndef SUBMAX_ERRORS_HPP_
#define SUBMAX_ERRORS_HPP_

#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace submax {

// Caller broke an API precondition (duplicate element, stale base value, ...).
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

// A constructor or search configuration received an out-of-range parameter.
class InvalidParameter : public std::invalid_argument {
 public:
  explicit InvalidParameter(const std::string& what)
      : std::invalid_argument(what) {}
};

// The set function misbehaved at run time (non-finite value, ...). Carries the
// offending subset so the failure is reproducible.
class OracleError : public std::runtime_error {
 public:
  OracleError(const std::string& what, std::vector<int> subset)
      : std::runtime_error(format(what, subset)), subset_(std::move(subset)) {}

  const std::vector<int>& subset() const { return subset_; }

 private:
  static std::string format(const std::string& what,
                            const std::vector<int>& subset) {
    std::ostringstream os;
    os << what << " [subset:";
    for (int e : subset) os << ' ' << e;
    os << ']';
    return os.str();
  }

  std::vector<int> subset_;
};

}  // namespace submax

#endif  // SUBMAX_ERRORS_HPP_
