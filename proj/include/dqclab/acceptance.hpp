// Copyright 2025 The dqclab Authors
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

#pragma once

#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace dqclab::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string note;
  double seconds = 0;
};

constexpr int kCriterionCount = 12;

/// Run the selected criteria (all of them when `which` is empty), printing
/// one PASS/FAIL line per criterion.
std::vector<CriterionResult> run_criteria(const std::set<int>& which, std::ostream& os);

}  // namespace dqclab::acceptance
