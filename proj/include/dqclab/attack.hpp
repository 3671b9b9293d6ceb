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

#include <set>
#include <vector>

#include "dqclab/pauli.hpp"

namespace dqclab {

/// The attack class E: Pauli words with at least one Y or Z letter anywhere,
/// or an X on an input register. Identity excluded, weight capped.
std::vector<PauliString> enumerate_class_e(const std::vector<QubitLabel>& labels,
                                           const std::set<QubitLabel>& input_labels,
                                           int max_weight);

/// The complementary words the analysis says cannot contribute: I/X-only
/// with no X on any input register.
std::vector<PauliString> enumerate_ix_only(const std::vector<QubitLabel>& labels,
                                           const std::set<QubitLabel>& input_labels,
                                           int max_weight);

/// Membership predicate of E for a single word (used as the test oracle).
bool in_class_e(const PauliString& p, const std::set<QubitLabel>& input_labels);

/// All non-identity words up to the weight cap.
std::vector<PauliString> enumerate_all_paulis(const std::vector<QubitLabel>& labels,
                                              int max_weight);

}  // namespace dqclab
