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

#include "dqclab/attack.hpp"

#include <functional>

#include "dqclab/errors.hpp"

namespace dqclab {

namespace {

void enumerate_words(const std::vector<QubitLabel>& labels, int max_weight, size_t start,
                     PauliString& current, int weight,
                     const std::function<void(const PauliString&)>& sink) {
  if (weight > 0) sink(current);
  if (weight == max_weight) return;
  for (size_t i = start; i < labels.size(); ++i) {
    for (PauliLetter l : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z}) {
      current.set(labels[i], l);
      enumerate_words(labels, max_weight, i + 1, current, weight + 1, sink);
    }
    current.set(labels[i], PauliLetter::I);
  }
}

}  // namespace

bool in_class_e(const PauliString& p, const std::set<QubitLabel>& input_labels) {
  if (p.is_identity()) return false;
  for (const auto& [q, l] : p.letters()) {
    if (l == PauliLetter::Y || l == PauliLetter::Z) return true;
    if (l == PauliLetter::X && input_labels.count(q)) return true;
  }
  return false;
}

std::vector<PauliString> enumerate_all_paulis(const std::vector<QubitLabel>& labels,
                                              int max_weight) {
  require(max_weight >= 1, "weight cap must be at least 1");
  std::vector<PauliString> out;
  PauliString current;
  enumerate_words(labels, max_weight, 0, current, 0,
                  [&](const PauliString& p) { out.push_back(p); });
  return out;
}

std::vector<PauliString> enumerate_class_e(const std::vector<QubitLabel>& labels,
                                           const std::set<QubitLabel>& input_labels,
                                           int max_weight) {
  std::vector<PauliString> out;
  for (const auto& p : enumerate_all_paulis(labels, max_weight)) {
    if (in_class_e(p, input_labels)) out.push_back(p);
  }
  return out;
}

std::vector<PauliString> enumerate_ix_only(const std::vector<QubitLabel>& labels,
                                           const std::set<QubitLabel>& input_labels,
                                           int max_weight) {
  std::vector<PauliString> out;
  for (const auto& p : enumerate_all_paulis(labels, max_weight)) {
    if (!in_class_e(p, input_labels)) out.push_back(p);
  }
  return out;
}

}  // namespace dqclab
