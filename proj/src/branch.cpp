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

#include "dqclab/branch.hpp"

#include "dqclab/errors.hpp"

namespace dqclab {

int Chooser::next(int n, double /*unused*/) {
  require(n > 0, "choice point with no alternatives");
  int k;
  if (pos_ < tape_->size()) {
    k = (*tape_)[pos_];
  } else {
    tape_->push_back(0);
    arity_->push_back(n);
    k = 0;
  }
  require((*arity_)[pos_] == n, "non-deterministic branch structure");
  ++pos_;
  return k;
}

int Chooser::choose(int n) {
  const int k = next(n, 0);
  weight_ /= n;
  return k;
}

int Chooser::choose_weighted(const std::vector<double>& probs) {
  std::vector<int> alive;
  for (size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] > 1e-14) alive.push_back(static_cast<int>(i));
  }
  require(!alive.empty(), "all branches have zero probability");
  const int pick = next(static_cast<int>(alive.size()), 0);
  weight_ *= probs[alive[pick]];
  return alive[pick];
}

int Chooser::measure_xy(PureState& state, const QubitLabel& q, Angle delta) {
  auto branches = state.measure_xy(q, delta);
  const int o = choose_weighted({branches[0].probability, branches[1].probability});
  state = std::move(branches[o].state);
  return o;
}

int Chooser::measure_z(PureState& state, const QubitLabel& q) {
  auto branches = state.measure_z(q);
  const int o = choose_weighted({branches[0].probability, branches[1].probability});
  state = std::move(branches[o].state);
  return o;
}

int Chooser::measure_letter(PureState& state, const QubitLabel& q, PauliLetter letter) {
  auto branches = state.measure_letter(q, letter);
  const int o = choose_weighted({branches[0].probability, branches[1].probability});
  state = std::move(branches[o].state);
  return o;
}

void Chooser::discard(PureState& state, const QubitLabel& q) { measure_z(state, q); }

void enumerate_branches(const std::function<void(Chooser&)>& fn) {
  std::vector<int> tape;
  std::vector<int> arity;
  while (true) {
    Chooser chooser(&tape, &arity);
    fn(chooser);
    size_t k = tape.size();
    while (k > 0 && tape[k - 1] + 1 >= arity[k - 1]) --k;
    if (k == 0) break;
    ++tape[k - 1];
    tape.resize(k);
    arity.resize(k);
  }
}

}  // namespace dqclab
