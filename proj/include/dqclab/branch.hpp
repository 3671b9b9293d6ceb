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

#include <functional>
#include <vector>

#include "dqclab/states.hpp"

namespace dqclab {

/// Exact enumeration of every discrete branch of a randomized procedure.
///
/// The procedure runs once per assignment of all its choice points (sampled
/// bits, angles, measurement outcomes); the Chooser replays a choice tape and
/// the runner advances the tape odometer until every branch was visited.
/// Zero-probability measurement outcomes are skipped, so the branch weights
/// of one enumeration sum to 1.
class Chooser {
 public:
  /// Uniform choice among n alternatives; multiplies the branch weight by 1/n.
  int choose(int n);
  /// Weighted choice; alternatives below 1e-14 are pruned.
  int choose_weighted(const std::vector<double>& probs);

  /// Measure-and-collapse helpers; the branch weight absorbs the probability.
  int measure_xy(PureState& state, const QubitLabel& q, Angle delta);
  int measure_x(PureState& state, const QubitLabel& q) { return measure_xy(state, q, Angle()); }
  int measure_z(PureState& state, const QubitLabel& q);
  int measure_letter(PureState& state, const QubitLabel& q, PauliLetter letter);
  /// Trace a qubit out exactly (measure in Z, forget the outcome).
  void discard(PureState& state, const QubitLabel& q);

  double weight() const { return weight_; }

 private:
  friend void enumerate_branches(const std::function<void(Chooser&)>& fn);
  Chooser(std::vector<int>* tape, std::vector<int>* arity) : tape_(tape), arity_(arity) {}

  int next(int n, double w);

  std::vector<int>* tape_;
  std::vector<int>* arity_;
  size_t pos_ = 0;
  double weight_ = 1.0;
};

/// Run fn once per branch (depth-first over the choice tape).
void enumerate_branches(const std::function<void(Chooser&)>& fn);

}  // namespace dqclab
