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

#include "dqclab/channel.hpp"
#include "dqclab/pattern.hpp"
#include "dqclab/rng.hpp"
#include "dqclab/transcript.hpp"

namespace dqclab {

/// Stabilizer-based verification in prepare-and-send: 2k+1 rounds on a
/// two-colorable graph; k rounds test the generators centered in one color,
/// k rounds the other color, one round runs the blind computation.
struct Protocol3Config {
  Graph graph;
  TwoColoring coloring;
  int k = 1;
  /// Computation-round pattern on the same graph; classical input is encoded
  /// in the pattern angles, classical output read from the output vertices.
  MeasurementPattern pattern;
};

enum class RoundKind { TestBlackZ, TestWhiteZ, Compute };

struct Protocol3Honest {
  long branches = 0;
  bool always_accept = true;
  /// Delegated logical-outcome distribution matches the local oracle.
  double outcome_distribution_distance = 0.0;
};

/// Exhaustive honest run. `blind_units` selects which lattice offsets are
/// enumerated for the theta pads (the decoded statistics are pad-independent,
/// which test_protocols checks separately; the full 16-value sweep is
/// exponential in the node count).
Protocol3Honest protocol3_honest(const Protocol3Config& config,
                                 const std::vector<int>& blind_units = {0, 3});

/// Server view of a single round (qubits plus all angle messages) under
/// scripted responses; used for the round-indistinguishability checks.
SystemSpec protocol3_round_view_system(const Protocol3Config& config, RoundKind kind);

/// Exact probability that a test round catches a server that flips the
/// reported measurement result on one node.
double protocol3_flip_detection(const Protocol3Config& config, RoundKind kind,
                                const QubitLabel& node);

struct Protocol3Run {
  bool accepted = true;
  std::vector<int> output_bits;
  Transcript transcript;
};

Protocol3Run protocol3_run_sampled(const Protocol3Config& config, DetRng& rng);

}  // namespace dqclab
