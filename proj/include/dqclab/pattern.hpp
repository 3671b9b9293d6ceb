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

#include <map>
#include <string>
#include <vector>

#include "dqclab/graph.hpp"

namespace dqclab {

/// Measurement-based computation: a graph, a measurement order with XY-plane
/// angles, and a causal flow used to adapt angles to earlier outcomes.
struct MeasurementPattern {
  Graph graph;
  std::vector<QubitLabel> order;           // measured vertices, in order
  std::map<QubitLabel, Angle> angles;      // one per measured vertex
  std::map<QubitLabel, QubitLabel> flow;   // v -> f(v)
  std::vector<QubitLabel> inputs;
  std::vector<QubitLabel> outputs;

  void validate() const;
  bool is_measured(const QubitLabel& v) const;

  /// Predecessor under flow (the vertex whose outcome flips this angle's sign).
  std::vector<QubitLabel> x_dependencies(const QubitLabel& v) const;
  /// Vertices m with v in N(f(m)) \ {m}; their outcomes add pi to the angle.
  std::vector<QubitLabel> z_dependencies(const QubitLabel& v) const;

  std::string to_json() const;
  static MeasurementPattern from_json(const std::string& text);

  /// Path pattern: measure v1..v_{n-1} with the given angles, output vn.
  static MeasurementPattern path(const std::vector<Angle>& measured_angles);
  /// Grid pattern with row-major flow; inputs first column, outputs last.
  static MeasurementPattern grid(int rows, int cols,
                                 const std::map<QubitLabel, Angle>& measured_angles);
};

/// (-1)^sx * phi + sz*pi, the standard XY-plane correction rule.
Angle adapt_angle(Angle phi, int sx, int sz);

std::map<QubitLabel, QubitLabel> flow_for_path(int n);
std::map<QubitLabel, QubitLabel> flow_for_grid(int rows, int cols);

struct PatternBranch {
  std::map<QubitLabel, int> outcomes;
  double probability = 0.0;
  PureState output;  // corrected, labels in pattern output order
};

/// All measurement branches of an honest local run, with corrections applied.
std::vector<PatternBranch> run_pattern_branches(const MeasurementPattern& p,
                                                const PureState& input);

/// Exact average over branches; a deterministic pattern returns a pure output.
MixedState run_pattern_local(const MeasurementPattern& p, const PureState& input);

/// The unitary a deterministic pattern implements, up to global phase.
Eigen::MatrixXcd pattern_unitary(const MeasurementPattern& p);

}  // namespace dqclab
