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
#include <map>
#include <string>
#include <vector>

#include "dqclab/branch.hpp"
#include "dqclab/states.hpp"

namespace dqclab {

/// An interactive system with finite open interfaces.
///
/// Classical inputs are enumerated exhaustively; quantum inputs are probed by
/// feeding halves of maximally entangled pairs (the Choi construction), so
/// exact equality of the extracted tables certifies channel equality.
struct SystemSpec {
  std::vector<std::string> classical_input_names;
  std::vector<int> classical_input_arity;
  std::vector<QubitLabel> quantum_inputs;
  std::vector<QubitLabel> quantum_outputs;
  std::vector<std::string> classical_output_names;

  /// run(classical inputs, chooser, state, classical outputs).
  /// `state` starts holding exactly the quantum input labels (entangled with
  /// reference qubits the extractor owns) and must end holding exactly the
  /// quantum output labels.
  std::function<void(const std::vector<int>&, Chooser&, PureState&, std::vector<int>&)> run;
};

/// Classical-quantum transfer table: for each classical input tuple, a map
/// from classical output tuple to the (subnormalized) operator on the
/// reference + quantum-output register.
struct CqChannel {
  std::vector<int> input_arity;
  std::vector<QubitLabel> quantum_labels;
  std::map<std::vector<int>, std::map<std::vector<int>, Eigen::MatrixXcd>> table;
};

CqChannel extract_channel(const SystemSpec& spec);

/// Max over classical inputs of the trace distance between the cq outputs.
/// Exact channel equality shows up as a value at numerical zero.
double channel_distance(const CqChannel& a, const CqChannel& b);

constexpr double kEpsilonPass = 1e-10;

/// Converters wrap systems: protocol machines, filters and simulators all
/// transform one SystemSpec into another.
struct Converter {
  std::string party;
  std::function<SystemSpec(const SystemSpec&)> bind;
};

SystemSpec compose(const Converter& c, const SystemSpec& resource);
SystemSpec compose(const std::vector<Converter>& converters, const SystemSpec& resource);

Converter identity_converter(const std::string& party);
/// Filter fixing a classical input slot to a constant (removes the slot).
Converter fix_classical_input(const std::string& party, const std::string& slot_name, int value);
/// Filter feeding a fixed single-qubit state into a quantum input wire.
Converter fix_quantum_input(const std::string& party, const QubitLabel& wire,
                            const PureState& value);

}  // namespace dqclab
