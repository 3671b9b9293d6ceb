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
#include "dqclab/graph.hpp"

namespace dqclab {

/// Per-node preparation for the prepare-and-send stabilizer test.
enum class PrepKind {
  PlusEigenstate,  // +1 eigenstate of X or Y (the blinded, delegated nodes)
  ZBasis,          // |r_n> with a fresh random bit
  MaxMixed,        // exact mixture of Z^s|+>
};

struct PrepInstruction {
  PrepKind kind = PrepKind::MaxMixed;
  PauliLetter eigen_letter = PauliLetter::X;  // for PlusEigenstate
};

/// Translation of one stabilizer element into a PS test: X/Y letters become
/// +1-eigenstate preparations whose X measurement is delegated blindly,
/// Z letters become random Z-basis preparations, identities become maximally
/// mixed fillers. Accept iff the decoded X/Y outcomes and the Z preparation
/// bits have even parity.
struct StabPsTest {
  Graph graph;
  PauliString element;
  std::map<QubitLabel, PrepInstruction> prep;
  std::vector<QubitLabel> measured;  // the X/Y-letter nodes, in graph order
};

/// Validates that `stab` is in the stabilizer group of g (phase included).
StabPsTest stab_to_ps(const Graph& g, const PauliString& stab);

enum class StabTestKind { ReceiveMeasure, PrepareSend };

/// Exact rejection probability of an honest server.
double stab_honest_reject_probability(StabTestKind kind, const Graph& g,
                                      const PauliString& stab);

/// Exact rejection probability with a Pauli deviation. In RM the attack hits
/// the graph state before sending; in PS it is the equivalent deviation of
/// the prepared node states (the blinding offsets commute out exactly).
double detection_probability(StabTestKind kind, const Graph& g, const PauliString& stab,
                             const PauliString& attack);

/// Fig.-3-style pattern test: measure one color in X, the other in Z, on an
/// arbitrary state the server supplied; accept iff every generator centered
/// in the X color has even parity. `swapped` exchanges the roles.
double pattern_test_reject_probability(const Graph& g, const TwoColoring& coloring,
                                       bool swapped, const PureState& server_state);

/// The PS client for one stabilizer element, as an open system: qubit wires
/// and delta messages out, measurement results in, accept bit out.
SystemSpec stab_ps_client_system(const Graph& g, const PauliString& stab);

/// The receive-and-measure client (respecting announced bit flips) composed
/// with the EPR simulator sigma_S; same open interfaces.
SystemSpec stab_rm_sigma_system(const Graph& g, const PauliString& stab);

}  // namespace dqclab
