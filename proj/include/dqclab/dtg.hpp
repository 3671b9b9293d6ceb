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

#include <array>
#include <map>

#include "dqclab/graph.hpp"
#include "dqclab/rng.hpp"

namespace dqclab {

/// Dotted triple-graph DT(G): three primary copies per base vertex, nine
/// added vertices per base edge (one per ordered pair of copies), each added
/// vertex adjacent to exactly its pair of copies.
struct DottedTripleGraph {
  Graph base;
  Graph graph;
  std::map<QubitLabel, std::array<QubitLabel, 3>> primary;
  std::map<std::pair<QubitLabel, QubitLabel>, std::array<std::array<QubitLabel, 3>, 3>> added;

  bool is_primary(const QubitLabel& node) const;
  /// Base vertex a primary copy belongs to.
  QubitLabel base_of_primary(const QubitLabel& node) const;
};

DottedTripleGraph dotted_triple_graph(const Graph& base);

enum class NodeRole { Computation, Dummy, Trap };

/// Secret partition of DT(G) into computation, dummy and trap nodes.
///
/// Primary copies: one of each role per base vertex. Added vertices between
/// two computation copies carry the computation ("dots"); the added vertex
/// between the two dummy copies of an edge is a trap (its neighbors are
/// dummies, so it ends isolated); every other added vertex is a dummy. This
/// gives every base-edge added set a trap with placement probability 1/9,
/// which is where the 8/9 ceiling of the verification bound comes from.
struct TrapColoring {
  std::set<QubitLabel> computation;
  std::set<QubitLabel> dummies;
  std::set<QubitLabel> traps;
  std::vector<QubitLabel> input_positions;

  NodeRole role(const QubitLabel& node) const;
};

/// Per-base-vertex choice: which copy computes and which copy is the trap.
struct VertexAssignment {
  int computation_copy = 0;
  int trap_copy = 1;
};

TrapColoring make_trap_coloring(const DottedTripleGraph& dtg,
                                const std::map<QubitLabel, VertexAssignment>& choice,
                                const std::vector<QubitLabel>& input_positions);

/// All colorings consistent with the given fixed input copies (input copies
/// are forced into the computation class).
std::vector<TrapColoring> enumerate_trap_colorings(const DottedTripleGraph& dtg,
                                                   const std::vector<QubitLabel>& input_positions);

TrapColoring sample_trap_coloring(const DottedTripleGraph& dtg, DetRng& rng,
                                  const std::vector<QubitLabel>& input_positions);

/// Verify the TrapColoring invariants (partition, one role per copy,
/// trap isolation, inputs in the computation class).
bool trap_coloring_valid(const DottedTripleGraph& dtg, const TrapColoring& coloring);

}  // namespace dqclab
