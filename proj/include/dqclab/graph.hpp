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

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dqclab/pauli.hpp"
#include "dqclab/states.hpp"

namespace dqclab {

/// Simple undirected graph over string-labeled vertices.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<QubitLabel> vertices, std::vector<std::pair<QubitLabel, QubitLabel>> edges);

  void add_vertex(const QubitLabel& v);
  void add_edge(const QubitLabel& a, const QubitLabel& b);

  const std::vector<QubitLabel>& vertices() const { return vertices_; }
  const std::set<std::pair<QubitLabel, QubitLabel>>& edges() const { return edges_; }
  bool has_vertex(const QubitLabel& v) const;
  bool has_edge(const QubitLabel& a, const QubitLabel& b) const;
  std::vector<QubitLabel> neighbors(const QubitLabel& v) const;
  int degree(const QubitLabel& v) const { return static_cast<int>(neighbors(v).size()); }

  std::string to_json() const;
  static Graph from_json(const std::string& text);

  static Graph path(int n);
  static Graph cycle(int n);
  static Graph star(int leaves);
  static Graph grid(int rows, int cols);
  static QubitLabel grid_vertex(int r, int c);
  static Graph complete(int n);
  static Graph random(int n, uint64_t seed);

 private:
  static std::pair<QubitLabel, QubitLabel> norm_edge(const QubitLabel& a, const QubitLabel& b);

  std::vector<QubitLabel> vertices_;
  std::set<std::pair<QubitLabel, QubitLabel>> edges_;
};

struct TwoColoring {
  std::set<QubitLabel> black;
  std::set<QubitLabel> white;
};

/// |G> = E_G applied to |+> on every vertex; E_G is one CZ per edge.
PureState graph_state(const Graph& g);
/// Apply E_G to an existing register containing all graph vertices.
void entangle_graph(PureState& state, const Graph& g);

/// g_j = X at j, Z on the neighborhood of j, identity elsewhere, phase +1.
PauliString stabilizer_generator(const Graph& g, const QubitLabel& j);
/// Phase-tracked product of generators over a vertex subset.
PauliString stabilizer_element(const Graph& g, const std::set<QubitLabel>& subset);

/// Breadth-first 2-coloring; nullopt when an odd cycle makes it impossible.
std::optional<TwoColoring> find_two_coloring(const Graph& g);

}  // namespace dqclab
