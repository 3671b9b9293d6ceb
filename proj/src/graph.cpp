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

#include "dqclab/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include <nlohmann/json.hpp>

#include "dqclab/errors.hpp"
#include "dqclab/rng.hpp"

namespace dqclab {

Graph::Graph(std::vector<QubitLabel> vertices,
             std::vector<std::pair<QubitLabel, QubitLabel>> edges) {
  for (const auto& v : vertices) add_vertex(v);
  for (const auto& [a, b] : edges) add_edge(a, b);
}

std::pair<QubitLabel, QubitLabel> Graph::norm_edge(const QubitLabel& a, const QubitLabel& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

void Graph::add_vertex(const QubitLabel& v) {
  require(!has_vertex(v), "duplicate vertex: " + v);
  vertices_.push_back(v);
}

void Graph::add_edge(const QubitLabel& a, const QubitLabel& b) {
  require(a != b, "loops are not allowed");
  require(has_vertex(a) && has_vertex(b), "edge references a missing vertex");
  const auto e = norm_edge(a, b);
  require(!edges_.count(e), "duplicate edge");
  edges_.insert(e);
}

bool Graph::has_vertex(const QubitLabel& v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

bool Graph::has_edge(const QubitLabel& a, const QubitLabel& b) const {
  return edges_.count(norm_edge(a, b)) > 0;
}

std::vector<QubitLabel> Graph::neighbors(const QubitLabel& v) const {
  std::vector<QubitLabel> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  return out;
}

std::string Graph::to_json() const {
  nlohmann::json j;
  j["vertices"] = vertices_;
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : edges_) j["edges"].push_back({a, b});
  return j.dump();
}

Graph Graph::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Graph g;
  for (const auto& v : j.at("vertices")) g.add_vertex(v.get<std::string>());
  for (const auto& e : j.at("edges")) {
    require(e.size() == 2, "edge must be a pair");
    g.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return g;
}

Graph Graph::path(int n) {
  Graph g;
  for (int i = 1; i <= n; ++i) g.add_vertex("v" + std::to_string(i));
  for (int i = 1; i < n; ++i) g.add_edge("v" + std::to_string(i), "v" + std::to_string(i + 1));
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n > 2) g.add_edge("v" + std::to_string(n), "v1");
  return g;
}

Graph Graph::star(int leaves) {
  Graph g;
  g.add_vertex("c");
  for (int i = 1; i <= leaves; ++i) {
    g.add_vertex("v" + std::to_string(i));
    g.add_edge("c", "v" + std::to_string(i));
  }
  return g;
}

QubitLabel Graph::grid_vertex(int r, int c) {
  return "g" + std::to_string(r) + "," + std::to_string(c);
}

Graph Graph::grid(int rows, int cols) {
  Graph g;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) g.add_vertex(grid_vertex(r, c));
  }
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(grid_vertex(r, c), grid_vertex(r, c + 1));
      if (r + 1 < rows) g.add_edge(grid_vertex(r, c), grid_vertex(r + 1, c));
    }
  }
  return g;
}

Graph Graph::complete(int n) {
  Graph g;
  for (int i = 1; i <= n; ++i) g.add_vertex("v" + std::to_string(i));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      g.add_edge("v" + std::to_string(i), "v" + std::to_string(j));
    }
  }
  return g;
}

Graph Graph::random(int n, uint64_t seed) {
  DetRng rng(seed, "graph");
  Graph g;
  for (int i = 1; i <= n; ++i) g.add_vertex("v" + std::to_string(i));
  bool any_edge = false;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (rng.bit()) {
        g.add_edge("v" + std::to_string(i), "v" + std::to_string(j));
        any_edge = true;
      }
    }
  }
  if (!any_edge && n >= 2) g.add_edge("v1", "v2");
  return g;
}

PureState graph_state(const Graph& g) {
  require(g.vertices().size() <= kMaxQubits, "graph exceeds the 16-qubit cap");
  require(!g.vertices().empty(), "graph state of an empty graph");
  std::vector<PureState> pluses;
  for (const auto& v : g.vertices()) pluses.push_back(PureState::plus(v));
  PureState state = tensor(pluses);
  entangle_graph(state, g);
  return state;
}

void entangle_graph(PureState& state, const Graph& g) {
  for (const auto& [a, b] : g.edges()) state.apply_cz(a, b);
}

PauliString stabilizer_generator(const Graph& g, const QubitLabel& j) {
  require(g.has_vertex(j), "unknown vertex: " + j);
  PauliString p = PauliString::single(j, PauliLetter::X);
  for (const auto& n : g.neighbors(j)) p.set(n, PauliLetter::Z);
  return p;
}

PauliString stabilizer_element(const Graph& g, const std::set<QubitLabel>& subset) {
  PauliString p = PauliString::identity();
  // Multiply in the graph's vertex order so phases are reproducible.
  for (const auto& v : g.vertices()) {
    if (subset.count(v)) p = p * stabilizer_generator(g, v);
  }
  return p;
}

std::optional<TwoColoring> find_two_coloring(const Graph& g) {
  std::map<QubitLabel, int> color;
  for (const auto& root : g.vertices()) {
    if (color.count(root)) continue;
    color[root] = 0;
    std::deque<QubitLabel> queue{root};
    while (!queue.empty()) {
      const QubitLabel v = queue.front();
      queue.pop_front();
      for (const auto& w : g.neighbors(v)) {
        if (!color.count(w)) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;  // odd cycle through v and w
        }
      }
    }
  }
  TwoColoring out;
  for (const auto& [v, c] : color) {
    (c == 0 ? out.black : out.white).insert(v);
  }
  return out;
}

}  // namespace dqclab
