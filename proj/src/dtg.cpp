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

#include "dqclab/dtg.hpp"

#include <algorithm>

#include "dqclab/errors.hpp"

namespace dqclab {

namespace {
QubitLabel copy_label(const QubitLabel& v, int i) { return v + ":" + std::to_string(i); }
QubitLabel added_label(const QubitLabel& u, int i, const QubitLabel& v, int j) {
  return copy_label(u, i) + "~" + copy_label(v, j);
}
}  // namespace

bool DottedTripleGraph::is_primary(const QubitLabel& node) const {
  for (const auto& [v, copies] : primary) {
    if (std::find(copies.begin(), copies.end(), node) != copies.end()) return true;
  }
  return false;
}

QubitLabel DottedTripleGraph::base_of_primary(const QubitLabel& node) const {
  for (const auto& [v, copies] : primary) {
    if (std::find(copies.begin(), copies.end(), node) != copies.end()) return v;
  }
  fail("not a primary copy: " + node);
}

DottedTripleGraph dotted_triple_graph(const Graph& base) {
  const size_t n_nodes = 3 * base.vertices().size() + 9 * base.edges().size();
  require(n_nodes <= kMaxQubits, "DT(G) exceeds the 16-qubit cap");

  DottedTripleGraph dtg;
  dtg.base = base;
  for (const auto& v : base.vertices()) {
    std::array<QubitLabel, 3> copies;
    for (int i = 0; i < 3; ++i) {
      copies[i] = copy_label(v, i);
      dtg.graph.add_vertex(copies[i]);
    }
    dtg.primary[v] = copies;
  }
  for (const auto& [u, v] : base.edges()) {
    std::array<std::array<QubitLabel, 3>, 3> block;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const QubitLabel a = added_label(u, i, v, j);
        dtg.graph.add_vertex(a);
        dtg.graph.add_edge(copy_label(u, i), a);
        dtg.graph.add_edge(a, copy_label(v, j));
        block[i][j] = a;
      }
    }
    dtg.added[{u, v}] = block;
  }
  return dtg;
}

NodeRole TrapColoring::role(const QubitLabel& node) const {
  if (computation.count(node)) return NodeRole::Computation;
  if (dummies.count(node)) return NodeRole::Dummy;
  if (traps.count(node)) return NodeRole::Trap;
  fail("node has no role: " + node);
}

TrapColoring make_trap_coloring(const DottedTripleGraph& dtg,
                                const std::map<QubitLabel, VertexAssignment>& choice,
                                const std::vector<QubitLabel>& input_positions) {
  TrapColoring out;
  out.input_positions = input_positions;
  for (const auto& [v, copies] : dtg.primary) {
    const auto it = choice.find(v);
    require(it != choice.end(), "missing assignment for base vertex " + v);
    const auto& a = it->second;
    require(a.computation_copy != a.trap_copy, "computation and trap copies must differ");
    for (int i = 0; i < 3; ++i) {
      if (i == a.computation_copy) {
        out.computation.insert(copies[i]);
      } else if (i == a.trap_copy) {
        out.traps.insert(copies[i]);
      } else {
        out.dummies.insert(copies[i]);
      }
    }
  }
  for (const auto& [edge, block] : dtg.added) {
    const auto& cu = choice.at(edge.first);
    const auto& cv = choice.at(edge.second);
    const int du = 3 - cu.computation_copy - cu.trap_copy;
    const int dv = 3 - cv.computation_copy - cv.trap_copy;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const QubitLabel& a = block[i][j];
        if (i == cu.computation_copy && j == cv.computation_copy) {
          out.computation.insert(a);  // the dot carrying the base edge
        } else if (i == du && j == dv) {
          out.traps.insert(a);
        } else {
          out.dummies.insert(a);
        }
      }
    }
  }
  for (const auto& p : input_positions) {
    require(out.computation.count(p), "input position must land in the computation class: " + p);
  }
  return out;
}

std::vector<TrapColoring> enumerate_trap_colorings(const DottedTripleGraph& dtg,
                                                   const std::vector<QubitLabel>& input_positions) {
  // Per-vertex options, restricted when an input copy pins the computation slot.
  std::map<QubitLabel, int> forced_computation;
  for (const auto& p : input_positions) {
    const QubitLabel v = dtg.base_of_primary(p);
    const auto& copies = dtg.primary.at(v);
    for (int i = 0; i < 3; ++i) {
      if (copies[i] == p) forced_computation[v] = i;
    }
  }
  std::vector<QubitLabel> order;
  std::vector<std::vector<VertexAssignment>> options;
  for (const auto& [v, copies] : dtg.primary) {
    (void)copies;
    std::vector<VertexAssignment> opts;
    for (int c = 0; c < 3; ++c) {
      if (forced_computation.count(v) && forced_computation[v] != c) continue;
      for (int t = 0; t < 3; ++t) {
        if (t == c) continue;
        opts.push_back({c, t});
      }
    }
    order.push_back(v);
    options.push_back(std::move(opts));
  }
  std::vector<TrapColoring> out;
  std::vector<size_t> idx(order.size(), 0);
  while (true) {
    std::map<QubitLabel, VertexAssignment> choice;
    for (size_t k = 0; k < order.size(); ++k) choice[order[k]] = options[k][idx[k]];
    out.push_back(make_trap_coloring(dtg, choice, input_positions));
    size_t k = 0;
    while (k < idx.size() && ++idx[k] == options[k].size()) {
      idx[k] = 0;
      ++k;
    }
    if (k == idx.size()) break;
  }
  return out;
}

TrapColoring sample_trap_coloring(const DottedTripleGraph& dtg, DetRng& rng,
                                  const std::vector<QubitLabel>& input_positions) {
  std::map<QubitLabel, int> forced_computation;
  for (const auto& p : input_positions) {
    const QubitLabel v = dtg.base_of_primary(p);
    const auto& copies = dtg.primary.at(v);
    for (int i = 0; i < 3; ++i) {
      if (copies[i] == p) forced_computation[v] = i;
    }
  }
  std::map<QubitLabel, VertexAssignment> choice;
  for (const auto& [v, copies] : dtg.primary) {
    (void)copies;
    VertexAssignment a;
    a.computation_copy =
        forced_computation.count(v) ? forced_computation[v] : rng.uniform(3);
    a.trap_copy = (a.computation_copy + 1 + rng.uniform(2)) % 3;
    choice[v] = a;
  }
  return make_trap_coloring(dtg, choice, input_positions);
}

bool trap_coloring_valid(const DottedTripleGraph& dtg, const TrapColoring& coloring) {
  size_t covered = coloring.computation.size() + coloring.dummies.size() + coloring.traps.size();
  if (covered != dtg.graph.vertices().size()) return false;
  for (const auto& node : dtg.graph.vertices()) {
    int hits = coloring.computation.count(node) + coloring.dummies.count(node) +
               coloring.traps.count(node);
    if (hits != 1) return false;
  }
  for (const auto& [v, copies] : dtg.primary) {
    (void)v;
    int c = 0, d = 0, t = 0;
    for (const auto& copy : copies) {
      c += coloring.computation.count(copy);
      d += coloring.dummies.count(copy);
      t += coloring.traps.count(copy);
    }
    if (c != 1 || d != 1 || t != 1) return false;
  }
  for (const auto& t : coloring.traps) {
    for (const auto& n : dtg.graph.neighbors(t)) {
      if (!coloring.dummies.count(n)) return false;  // traps must be isolated by dummies
    }
  }
  for (const auto& p : coloring.input_positions) {
    if (!coloring.computation.count(p)) return false;
  }
  return true;
}

}  // namespace dqclab
