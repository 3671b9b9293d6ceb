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

#include "dqclab/graph.hpp"

namespace dqclab {

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Fixed corpus used across the verification suites: paths, a cycle, stars,
/// a 2x3 grid and seeded random 5-vertex graphs.
std::vector<NamedGraph> graph_corpus();

/// Corpus entries with at most max_vertices vertices.
std::vector<NamedGraph> graph_corpus_up_to(int max_vertices);

}  // namespace dqclab
