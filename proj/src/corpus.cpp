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

#include "dqclab/corpus.hpp"

namespace dqclab {

std::vector<NamedGraph> graph_corpus() {
  return {
      {"P2", Graph::path(2)},
      {"P3", Graph::path(3)},
      {"C4", Graph::cycle(4)},
      {"star3", Graph::star(3)},
      {"path5", Graph::path(5)},
      {"cycle6", Graph::cycle(6)},
      {"star5", Graph::star(5)},
      {"grid2x3", Graph::grid(2, 3)},
      {"random5a", Graph::random(5, 11)},
      {"random5b", Graph::random(5, 22)},
      {"random5c", Graph::random(5, 33)},
  };
}

std::vector<NamedGraph> graph_corpus_up_to(int max_vertices) {
  std::vector<NamedGraph> out;
  for (auto& g : graph_corpus()) {
    if (static_cast<int>(g.graph.vertices().size()) <= max_vertices) out.push_back(g);
  }
  return out;
}

}  // namespace dqclab
