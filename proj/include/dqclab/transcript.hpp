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

#include <string>
#include <vector>

namespace dqclab {

struct TranscriptEntry {
  int round = 0;
  std::string from;
  std::string to;
  std::string kind;     // "classical" or "quantum"
  std::string payload;  // value, or a state fingerprint for quantum messages
};

struct Transcript {
  std::vector<TranscriptEntry> entries;

  void add(int round, const std::string& from, const std::string& to, const std::string& kind,
           const std::string& payload) {
    entries.push_back({round, from, to, kind, payload});
  }
  std::string to_json() const;
};

}  // namespace dqclab
