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

#include <cstdint>
#include <string>

namespace dqclab {

/// Counter-based deterministic generator (splitmix64 over a keyed counter).
/// Streams derived for different party ids are independent, so parallel
/// protocol instances stay reproducible for a fixed seed.
class DetRng {
 public:
  explicit DetRng(uint64_t seed) : key_(seed) {}
  DetRng(uint64_t seed, const std::string& stream) : key_(seed ^ hash_str(stream)) {}

  DetRng fork(const std::string& stream) const { return DetRng(key_, stream); }

  uint64_t next_u64() {
    uint64_t z = key_ + 0x9e3779b97f4a7c15ULL * ++counter_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, n).
  int uniform(int n) { return static_cast<int>(next_u64() % static_cast<uint64_t>(n)); }
  int bit() { return uniform(2); }

 private:
  static uint64_t hash_str(const std::string& s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  uint64_t key_;
  uint64_t counter_ = 0;
};

}  // namespace dqclab
