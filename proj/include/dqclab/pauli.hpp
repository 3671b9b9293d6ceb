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

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace dqclab {

using QubitLabel = std::string;

enum class PauliLetter : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(PauliLetter l);
PauliLetter letter_from_char(char c);

/// A signed Pauli word over labeled qubits. The phase is tracked exactly as a
/// power of i, so products obey the single-qubit algebra (XZ = -iY and so on)
/// without floating point.
class PauliString {
 public:
  PauliString() = default;

  static PauliString identity() { return PauliString(); }
  static PauliString single(const QubitLabel& q, PauliLetter l);

  /// Letter at a label; identity for labels the string does not touch.
  PauliLetter at(const QubitLabel& q) const;
  void set(const QubitLabel& q, PauliLetter l);

  /// Phase as i^k, k in {0,1,2,3}.
  int phase_power() const { return phase_; }
  std::complex<double> phase() const;
  void multiply_phase_power(int k) { phase_ = ((phase_ + k) % 4 + 4) % 4; }

  /// Number of non-identity letters.
  int weight() const;
  bool is_identity() const { return weight() == 0; }

  const std::map<QubitLabel, PauliLetter>& letters() const { return letters_; }
  std::vector<QubitLabel> support() const;

  PauliString operator*(const PauliString& rhs) const;
  bool operator==(const PauliString& rhs) const;

  bool commutes_with(const PauliString& rhs) const;

  std::string str() const;

 private:
  int phase_ = 0;  // i^phase_
  std::map<QubitLabel, PauliLetter> letters_;
};

}  // namespace dqclab
