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

#include "dqclab/pauli.hpp"

#include "dqclab/errors.hpp"

namespace dqclab {

namespace {

// product[a][b] = (phase power of i, letter) for a*b.
struct LetterProduct {
  int phase;
  PauliLetter letter;
};

constexpr LetterProduct kProduct[4][4] = {
    // I              X                Y                Z
    {{0, PauliLetter::I}, {0, PauliLetter::X}, {0, PauliLetter::Y}, {0, PauliLetter::Z}},  // I*
    {{0, PauliLetter::X}, {0, PauliLetter::I}, {1, PauliLetter::Z}, {3, PauliLetter::Y}},  // X*
    {{0, PauliLetter::Y}, {3, PauliLetter::Z}, {0, PauliLetter::I}, {1, PauliLetter::X}},  // Y*
    {{0, PauliLetter::Z}, {1, PauliLetter::Y}, {3, PauliLetter::X}, {0, PauliLetter::I}},  // Z*
};

}  // namespace

char to_char(PauliLetter l) {
  switch (l) {
    case PauliLetter::I: return 'I';
    case PauliLetter::X: return 'X';
    case PauliLetter::Y: return 'Y';
    case PauliLetter::Z: return 'Z';
  }
  return '?';
}

PauliLetter letter_from_char(char c) {
  switch (c) {
    case 'I': return PauliLetter::I;
    case 'X': return PauliLetter::X;
    case 'Y': return PauliLetter::Y;
    case 'Z': return PauliLetter::Z;
  }
  fail(std::string("unknown Pauli letter: ") + c);
}

PauliString PauliString::single(const QubitLabel& q, PauliLetter l) {
  PauliString p;
  p.set(q, l);
  return p;
}

PauliLetter PauliString::at(const QubitLabel& q) const {
  auto it = letters_.find(q);
  return it == letters_.end() ? PauliLetter::I : it->second;
}

void PauliString::set(const QubitLabel& q, PauliLetter l) {
  if (l == PauliLetter::I) {
    letters_.erase(q);
  } else {
    letters_[q] = l;
  }
}

std::complex<double> PauliString::phase() const {
  static const std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[phase_];
}

int PauliString::weight() const { return static_cast<int>(letters_.size()); }

std::vector<QubitLabel> PauliString::support() const {
  std::vector<QubitLabel> out;
  out.reserve(letters_.size());
  for (const auto& [q, l] : letters_) out.push_back(q);
  return out;
}

PauliString PauliString::operator*(const PauliString& rhs) const {
  PauliString out;
  out.phase_ = (phase_ + rhs.phase_) % 4;
  out.letters_ = letters_;
  for (const auto& [q, l] : rhs.letters_) {
    const auto prod = kProduct[static_cast<int>(out.at(q))][static_cast<int>(l)];
    out.multiply_phase_power(prod.phase);
    out.set(q, prod.letter);
  }
  return out;
}

bool PauliString::operator==(const PauliString& rhs) const {
  return phase_ == rhs.phase_ && letters_ == rhs.letters_;
}

bool PauliString::commutes_with(const PauliString& rhs) const {
  int anti = 0;
  for (const auto& [q, l] : letters_) {
    const PauliLetter r = rhs.at(q);
    if (r != PauliLetter::I && r != l) ++anti;
  }
  return anti % 2 == 0;
}

std::string PauliString::str() const {
  static const char* phases[4] = {"+", "+i", "-", "-i"};
  std::string out = phases[phase_];
  if (letters_.empty()) return out + "I";
  for (const auto& [q, l] : letters_) {
    out += ' ';
    out += to_char(l);
    out += '[' + q + ']';
  }
  return out;
}

}  // namespace dqclab
