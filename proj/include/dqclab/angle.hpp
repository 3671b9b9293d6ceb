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

#include <cmath>
#include <compare>
#include <cstdint>
#include <vector>

namespace dqclab {

/// An angle that is an exact integer multiple of pi/8, reduced modulo 2*pi.
///
/// All protocol angle arithmetic lives on this 16-element lattice, so sums,
/// negations and +pi shifts are exact integer operations. Conversion to
/// radians happens only when a gate matrix or measurement projector is built.
class Angle {
 public:
  constexpr Angle() = default;
  static constexpr Angle units(int k) { return Angle(mod16(k)); }
  static constexpr Angle pi() { return Angle(8); }

  constexpr int k() const { return k_; }
  double radians() const { return static_cast<double>(k_) * kPiOver8; }

  constexpr Angle operator+(Angle o) const { return Angle(mod16(k_ + o.k_)); }
  constexpr Angle operator-(Angle o) const { return Angle(mod16(k_ - o.k_)); }
  constexpr Angle operator-() const { return Angle(mod16(-k_)); }
  Angle& operator+=(Angle o) { k_ = mod16(k_ + o.k_); return *this; }

  /// (-1)^sign * angle, the reflection used by measurement adaptation.
  constexpr Angle reflected_if(bool sign) const { return sign ? -*this : *this; }
  /// angle + sign * pi.
  constexpr Angle plus_pi_if(bool sign) const { return sign ? *this + pi() : *this; }

  constexpr auto operator<=>(const Angle&) const = default;

  /// The set A = { l*pi/8 : 0 <= l < 8 } of preparation angles.
  static std::vector<Angle> half_circle() {
    std::vector<Angle> out;
    for (int l = 0; l < 8; ++l) out.push_back(units(l));
    return out;
  }
  /// All sixteen lattice angles.
  static std::vector<Angle> full_circle() {
    std::vector<Angle> out;
    for (int l = 0; l < 16; ++l) out.push_back(units(l));
    return out;
  }

 private:
  explicit constexpr Angle(int k) : k_(k) {}
  static constexpr int mod16(int k) { return ((k % 16) + 16) % 16; }
  static constexpr double kPiOver8 = 0.39269908169872414;  // pi/8

  int k_ = 0;
};

}  // namespace dqclab
