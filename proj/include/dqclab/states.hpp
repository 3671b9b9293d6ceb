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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dqclab/angle.hpp"
#include "dqclab/pauli.hpp"

namespace dqclab {

using cdouble = std::complex<double>;

/// Dense simulation is capped here; the largest register the protocols need
/// is the 15-qubit dotted triple-graph of a one-edge base graph.
constexpr int kMaxQubits = 16;
constexpr double kTol = 1e-12;

enum class Gate { X, Y, Z, H, CZ, CX, Zrot };

class MixedState;

/// Labeled pure state over up to kMaxQubits qubits. labels()[0] is the most
/// significant bit of the amplitude index. Values are immutable in spirit:
/// operations that branch return fresh states, in-place gates are provided
/// for the hot paths.
class PureState {
 public:
  /// Default state is the 0-qubit scalar unit, the identity for tensor().
  PureState() : amps_{cdouble{1, 0}} {}
  PureState(std::vector<QubitLabel> labels, std::vector<cdouble> amplitudes);

  static PureState computational_basis(const std::vector<QubitLabel>& labels,
                                       const std::vector<int>& bits);
  static PureState zero(const QubitLabel& q) { return computational_basis({q}, {0}); }
  static PureState one(const QubitLabel& q) { return computational_basis({q}, {1}); }
  static PureState z_eigen(const QubitLabel& q, int bit) {
    return computational_basis({q}, {bit});
  }
  static PureState plus(const QubitLabel& q);
  static PureState minus(const QubitLabel& q);
  /// (|0> + e^{i theta}|1>)/sqrt(2).
  static PureState plus_angle(const QubitLabel& q, Angle theta);
  /// +1/-1 eigenstate of a single-qubit Pauli letter (X, Y or Z).
  static PureState pauli_eigenstate(const QubitLabel& q, PauliLetter letter, int outcome);

  int num_qubits() const { return static_cast<int>(labels_.size()); }
  const std::vector<QubitLabel>& labels() const { return labels_; }
  const std::vector<cdouble>& amplitudes() const { return amps_; }
  bool has_label(const QubitLabel& q) const;
  int position(const QubitLabel& q) const;

  void apply_gate(Gate g, const std::vector<QubitLabel>& targets,
                  std::optional<Angle> angle = std::nullopt);
  void apply_x(const QubitLabel& q);
  void apply_y(const QubitLabel& q);
  void apply_z(const QubitLabel& q);
  void apply_h(const QubitLabel& q);
  void apply_zrot(const QubitLabel& q, Angle theta);
  void apply_cz(const QubitLabel& a, const QubitLabel& b);
  void apply_cx(const QubitLabel& control, const QubitLabel& target);
  void apply_pauli(const PauliString& p);
  /// Arbitrary single-qubit operator, row-major {m00, m01, m10, m11}.
  void apply_matrix1(const QubitLabel& q, const std::array<cdouble, 4>& m);
  /// Apply a (2^|out| x 2^|in|) operator, replacing the `in` sub-register by
  /// fresh `out` labels. Not required to be unitary (Kraus branches).
  void apply_operator(const std::vector<QubitLabel>& in_labels,
                      const std::vector<QubitLabel>& out_labels, const Eigen::MatrixXcd& m);

  double norm() const;
  void renormalize();
  /// Inner product <this|other>; label sets must match (order may differ).
  cdouble inner(const PureState& other) const;

  struct Branch;

  /// Measure in {|+^delta>, |-^delta>}; the measured qubit leaves the register.
  std::vector<Branch> measure_xy(const QubitLabel& q, Angle delta) const;
  std::vector<Branch> measure_z(const QubitLabel& q) const;
  std::vector<Branch> measure_x(const QubitLabel& q) const { return measure_xy(q, Angle()); }
  /// Single-qubit eigenbasis of a Pauli letter; outcome r <-> eigenvalue (-1)^r.
  std::vector<Branch> measure_letter(const QubitLabel& q, PauliLetter letter) const;
  /// Joint projector P_r = (I + (-1)^r p)/2; qubits stay in the register.
  std::vector<Branch> measure_pauli(const PauliString& p) const;

  PureState reordered(const std::vector<QubitLabel>& new_order) const;
  /// Same amplitudes, positionally renamed labels.
  PureState relabeled(const std::vector<QubitLabel>& new_labels) const;
  MixedState to_mixed() const;
  uint64_t fingerprint() const;

 private:
  int bit_of(int pos) const { return num_qubits() - 1 - pos; }
  void check_size(size_t n_total) const;

  std::vector<QubitLabel> labels_;
  std::vector<cdouble> amps_;
};

struct PureState::Branch {
  int outcome = 0;
  double probability = 0.0;
  PureState state;  // measured qubit removed (or kept for measure_pauli)
  bool zero_probability = false;
};

PureState tensor(const std::vector<PureState>& parts);

/// Labeled density operator; same label conventions as PureState.
class MixedState {
 public:
  MixedState() = default;
  MixedState(std::vector<QubitLabel> labels, Eigen::MatrixXcd op);

  static MixedState from_pure(const PureState& psi);
  static MixedState maximally_mixed(const std::vector<QubitLabel>& labels);

  int num_qubits() const { return static_cast<int>(labels_.size()); }
  const std::vector<QubitLabel>& labels() const { return labels_; }
  const Eigen::MatrixXcd& op() const { return op_; }
  int position(const QubitLabel& q) const;

  void apply_gate(Gate g, const std::vector<QubitLabel>& targets,
                  std::optional<Angle> angle = std::nullopt);
  void apply_pauli(const PauliString& p);

  struct Branch;
  std::vector<Branch> measure_xy(const QubitLabel& q, Angle delta) const;
  std::vector<Branch> measure_z(const QubitLabel& q) const;

  MixedState partial_trace(const std::set<QubitLabel>& discard) const;
  MixedState reordered(const std::vector<QubitLabel>& new_order) const;

  double trace_real() const { return op_.trace().real(); }
  double hermiticity_error() const;
  double min_eigenvalue() const;

  /// Accumulate a weighted pure state (used when assembling exact mixtures).
  void accumulate(const PureState& psi, double weight);

 private:
  std::vector<QubitLabel> labels_;
  Eigen::MatrixXcd op_;
};

struct MixedState::Branch {
  int outcome = 0;
  double probability = 0.0;
  MixedState state;
  bool zero_probability = false;
};

MixedState tensor(const std::vector<MixedState>& parts);

/// 1 - |<a|b>|^2 (zero iff equal up to global phase).
double state_distance(const PureState& a, const PureState& b);
/// Trace distance (1/2)||a - b||_1.
double state_distance(const MixedState& a, const MixedState& b);
double fidelity(const PureState& a, const PureState& b);
double fidelity(const MixedState& rho, const PureState& psi);

/// (1/2) * sum of |eigenvalues| of a Hermitian matrix.
double half_trace_norm(const Eigen::MatrixXcd& hermitian);

}  // namespace dqclab
