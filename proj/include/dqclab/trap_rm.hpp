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

#include <optional>

#include "dqclab/dtg.hpp"
#include "dqclab/pattern.hpp"
#include "dqclab/rng.hpp"
#include "dqclab/transcript.hpp"

namespace dqclab {

/// Trap-based verification in receive-and-measure on the dotted triple-graph.
///
/// The client one-time pads its input row, the server entangles everything
/// into DT(G) and returns the nodes one by one; the client Z-measures the
/// dummies, runs the computation on the secret computation path, X-measures
/// the traps against the parity of their dummy neighborhoods, and aborts on
/// any mismatch.
struct TrapRmInstance {
  Graph base;                            // a path; first vertex carries the input
  std::vector<QubitLabel> base_order;    // path order, last vertex is the output
  std::map<QubitLabel, Angle> base_angles;  // angle per measured base vertex
  PureState input;                       // single-qubit psi_C

  /// Computation pattern on the coloring's computation path (dots at angle 0).
  MeasurementPattern computation_pattern() const;
  /// Honest output U(psi_C).
  PureState honest_output() const;
};

TrapRmInstance trap_rm_instance(int base_vertices, const std::vector<Angle>& angles,
                                const PureState& input);

struct TrapRmHonestReport {
  int colorings = 0;
  long branches = 0;
  double abort_probability = 0.0;
  bool trap_identity_ok = true;   // r_t equals the dummy-neighborhood parity
  double min_output_fidelity = 1.0;
};

/// Full statevector enumeration over colorings, pads and branches.
/// `pad_units` selects the lattice offsets enumerated for the companion
/// angle pads (the full set A has 8).
TrapRmHonestReport trap_rm_honest_full(const TrapRmInstance& instance,
                                       const std::vector<int>& pad_units = {0, 1, 2, 3, 4,
                                                                            5, 6, 7});

enum class AttackStage { BeforeEntangling, AfterEntangling, PerNodeBeforeSend };

struct PauliAttack {
  AttackStage stage = AttackStage::BeforeEntangling;
  PauliString op;
};

struct FailReport {
  double p_accept = 1.0;
  double p_fail = 0.0;
  double bound_value = 1.0;
};

/// Exact attack evaluation. Dummy Z-measurements commute with the entangling
/// operation, so the run factorizes into isolated traps and the computation
/// path; only the GF(2) images of the dummy outcomes are enumerated. Results
/// agree with the full statevector engine (cross-checked in the tests).
FailReport trap_rm_simulate_attack(const TrapRmInstance& instance, const PauliAttack& attack);

/// Reference evaluation on the full register; exponentially slower.
FailReport trap_rm_simulate_attack_full(const TrapRmInstance& instance,
                                        const PauliAttack& attack,
                                        const std::vector<int>& pad_units = {0, 4});

/// Appendix-style analytic bound: average over trap placements of the
/// product over traps of the mean squared overlap with the attack letter.
double trap_rm_bound_expression(const TrapRmInstance& instance,
                                const PauliString& attack_before_entangling);

/// Attack letters conjugated through the entangling operation (CZ products).
PauliString conjugate_through_edges(const PauliString& p, const Graph& g);

struct TrapRmRun {
  bool aborted = false;
  uint64_t output_fingerprint = 0;
  Transcript transcript;
};

TrapRmRun trap_rm_run_sampled(const TrapRmInstance& instance, DetRng& rng,
                              const std::optional<PauliAttack>& attack);

}  // namespace dqclab
