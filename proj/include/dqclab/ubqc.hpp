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

#include "dqclab/channel.hpp"
#include "dqclab/pattern.hpp"
#include "dqclab/rng.hpp"
#include "dqclab/transcript.hpp"

namespace dqclab {

/// Prepare-and-send blind delegation: the client hides every node behind a
/// random Z^theta rotation plus a pi flip (the pad set is the full 16-element
/// lattice, which is closed under +pi; closure is what makes the server's
/// joint view of qubits and angle messages independent of the computation).

struct HonestRunReport {
  long branches = 0;
  double min_fidelity = 1.0;
};

/// Exhaustive honest run of the PS protocol on |+> inputs; compares every
/// corrected branch output against pattern_unitary.
HonestRunReport ubqc_ps_honest(const MeasurementPattern& p);

/// The server's view: for scripted responses s', the joint state of all
/// received qubits (unmeasured) and every delta message. Blindness is
/// channel equality of two views with different secret angle vectors.
SystemSpec ubqc_ps_view_system(const MeasurementPattern& p);

/// Receive-and-measure blind delegation: the server builds the graph state
/// and sends node by node; the client measures locally with adapted angles.
HonestRunReport blind_rm_honest(const MeasurementPattern& p);

struct SampledRun {
  bool accepted = true;
  uint64_t output_fingerprint = 0;
  Transcript transcript;
};

SampledRun ubqc_ps_run_sampled(const MeasurementPattern& p, DetRng& rng);
SampledRun blind_rm_run_sampled(const MeasurementPattern& p, DetRng& rng);

}  // namespace dqclab
