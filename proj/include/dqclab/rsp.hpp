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

#include <set>

#include "dqclab/channel.hpp"
#include "dqclab/rng.hpp"
#include "dqclab/transcript.hpp"

namespace dqclab {

/// Collective remote state preparation in receive-and-measure: the server
/// entangles a |+> register with one |0> per client via CX, each client
/// measures its register in {|+^{-theta_j}>, |-^{-theta_j}>}, and client k
/// assembles the correction delta = (-1)^b theta - sum theta_i - pi (+) r_i.

struct RspCorrectness {
  int branches = 0;
  double min_fidelity = 1.0;
};

/// Exhaustive honest run over every theta_j in A, every outcome and both b.
RspCorrectness rsp_correctness(int n, Angle theta);

struct RspRun {
  PureState output;
  uint64_t output_fingerprint = 0;
  Transcript transcript;
};

RspRun rsp_run_sampled(int n, int k, Angle theta, DetRng& rng);

/// Real protocol with dishonest clients D (server and client k honest).
/// Open interfaces: theta at k; (theta_j, r_j) per dishonest client;
/// quantum wires psi_j per dishonest client plus the server output.
SystemSpec rsp_real_dishonest_clients(int n, int k, const std::set<int>& dishonest);

/// Ideal RSP with the honest-client filters bound and the dishonest-client
/// simulator attached; same open interfaces as the real system.
SystemSpec rsp_ideal_sim_clients(int n, int k, const std::set<int>& dishonest);

/// Real protocol with a dishonest server: the client-side channel from the
/// received registers to the correction message (delta, b).
SystemSpec rsp_real_dishonest_server(int n, int k);

/// Ideal RSP composed with the dishonest-server simulator.
SystemSpec rsp_ideal_sim_server(int n, int k);

}  // namespace dqclab
