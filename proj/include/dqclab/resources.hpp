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

namespace dqclab {

/// Ideal blind-computation resource. The client side supplies U and psi_C
/// (psi_C as quantum input wires); the server side chooses c, and for c = 1 a
/// CPTP deviation E given as a Kraus list acting on (psi_C, psi_S).
/// Interfaces: classical input "S.c"; quantum inputs C wires then S wires;
/// classical output "S.leak"; quantum output the result register.
SystemSpec ideal_s_blind(const Eigen::MatrixXcd& u, int n_c,
                         const std::vector<Eigen::MatrixXcd>& dishonest_kraus, int n_s);

/// Ideal verifiable-computation resource: c = 1 forces the abort flag and a
/// marker register orthogonal (as a cq state) to every honest output.
/// Classical outputs: "abort", "S.leak".
SystemSpec ideal_s_ver(const Eigen::MatrixXcd& u, int n_c);

/// Ideal collective remote state preparation for n clients, distinguished
/// client k (1-based). Client k inputs theta (in A); every other client j
/// inputs c_j and a qubit wire rho_j. Output: one qubit at the server wire.
SystemSpec ideal_rsp(int n, int k);

/// Filters: honest-server filters input c = 0; the honest-client RSP filter
/// inputs c_j = 0 and |0>.
Converter filter_sharp_server();
Converter filter_flat_server();
std::vector<Converter> filter_natural_clients(int n, int k);

/// Extracts both channels and reports the worst-case trace distance.
double distinguishability(const SystemSpec& a, const SystemSpec& b);

}  // namespace dqclab
