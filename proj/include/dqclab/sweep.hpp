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

#include "dqclab/attack.hpp"
#include "dqclab/trap_rm.hpp"

namespace dqclab {

struct SweepRow {
  std::string attack;
  double p_accept = 0;
  double p_fail = 0;
  double bound = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  double max_p_fail = 0;
  double max_bound = 0;
  std::string argmax_fail;
  std::string argmax_bound;
  bool simulation_below_bound = true;  // p_fail <= bound per attack (1e-10 slack)
};

/// Attack sweep over class E (before-entangling deviations) against the
/// trap-based verification instance; exact evaluation per attack.
SweepResult run_class_e_sweep(const TrapRmInstance& instance, int max_weight);

/// Sweep over the I/X-only complement (the non-contributing words).
SweepResult run_ix_sweep(const TrapRmInstance& instance, int max_weight);

std::string sweep_to_csv(const SweepResult& result);

/// Input-row registers of the instance (the labels an X letter makes
/// class-E on): the three primary copies of the input base vertex.
std::set<QubitLabel> input_row_labels(const TrapRmInstance& instance);

}  // namespace dqclab
