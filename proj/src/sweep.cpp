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

#include "dqclab/sweep.hpp"

#include <sstream>

namespace dqclab {

std::set<QubitLabel> input_row_labels(const TrapRmInstance& instance) {
  const DottedTripleGraph dtg = dotted_triple_graph(instance.base);
  const auto& copies = dtg.primary.at(instance.base_order.front());
  return {copies.begin(), copies.end()};
}

namespace {

SweepResult run_sweep(const TrapRmInstance& instance,
                      const std::vector<PauliString>& attacks) {
  SweepResult result;
  for (const auto& op : attacks) {
    const FailReport report =
        trap_rm_simulate_attack(instance, {AttackStage::BeforeEntangling, op});
    SweepRow row{op.str(), report.p_accept, report.p_fail, report.bound_value};
    if (report.p_fail > report.bound_value + 1e-10) result.simulation_below_bound = false;
    if (report.p_fail > result.max_p_fail) {
      result.max_p_fail = report.p_fail;
      result.argmax_fail = row.attack;
    }
    if (report.bound_value > result.max_bound) {
      result.max_bound = report.bound_value;
      result.argmax_bound = row.attack;
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

}  // namespace

SweepResult run_class_e_sweep(const TrapRmInstance& instance, int max_weight) {
  const DottedTripleGraph dtg = dotted_triple_graph(instance.base);
  return run_sweep(instance, enumerate_class_e(dtg.graph.vertices(),
                                               input_row_labels(instance), max_weight));
}

SweepResult run_ix_sweep(const TrapRmInstance& instance, int max_weight) {
  const DottedTripleGraph dtg = dotted_triple_graph(instance.base);
  return run_sweep(instance, enumerate_ix_only(dtg.graph.vertices(),
                                               input_row_labels(instance), max_weight));
}

std::string sweep_to_csv(const SweepResult& result) {
  std::ostringstream os;
  os.precision(12);
  os << "attack,p_accept,p_fail,bound\n";
  for (const auto& row : result.rows) {
    os << '"' << row.attack << "\"," << row.p_accept << ',' << row.p_fail << ',' << row.bound
       << '\n';
  }
  return os.str();
}

}  // namespace dqclab
