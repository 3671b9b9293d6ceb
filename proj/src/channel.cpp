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

#include "dqclab/channel.hpp"

#include <algorithm>

#include "dqclab/errors.hpp"

namespace dqclab {

namespace {
constexpr double kInvSqrt2 = 0.7071067811865475244;

std::vector<std::vector<int>> input_tuples(const std::vector<int>& arity) {
  std::vector<std::vector<int>> out{{}};
  for (int a : arity) {
    std::vector<std::vector<int>> next;
    for (const auto& t : out) {
      for (int v = 0; v < a; ++v) {
        auto u = t;
        u.push_back(v);
        next.push_back(std::move(u));
      }
    }
    out = std::move(next);
  }
  return out;
}
}  // namespace

CqChannel extract_channel(const SystemSpec& spec) {
  CqChannel ch;
  ch.input_arity = spec.classical_input_arity;

  std::vector<QubitLabel> refs;
  for (const auto& q : spec.quantum_inputs) refs.push_back("ref@" + q);
  ch.quantum_labels = refs;
  ch.quantum_labels.insert(ch.quantum_labels.end(), spec.quantum_outputs.begin(),
                           spec.quantum_outputs.end());

  for (const auto& cin : input_tuples(spec.classical_input_arity)) {
    auto& slot = ch.table[cin];
    enumerate_branches([&](Chooser& chooser) {
      std::vector<PureState> pairs;
      for (size_t i = 0; i < spec.quantum_inputs.size(); ++i) {
        pairs.push_back(PureState({refs[i], spec.quantum_inputs[i]},
                                  {kInvSqrt2, 0, 0, kInvSqrt2}));
      }
      PureState state = tensor(pairs);
      std::vector<int> cout;
      spec.run(cin, chooser, state, cout);

      PureState arranged = state.reordered(ch.quantum_labels);
      const auto& amps = arranged.amplitudes();
      const auto dim = static_cast<Eigen::Index>(amps.size());
      auto [it, fresh] = slot.try_emplace(cout, Eigen::MatrixXcd::Zero(dim, dim));
      Eigen::MatrixXcd& acc = it->second;
      (void)fresh;
      const double w = chooser.weight();
      for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
          acc(r, c) += w * amps[r] * std::conj(amps[c]);
        }
      }
    });
  }
  return ch;
}

double channel_distance(const CqChannel& a, const CqChannel& b) {
  require(a.input_arity == b.input_arity, "interface mismatch: classical inputs differ");
  require(a.quantum_labels.size() == b.quantum_labels.size(),
          "interface mismatch: quantum wires differ");
  double worst = 0;
  for (const auto& [cin, blocks_a] : a.table) {
    const auto itb = b.table.find(cin);
    require(itb != b.table.end(), "interface mismatch: missing classical input branch");
    const auto& blocks_b = itb->second;
    std::set<std::vector<int>> keys;
    for (const auto& [k, m] : blocks_a) keys.insert(k);
    for (const auto& [k, m] : blocks_b) keys.insert(k);
    double dist = 0;
    for (const auto& key : keys) {
      const auto ia = blocks_a.find(key);
      const auto ib = blocks_b.find(key);
      if (ia == blocks_a.end()) {
        dist += half_trace_norm(ib->second);
      } else if (ib == blocks_b.end()) {
        dist += half_trace_norm(ia->second);
      } else {
        dist += half_trace_norm(ia->second - ib->second);
      }
    }
    worst = std::max(worst, dist);
  }
  return worst;
}

SystemSpec compose(const Converter& c, const SystemSpec& resource) { return c.bind(resource); }

SystemSpec compose(const std::vector<Converter>& converters, const SystemSpec& resource) {
  SystemSpec out = resource;
  for (auto it = converters.rbegin(); it != converters.rend(); ++it) {
    out = it->bind(out);
  }
  return out;
}

Converter identity_converter(const std::string& party) {
  return Converter{party, [](const SystemSpec& s) { return s; }};
}

Converter fix_classical_input(const std::string& party, const std::string& slot_name,
                              int value) {
  return Converter{party, [slot_name, value](const SystemSpec& s) {
    auto it = std::find(s.classical_input_names.begin(), s.classical_input_names.end(),
                        slot_name);
    require(it != s.classical_input_names.end(),
            "interface mismatch: no classical input named " + slot_name);
    const size_t slot = static_cast<size_t>(it - s.classical_input_names.begin());
    require(value >= 0 && value < s.classical_input_arity[slot],
            "filter value outside the slot arity");
    SystemSpec out = s;
    out.classical_input_names.erase(out.classical_input_names.begin() + slot);
    out.classical_input_arity.erase(out.classical_input_arity.begin() + slot);
    auto inner = s.run;
    out.run = [inner, slot, value](const std::vector<int>& cin, Chooser& ch, PureState& st,
                                   std::vector<int>& cout) {
      std::vector<int> full = cin;
      full.insert(full.begin() + slot, value);
      inner(full, ch, st, cout);
    };
    return out;
  }};
}

Converter fix_quantum_input(const std::string& party, const QubitLabel& wire,
                            const PureState& value) {
  return Converter{party, [wire, value](const SystemSpec& s) {
    auto it = std::find(s.quantum_inputs.begin(), s.quantum_inputs.end(), wire);
    require(it != s.quantum_inputs.end(), "interface mismatch: no quantum input " + wire);
    require(value.num_qubits() == 1, "fix_quantum_input expects a single-qubit state");
    SystemSpec out = s;
    out.quantum_inputs.erase(out.quantum_inputs.begin() + (it - s.quantum_inputs.begin()));
    auto inner = s.run;
    const PureState prep = value.relabeled({wire});
    out.run = [inner, wire, prep](const std::vector<int>& cin, Chooser& ch, PureState& st,
                                  std::vector<int>& cout) {
      st = tensor({st, prep});
      inner(cin, ch, st, cout);
    };
    return out;
  }};
}

}  // namespace dqclab
