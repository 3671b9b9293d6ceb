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

#include "dqclab/ubqc.hpp"

#include "dqclab/errors.hpp"

namespace dqclab {

namespace {

PureState plus_inputs(const MeasurementPattern& p) {
  std::vector<PureState> parts;
  for (const auto& q : p.inputs) parts.push_back(PureState::plus(q));
  return tensor(parts);
}

PureState honest_target(const MeasurementPattern& p) {
  if (p.outputs.empty()) return PureState();
  const Eigen::MatrixXcd u = pattern_unitary(p);
  PureState target = plus_inputs(p).reordered(p.inputs);
  target.apply_operator(p.inputs, p.outputs, u);
  return target.reordered(p.outputs);
}

}  // namespace

HonestRunReport ubqc_ps_honest(const MeasurementPattern& p) {
  p.validate();
  const PureState target = honest_target(p);

  HonestRunReport report;
  enumerate_branches([&](Chooser& chooser) {
    // Client preparations: every node gets Z^theta with theta on the full
    // lattice; the server entangles.
    std::map<QubitLabel, Angle> theta;
    std::vector<PureState> parts;
    for (const auto& v : p.graph.vertices()) {
      theta[v] = Angle::units(chooser.choose(16));
      parts.push_back(PureState::plus_angle(v, theta[v]));
    }
    PureState state = tensor(parts);
    entangle_graph(state, p.graph);

    // Interactive phase: delta messages and decoded outcomes.
    std::map<QubitLabel, int> logical;
    for (const auto& v : p.order) {
      int sx = 0, sz = 0;
      for (const auto& m : p.x_dependencies(v)) sx ^= logical.at(m);
      for (const auto& m : p.z_dependencies(v)) sz ^= logical.at(m);
      const int r = chooser.choose(2);
      const Angle delta = adapt_angle(p.angles.at(v), sx, sz) + theta[v] + Angle::units(8 * r);
      const int s_prime = chooser.measure_xy(state, v, delta);
      logical[v] = s_prime ^ r;
    }

    // Output handling: undo the preparation rotations, then the byproducts.
    for (const auto& o : p.outputs) {
      state.apply_zrot(o, -theta[o]);
      int sx = 0, sz = 0;
      for (const auto& m : p.x_dependencies(o)) sx ^= logical.at(m);
      for (const auto& m : p.z_dependencies(o)) sz ^= logical.at(m);
      if (sx) state.apply_x(o);
      if (sz) state.apply_z(o);
    }
    if (!p.outputs.empty()) {
      report.min_fidelity =
          std::min(report.min_fidelity, fidelity(state.reordered(p.outputs), target));
    }
    ++report.branches;
  });
  return report;
}

SystemSpec ubqc_ps_view_system(const MeasurementPattern& p) {
  p.validate();
  SystemSpec spec;
  for (const auto& v : p.order) {
    spec.classical_input_names.push_back("S.result[" + v + "]");
    spec.classical_input_arity.push_back(2);
  }
  for (const auto& v : p.graph.vertices()) spec.quantum_outputs.push_back(v);
  for (const auto& v : p.order) spec.classical_output_names.push_back("C.delta[" + v + "]");

  spec.run = [p](const std::vector<int>& cin, Chooser& chooser, PureState& state,
                 std::vector<int>& cout) {
    std::map<QubitLabel, Angle> theta;
    std::vector<PureState> parts;
    for (const auto& v : p.graph.vertices()) {
      theta[v] = Angle::units(chooser.choose(16));
      parts.push_back(PureState::plus_angle(v, theta[v]));
    }
    state = tensor({state, tensor(parts)});

    // The scripted server never measures; the client decodes the scripted
    // responses and keeps sending adapted angles.
    std::map<QubitLabel, int> logical;
    size_t slot = 0;
    for (const auto& v : p.order) {
      int sx = 0, sz = 0;
      for (const auto& m : p.x_dependencies(v)) sx ^= logical.at(m);
      for (const auto& m : p.z_dependencies(v)) sz ^= logical.at(m);
      const int r = chooser.choose(2);
      const Angle delta = adapt_angle(p.angles.at(v), sx, sz) + theta[v] + Angle::units(8 * r);
      cout.push_back(delta.k());
      logical[v] = cin[slot++] ^ r;
    }
  };
  return spec;
}

HonestRunReport blind_rm_honest(const MeasurementPattern& p) {
  p.validate();
  const PureState target = honest_target(p);

  HonestRunReport report;
  enumerate_branches([&](Chooser& chooser) {
    PureState state = graph_state(p.graph);
    std::map<QubitLabel, int> outcomes;
    for (const auto& v : p.order) {
      int sx = 0, sz = 0;
      for (const auto& m : p.x_dependencies(v)) sx ^= outcomes.at(m);
      for (const auto& m : p.z_dependencies(v)) sz ^= outcomes.at(m);
      outcomes[v] = chooser.measure_xy(state, v, adapt_angle(p.angles.at(v), sx, sz));
    }
    for (const auto& o : p.outputs) {
      int sx = 0, sz = 0;
      for (const auto& m : p.x_dependencies(o)) sx ^= outcomes.at(m);
      for (const auto& m : p.z_dependencies(o)) sz ^= outcomes.at(m);
      if (sx) state.apply_x(o);
      if (sz) state.apply_z(o);
    }
    if (!p.outputs.empty()) {
      report.min_fidelity =
          std::min(report.min_fidelity, fidelity(state.reordered(p.outputs), target));
    }
    ++report.branches;
  });
  return report;
}

namespace {

int sample_outcome(DetRng& rng, std::vector<PureState::Branch>& branches, PureState& state) {
  const double p0 = branches[0].zero_probability ? 0.0 : branches[0].probability;
  const double u = static_cast<double>(rng.next_u64()) / 18446744073709551616.0;
  const int o = u < p0 ? 0 : 1;
  state = std::move(branches[o].state);
  return o;
}

}  // namespace

SampledRun ubqc_ps_run_sampled(const MeasurementPattern& p, DetRng& rng) {
  p.validate();
  SampledRun run;
  DetRng client = rng.fork("client");
  int round = 0;
  std::map<QubitLabel, Angle> theta;
  std::vector<PureState> parts;
  for (const auto& v : p.graph.vertices()) {
    theta[v] = Angle::units(client.uniform(16));
    parts.push_back(PureState::plus_angle(v, theta[v]));
  }
  PureState state = tensor(parts);
  run.transcript.add(round++, "client", "server", "quantum",
                     "fingerprint:" + std::to_string(state.fingerprint()));
  entangle_graph(state, p.graph);

  std::map<QubitLabel, int> logical;
  for (const auto& v : p.order) {
    int sx = 0, sz = 0;
    for (const auto& m : p.x_dependencies(v)) sx ^= logical.at(m);
    for (const auto& m : p.z_dependencies(v)) sz ^= logical.at(m);
    const int r = client.bit();
    const Angle delta = adapt_angle(p.angles.at(v), sx, sz) + theta[v] + Angle::units(8 * r);
    run.transcript.add(round, "client", "server", "classical",
                       "delta[" + v + "]=" + std::to_string(delta.k()));
    auto branches = state.measure_xy(v, delta);
    const int s_prime = sample_outcome(rng, branches, state);
    run.transcript.add(round++, "server", "client", "classical",
                       "s[" + v + "]=" + std::to_string(s_prime));
    logical[v] = s_prime ^ r;
  }
  for (const auto& o : p.outputs) {
    state.apply_zrot(o, -theta[o]);
    int sx = 0, sz = 0;
    for (const auto& m : p.x_dependencies(o)) sx ^= logical.at(m);
    for (const auto& m : p.z_dependencies(o)) sz ^= logical.at(m);
    if (sx) state.apply_x(o);
    if (sz) state.apply_z(o);
  }
  run.output_fingerprint = p.outputs.empty() ? 0 : state.reordered(p.outputs).fingerprint();
  run.transcript.add(round, "server", "client", "quantum",
                     "fingerprint:" + std::to_string(run.output_fingerprint));
  return run;
}

SampledRun blind_rm_run_sampled(const MeasurementPattern& p, DetRng& rng) {
  p.validate();
  SampledRun run;
  int round = 0;
  PureState state = graph_state(p.graph);
  for (const auto& v : p.graph.vertices()) {
    run.transcript.add(round, "server", "client", "quantum",
                       "node[" + v + "]=fingerprint:" + std::to_string(state.fingerprint()));
  }
  ++round;
  std::map<QubitLabel, int> outcomes;
  for (const auto& v : p.order) {
    int sx = 0, sz = 0;
    for (const auto& m : p.x_dependencies(v)) sx ^= outcomes.at(m);
    for (const auto& m : p.z_dependencies(v)) sz ^= outcomes.at(m);
    auto branches = state.measure_xy(v, adapt_angle(p.angles.at(v), sx, sz));
    outcomes[v] = sample_outcome(rng, branches, state);
  }
  for (const auto& o : p.outputs) {
    int sx = 0, sz = 0;
    for (const auto& m : p.x_dependencies(o)) sx ^= outcomes.at(m);
    for (const auto& m : p.z_dependencies(o)) sz ^= outcomes.at(m);
    if (sx) state.apply_x(o);
    if (sz) state.apply_z(o);
  }
  run.output_fingerprint = p.outputs.empty() ? 0 : state.reordered(p.outputs).fingerprint();
  run.transcript.add(round, "client", "out", "quantum",
                     "fingerprint:" + std::to_string(run.output_fingerprint));
  return run;
}

}  // namespace dqclab
