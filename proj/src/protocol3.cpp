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

#include "dqclab/protocol3.hpp"

#include <algorithm>

#include "dqclab/errors.hpp"

namespace dqclab {

namespace {

const std::set<QubitLabel>& z_color(const Protocol3Config& c, RoundKind kind) {
  require(kind != RoundKind::Compute, "test rounds only");
  return kind == RoundKind::TestBlackZ ? c.coloring.black : c.coloring.white;
}
const std::set<QubitLabel>& x_color(const Protocol3Config& c, RoundKind kind) {
  require(kind != RoundKind::Compute, "test rounds only");
  return kind == RoundKind::TestBlackZ ? c.coloring.white : c.coloring.black;
}

/// One honest test round; returns true when every generator centered in the
/// X color passes its parity check. flip_node, if non-empty, marks a node
/// whose reported result the server flips.
bool run_test_round(const Protocol3Config& config, RoundKind kind, Chooser& chooser,
                    const std::vector<int>& blind_units, const QubitLabel& flip_node) {
  const auto& zc = z_color(config, kind);
  const auto& xc = x_color(config, kind);

  std::map<QubitLabel, int> z_bits;
  std::map<QubitLabel, Angle> theta;
  std::map<QubitLabel, int> pad;
  std::vector<PureState> parts;
  for (const auto& v : config.graph.vertices()) {
    if (zc.count(v)) {
      z_bits[v] = chooser.choose(2);
      parts.push_back(PureState::z_eigen(v, z_bits[v]));
    } else {
      const int u = blind_units[chooser.choose(static_cast<int>(blind_units.size()))];
      theta[v] = Angle::units(u);
      pad[v] = chooser.choose(2);
      parts.push_back(PureState::plus_angle(v, theta[v]));
    }
  }
  PureState state = tensor(parts);
  entangle_graph(state, config.graph);

  std::map<QubitLabel, int> decoded;
  for (const auto& v : config.graph.vertices()) {
    if (!xc.count(v)) continue;  // discarded results of the Z-prepared nodes
    const Angle delta = theta[v].plus_pi_if(pad[v]);
    int s_prime = chooser.measure_xy(state, v, delta);
    if (v == flip_node) s_prime ^= 1;
    decoded[v] = s_prime ^ pad[v];
  }
  for (const auto& v : config.graph.vertices()) {
    if (zc.count(v)) chooser.discard(state, v);
  }

  for (const auto& j : xc) {
    int parity = decoded[j];
    for (const auto& i : config.graph.neighbors(j)) parity ^= z_bits.at(i);
    if (parity) return false;
  }
  return true;
}

struct ComputeRoundResult {
  std::map<QubitLabel, int> logical;
};

ComputeRoundResult run_compute_round(const Protocol3Config& config, Chooser& chooser,
                                     const std::vector<int>& blind_units) {
  const MeasurementPattern& p = config.pattern;
  std::map<QubitLabel, Angle> theta;
  std::vector<PureState> parts;
  for (const auto& v : p.graph.vertices()) {
    const int u = blind_units[chooser.choose(static_cast<int>(blind_units.size()))];
    theta[v] = Angle::units(u);
    parts.push_back(PureState::plus_angle(v, theta[v]));
  }
  PureState state = tensor(parts);
  entangle_graph(state, p.graph);

  ComputeRoundResult result;
  for (const auto& v : p.order) {
    int sx = 0, sz = 0;
    for (const auto& m : p.x_dependencies(v)) sx ^= result.logical.at(m);
    for (const auto& m : p.z_dependencies(v)) sz ^= result.logical.at(m);
    const int r = chooser.choose(2);
    const Angle delta = adapt_angle(p.angles.at(v), sx, sz) + theta[v] + Angle::units(8 * r);
    const int s_prime = chooser.measure_xy(state, v, delta);
    result.logical[v] = s_prime ^ r;
  }
  return result;
}

}  // namespace

Protocol3Honest protocol3_honest(const Protocol3Config& config,
                                 const std::vector<int>& blind_units) {
  config.pattern.validate();
  require(config.pattern.outputs.empty(), "the computation round uses a classical output");

  Protocol3Honest report;
  for (RoundKind kind : {RoundKind::TestBlackZ, RoundKind::TestWhiteZ}) {
    enumerate_branches([&](Chooser& chooser) {
      if (!run_test_round(config, kind, chooser, blind_units, "")) report.always_accept = false;
      ++report.branches;
    });
  }

  // Delegated logical-outcome distribution vs the local oracle.
  std::map<std::vector<int>, double> delegated;
  enumerate_branches([&](Chooser& chooser) {
    const auto result = run_compute_round(config, chooser, blind_units);
    std::vector<int> key;
    for (const auto& v : config.pattern.order) key.push_back(result.logical.at(v));
    delegated[key] += chooser.weight();
    ++report.branches;
  });
  std::map<std::vector<int>, double> local;
  PureState no_input;
  for (const auto& br : run_pattern_branches(config.pattern, no_input)) {
    std::vector<int> key;
    for (const auto& v : config.pattern.order) key.push_back(br.outcomes.at(v));
    local[key] += br.probability;
  }
  double dist = 0;
  std::set<std::vector<int>> keys;
  for (const auto& [k, w] : delegated) keys.insert(k);
  for (const auto& [k, w] : local) keys.insert(k);
  for (const auto& k : keys) {
    const double a = delegated.count(k) ? delegated.at(k) : 0.0;
    const double b = local.count(k) ? local.at(k) : 0.0;
    dist += std::abs(a - b);
  }
  report.outcome_distribution_distance = dist / 2;
  return report;
}

SystemSpec protocol3_round_view_system(const Protocol3Config& config, RoundKind kind) {
  SystemSpec spec;
  const auto& vertices = config.graph.vertices();
  for (const auto& v : vertices) {
    spec.classical_input_names.push_back("S.result[" + v + "]");
    spec.classical_input_arity.push_back(2);
    spec.quantum_outputs.push_back(v);
    spec.classical_output_names.push_back("C.delta[" + v + "]");
  }

  spec.run = [config, kind](const std::vector<int>& cin, Chooser& chooser, PureState& state,
                            std::vector<int>& cout) {
    std::map<QubitLabel, int> delta;
    std::vector<PureState> parts;
    if (kind == RoundKind::Compute) {
      const MeasurementPattern& p = config.pattern;
      std::map<QubitLabel, Angle> theta;
      for (const auto& v : p.graph.vertices()) {
        theta[v] = Angle::units(chooser.choose(16));
        parts.push_back(PureState::plus_angle(v, theta[v]));
      }
      std::map<QubitLabel, int> logical;
      for (const auto& v : p.order) {
        int sx = 0, sz = 0;
        for (const auto& m : p.x_dependencies(v)) sx ^= logical.at(m);
        for (const auto& m : p.z_dependencies(v)) sz ^= logical.at(m);
        const int r = chooser.choose(2);
        delta[v] = (adapt_angle(p.angles.at(v), sx, sz) + theta[v] + Angle::units(8 * r)).k();
        size_t slot = 0;
        for (const auto& w : config.graph.vertices()) {
          if (w == v) break;
          ++slot;
        }
        logical[v] = cin[slot] ^ r;
      }
    } else {
      const auto& zc = z_color(config, kind);
      for (const auto& v : config.graph.vertices()) {
        if (zc.count(v)) {
          const int r = chooser.choose(2);
          parts.push_back(PureState::z_eigen(v, r));
          delta[v] = chooser.choose(16);
        } else {
          const Angle theta = Angle::units(chooser.choose(16));
          const int pad = chooser.choose(2);
          parts.push_back(PureState::plus_angle(v, theta));
          delta[v] = theta.plus_pi_if(pad).k();
        }
      }
    }
    state = tensor({state, tensor(parts)});
    for (const auto& v : config.graph.vertices()) cout.push_back(delta.at(v));
  };
  return spec;
}

double protocol3_flip_detection(const Protocol3Config& config, RoundKind kind,
                                const QubitLabel& node) {
  double reject = 0;
  enumerate_branches([&](Chooser& chooser) {
    if (!run_test_round(config, kind, chooser, {0, 3}, node)) reject += chooser.weight();
  });
  return reject;
}

Protocol3Run protocol3_run_sampled(const Protocol3Config& config, DetRng& rng) {
  config.pattern.validate();
  Protocol3Run run;
  const int rounds = 2 * config.k + 1;

  // Random partition of rounds into T1, T2 and the computation slot.
  std::vector<RoundKind> kinds;
  for (int i = 0; i < config.k; ++i) kinds.push_back(RoundKind::TestBlackZ);
  for (int i = 0; i < config.k; ++i) kinds.push_back(RoundKind::TestWhiteZ);
  kinds.push_back(RoundKind::Compute);
  for (int i = rounds - 1; i > 0; --i) {
    std::swap(kinds[i], kinds[rng.uniform(i + 1)]);
  }

  for (int round = 0; round < rounds; ++round) {
    const RoundKind kind = kinds[round];
    if (kind == RoundKind::Compute) {
      DetRng cr = rng.fork("compute" + std::to_string(round));
      std::map<QubitLabel, Angle> theta;
      std::vector<PureState> parts;
      for (const auto& v : config.pattern.graph.vertices()) {
        theta[v] = Angle::units(cr.uniform(16));
        parts.push_back(PureState::plus_angle(v, theta[v]));
      }
      PureState state = tensor(parts);
      run.transcript.add(round, "client", "server", "quantum",
                         "fingerprint:" + std::to_string(state.fingerprint()));
      entangle_graph(state, config.pattern.graph);
      std::map<QubitLabel, int> logical;
      for (const auto& v : config.pattern.order) {
        int sx = 0, sz = 0;
        for (const auto& m : config.pattern.x_dependencies(v)) sx ^= logical.at(m);
        for (const auto& m : config.pattern.z_dependencies(v)) sz ^= logical.at(m);
        const int r = cr.bit();
        const Angle delta =
            adapt_angle(config.pattern.angles.at(v), sx, sz) + theta[v] + Angle::units(8 * r);
        run.transcript.add(round, "client", "server", "classical",
                           "delta[" + v + "]=" + std::to_string(delta.k()));
        auto branches = state.measure_xy(v, delta);
        const double u = static_cast<double>(rng.next_u64()) / 18446744073709551616.0;
        const int s_prime =
            u < (branches[0].zero_probability ? 0.0 : branches[0].probability) ? 0 : 1;
        state = branches[s_prime].state;
        run.transcript.add(round, "server", "client", "classical",
                           "s[" + v + "]=" + std::to_string(s_prime));
        logical[v] = s_prime ^ r;
      }
      for (const auto& v : config.pattern.order) run.output_bits.push_back(logical.at(v));
    } else {
      DetRng tr = rng.fork("test" + std::to_string(round));
      const auto& zc = z_color(config, kind);
      const auto& xc = x_color(config, kind);
      std::map<QubitLabel, int> z_bits;
      std::map<QubitLabel, Angle> theta;
      std::map<QubitLabel, int> pad;
      std::vector<PureState> parts;
      for (const auto& v : config.graph.vertices()) {
        if (zc.count(v)) {
          z_bits[v] = tr.bit();
          parts.push_back(PureState::z_eigen(v, z_bits[v]));
        } else {
          theta[v] = Angle::units(tr.uniform(16));
          pad[v] = tr.bit();
          parts.push_back(PureState::plus_angle(v, theta[v]));
        }
      }
      PureState state = tensor(parts);
      run.transcript.add(round, "client", "server", "quantum",
                         "fingerprint:" + std::to_string(state.fingerprint()));
      entangle_graph(state, config.graph);
      std::map<QubitLabel, int> decoded;
      for (const auto& v : config.graph.vertices()) {
        const Angle delta =
            zc.count(v) ? Angle::units(tr.uniform(16)) : theta[v].plus_pi_if(pad[v]);
        run.transcript.add(round, "client", "server", "classical",
                           "delta[" + v + "]=" + std::to_string(delta.k()));
        auto branches = state.measure_xy(v, delta);
        const double u = static_cast<double>(rng.next_u64()) / 18446744073709551616.0;
        const int s_prime =
            u < (branches[0].zero_probability ? 0.0 : branches[0].probability) ? 0 : 1;
        state = branches[s_prime].state;
        run.transcript.add(round, "server", "client", "classical",
                           "s[" + v + "]=" + std::to_string(s_prime));
        if (xc.count(v)) decoded[v] = s_prime ^ pad[v];
      }
      for (const auto& j : xc) {
        int parity = decoded[j];
        for (const auto& i : config.graph.neighbors(j)) parity ^= z_bits.at(i);
        if (parity) run.accepted = false;
      }
    }
  }
  return run;
}

}  // namespace dqclab
