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

#include "dqclab/rsp.hpp"

#include "dqclab/errors.hpp"
#include "dqclab/resources.hpp"

namespace dqclab {

namespace {

QubitLabel client_wire(int j) { return "psi" + std::to_string(j); }

/// Server preparation: psi_S in |+>, one |0> per listed client, CX each.
PureState server_entangled(const std::vector<int>& clients, const QubitLabel& server_label) {
  std::vector<PureState> parts{PureState::plus(server_label)};
  for (int j : clients) parts.push_back(PureState::zero(client_wire(j)));
  PureState state = tensor(parts);
  for (int j : clients) state.apply_cx(server_label, client_wire(j));
  return state;
}

Angle correction_delta(Angle theta, int b, const std::vector<Angle>& thetas,
                       const std::vector<int>& results) {
  Angle delta = theta.reflected_if(b);
  for (const Angle& t : thetas) delta = delta - t;
  int parity = 0;
  for (int r : results) parity ^= r;
  return delta.plus_pi_if(parity);
}

}  // namespace

RspCorrectness rsp_correctness(int n, Angle theta) {
  require(n >= 2, "RSP needs at least two clients");
  std::vector<int> clients;
  for (int j = 1; j <= n; ++j) clients.push_back(j);

  RspCorrectness report;
  const PureState target = PureState::plus_angle("S", theta);
  enumerate_branches([&](Chooser& chooser) {
    PureState state = server_entangled(clients, "S");
    std::vector<Angle> thetas;
    std::vector<int> results;
    for (int j : clients) {
      const Angle theta_j = Angle::units(chooser.choose(8));
      thetas.push_back(theta_j);
      results.push_back(chooser.measure_xy(state, client_wire(j), -theta_j));
    }
    const int b = chooser.choose(2);
    const Angle delta = correction_delta(theta, b, thetas, results);
    // X^b Z^delta: the rotation acts first.
    state.apply_zrot("S", delta);
    if (b) state.apply_x("S");
    report.min_fidelity =
        std::min(report.min_fidelity, fidelity(state.relabeled({"S"}), target));
    ++report.branches;
  });
  return report;
}

RspRun rsp_run_sampled(int n, int k, Angle theta, DetRng& rng) {
  require(n >= 2 && k >= 1 && k <= n, "invalid RSP roster");
  RspRun run;
  int round = 0;
  PureState state = server_entangled([&] {
    std::vector<int> c;
    for (int j = 1; j <= n; ++j) c.push_back(j);
    return c;
  }(), "S");
  for (int j = 1; j <= n; ++j) {
    run.transcript.add(round, "server", "C" + std::to_string(j), "quantum",
                       "fingerprint:" + std::to_string(state.fingerprint()));
  }
  ++round;
  std::vector<Angle> thetas;
  std::vector<int> results;
  for (int j = 1; j <= n; ++j) {
    DetRng cj = rng.fork("C" + std::to_string(j));
    const Angle theta_j = Angle::units(cj.uniform(8));
    auto branches = state.measure_xy(client_wire(j), -theta_j);
    const int r = cj.bit();  // both outcomes have probability 1/2 here
    state = branches[r].state;
    thetas.push_back(theta_j);
    results.push_back(r);
    if (j != k) {
      run.transcript.add(round, "C" + std::to_string(j), "C" + std::to_string(k), "classical",
                         "theta=" + std::to_string(theta_j.k()) + ",r=" + std::to_string(r));
    }
  }
  ++round;
  DetRng ck = rng.fork("Ck");
  const int b = ck.bit();
  const Angle delta = correction_delta(theta, b, thetas, results);
  run.transcript.add(round, "C" + std::to_string(k), "server", "classical",
                     "b=" + std::to_string(b) + ",delta=" + std::to_string(delta.k()));
  ++round;
  state.apply_zrot("S", delta);
  if (b) state.apply_x("S");
  run.output = state.relabeled({"S"});
  run.output_fingerprint = run.output.fingerprint();
  run.transcript.add(round, "server", "out", "quantum",
                     "fingerprint:" + std::to_string(run.output_fingerprint));
  return run;
}

SystemSpec rsp_real_dishonest_clients(int n, int k, const std::set<int>& dishonest) {
  require(!dishonest.count(k), "client k must be honest");
  require(!dishonest.empty(), "need at least one dishonest client");
  SystemSpec spec;
  spec.classical_input_names = {"C" + std::to_string(k) + ".theta"};
  spec.classical_input_arity = {8};
  for (int j : dishonest) {
    spec.classical_input_names.push_back("C" + std::to_string(j) + ".theta");
    spec.classical_input_arity.push_back(8);
    spec.classical_input_names.push_back("C" + std::to_string(j) + ".r");
    spec.classical_input_arity.push_back(2);
  }
  for (int j : dishonest) spec.quantum_outputs.push_back(client_wire(j));
  spec.quantum_outputs.push_back("S.out");

  spec.run = [=](const std::vector<int>& cin, Chooser& chooser, PureState& state,
                 std::vector<int>& /*cout*/) {
    const Angle theta = Angle::units(cin[0]);
    std::vector<int> clients;
    for (int j = 1; j <= n; ++j) clients.push_back(j);
    state = tensor({state, server_entangled(clients, "S.out")});

    std::vector<Angle> thetas;
    std::vector<int> results;
    size_t slot = 1;
    for (int j = 1; j <= n; ++j) {
      if (dishonest.count(j)) {
        // The dishonest client keeps its register (an open wire) and reports
        // whatever (theta_j, r_j) the distinguisher picked.
        thetas.push_back(Angle::units(cin[slot]));
        results.push_back(cin[slot + 1]);
        slot += 2;
      } else {
        const Angle theta_j = Angle::units(chooser.choose(8));
        thetas.push_back(theta_j);
        results.push_back(chooser.measure_xy(state, client_wire(j), -theta_j));
      }
    }
    const int b = chooser.choose(2);
    const Angle delta = correction_delta(theta, b, thetas, results);
    state.apply_zrot("S.out", delta);
    if (b) state.apply_x("S.out");
  };
  return spec;
}

SystemSpec rsp_ideal_sim_clients(int n, int k, const std::set<int>& dishonest) {
  require(!dishonest.count(k), "client k must be honest");
  require(!dishonest.empty(), "need at least one dishonest client");

  // Honest clients other than k are filtered away from the ideal resource.
  SystemSpec filtered = ideal_rsp(n, k);
  for (int j = 1; j <= n; ++j) {
    if (j == k || dishonest.count(j)) continue;
    filtered = compose(fix_classical_input("C" + std::to_string(j),
                                           "C" + std::to_string(j) + ".c", 0),
                       filtered);
    filtered = compose(fix_quantum_input("C" + std::to_string(j), "rho" + std::to_string(j),
                                         PureState::zero("rho" + std::to_string(j))),
                       filtered);
  }

  const int ell = *dishonest.rbegin();
  Converter sim{"sigma_D", [=](const SystemSpec& inner) {
    SystemSpec out;
    out.classical_input_names = {"C" + std::to_string(k) + ".theta"};
    out.classical_input_arity = {8};
    for (int j : dishonest) {
      out.classical_input_names.push_back("C" + std::to_string(j) + ".theta");
      out.classical_input_arity.push_back(8);
      out.classical_input_names.push_back("C" + std::to_string(j) + ".r");
      out.classical_input_arity.push_back(2);
    }
    for (int j : dishonest) out.quantum_outputs.push_back(client_wire(j));
    out.quantum_outputs.insert(out.quantum_outputs.end(), inner.quantum_outputs.begin(),
                               inner.quantum_outputs.end());
    out.run = [=](const std::vector<int>& cin, Chooser& chooser, PureState& state,
                  std::vector<int>& cout) {
      // Emulate the server and client k's classical part with theta = 0.
      std::vector<int> d_list(dishonest.begin(), dishonest.end());
      state = tensor({state, server_entangled(d_list, "sim.S")});

      std::vector<Angle> thetas;
      std::vector<int> results;
      size_t slot = 1;
      for (int j : d_list) {
        thetas.push_back(Angle::units(cin[slot]));
        results.push_back(cin[slot + 1]);
        slot += 2;
      }
      const int b = chooser.choose(2);
      const Angle delta = correction_delta(Angle(), b, thetas, results);
      state.apply_zrot("sim.S", delta);
      if (b) state.apply_x("sim.S");

      // Feed the emulated register to the ideal resource at interface ell,
      // dummy |0> registers with c_j = 0 at the other dishonest interfaces.
      std::vector<int> inner_cin(inner.classical_input_arity.size(), 0);
      inner_cin[0] = cin[0];
      for (size_t s = 1; s < inner.classical_input_names.size(); ++s) {
        if (inner.classical_input_names[s] == "C" + std::to_string(ell) + ".c") {
          inner_cin[s] = 1;
        }
      }
      std::vector<PureState> dummies{state};
      for (int j : d_list) {
        if (j != ell) dummies.push_back(PureState::zero("rho" + std::to_string(j)));
      }
      state = tensor(dummies);
      state.apply_operator({"sim.S"}, {"rho" + std::to_string(ell)},
                           Eigen::MatrixXcd::Identity(2, 2));
      inner.run(inner_cin, chooser, state, cout);
    };
    return out;
  }};
  return compose(sim, filtered);
}

SystemSpec rsp_real_dishonest_server(int n, int k) {
  SystemSpec spec;
  spec.classical_input_names = {"C" + std::to_string(k) + ".theta"};
  spec.classical_input_arity = {8};
  for (int j = 1; j <= n; ++j) spec.quantum_inputs.push_back(client_wire(j));
  spec.classical_output_names = {"S.delta", "S.b"};
  spec.run = [=](const std::vector<int>& cin, Chooser& chooser, PureState& state,
                 std::vector<int>& cout) {
    const Angle theta = Angle::units(cin[0]);
    std::vector<Angle> thetas;
    std::vector<int> results;
    for (int j = 1; j <= n; ++j) {
      const Angle theta_j = Angle::units(chooser.choose(8));
      thetas.push_back(theta_j);
      results.push_back(chooser.measure_xy(state, client_wire(j), -theta_j));
    }
    const int b = chooser.choose(2);
    const Angle delta = correction_delta(theta, b, thetas, results);
    cout.push_back(delta.k());
    cout.push_back(b);
  };
  return spec;
}

SystemSpec rsp_ideal_sim_server(int n, int k) {
  // All clients are honest; their ideal interfaces are filtered.
  SystemSpec filtered = compose(filter_natural_clients(n, k), ideal_rsp(n, k));

  Converter sim{"sigma_DS", [=](const SystemSpec& inner) {
    SystemSpec out;
    out.classical_input_names = {"C" + std::to_string(k) + ".theta"};
    out.classical_input_arity = {8};
    for (int j = 1; j <= n; ++j) out.quantum_inputs.push_back(client_wire(j));
    out.classical_output_names = {"S.delta", "S.b"};
    out.run = [=](const std::vector<int>& cin, Chooser& chooser, PureState& state,
                  std::vector<int>& cout) {
      // psi_I = |+^theta> arrives from the ideal resource's server interface.
      std::vector<int> inner_cin{cin[0]};
      std::vector<int> ignored;
      inner.run(inner_cin, chooser, state, ignored);

      std::vector<Angle> thetas(static_cast<size_t>(n), Angle());
      std::vector<int> results(static_cast<size_t>(n), 0);
      for (int j = 1; j <= n; ++j) {
        if (j == k) continue;
        const Angle theta_j = Angle::units(chooser.choose(8));
        thetas[j - 1] = theta_j;
        results[j - 1] = chooser.measure_xy(state, client_wire(j), -theta_j);
      }
      // CX with psi_k as control onto psi_I, then a Z measurement of psi_I,
      // is the gadget equivalent to Z^{(-1)^b theta} on psi_k.
      state.apply_cx(client_wire(k), "S.out");
      const int b = chooser.measure_z(state, "S.out");
      const Angle theta_k = Angle::units(chooser.choose(8));
      thetas[k - 1] = theta_k;
      results[k - 1] = chooser.measure_xy(state, client_wire(k), -theta_k);

      Angle delta;
      for (const Angle& t : thetas) delta = delta - t;
      int parity = 0;
      for (int r : results) parity ^= r;
      delta = delta.plus_pi_if(parity);
      cout.push_back(delta.k());
      // The announced correction bit is the gadget outcome itself: the
      // retained server register sits in |+^{(-1)^b theta}> after the CX
      // gadget, so X^b times the ideal Z^theta brings it to |+^theta>.
      cout.push_back(b);
    };
    return out;
  }};
  return compose(sim, filtered);
}

}  // namespace dqclab
