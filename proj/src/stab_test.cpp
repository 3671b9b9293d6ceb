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

#include "dqclab/stab_test.hpp"

#include "dqclab/errors.hpp"

namespace dqclab {

namespace {

void apply_letter(PureState& state, const QubitLabel& q, PauliLetter l) {
  switch (l) {
    case PauliLetter::I: return;
    case PauliLetter::X: return state.apply_x(q);
    case PauliLetter::Y: return state.apply_y(q);
    case PauliLetter::Z: return state.apply_z(q);
  }
}

/// Logical preparation for one node of the PS test, before blinding.
PureState logical_prep(const QubitLabel& q, const PrepInstruction& inst, Chooser& chooser,
                       int* z_bit) {
  switch (inst.kind) {
    case PrepKind::PlusEigenstate:
      return PureState::pauli_eigenstate(q, inst.eigen_letter, 0);
    case PrepKind::ZBasis: {
      const int r = chooser.choose(2);
      if (z_bit) *z_bit = r;
      return PureState::z_eigen(q, r);
    }
    case PrepKind::MaxMixed: {
      // id/2 realized exactly as the uniform mixture of Z^s|+>.
      const int s = chooser.choose(2);
      PureState p = PureState::plus(q);
      if (s) p.apply_z(q);
      return p;
    }
  }
  fail("unreachable");
}

}  // namespace

StabPsTest stab_to_ps(const Graph& g, const PauliString& stab) {
  require(!stab.is_identity(), "the identity element carries no test");
  std::set<QubitLabel> xy_nodes;
  for (const auto& [q, l] : stab.letters()) {
    require(g.has_vertex(q), "stabilizer touches a vertex outside the graph");
    if (l == PauliLetter::X || l == PauliLetter::Y) xy_nodes.insert(q);
  }
  // Membership check: the X/Y support determines the generating subset.
  const PauliString candidate = stabilizer_element(g, xy_nodes);
  require(candidate == stab, "not a stabilizer element of this graph (phase check failed)");

  StabPsTest test;
  test.graph = g;
  test.element = stab;
  for (const auto& v : g.vertices()) {
    PrepInstruction inst;
    switch (stab.at(v)) {
      case PauliLetter::X:
      case PauliLetter::Y:
        inst.kind = PrepKind::PlusEigenstate;
        inst.eigen_letter = stab.at(v);
        test.measured.push_back(v);
        break;
      case PauliLetter::Z:
        inst.kind = PrepKind::ZBasis;
        break;
      case PauliLetter::I:
        inst.kind = PrepKind::MaxMixed;
        break;
    }
    test.prep[v] = inst;
  }
  return test;
}

namespace {

/// Shared enumerator for the PS test: honest when attack is identity.
/// The deviation acts on the logical node preparations; the blinding
/// rotations are enumerated in full even though they cancel in the decoding.
double ps_reject_probability(const Graph& g, const PauliString& stab,
                             const PauliString& attack) {
  const StabPsTest test = stab_to_ps(g, stab);
  double reject = 0;
  enumerate_branches([&](Chooser& chooser) {
    std::vector<PureState> parts;
    std::map<QubitLabel, int> z_bits;
    std::map<QubitLabel, Angle> blind;
    std::map<QubitLabel, int> pad;
    for (const auto& v : g.vertices()) {
      int z_bit = 0;
      PureState p = logical_prep(v, test.prep.at(v), chooser, &z_bit);
      if (test.prep.at(v).kind == PrepKind::ZBasis) z_bits[v] = z_bit;
      apply_letter(p, v, attack.at(v));
      if (test.prep.at(v).kind == PrepKind::PlusEigenstate) {
        const Angle theta = Angle::units(chooser.choose(16));
        const int r = chooser.choose(2);
        p.apply_zrot(v, theta);
        blind[v] = theta;
        pad[v] = r;
      }
      parts.push_back(std::move(p));
    }
    PureState state = tensor(parts);
    entangle_graph(state, g);

    int parity = 0;
    for (const auto& v : test.measured) {
      const Angle delta = blind[v].plus_pi_if(pad[v]);
      const int s_prime = chooser.measure_xy(state, v, delta);
      parity ^= s_prime ^ pad[v];
    }
    for (const auto& [v, r] : z_bits) parity ^= r;
    if (parity) reject += chooser.weight();
  });
  return reject;
}

double rm_reject_probability(const Graph& g, const PauliString& stab,
                             const PauliString& attack) {
  const PauliString candidate = stabilizer_element(g, [&] {
    std::set<QubitLabel> s;
    for (const auto& [q, l] : stab.letters()) {
      if (l == PauliLetter::X || l == PauliLetter::Y) s.insert(q);
    }
    return s;
  }());
  require(candidate == stab, "not a stabilizer element of this graph (phase check failed)");

  double reject = 0;
  enumerate_branches([&](Chooser& chooser) {
    PureState state = graph_state(g);
    state.apply_pauli(attack);
    int parity = 0;
    for (const auto& [q, l] : stab.letters()) {
      parity ^= chooser.measure_letter(state, q, l);
    }
    if (parity) reject += chooser.weight();
  });
  return reject;
}

}  // namespace

double stab_honest_reject_probability(StabTestKind kind, const Graph& g,
                                      const PauliString& stab) {
  return detection_probability(kind, g, stab, PauliString::identity());
}

double detection_probability(StabTestKind kind, const Graph& g, const PauliString& stab,
                             const PauliString& attack) {
  switch (kind) {
    case StabTestKind::ReceiveMeasure: return rm_reject_probability(g, stab, attack);
    case StabTestKind::PrepareSend: return ps_reject_probability(g, stab, attack);
  }
  fail("unreachable");
}

double pattern_test_reject_probability(const Graph& g, const TwoColoring& coloring,
                                       bool swapped, const PureState& server_state) {
  const std::set<QubitLabel>& x_color = swapped ? coloring.white : coloring.black;
  double reject = 0;
  enumerate_branches([&](Chooser& chooser) {
    PureState state = server_state;
    std::map<QubitLabel, int> outcome;
    for (const auto& v : g.vertices()) {
      outcome[v] = x_color.count(v) ? chooser.measure_x(state, v)
                                    : chooser.measure_z(state, v);
    }
    bool ok = true;
    for (const auto& j : x_color) {
      int parity = outcome[j];
      for (const auto& i : g.neighbors(j)) parity ^= outcome[i];
      if (parity) ok = false;
    }
    if (!ok) reject += chooser.weight();
  });
  return reject;
}

SystemSpec stab_ps_client_system(const Graph& g, const PauliString& stab) {
  const StabPsTest test = stab_to_ps(g, stab);
  SystemSpec spec;
  for (const auto& v : g.vertices()) {
    spec.classical_input_names.push_back("S.result[" + v + "]");
    spec.classical_input_arity.push_back(2);
    spec.quantum_outputs.push_back(v);
    spec.classical_output_names.push_back("C.delta[" + v + "]");
  }
  spec.classical_output_names.push_back("C.accept");

  spec.run = [g, test](const std::vector<int>& cin, Chooser& chooser, PureState& state,
                       std::vector<int>& cout) {
    std::vector<PureState> parts;
    int z_parity = 0;
    std::map<QubitLabel, int> pad;
    for (const auto& v : g.vertices()) {
      int z_bit = 0;
      PureState p = logical_prep(v, test.prep.at(v), chooser, &z_bit);
      if (test.prep.at(v).kind == PrepKind::ZBasis) z_parity ^= z_bit;
      if (test.prep.at(v).kind == PrepKind::PlusEigenstate) {
        const Angle theta = Angle::units(chooser.choose(16));
        const int r = chooser.choose(2);
        p.apply_zrot(v, theta);
        pad[v] = r;
        cout.push_back((theta.plus_pi_if(r)).k());
      } else {
        cout.push_back(chooser.choose(16));  // uniform dummy angle
      }
      parts.push_back(std::move(p));
    }
    state = tensor({state, tensor(parts)});

    int parity = z_parity;
    for (size_t i = 0; i < g.vertices().size(); ++i) {
      const QubitLabel& v = g.vertices()[i];
      if (pad.count(v)) parity ^= cin[i] ^ pad[v];
    }
    cout.push_back(parity == 0 ? 1 : 0);
  };
  return spec;
}

SystemSpec stab_rm_sigma_system(const Graph& g, const PauliString& stab) {
  // Validate membership the same way the PS side does.
  (void)stab_to_ps(g, stab);

  SystemSpec spec;
  for (const auto& v : g.vertices()) {
    spec.classical_input_names.push_back("S.result[" + v + "]");
    spec.classical_input_arity.push_back(2);
    spec.quantum_outputs.push_back(v);
    spec.classical_output_names.push_back("C.delta[" + v + "]");
  }
  spec.classical_output_names.push_back("C.accept");

  spec.run = [g, stab](const std::vector<int>& cin, Chooser& chooser, PureState& state,
                       std::vector<int>& cout) {
    // sigma_S: one EPR pair per node, Z^theta on the half the server gets.
    std::vector<PureState> parts;
    std::map<QubitLabel, int> flip;
    constexpr double kInvSqrt2 = 0.7071067811865475244;
    for (const auto& v : g.vertices()) {
      PureState pair({"keep@" + v, v}, {kInvSqrt2, 0, 0, kInvSqrt2});
      const Angle theta = Angle::units(chooser.choose(8));
      pair.apply_zrot(v, theta);
      const int b = chooser.choose(2);
      flip[v] = b;
      cout.push_back((theta.plus_pi_if(b)).k());
      parts.push_back(std::move(pair));
    }
    state = tensor({state, tensor(parts)});

    // The receive-and-measure client measures the element on the retained
    // halves, respecting the announced bit flips on X/Y outcomes.
    int parity = 0;
    for (size_t i = 0; i < g.vertices().size(); ++i) {
      const QubitLabel& v = g.vertices()[i];
      const PauliLetter letter = stab.at(v);
      if (letter == PauliLetter::I) {
        chooser.discard(state, "keep@" + v);
        continue;
      }
      const int m = chooser.measure_letter(state, "keep@" + v, letter);
      const int s = cin[i] ^ flip[v];
      parity ^= m ^ ((letter == PauliLetter::X || letter == PauliLetter::Y) ? s : 0);
    }
    cout.push_back(parity == 0 ? 1 : 0);
  };
  return spec;
}

}  // namespace dqclab
