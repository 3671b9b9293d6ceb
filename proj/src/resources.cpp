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

#include "dqclab/resources.hpp"

#include "dqclab/errors.hpp"

namespace dqclab {

namespace {

std::vector<QubitLabel> numbered(const std::string& stem, int n) {
  std::vector<QubitLabel> out;
  for (int i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

void apply_kraus(Chooser& chooser, PureState& state, const std::vector<QubitLabel>& in,
                 const std::vector<QubitLabel>& out,
                 const std::vector<Eigen::MatrixXcd>& kraus) {
  std::vector<double> probs;
  std::vector<PureState> results;
  for (const auto& k : kraus) {
    PureState trial = state;
    trial.apply_operator(in, out, k);
    const double n = trial.norm();
    probs.push_back(n * n);
    results.push_back(std::move(trial));
  }
  const int pick = chooser.choose_weighted(probs);
  state = std::move(results[pick]);
  state.renormalize();
}

}  // namespace

SystemSpec ideal_s_blind(const Eigen::MatrixXcd& u, int n_c,
                         const std::vector<Eigen::MatrixXcd>& dishonest_kraus, int n_s) {
  const auto d_c = Eigen::Index{1} << n_c;
  require(u.rows() == d_c && u.cols() == d_c, "U dimension does not match the input register");
  if (!dishonest_kraus.empty()) {
    const auto d_in = Eigen::Index{1} << (n_c + n_s);
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d_in, d_in);
    for (const auto& k : dishonest_kraus) {
      require(k.rows() == d_c && k.cols() == d_in, "Kraus operator has wrong shape");
      sum += k.adjoint() * k;
    }
    require((sum - Eigen::MatrixXcd::Identity(d_in, d_in)).cwiseAbs().maxCoeff() < 1e-10,
            "deviation map is not trace-preserving");
  }

  SystemSpec spec;
  spec.classical_input_names = {"S.c"};
  spec.classical_input_arity = {2};
  const auto c_wires = numbered("psiC", n_c);
  const auto s_wires = numbered("psiS", n_s);
  spec.quantum_inputs = c_wires;
  spec.quantum_inputs.insert(spec.quantum_inputs.end(), s_wires.begin(), s_wires.end());
  spec.quantum_outputs = numbered("rho", n_c);
  spec.classical_output_names = {"S.leak"};
  spec.run = [=](const std::vector<int>& cin, Chooser& chooser, PureState& state,
                 std::vector<int>& cout) {
    const int c = cin[0];
    cout.push_back(n_c);  // the leak: size of the client register
    if (c == 0) {
      state.apply_operator(c_wires, numbered("rho", n_c), u);
      for (const auto& q : s_wires) chooser.discard(state, q);
    } else {
      require(!dishonest_kraus.empty(), "dishonest path taken without a deviation map");
      std::vector<QubitLabel> in = c_wires;
      in.insert(in.end(), s_wires.begin(), s_wires.end());
      apply_kraus(chooser, state, in, numbered("rho", n_c), dishonest_kraus);
    }
  };
  return spec;
}

SystemSpec ideal_s_ver(const Eigen::MatrixXcd& u, int n_c) {
  const auto d_c = Eigen::Index{1} << n_c;
  require(u.rows() == d_c && u.cols() == d_c, "U dimension does not match the input register");

  SystemSpec spec;
  spec.classical_input_names = {"S.c"};
  spec.classical_input_arity = {2};
  const auto c_wires = numbered("psiC", n_c);
  spec.quantum_inputs = c_wires;
  spec.quantum_outputs = numbered("rho", n_c);
  spec.classical_output_names = {"abort", "S.leak"};
  spec.run = [=](const std::vector<int>& cin, Chooser& chooser, PureState& state,
                 std::vector<int>& cout) {
    const int c = cin[0];
    if (c == 0) {
      state.apply_operator(c_wires, numbered("rho", n_c), u);
      cout.push_back(0);
    } else {
      // Marker output: abort flag set, payload fixed to |0...0>.
      for (const auto& q : c_wires) chooser.discard(state, q);
      std::vector<PureState> marker;
      for (const auto& q : numbered("rho", n_c)) marker.push_back(PureState::zero(q));
      marker.insert(marker.begin(), state);
      state = tensor(marker);
      cout.push_back(1);
    }
    cout.push_back(n_c);
  };
  return spec;
}

SystemSpec ideal_rsp(int n, int k) {
  require(n >= 2 && k >= 1 && k <= n, "RSP needs n >= 2 clients and a valid k");
  SystemSpec spec;
  spec.classical_input_names = {"C" + std::to_string(k) + ".theta"};
  spec.classical_input_arity = {8};
  std::vector<int> others;
  for (int j = 1; j <= n; ++j) {
    if (j == k) continue;
    others.push_back(j);
    spec.classical_input_names.push_back("C" + std::to_string(j) + ".c");
    spec.classical_input_arity.push_back(2);
    spec.quantum_inputs.push_back("rho" + std::to_string(j));
  }
  spec.quantum_outputs = {"S.out"};
  spec.run = [=](const std::vector<int>& cin, Chooser& chooser, PureState& state,
                 std::vector<int>& /*cout*/) {
    const Angle theta = Angle::units(cin[0]);
    int ell = 0;
    for (size_t i = 0; i < others.size(); ++i) {
      if (cin[1 + i] == 1) ell = std::max(ell, others[i]);
    }
    if (ell == 0) {
      for (int j : others) chooser.discard(state, "rho" + std::to_string(j));
      state = tensor({state, PureState::plus_angle("S.out", theta)});
    } else {
      for (int j : others) {
        if (j != ell) chooser.discard(state, "rho" + std::to_string(j));
      }
      const QubitLabel wire = "rho" + std::to_string(ell);
      state.apply_zrot(wire, theta);
      state.apply_operator({wire}, {"S.out"}, Eigen::MatrixXcd::Identity(2, 2));
    }
  };
  return spec;
}

Converter filter_sharp_server() { return fix_classical_input("S", "S.c", 0); }
Converter filter_flat_server() { return fix_classical_input("S", "S.c", 0); }

std::vector<Converter> filter_natural_clients(int n, int k) {
  std::vector<Converter> out;
  for (int j = 1; j <= n; ++j) {
    if (j == k) continue;
    const std::string name = "C" + std::to_string(j);
    out.push_back(fix_classical_input(name, name + ".c", 0));
    out.push_back(fix_quantum_input(name, "rho" + std::to_string(j),
                                    PureState::zero("rho" + std::to_string(j))));
  }
  return out;
}

double distinguishability(const SystemSpec& a, const SystemSpec& b) {
  return channel_distance(extract_channel(a), extract_channel(b));
}

}  // namespace dqclab
