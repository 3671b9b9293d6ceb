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

#include "dqclab/pattern.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "dqclab/errors.hpp"

namespace dqclab {

Angle adapt_angle(Angle phi, int sx, int sz) {
  return phi.reflected_if(sx & 1).plus_pi_if(sz & 1);
}

bool MeasurementPattern::is_measured(const QubitLabel& v) const {
  return std::find(order.begin(), order.end(), v) != order.end();
}

void MeasurementPattern::validate() const {
  for (const auto& v : order) {
    require(graph.has_vertex(v), "pattern order references missing vertex " + v);
    require(angles.count(v), "measured vertex has no angle: " + v);
  }
  for (const auto& o : outputs) {
    require(graph.has_vertex(o), "output references missing vertex " + o);
    require(!is_measured(o), "output vertex must stay unmeasured: " + o);
  }
  for (const auto& i : inputs) {
    require(graph.has_vertex(i), "input references missing vertex " + i);
  }
  // Every vertex is either measured or an output.
  for (const auto& v : graph.vertices()) {
    const bool out = std::find(outputs.begin(), outputs.end(), v) != outputs.end();
    require(is_measured(v) != out, "vertex must be measured xor output: " + v);
  }
  std::map<QubitLabel, size_t> rank;
  for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  for (const auto& [v, fv] : flow) {
    require(graph.has_vertex(v) && graph.has_vertex(fv), "flow references missing vertex");
    require(graph.has_edge(v, fv), "flow must follow graph edges: " + v + "->" + fv);
    require(is_measured(v), "flow source must be measured: " + v);
    if (is_measured(fv)) {
      require(rank.at(v) < rank.at(fv), "order must be consistent with flow");
    }
  }
}

std::vector<QubitLabel> MeasurementPattern::x_dependencies(const QubitLabel& v) const {
  std::vector<QubitLabel> out;
  for (const auto& [m, fm] : flow) {
    if (fm == v) out.push_back(m);
  }
  return out;
}

std::vector<QubitLabel> MeasurementPattern::z_dependencies(const QubitLabel& v) const {
  std::vector<QubitLabel> out;
  for (const auto& [m, fm] : flow) {
    if (m != v && graph.has_edge(fm, v) && fm != v) out.push_back(m);
  }
  return out;
}

std::string MeasurementPattern::to_json() const {
  nlohmann::json j;
  j["graph"] = nlohmann::json::parse(graph.to_json());
  j["order"] = order;
  j["angles"] = nlohmann::json::object();
  for (const auto& [v, a] : angles) j["angles"][v] = a.k();
  j["flow"] = nlohmann::json::object();
  for (const auto& [v, w] : flow) j["flow"][v] = w;
  j["inputs"] = inputs;
  j["outputs"] = outputs;
  return j.dump();
}

MeasurementPattern MeasurementPattern::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  MeasurementPattern p;
  p.graph = Graph::from_json(j.at("graph").dump());
  p.order = j.at("order").get<std::vector<std::string>>();
  for (const auto& [v, k] : j.at("angles").items()) p.angles[v] = Angle::units(k.get<int>());
  if (j.contains("flow")) {
    for (const auto& [v, w] : j.at("flow").items()) p.flow[v] = w.get<std::string>();
  }
  p.inputs = j.at("inputs").get<std::vector<std::string>>();
  p.outputs = j.at("outputs").get<std::vector<std::string>>();
  p.validate();
  return p;
}

MeasurementPattern MeasurementPattern::path(const std::vector<Angle>& measured_angles) {
  const int n = static_cast<int>(measured_angles.size()) + 1;
  MeasurementPattern p;
  p.graph = Graph::path(n);
  for (int i = 1; i < n; ++i) {
    const QubitLabel v = "v" + std::to_string(i);
    p.order.push_back(v);
    p.angles[v] = measured_angles[i - 1];
  }
  p.flow = flow_for_path(n);
  p.inputs = {"v1"};
  p.outputs = {"v" + std::to_string(n)};
  p.validate();
  return p;
}

MeasurementPattern MeasurementPattern::grid(int rows, int cols,
                                            const std::map<QubitLabel, Angle>& measured_angles) {
  MeasurementPattern p;
  p.graph = Graph::grid(rows, cols);
  for (int c = 0; c + 1 < cols; ++c) {
    for (int r = 0; r < rows; ++r) {
      const QubitLabel v = Graph::grid_vertex(r, c);
      p.order.push_back(v);
      auto it = measured_angles.find(v);
      p.angles[v] = it == measured_angles.end() ? Angle() : it->second;
    }
  }
  p.flow = flow_for_grid(rows, cols);
  for (int r = 0; r < rows; ++r) {
    p.inputs.push_back(Graph::grid_vertex(r, 0));
    p.outputs.push_back(Graph::grid_vertex(r, cols - 1));
  }
  p.validate();
  return p;
}

std::map<QubitLabel, QubitLabel> flow_for_path(int n) {
  std::map<QubitLabel, QubitLabel> f;
  for (int i = 1; i < n; ++i) {
    f["v" + std::to_string(i)] = "v" + std::to_string(i + 1);
  }
  return f;
}

std::map<QubitLabel, QubitLabel> flow_for_grid(int rows, int cols) {
  std::map<QubitLabel, QubitLabel> f;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c + 1 < cols; ++c) {
      f[Graph::grid_vertex(r, c)] = Graph::grid_vertex(r, c + 1);
    }
  }
  return f;
}

namespace {

PureState prepared_register(const MeasurementPattern& p, const PureState& input) {
  require(input.labels().size() == p.inputs.size(), "input register size mismatch");
  std::vector<PureState> parts;
  if (!p.inputs.empty()) parts.push_back(input.reordered(p.inputs));
  for (const auto& v : p.graph.vertices()) {
    if (std::find(p.inputs.begin(), p.inputs.end(), v) == p.inputs.end()) {
      parts.push_back(PureState::plus(v));
    }
  }
  PureState state = tensor(parts);
  entangle_graph(state, p.graph);
  return state;
}

void apply_output_corrections(const MeasurementPattern& p,
                              const std::map<QubitLabel, int>& outcomes, PureState& state) {
  for (const auto& o : p.outputs) {
    int sx = 0, sz = 0;
    for (const auto& m : p.x_dependencies(o)) sx ^= outcomes.at(m);
    for (const auto& m : p.z_dependencies(o)) sz ^= outcomes.at(m);
    if (sx) state.apply_x(o);
    if (sz) state.apply_z(o);
  }
}

void run_branches_rec(const MeasurementPattern& p, size_t step, PureState state,
                      std::map<QubitLabel, int>& outcomes, double prob,
                      std::vector<PatternBranch>& out) {
  if (step == p.order.size()) {
    apply_output_corrections(p, outcomes, state);
    PatternBranch br;
    br.outcomes = outcomes;
    br.probability = prob;
    br.output = state.reordered(p.outputs);
    out.push_back(std::move(br));
    return;
  }
  const QubitLabel& v = p.order[step];
  int sx = 0, sz = 0;
  for (const auto& m : p.x_dependencies(v)) sx ^= outcomes.at(m);
  for (const auto& m : p.z_dependencies(v)) sz ^= outcomes.at(m);
  const Angle delta = adapt_angle(p.angles.at(v), sx, sz);
  for (auto& br : state.measure_xy(v, delta)) {
    if (br.zero_probability) continue;
    outcomes[v] = br.outcome;
    run_branches_rec(p, step + 1, std::move(br.state), outcomes, prob * br.probability, out);
    outcomes.erase(v);
  }
}

}  // namespace

std::vector<PatternBranch> run_pattern_branches(const MeasurementPattern& p,
                                                const PureState& input) {
  p.validate();
  std::vector<PatternBranch> out;
  std::map<QubitLabel, int> outcomes;
  run_branches_rec(p, 0, prepared_register(p, input), outcomes, 1.0, out);
  return out;
}

MixedState run_pattern_local(const MeasurementPattern& p, const PureState& input) {
  MixedState avg;
  for (const auto& br : run_pattern_branches(p, input)) {
    avg.accumulate(br.output, br.probability);
  }
  return avg;
}

Eigen::MatrixXcd pattern_unitary(const MeasurementPattern& p) {
  p.validate();
  require(p.inputs.size() <= 3, "pattern_unitary is limited to 3 input qubits");
  require(p.inputs.size() == p.outputs.size(), "pattern must preserve register size");

  // Feed half of a maximally entangled pair per input qubit; a single
  // corrected branch then encodes the full unitary up to global phase.
  std::vector<PureState> pairs;
  std::vector<QubitLabel> refs;
  for (const auto& in : p.inputs) {
    const QubitLabel ref = "ref@" + in;
    refs.push_back(ref);
    PureState bell({ref, in}, {cdouble{0.7071067811865475, 0}, 0, 0,
                               cdouble{0.7071067811865475, 0}});
    pairs.push_back(std::move(bell));
  }
  PureState probe = tensor(pairs);

  // Run on the joint register: pattern vertices plus untouched references.
  MeasurementPattern joint = p;
  for (const auto& r : refs) joint.graph.add_vertex(r);
  std::vector<QubitLabel> joint_inputs = refs;
  joint_inputs.insert(joint_inputs.end(), p.inputs.begin(), p.inputs.end());
  joint.inputs = joint_inputs;
  joint.outputs = refs;
  joint.outputs.insert(joint.outputs.end(), p.outputs.begin(), p.outputs.end());

  const auto branches = run_pattern_branches(joint, probe);
  require(!branches.empty(), "pattern produced no branches");
  const PatternBranch* pick = &branches[0];
  for (const auto& br : branches) {
    if (br.probability > pick->probability) pick = &br;
  }

  const auto d = Eigen::Index{1} << p.inputs.size();
  Eigen::MatrixXcd u(d, d);
  const double scale = std::sqrt(static_cast<double>(d));
  const auto& amps = pick->output.amplitudes();
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      u(j, i) = scale * amps[static_cast<size_t>(i) * d + j];
    }
  }
  const double unitarity = (u * u.adjoint() - Eigen::MatrixXcd::Identity(d, d)).norm();
  require(unitarity < 1e-10, "pattern is not deterministic (result not unitary)");
  return u;
}

}  // namespace dqclab
