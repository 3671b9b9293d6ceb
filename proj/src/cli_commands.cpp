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

#include "dqclab/cli_commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dqclab/acceptance.hpp"
#include "dqclab/corpus.hpp"
#include "dqclab/errors.hpp"
#include "dqclab/protocol3.hpp"
#include "dqclab/resources.hpp"
#include "dqclab/rsp.hpp"
#include "dqclab/stab_test.hpp"
#include "dqclab/sweep.hpp"
#include "dqclab/trap_rm.hpp"
#include "dqclab/ubqc.hpp"

namespace dqclab {

std::string Transcript::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& e : entries) {
    j.push_back({{"round", e.round},
                 {"from_interface", e.from},
                 {"to_interface", e.to},
                 {"kind", e.kind},
                 {"payload", e.payload}});
  }
  return j.dump();
}

}  // namespace dqclab

namespace dqclab::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& out_path, const std::string& text, std::ostream& os) {
  if (out_path.empty()) {
    os << text << '\n';
  } else {
    std::ofstream out(out_path);
    require(out.good(), "cannot write file: " + out_path);
    out << text;
  }
}

Graph parse_graph(const std::string& spec) {
  return Graph::from_json(resolve_graph_spec(spec));
}

PauliString parse_pauli(const nlohmann::json& j) {
  PauliString p;
  for (const auto& [label, letter] : j.items()) {
    p.set(label, letter_from_char(letter.get<std::string>().at(0)));
  }
  return p;
}

PauliAttack parse_attack(const nlohmann::json& j) {
  PauliAttack attack;
  const std::string stage = j.value("stage", "before-entangling");
  if (stage == "before-entangling") {
    attack.stage = AttackStage::BeforeEntangling;
  } else if (stage == "after-entangling") {
    attack.stage = AttackStage::AfterEntangling;
  } else if (stage == "per-node-before-send") {
    attack.stage = AttackStage::PerNodeBeforeSend;
  } else {
    fail("unknown attack stage: " + stage);
  }
  attack.op = parse_pauli(j.at("letters"));
  return attack;
}

PureState parse_input_state(const nlohmann::json& j) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "zero") return PureState::zero("in");
    if (name == "one") return PureState::one("in");
    if (name == "plus") return PureState::plus("in");
    if (name == "minus") return PureState::minus("in");
    fail("unknown input state: " + name);
  }
  require(j.is_array() && j.size() == 4, "input state must be [re0, im0, re1, im1]");
  PureState psi({"in"}, {cdouble{j[0].get<double>(), j[1].get<double>()},
                         cdouble{j[2].get<double>(), j[3].get<double>()}});
  psi.renormalize();
  return psi;
}

MeasurementPattern default_p3_pattern(int x0, int x1) {
  MeasurementPattern p;
  p.graph = Graph::path(3);
  p.order = {"v1", "v2", "v3"};
  p.angles["v1"] = Angle::units(8 * x0);
  p.angles["v2"] = Angle::units(8 * x1);
  p.angles["v3"] = Angle();
  p.flow = flow_for_path(3);
  p.inputs = {};
  p.outputs = {};
  p.validate();
  return p;
}

SystemSpec build_rsp_system(const nlohmann::json& cfg, const std::string& simulator) {
  const int n = cfg.value("n", 3);
  const int k = cfg.value("k", 1);
  const bool ideal = cfg.value("resource", "") == "rsp";
  std::set<int> dishonest;
  bool server_dishonest = false;
  if (cfg.contains("dishonest")) {
    for (const auto& d : cfg.at("dishonest")) {
      if (d.is_string() && d.get<std::string>() == "server") {
        server_dishonest = true;
      } else {
        dishonest.insert(d.get<int>());
      }
    }
  }
  if (!ideal) {
    return server_dishonest ? rsp_real_dishonest_server(n, k)
                            : rsp_real_dishonest_clients(n, k, dishonest);
  }
  if (simulator == "server") return rsp_ideal_sim_server(n, k);
  if (simulator == "clients") return rsp_ideal_sim_clients(n, k, dishonest);
  require(simulator == "none", "unknown simulator: " + simulator);
  // Stub at the dishonest interfaces: same shape as the real system but the
  // simulator does nothing useful, so the distinguisher should win.
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
  Converter stub{"stub", [n, k, dishonest](const SystemSpec& inner) {
    SystemSpec out;
    (void)n;
    (void)k;
    out.classical_input_names = {"Ck.theta"};
    out.classical_input_arity = {8};
    for (int j : dishonest) {
      out.classical_input_names.push_back("C" + std::to_string(j) + ".theta");
      out.classical_input_arity.push_back(8);
      out.classical_input_names.push_back("C" + std::to_string(j) + ".r");
      out.classical_input_arity.push_back(2);
    }
    for (int j : dishonest) out.quantum_outputs.push_back("psi" + std::to_string(j));
    out.quantum_outputs.insert(out.quantum_outputs.end(), inner.quantum_outputs.begin(),
                               inner.quantum_outputs.end());
    out.run = [inner, dishonest](const std::vector<int>& cin, Chooser& chooser,
                                 PureState& state, std::vector<int>& cout) {
      std::vector<int> inner_cin(inner.classical_input_arity.size(), 0);
      inner_cin[0] = cin[0];
      std::vector<PureState> wires{state};
      for (int j : dishonest) {
        wires.push_back(PureState::zero("psi" + std::to_string(j)));
        wires.push_back(PureState::zero("rho" + std::to_string(j)));
      }
      state = tensor(wires);
      inner.run(inner_cin, chooser, state, cout);
    };
    return out;
  }};
  return compose(stub, filtered);
}

}  // namespace

std::string resolve_graph_spec(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') return read_file(spec.substr(1));
  for (const auto& named : graph_corpus()) {
    if (named.name == spec) return named.graph.to_json();
  }
  return spec;  // inline JSON
}

int cmd_run(const std::string& config_text, std::optional<uint64_t> seed_override,
            const std::optional<std::string>& mode_override, const std::string& out_path,
            bool emit_json, std::ostream& os) {
  try {
    const auto cfg = nlohmann::json::parse(config_text);
    const std::string protocol = cfg.at("protocol").get<std::string>();
    const std::string mode =
        mode_override.value_or(cfg.value("mode", std::string("enumerate")));
    const uint64_t seed = seed_override.value_or(cfg.value("seed", 0ULL));
    require(mode == "sample" || mode == "enumerate", "mode must be sample or enumerate");
    require(mode != "sample" || seed_override.has_value() || cfg.contains("seed"),
            "sample mode needs a seed");
    DetRng rng(seed);

    nlohmann::json result;
    bool accepted = true;

    if (protocol == "rsp") {
      const int n = cfg.value("n", 3);
      const int k = cfg.value("k", 1);
      const Angle theta = Angle::units(cfg.value("theta", 0));
      if (mode == "sample") {
        auto run = rsp_run_sampled(n, k, theta, rng);
        accepted = true;
        result["output_state_fingerprint"] = run.output_fingerprint;
        result["transcript"] = nlohmann::json::parse(run.transcript.to_json());
      } else {
        auto report = rsp_correctness(n, theta);
        accepted = report.min_fidelity >= 1.0 - 1e-10;
        result["branches"] = report.branches;
        result["min_fidelity"] = report.min_fidelity;
        result["output_state_fingerprint"] =
            PureState::plus_angle("S", theta).fingerprint();
      }
    } else if (protocol == "protocol1") {
      const int vertices = cfg.value("base_vertices", 2);
      std::vector<Angle> angles;
      if (cfg.contains("angles")) {
        for (const auto& a : cfg.at("angles")) angles.push_back(Angle::units(a.get<int>()));
      } else {
        for (int i = 0; i + 1 < vertices; ++i) angles.push_back(Angle::units(2));
      }
      const PureState input =
          cfg.contains("input") ? parse_input_state(cfg.at("input")) : PureState::plus("in");
      const TrapRmInstance inst = trap_rm_instance(vertices, angles, input);
      std::optional<PauliAttack> attack;
      if (cfg.contains("attack")) attack = parse_attack(cfg.at("attack"));
      if (mode == "sample") {
        auto run = trap_rm_run_sampled(inst, rng, attack);
        accepted = !run.aborted;
        result["output_state_fingerprint"] = run.output_fingerprint;
        result["transcript"] = nlohmann::json::parse(run.transcript.to_json());
      } else if (attack) {
        auto report = trap_rm_simulate_attack(inst, *attack);
        result["p_accept"] = report.p_accept;
        result["p_fail"] = report.p_fail;
        result["bound"] = report.bound_value;
        accepted = true;
      } else {
        auto report = trap_rm_honest_full(inst, {0, 4});
        accepted = report.abort_probability <= 1e-10 &&
                   report.min_output_fidelity >= 1.0 - 1e-10;
        result["colorings"] = report.colorings;
        result["branches"] = report.branches;
        result["abort_probability"] = report.abort_probability;
        result["min_output_fidelity"] = report.min_output_fidelity;
      }
    } else if (protocol == "protocol3") {
      Protocol3Config p3;
      p3.graph = cfg.contains("graph") ? parse_graph(cfg.at("graph").is_string()
                                                         ? cfg.at("graph").get<std::string>()
                                                         : cfg.at("graph").dump())
                                       : Graph::path(3);
      auto coloring = find_two_coloring(p3.graph);
      require(coloring.has_value(), "protocol3 needs a two-colorable graph");
      p3.coloring = *coloring;
      p3.k = cfg.value("k", 1);
      p3.pattern = cfg.contains("pattern")
                       ? MeasurementPattern::from_json(cfg.at("pattern").dump())
                       : default_p3_pattern(cfg.value("x0", 0), cfg.value("x1", 0));
      if (mode == "sample") {
        auto run = protocol3_run_sampled(p3, rng);
        accepted = run.accepted;
        result["output_bits"] = run.output_bits;
        result["transcript"] = nlohmann::json::parse(run.transcript.to_json());
      } else {
        auto report = protocol3_honest(p3);
        accepted = report.always_accept && report.outcome_distribution_distance <= 1e-10;
        result["branches"] = report.branches;
        result["outcome_distribution_distance"] = report.outcome_distribution_distance;
      }
    } else if (protocol == "ubqc_ps" || protocol == "blind_rm") {
      MeasurementPattern pattern;
      if (cfg.contains("pattern")) {
        pattern = MeasurementPattern::from_json(cfg.at("pattern").dump());
      } else {
        std::vector<Angle> angles{Angle::units(cfg.value("phi", 2))};
        pattern = MeasurementPattern::path(angles);
      }
      if (mode == "sample") {
        auto run = protocol == "ubqc_ps" ? ubqc_ps_run_sampled(pattern, rng)
                                         : blind_rm_run_sampled(pattern, rng);
        accepted = run.accepted;
        result["output_state_fingerprint"] = run.output_fingerprint;
        result["transcript"] = nlohmann::json::parse(run.transcript.to_json());
      } else {
        auto report =
            protocol == "ubqc_ps" ? ubqc_ps_honest(pattern) : blind_rm_honest(pattern);
        accepted = report.min_fidelity >= 1.0 - 1e-10;
        result["branches"] = report.branches;
        result["min_fidelity"] = report.min_fidelity;
      }
    } else {
      fail("unknown protocol: " + protocol);
    }

    result["accepted"] = accepted;
    result["protocol"] = protocol;
    result["mode"] = mode;
    result["seed"] = seed;
    write_output(out_path, emit_json ? result.dump() : result.dump(2), os);
    return accepted ? kExitAccept : kExitAbort;
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "config parse error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}

int cmd_distinguish(const std::string& real_text, const std::string& ideal_text,
                    const std::string& simulator, const std::string& out_path, bool emit_json,
                    std::ostream& os) {
  try {
    const auto real_cfg = nlohmann::json::parse(real_text);
    const auto ideal_cfg = nlohmann::json::parse(ideal_text);
    SystemSpec real_sys, ideal_sys;
    const std::string system = real_cfg.value("system", "rsp");
    if (system == "rsp") {
      real_sys = build_rsp_system(real_cfg, "");
      ideal_sys = build_rsp_system(ideal_cfg, simulator);
    } else if (system == "stab") {
      const Graph g = parse_graph(real_cfg.at("graph").is_string()
                                      ? real_cfg.at("graph").get<std::string>()
                                      : real_cfg.at("graph").dump());
      const PauliString element =
          real_cfg.contains("generator")
              ? stabilizer_generator(g, real_cfg.at("generator").get<std::string>())
              : parse_pauli(real_cfg.at("element"));
      real_sys = stab_ps_client_system(g, element);
      ideal_sys = stab_rm_sigma_system(g, element);
    } else {
      fail("unknown system: " + system);
    }
    const double eps = distinguishability(real_sys, ideal_sys);
    const bool pass = eps <= kEpsilonPass;
    nlohmann::json result{{"epsilon", eps}, {"verdict", pass ? "PASS" : "FAIL"}};
    write_output(out_path, emit_json ? result.dump() : result.dump(2), os);
    os << "epsilon = " << eps << " -> " << (pass ? "PASS" : "FAIL") << '\n';
    return pass ? kExitAccept : kExitAbort;
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "config parse error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}

int cmd_bound(const std::string& graph_spec, int max_weight, const std::string& out_path,
              bool emit_json, std::ostream& os) {
  try {
    int vertices = 2;
    if (!graph_spec.empty()) {
      const Graph g = parse_graph(graph_spec);
      vertices = static_cast<int>(g.vertices().size());
      // Only path bases are executed; reject anything else loudly.
      require(g.edges().size() + 1 == g.vertices().size(),
              "bound sweeps run on path base graphs");
    }
    std::vector<Angle> angles;
    for (int i = 0; i + 1 < vertices; ++i) angles.push_back(Angle::units(2));
    const TrapRmInstance inst = trap_rm_instance(vertices, angles, PureState::zero("in"));

    SweepResult sweep;
    if (max_weight >= 1) {
      sweep = run_class_e_sweep(inst, max_weight);
    }
    const bool pass = sweep.max_p_fail <= 8.0 / 9.0 + 1e-10 &&
                      sweep.max_bound <= 8.0 / 9.0 + 1e-10 && sweep.simulation_below_bound;
    std::ostringstream summary;
    summary.precision(12);
    summary << "max p_fail = " << sweep.max_p_fail << " (attack " << sweep.argmax_fail
            << "), max bound = " << sweep.max_bound << " (attack " << sweep.argmax_bound
            << "), bound 8/9: " << (pass ? "PASS" : "FAIL");
    if (!out_path.empty()) write_output(out_path, sweep_to_csv(sweep), os);
    if (emit_json) {
      nlohmann::json j{{"rows", sweep.rows.size()},
                       {"max_p_fail", sweep.max_p_fail},
                       {"max_bound", sweep.max_bound},
                       {"verdict", pass ? "PASS" : "FAIL"}};
      os << j.dump() << '\n';
    }
    os << summary.str() << '\n';
    return pass ? kExitAccept : kExitAbort;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}

int cmd_stabcheck(const std::string& graph_spec, bool generators_only,
                  const std::string& out_path, bool emit_json, std::ostream& os) {
  try {
    const Graph g = parse_graph(graph_spec);
    require(g.vertices().size() <= 6 || generators_only,
            "full-group checks are capped at 6 vertices; pass --generators-only");
    const auto coloring = find_two_coloring(g);
    if (!coloring) {
      os << "graph is not two-colorable; pattern tests skipped, element tests run\n";
    }

    bool all_pass = true;
    nlohmann::json lines = nlohmann::json::array();
    std::vector<PauliString> elements;
    std::vector<std::string> names;
    if (generators_only || g.vertices().size() > 6) {
      for (const auto& v : g.vertices()) {
        elements.push_back(stabilizer_generator(g, v));
        names.push_back("g[" + v + "]");
      }
    } else {
      const auto& vs = g.vertices();
      for (size_t mask = 1; mask < (size_t{1} << vs.size()); ++mask) {
        std::set<QubitLabel> subset;
        for (size_t i = 0; i < vs.size(); ++i) {
          if (mask & (size_t{1} << i)) subset.insert(vs[i]);
        }
        elements.push_back(stabilizer_element(g, subset));
        names.push_back("element[" + std::to_string(mask) + "]");
      }
    }
    for (size_t i = 0; i < elements.size(); ++i) {
      const double rm =
          stab_honest_reject_probability(StabTestKind::ReceiveMeasure, g, elements[i]);
      const double ps =
          stab_honest_reject_probability(StabTestKind::PrepareSend, g, elements[i]);
      bool ok = rm <= 1e-10 && ps <= 1e-10;
      // Weight-1 equivalence under attack.
      double max_gap = 0;
      for (const auto& v : g.vertices()) {
        for (PauliLetter l : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z}) {
          const PauliString attack = PauliString::single(v, l);
          const double d_rm =
              detection_probability(StabTestKind::ReceiveMeasure, g, elements[i], attack);
          const double d_ps =
              detection_probability(StabTestKind::PrepareSend, g, elements[i], attack);
          max_gap = std::max(max_gap, std::abs(d_rm - d_ps));
        }
      }
      ok = ok && max_gap <= 1e-10;
      all_pass = all_pass && ok;
      os << names[i] << ": " << (ok ? "PASS" : "FAIL") << " (honest rm=" << rm
         << ", ps=" << ps << ", max detection gap=" << max_gap << ")\n";
      lines.push_back({{"element", names[i]}, {"pass", ok}, {"gap", max_gap}});
    }
    if (!out_path.empty()) write_output(out_path, lines.dump(2), os);
    if (emit_json) os << lines.dump() << '\n';
    return all_pass ? kExitAccept : kExitAbort;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}

int cmd_selftest(const std::string& only, const std::string& out_path, bool emit_json,
                 std::ostream& os) {
  try {
    std::set<int> which;
    if (!only.empty()) {
      std::istringstream is(only);
      std::string token;
      while (std::getline(is, token, ',')) which.insert(std::stoi(token));
    }
    const auto results = acceptance::run_criteria(which, os);
    bool all = true;
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : results) {
      all = all && r.passed;
      j.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.passed}, {"note", r.note}});
    }
    if (!out_path.empty()) write_output(out_path, j.dump(2), os);
    if (emit_json) os << j.dump() << '\n';
    return all ? kExitAccept : kExitAbort;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace dqclab::cli
