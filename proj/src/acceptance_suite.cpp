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

#include "dqclab/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "dqclab/cli_commands.hpp"
#include "dqclab/corpus.hpp"
#include "dqclab/protocol3.hpp"
#include "dqclab/resources.hpp"
#include "dqclab/rsp.hpp"
#include "dqclab/stab_test.hpp"
#include "dqclab/sweep.hpp"
#include "dqclab/trap_rm.hpp"
#include "dqclab/ubqc.hpp"

namespace dqclab::acceptance {

namespace {

constexpr double kTolAccept = 1e-10;

std::vector<std::set<QubitLabel>> all_subsets(const std::vector<QubitLabel>& vs) {
  std::vector<std::set<QubitLabel>> out;
  for (size_t mask = 0; mask < (size_t{1} << vs.size()); ++mask) {
    std::set<QubitLabel> s;
    for (size_t i = 0; i < vs.size(); ++i) {
      if (mask & (size_t{1} << i)) s.insert(vs[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

// 1. Every stabilizer element fixes its graph state; every element has an
//    even number of Y letters.
CriterionResult criterion_stabilizer_suite() {
  CriterionResult r{1, "graph-state stabilizer suite", true, "", 0};
  double worst = 0;
  for (const auto& named :
       std::vector<std::string>{"path5", "cycle6", "star5", "grid2x3", "random5a",
                                "random5b", "random5c"}) {
    Graph g;
    for (const auto& entry : graph_corpus()) {
      if (entry.name == named) g = entry.graph;
    }
    const PureState psi = graph_state(g);
    for (const auto& subset : all_subsets(g.vertices())) {
      const PauliString element = stabilizer_element(g, subset);
      PureState fixed = psi;
      fixed.apply_pauli(element);
      double diff = 0;
      for (size_t i = 0; i < psi.amplitudes().size(); ++i) {
        diff += std::norm(fixed.amplitudes()[i] - psi.amplitudes()[i]);
      }
      worst = std::max(worst, std::sqrt(diff));
      int y_count = 0;
      for (const auto& [q, l] : element.letters()) {
        if (l == PauliLetter::Y) ++y_count;
      }
      if (y_count % 2 != 0) r.passed = false;
    }
  }
  if (worst > kTolAccept) r.passed = false;
  std::ostringstream os;
  os << "max ||g|G> - |G>|| = " << worst;
  r.note = os.str();
  return r;
}

// 2. Honest servers are never rejected by either stabilizer test.
CriterionResult criterion_honest_stab_tests() {
  CriterionResult r{2, "stabilizer-test honest acceptance", true, "", 0};
  double worst = 0;
  for (const auto& entry : graph_corpus_up_to(6)) {
    for (const auto& v : entry.graph.vertices()) {
      const PauliString gen = stabilizer_generator(entry.graph, v);
      worst = std::max(worst, stab_honest_reject_probability(StabTestKind::ReceiveMeasure,
                                                             entry.graph, gen));
      worst = std::max(worst, stab_honest_reject_probability(StabTestKind::PrepareSend,
                                                             entry.graph, gen));
    }
  }
  r.passed = worst <= kTolAccept;
  std::ostringstream os;
  os << "max honest reject probability = " << worst;
  r.note = os.str();
  return r;
}

// 3. Detection probabilities agree between the RM test and its PS
//    translation for every weight-1 deviation.
CriterionResult criterion_rm_ps_equivalence() {
  CriterionResult r{3, "RM<->PS equivalence under attack", true, "", 0};
  double worst = 0;
  for (const auto& entry : graph_corpus_up_to(5)) {
    for (const auto& v : entry.graph.vertices()) {
      const PauliString gen = stabilizer_generator(entry.graph, v);
      for (const auto& w : entry.graph.vertices()) {
        for (PauliLetter l : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z}) {
          const PauliString attack = PauliString::single(w, l);
          const double rm =
              detection_probability(StabTestKind::ReceiveMeasure, entry.graph, gen, attack);
          const double ps =
              detection_probability(StabTestKind::PrepareSend, entry.graph, gen, attack);
          worst = std::max(worst, std::abs(rm - ps));
        }
      }
    }
  }
  r.passed = worst <= kTolAccept;
  std::ostringstream os;
  os << "max |RM - PS| detection gap = " << worst;
  r.note = os.str();
  return r;
}

// 4. The PS client channel equals the RM' client composed with sigma_S.
CriterionResult criterion_sigma_s_equality() {
  CriterionResult r{4, "sigma_S simulator equality", true, "", 0};
  double worst = 0;
  for (int n : {2, 3}) {
    const Graph g = Graph::path(n);
    for (const auto& v : g.vertices()) {
      const PauliString gen = stabilizer_generator(g, v);
      const double eps = channel_distance(extract_channel(stab_ps_client_system(g, gen)),
                                          extract_channel(stab_rm_sigma_system(g, gen)));
      worst = std::max(worst, eps);
    }
  }
  r.passed = worst <= kTolAccept;
  std::ostringstream os;
  os << "max Choi trace distance = " << worst;
  r.note = os.str();
  return r;
}

// 5. RSP outputs |+^theta> on every branch.
CriterionResult criterion_rsp_correctness() {
  CriterionResult r{5, "RSP correctness", true, "", 0};
  double worst_fid = 1.0;
  long branches = 0;
  for (int n : {2, 3}) {
    for (int t = 0; t < 8; ++t) {
      const auto report = rsp_correctness(n, Angle::units(t));
      worst_fid = std::min(worst_fid, report.min_fidelity);
      branches += report.branches;
    }
  }
  r.passed = worst_fid >= 1.0 - kTolAccept;
  std::ostringstream os;
  os << "min branch fidelity = " << worst_fid << " over " << branches << " branches";
  r.note = os.str();
  return r;
}

// 6. Real RSP vs ideal + Simulator 1 with one dishonest client.
CriterionResult criterion_rsp_sim_clients() {
  CriterionResult r{6, "RSP epsilon=0 vs dishonest clients", true, "", 0};
  double worst = 0;
  for (int j : {2, 3}) {
    const double eps = distinguishability(rsp_real_dishonest_clients(3, 1, {j}),
                                          rsp_ideal_sim_clients(3, 1, {j}));
    worst = std::max(worst, eps);
  }
  r.passed = worst <= kTolAccept;
  std::ostringstream os;
  os << "max epsilon = " << worst;
  r.note = os.str();
  return r;
}

// 7. Real RSP vs ideal + Simulator 2 with a dishonest server.
CriterionResult criterion_rsp_sim_server() {
  CriterionResult r{7, "RSP epsilon=0 vs dishonest server", true, "", 0};
  const double eps =
      distinguishability(rsp_real_dishonest_server(2, 1), rsp_ideal_sim_server(2, 1));
  r.passed = eps <= kTolAccept;
  std::ostringstream os;
  os << "epsilon = " << eps;
  r.note = os.str();
  return r;
}

// 8. Trap-based verification accepts an honest server on every branch and
//    reproduces the pattern unitary.
CriterionResult criterion_protocol1_correctness() {
  CriterionResult r{8, "trap-verification honest correctness", true, "", 0};
  const PureState input({"in"}, {cdouble{0.5773502691896258, 0},
                                 cdouble{0.5773502691896257, 0.5773502691896257}});
  double worst_fid = 1.0;
  double worst_abort = 0.0;
  bool identity_ok = true;
  {
    const auto inst = trap_rm_instance(1, {}, input);
    const auto report = trap_rm_honest_full(inst);
    worst_fid = std::min(worst_fid, report.min_output_fidelity);
    worst_abort = std::max(worst_abort, report.abort_probability);
    identity_ok = identity_ok && report.trap_identity_ok;
  }
  {
    const auto inst = trap_rm_instance(2, {Angle::units(2)}, input);
    const auto report = trap_rm_honest_full(inst);
    worst_fid = std::min(worst_fid, report.min_output_fidelity);
    worst_abort = std::max(worst_abort, report.abort_probability);
    identity_ok = identity_ok && report.trap_identity_ok;
  }
  r.passed = worst_abort <= kTolAccept && identity_ok && worst_fid >= 1.0 - kTolAccept;
  std::ostringstream os;
  os << "abort probability = " << worst_abort << ", min output fidelity = " << worst_fid
     << ", trap identity " << (identity_ok ? "holds" : "violated");
  r.note = os.str();
  return r;
}

// 9. Attack sweep: p_fail and the analytic bound stay below 8/9, and the
//    simulation never exceeds the bound.
CriterionResult criterion_verifiability_bound() {
  CriterionResult r{9, "verifiability bound 8/9", true, "", 0};
  const auto inst = trap_rm_instance(2, {Angle::units(2)}, PureState::zero("in"));
  const auto sweep = run_class_e_sweep(inst, 2);
  const double ceiling = 8.0 / 9.0 + kTolAccept;
  double best_bound = 0;
  for (const auto& row : sweep.rows) best_bound = std::max(best_bound, row.bound);
  r.passed = sweep.max_p_fail <= ceiling && sweep.max_bound <= ceiling &&
             sweep.simulation_below_bound && best_bound > 0.5;
  std::ostringstream os;
  os << "max p_fail = " << sweep.max_p_fail << " (" << sweep.argmax_fail
     << "), max bound = " << sweep.max_bound << " (" << sweep.argmax_bound << "), "
     << sweep.rows.size() << " attacks, sim<=bound "
     << (sweep.simulation_below_bound ? "yes" : "NO");
  r.note = os.str();
  return r;
}

// 10. Server-side marginals are identical across client secrets.
CriterionResult criterion_blindness_marginals() {
  CriterionResult r{10, "blindness marginals", true, "", 0};
  double worst = 0;

  auto p3_pattern = [](int k1, int k2, int k3) {
    MeasurementPattern p;
    p.graph = Graph::path(3);
    p.order = {"v1", "v2", "v3"};
    p.angles["v1"] = Angle::units(k1);
    p.angles["v2"] = Angle::units(k2);
    p.angles["v3"] = Angle::units(k3);
    p.flow = flow_for_path(3);
    p.validate();
    return p;
  };
  const auto view_a = extract_channel(ubqc_ps_view_system(p3_pattern(0, 2, 4)));
  const auto view_b = extract_channel(ubqc_ps_view_system(p3_pattern(7, 8, 13)));
  worst = std::max(worst, channel_distance(view_a, view_b));

  Protocol3Config cfg;
  cfg.graph = Graph::path(3);
  cfg.coloring = *find_two_coloring(cfg.graph);
  cfg.k = 1;
  cfg.pattern = p3_pattern(8, 0, 0);
  const auto t1 = extract_channel(protocol3_round_view_system(cfg, RoundKind::TestBlackZ));
  const auto t2 = extract_channel(protocol3_round_view_system(cfg, RoundKind::TestWhiteZ));
  const auto c0 = extract_channel(protocol3_round_view_system(cfg, RoundKind::Compute));
  Protocol3Config cfg_other = cfg;
  cfg_other.pattern = p3_pattern(0, 8, 0);
  const auto c1 =
      extract_channel(protocol3_round_view_system(cfg_other, RoundKind::Compute));
  worst = std::max(worst, channel_distance(t1, t2));
  worst = std::max(worst, channel_distance(t1, c0));
  worst = std::max(worst, channel_distance(c0, c1));

  r.passed = worst <= kTolAccept;
  std::ostringstream os;
  os << "max view distance = " << worst;
  r.note = os.str();
  return r;
}

// 11. I/X-only deviations (no X on the input row) never corrupt an accepted
//     output.
CriterionResult criterion_non_contribution() {
  CriterionResult r{11, "I/X non-contribution", true, "", 0};
  const auto inst = trap_rm_instance(2, {Angle::units(2)}, PureState::zero("in"));
  const auto sweep = run_ix_sweep(inst, 2);
  r.passed = sweep.max_p_fail <= 1e-12;
  std::ostringstream os;
  os << "max p_fail over " << sweep.rows.size() << " I/X words = " << sweep.max_p_fail;
  r.note = os.str();
  return r;
}

// 12. Byte-identical transcripts for a fixed seed.
CriterionResult criterion_determinism() {
  CriterionResult r{12, "transcript determinism", true, "", 0};
  const std::string config =
      R"({"protocol":"rsp","n":3,"k":1,"theta":3,"seed":7,"mode":"sample"})";
  std::vector<std::string> outputs;
  for (int rep = 0; rep < 3; ++rep) {
    std::ostringstream os;
    const int code = cli::cmd_run(config, std::nullopt, std::nullopt, "", true, os);
    if (code != cli::kExitAccept) r.passed = false;
    outputs.push_back(os.str());
  }
  if (outputs[0] != outputs[1] || outputs[1] != outputs[2]) r.passed = false;
  r.note = r.passed ? "3 repetitions byte-identical" : "transcripts differ";
  return r;
}

}  // namespace

std::vector<CriterionResult> run_criteria(const std::set<int>& which, std::ostream& os) {
  using CriterionFn = CriterionResult (*)();
  const CriterionFn criteria[kCriterionCount] = {
      criterion_stabilizer_suite,      criterion_honest_stab_tests,
      criterion_rm_ps_equivalence,     criterion_sigma_s_equality,
      criterion_rsp_correctness,       criterion_rsp_sim_clients,
      criterion_rsp_sim_server,        criterion_protocol1_correctness,
      criterion_verifiability_bound,   criterion_blindness_marginals,
      criterion_non_contribution,      criterion_determinism,
  };
  std::vector<CriterionResult> results;
  for (int i = 0; i < kCriterionCount; ++i) {
    if (!which.empty() && !which.count(i + 1)) continue;
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r = criteria[i]();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    os << "[criterion " << r.id << "] " << (r.passed ? "PASS" : "FAIL") << " — " << r.name
       << " (" << r.note << ", " << r.seconds << " s)\n";
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace dqclab::acceptance
