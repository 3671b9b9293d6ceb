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

#include "dqclab/trap_rm.hpp"

#include <algorithm>
#include <functional>

#include "dqclab/errors.hpp"

namespace dqclab {

namespace {

/// Per-coloring layout: the computation path (C copies and dots) in
/// measurement order, the traps, the dummies, and the input-row roles.
struct ColoringPlan {
  TrapColoring coloring;
  std::vector<QubitLabel> comp_path;  // last entry is the output node
  std::vector<Angle> comp_angles;     // per measured path node
  std::vector<QubitLabel> traps;
  std::vector<QubitLabel> dummies;
  QubitLabel input_node, input_trap, input_dummy;
};

QubitLabel find_role_copy(const DottedTripleGraph& dtg, const TrapColoring& col,
                          const QubitLabel& base_vertex, NodeRole role) {
  for (const auto& copy : dtg.primary.at(base_vertex)) {
    if (col.role(copy) == role) return copy;
  }
  fail("no copy with the requested role");
}

ColoringPlan make_plan(const TrapRmInstance& inst, const DottedTripleGraph& dtg,
                       const TrapColoring& col) {
  ColoringPlan plan;
  plan.coloring = col;
  for (size_t i = 0; i < inst.base_order.size(); ++i) {
    const QubitLabel& v = inst.base_order[i];
    const QubitLabel c = find_role_copy(dtg, col, v, NodeRole::Computation);
    plan.comp_path.push_back(c);
    if (i + 1 < inst.base_order.size()) {
      plan.comp_angles.push_back(inst.base_angles.at(v));
      // The dot between consecutive computation copies.
      const QubitLabel& w = inst.base_order[i + 1];
      const QubitLabel cw = find_role_copy(dtg, col, w, NodeRole::Computation);
      QubitLabel dot;
      for (const auto& n : dtg.graph.neighbors(c)) {
        if (col.role(n) == NodeRole::Computation && dtg.graph.has_edge(n, cw)) dot = n;
      }
      require(!dot.empty(), "missing dot between computation copies");
      plan.comp_path.push_back(dot);
      plan.comp_angles.push_back(Angle());
    }
  }
  for (const auto& n : dtg.graph.vertices()) {
    if (col.traps.count(n)) plan.traps.push_back(n);
    if (col.dummies.count(n)) plan.dummies.push_back(n);
  }
  const QubitLabel& in_base = inst.base_order.front();
  plan.input_node = find_role_copy(dtg, col, in_base, NodeRole::Computation);
  plan.input_trap = find_role_copy(dtg, col, in_base, NodeRole::Trap);
  plan.input_dummy = find_role_copy(dtg, col, in_base, NodeRole::Dummy);
  return plan;
}

int dummy_parity(const DottedTripleGraph& dtg, const TrapColoring& col,
                 const std::map<QubitLabel, int>& r_d, const QubitLabel& node) {
  int parity = 0;
  for (const auto& n : dtg.graph.neighbors(node)) {
    if (col.dummies.count(n)) parity ^= r_d.at(n);
  }
  return parity;
}

void apply_letter(PureState& state, const QubitLabel& q, PauliLetter l) {
  switch (l) {
    case PauliLetter::I: return;
    case PauliLetter::X: return state.apply_x(q);
    case PauliLetter::Y: return state.apply_y(q);
    case PauliLetter::Z: return state.apply_z(q);
  }
}

}  // namespace

PauliString conjugate_through_edges(const PauliString& p, const Graph& g) {
  PauliString out;
  out.multiply_phase_power(p.phase_power());
  for (const auto& [n, l] : p.letters()) {
    PauliString piece = PauliString::single(n, l);
    if (l == PauliLetter::X || l == PauliLetter::Y) {
      for (const auto& m : g.neighbors(n)) piece = piece * PauliString::single(m, PauliLetter::Z);
    }
    out = out * piece;
  }
  return out;
}

MeasurementPattern TrapRmInstance::computation_pattern() const {
  // Base vertices interleaved with the dots carrying each base edge.
  std::vector<Angle> interleaved;
  for (size_t i = 0; i + 1 < base_order.size(); ++i) {
    interleaved.push_back(base_angles.at(base_order[i]));
    interleaved.push_back(Angle());  // the dot
  }
  return MeasurementPattern::path(interleaved);
}

PureState TrapRmInstance::honest_output() const {
  const MeasurementPattern p = computation_pattern();
  const Eigen::MatrixXcd u = pattern_unitary(p);
  PureState out = input.relabeled(p.inputs);
  out.apply_operator(p.inputs, {"out"}, u);
  return out;
}

TrapRmInstance trap_rm_instance(int base_vertices, const std::vector<Angle>& angles,
                                const PureState& input) {
  require(base_vertices >= 1, "need at least one base vertex");
  require(static_cast<int>(angles.size()) == base_vertices - 1,
          "one angle per measured base vertex");
  require(input.num_qubits() == 1, "single-qubit input expected");
  TrapRmInstance inst;
  inst.base = Graph::path(base_vertices);
  for (int i = 1; i <= base_vertices; ++i) inst.base_order.push_back("v" + std::to_string(i));
  for (int i = 0; i + 1 < base_vertices; ++i) inst.base_angles[inst.base_order[i]] = angles[i];
  inst.input = input;
  return inst;
}

namespace {

struct FullAccumulator {
  long branches = 0;
  double p_abort = 0;
  double p_accept = 0;
  double p_fail = 0;
  bool trap_identity_ok = true;
  double min_output_fidelity = 1.0;
};

/// One full statevector run for a fixed coloring and pad choice; enumerates
/// every measurement branch in protocol order (dummies, computation, traps).
void run_full_tree(const TrapRmInstance& inst, const DottedTripleGraph& dtg,
                   const ColoringPlan& plan, int a, int b, Angle theta_t, Angle theta_d,
                   const PauliString* attack_pre, const PauliString* attack_post,
                   const PureState& target, double base_weight, FullAccumulator& acc) {
  std::vector<PureState> parts;
  for (const auto& n : dtg.graph.vertices()) {
    if (n == plan.input_node) {
      PureState in = inst.input.relabeled({n});
      if (b) in.apply_z(n);  // X^a Z^b acts with Z first
      if (a) in.apply_x(n);
      parts.push_back(std::move(in));
    } else if (n == plan.input_trap) {
      parts.push_back(PureState::plus_angle(n, theta_t));
    } else if (n == plan.input_dummy) {
      parts.push_back(PureState::plus_angle(n, theta_d));
    } else {
      parts.push_back(PureState::plus(n));
    }
  }
  PureState state = tensor(parts);
  if (attack_pre) state.apply_pauli(*attack_pre);
  entangle_graph(state, dtg.graph);
  if (attack_post) state.apply_pauli(*attack_post);

  std::map<QubitLabel, int> r_d;
  std::vector<int> logical(plan.comp_path.size(), 0);

  std::function<void(PureState, size_t, double)> measure_traps =
      [&](PureState st, size_t idx, double w) {
        if (idx == plan.traps.size()) {
          // Accept branch: correct the output and compare against the target.
          const QubitLabel& out = plan.comp_path.back();
          const size_t m = plan.comp_path.size();
          int sx = 0, sz = 0;
          if (m >= 2) sx = logical[m - 2];
          if (m >= 3) sz = logical[m - 3];
          sz ^= dummy_parity(dtg, plan.coloring, r_d, out);
          // The X part of the one-time pad walks through the entangler as a
          // Z on the input node's neighbors.
          if (a && dtg.graph.has_edge(out, plan.input_node)) sz ^= 1;
          if (sx) st.apply_x(out);
          if (sz) st.apply_z(out);
          if (m == 1) {
            if (a) st.apply_x(out);  // undo the one-time pad on an unmeasured input
            if (b) st.apply_z(out);
          }
          const double fid = fidelity(st.relabeled({"out"}), target);
          acc.p_accept += w;
          acc.p_fail += w * (1.0 - fid);
          acc.min_output_fidelity = std::min(acc.min_output_fidelity, fid);
          ++acc.branches;
          return;
        }
        const QubitLabel& t = plan.traps[idx];
        const Angle delta = t == plan.input_trap ? theta_t : Angle();
        const int expected = dummy_parity(dtg, plan.coloring, r_d, t);
        for (auto& br : st.measure_xy(t, delta)) {
          if (br.zero_probability) continue;
          if (br.outcome != expected) {
            acc.p_abort += w * br.probability;
            acc.trap_identity_ok = false;
            ++acc.branches;
            continue;
          }
          measure_traps(std::move(br.state), idx + 1, w * br.probability);
        }
      };

  std::function<void(PureState, size_t, double)> measure_comp =
      [&](PureState st, size_t idx, double w) {
        if (idx + 1 == plan.comp_path.size()) {
          measure_traps(std::move(st), 0, w);
          return;
        }
        const QubitLabel& node = plan.comp_path[idx];
        int sx = 0, sz = 0;
        if (idx >= 1) sx = logical[idx - 1];
        if (idx >= 2) sz = logical[idx - 2];
        sz ^= dummy_parity(dtg, plan.coloring, r_d, node);
        if (a && dtg.graph.has_edge(node, plan.input_node)) sz ^= 1;
        Angle delta = adapt_angle(plan.comp_angles[idx], sx, sz);
        if (node == plan.input_node) {
          delta = delta.reflected_if(a).plus_pi_if(b);
        }
        for (auto& br : st.measure_xy(node, delta)) {
          if (br.zero_probability) continue;
          logical[idx] = br.outcome;
          measure_comp(std::move(br.state), idx + 1, w * br.probability);
        }
      };

  std::function<void(PureState, size_t, double)> measure_dummies =
      [&](PureState st, size_t idx, double w) {
        if (idx == plan.dummies.size()) {
          measure_comp(std::move(st), 0, w);
          return;
        }
        const QubitLabel& d = plan.dummies[idx];
        for (auto& br : st.measure_z(d)) {
          if (br.zero_probability) continue;
          r_d[d] = br.outcome;
          measure_dummies(std::move(br.state), idx + 1, w * br.probability);
        }
      };

  measure_dummies(std::move(state), 0, base_weight);
}

}  // namespace

TrapRmHonestReport trap_rm_honest_full(const TrapRmInstance& inst,
                                       const std::vector<int>& pad_units) {
  const DottedTripleGraph dtg = dotted_triple_graph(inst.base);
  const auto colorings = enumerate_trap_colorings(dtg, {});
  const PureState target = inst.honest_output();

  FullAccumulator acc;
  const double w_color = 1.0 / static_cast<double>(colorings.size());
  for (const auto& col : colorings) {
    const ColoringPlan plan = make_plan(inst, dtg, col);
    const double w_pad =
        w_color / (4.0 * static_cast<double>(pad_units.size() * pad_units.size()));
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        for (int ut : pad_units) {
          for (int ud : pad_units) {
            run_full_tree(inst, dtg, plan, a, b, Angle::units(ut), Angle::units(ud), nullptr,
                          nullptr, target, w_pad, acc);
          }
        }
      }
    }
  }
  TrapRmHonestReport report;
  report.colorings = static_cast<int>(colorings.size());
  report.branches = acc.branches;
  report.abort_probability = acc.p_abort;
  report.trap_identity_ok = acc.trap_identity_ok;
  report.min_output_fidelity = acc.min_output_fidelity;
  return report;
}

FailReport trap_rm_simulate_attack_full(const TrapRmInstance& inst, const PauliAttack& attack,
                                        const std::vector<int>& pad_units) {
  const DottedTripleGraph dtg = dotted_triple_graph(inst.base);
  const auto colorings = enumerate_trap_colorings(dtg, {});
  const PureState target = inst.honest_output();

  const bool pre = attack.stage == AttackStage::BeforeEntangling;
  FullAccumulator acc;
  const double w_color = 1.0 / static_cast<double>(colorings.size());
  for (const auto& col : colorings) {
    const ColoringPlan plan = make_plan(inst, dtg, col);
    const double w_pad = w_color / (4.0 * static_cast<double>(pad_units.size()));
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        for (int ut : pad_units) {
          // theta_d drops out exactly (a Z-measured XY-plane state has
          // uniform outcomes for every offset), so it is pinned to 0 here.
          run_full_tree(inst, dtg, plan, a, b, Angle::units(ut), Angle(),
                        pre ? &attack.op : nullptr, pre ? nullptr : &attack.op, target, w_pad,
                        acc);
        }
      }
    }
  }
  FailReport report;
  report.p_accept = acc.p_accept;
  report.p_fail = acc.p_fail;
  report.bound_value = trap_rm_bound_expression(
      inst, pre ? attack.op : conjugate_through_edges(attack.op, dtg.graph));
  return report;
}

namespace {

/// Exact run of the residual computation path after the dummy break:
/// single-qubit preparations (already deviated), Z flips from the dummy
/// outcomes, the CZ chain, flow-adapted measurements and output corrections.
void run_comp_path(const std::vector<PureState>& preps, const std::vector<int>& rho,
                   const std::vector<Angle>& angles, int a, int b, const PureState& target,
                   double& fail_contrib) {
  const size_t m = preps.size();
  std::vector<QubitLabel> labels;
  std::vector<PureState> parts;
  for (size_t i = 0; i < m; ++i) {
    const QubitLabel q = "p" + std::to_string(i);
    labels.push_back(q);
    PureState p = preps[i].relabeled({q});
    if (rho[i]) p.apply_z(q);
    parts.push_back(std::move(p));
  }
  PureState state = tensor(parts);
  for (size_t i = 0; i + 1 < m; ++i) state.apply_cz(labels[i], labels[i + 1]);

  std::vector<int> logical(m, 0);
  std::function<void(PureState, size_t, double)> rec = [&](PureState st, size_t idx, double w) {
    if (idx + 1 == m) {
      int sx = 0, sz = 0;
      if (m >= 2) sx = logical[m - 2];
      if (m >= 3) sz = logical[m - 3];
      sz ^= rho[m - 1];  // the client corrects the dummy flips on the output
      if (a && m == 2) sz ^= 1;  // pad X propagated onto the input's neighbor
      if (sx) st.apply_x(labels[m - 1]);
      if (sz) st.apply_z(labels[m - 1]);
      if (m == 1) {
        if (a) st.apply_x(labels[0]);
        if (b) st.apply_z(labels[0]);
      }
      fail_contrib += w * (1.0 - fidelity(st.relabeled({"out"}), target));
      return;
    }
    int sx = 0, sz = 0;
    if (idx >= 1) sx = logical[idx - 1];
    if (idx >= 2) sz = logical[idx - 2];
    sz ^= rho[idx];  // dummy flips fold into the measurement angle
    if (a && idx == 1) sz ^= 1;  // pad X propagated onto the input's neighbor
    Angle delta = adapt_angle(angles[idx], sx, sz);
    if (idx == 0 && m > 1) delta = delta.reflected_if(a).plus_pi_if(b);
    for (auto& br : st.measure_xy(labels[idx], delta)) {
      if (br.zero_probability) continue;
      logical[idx] = br.outcome;
      rec(std::move(br.state), idx + 1, w * br.probability);
    }
  };
  rec(std::move(state), 0, 1.0);
}

/// Mean accept probability of a trap with deviation letter l, averaged over
/// the angle pad (input traps) and conditioned on the dummy parity rho.
double trap_accept(PauliLetter l, bool input_trap, int rho) {
  const std::vector<int> thetas =
      input_trap ? std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7} : std::vector<int>{0};
  double acc = 0;
  for (int u : thetas) {
    const Angle theta = Angle::units(u);
    PureState chi = PureState::plus_angle("t", theta);
    apply_letter(chi, "t", l);
    if (rho) chi.apply_z("t");
    const auto branches = chi.measure_xy("t", theta);
    acc += branches[rho].zero_probability ? 0.0 : branches[rho].probability;
  }
  return acc / static_cast<double>(thetas.size());
}

}  // namespace

FailReport trap_rm_simulate_attack(const TrapRmInstance& inst, const PauliAttack& attack) {
  const DottedTripleGraph dtg = dotted_triple_graph(inst.base);
  const auto colorings = enumerate_trap_colorings(dtg, {});
  const PureState target = inst.honest_output();

  const PauliString deviation = attack.stage == AttackStage::BeforeEntangling
                                    ? attack.op
                                    : conjugate_through_edges(attack.op, dtg.graph);

  FailReport report;
  report.p_accept = 0;
  report.p_fail = 0;
  const double w_color = 1.0 / static_cast<double>(colorings.size());

  for (const auto& col : colorings) {
    const ColoringPlan plan = make_plan(inst, dtg, col);
    const size_t n_path = plan.comp_path.size();
    const size_t n_traps = plan.traps.size();
    const size_t n_targets = n_path + n_traps;

    // GF(2) span of the dummy adjacency vectors over (path nodes, traps).
    std::vector<uint32_t> rows;
    for (const auto& d : plan.dummies) {
      uint32_t v = 0;
      for (size_t i = 0; i < n_path; ++i) {
        if (dtg.graph.has_edge(d, plan.comp_path[i])) v |= 1u << i;
      }
      for (size_t i = 0; i < n_traps; ++i) {
        if (dtg.graph.has_edge(d, plan.traps[i])) v |= 1u << (n_path + i);
      }
      rows.push_back(v);
    }
    std::vector<uint32_t> basis;
    for (uint32_t v : rows) {
      for (uint32_t b : basis) v = std::min(v, v ^ b);
      if (v) basis.push_back(v);
    }
    (void)n_targets;

    // Trap factors per parity value.
    std::vector<std::array<double, 2>> trap_factor(n_traps);
    for (size_t i = 0; i < n_traps; ++i) {
      const QubitLabel& t = plan.traps[i];
      const bool input_trap = t == plan.input_trap;
      for (int rho = 0; rho < 2; ++rho) {
        trap_factor[i][rho] = trap_accept(deviation.at(t), input_trap, rho);
      }
    }

    // Computation-path failure table per pad and parity assignment.
    std::vector<std::vector<double>> path_fail(4, std::vector<double>(size_t{1} << n_path, 0));
    for (int pad = 0; pad < 4; ++pad) {
      const int a = pad & 1, b = pad >> 1;
      for (size_t mask = 0; mask < (size_t{1} << n_path); ++mask) {
        std::vector<PureState> preps;
        std::vector<int> rho(n_path);
        for (size_t i = 0; i < n_path; ++i) {
          const QubitLabel& node = plan.comp_path[i];
          PureState p;
          if (node == plan.input_node) {
            p = inst.input.relabeled({node});
            if (b) p.apply_z(node);
            if (a) p.apply_x(node);
          } else {
            p = PureState::plus(node);
          }
          apply_letter(p, node, deviation.at(node));
          preps.push_back(std::move(p));
          rho[i] = (mask >> i) & 1;
        }
        run_comp_path(preps, rho, plan.comp_angles, a, b, target, path_fail[pad][mask]);
      }
    }

    // Enumerate the parity image; every point has weight 2^-rank.
    const size_t rank = basis.size();
    const double w_img = 1.0 / static_cast<double>(size_t{1} << rank);
    std::vector<uint32_t> points{0};
    for (uint32_t b : basis) {
      const size_t sz = points.size();
      for (size_t i = 0; i < sz; ++i) points.push_back(points[i] ^ b);
    }
    for (uint32_t pt : points) {
      double traps_ok = 1.0;
      for (size_t i = 0; i < n_traps; ++i) {
        traps_ok *= trap_factor[i][(pt >> (n_path + i)) & 1];
      }
      const size_t mask = pt & ((size_t{1} << n_path) - 1);
      double fail_avg = 0;
      for (int pad = 0; pad < 4; ++pad) fail_avg += path_fail[pad][mask];
      fail_avg /= 4.0;
      report.p_accept += w_color * w_img * traps_ok;
      report.p_fail += w_color * w_img * traps_ok * fail_avg;
    }
  }
  report.bound_value = trap_rm_bound_expression(inst, deviation);
  return report;
}

double trap_rm_bound_expression(const TrapRmInstance& inst,
                                const PauliString& attack_before_entangling) {
  const DottedTripleGraph dtg = dotted_triple_graph(inst.base);
  const auto colorings = enumerate_trap_colorings(dtg, {});
  const QubitLabel& in_base = inst.base_order.front();

  double bound = 0;
  for (const auto& col : colorings) {
    const QubitLabel input_trap = find_role_copy(dtg, col, in_base, NodeRole::Trap);
    double product = 1.0;
    for (const auto& t : col.traps) {
      const PauliLetter l = attack_before_entangling.at(t);
      const bool input = t == input_trap;
      // Average of <psi_t| sigma |psi_t>^2 over the trap randomness.
      const std::vector<int> thetas =
          input ? std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7} : std::vector<int>{0};
      double factor = 0;
      for (int u : thetas) {
        for (int r = 0; r < 2; ++r) {
          PureState psi = PureState::plus_angle("t", Angle::units(u).plus_pi_if(r));
          PureState sig = psi;
          apply_letter(sig, "t", l);
          const double overlap = std::abs(psi.inner(sig));
          factor += overlap * overlap;
        }
      }
      factor /= static_cast<double>(2 * thetas.size());
      product *= factor;
    }
    bound += product / static_cast<double>(colorings.size());
  }
  return bound;
}

TrapRmRun trap_rm_run_sampled(const TrapRmInstance& inst, DetRng& rng,
                              const std::optional<PauliAttack>& attack) {
  const DottedTripleGraph dtg = dotted_triple_graph(inst.base);
  DetRng client = rng.fork("client");
  const TrapColoring col = sample_trap_coloring(dtg, client, {});
  const ColoringPlan plan = make_plan(inst, dtg, col);
  const PureState target = inst.honest_output();

  const int a = client.bit(), b = client.bit();
  const Angle theta_t = Angle::units(client.uniform(8));
  const Angle theta_d = Angle::units(client.uniform(8));

  TrapRmRun run;
  int round = 0;

  std::vector<PureState> parts;
  for (const auto& n : dtg.graph.vertices()) {
    if (n == plan.input_node) {
      PureState in = inst.input.relabeled({n});
      if (b) in.apply_z(n);
      if (a) in.apply_x(n);
      parts.push_back(std::move(in));
    } else if (n == plan.input_trap) {
      parts.push_back(PureState::plus_angle(n, theta_t));
    } else if (n == plan.input_dummy) {
      parts.push_back(PureState::plus_angle(n, theta_d));
    } else {
      parts.push_back(PureState::plus(n));
    }
  }
  PureState state = tensor(parts);
  run.transcript.add(round++, "client", "server", "quantum",
                     "input-row fingerprint:" + std::to_string(state.fingerprint()));
  if (attack && attack->stage == AttackStage::BeforeEntangling) state.apply_pauli(attack->op);
  entangle_graph(state, dtg.graph);
  if (attack && attack->stage != AttackStage::BeforeEntangling) state.apply_pauli(attack->op);
  for (const auto& n : dtg.graph.vertices()) {
    run.transcript.add(round, "server", "client", "quantum", "node[" + n + "]");
  }
  ++round;

  auto sample = [&](std::vector<PureState::Branch> branches) {
    const double u = static_cast<double>(rng.next_u64()) / 18446744073709551616.0;
    const int o = u < (branches[0].zero_probability ? 0.0 : branches[0].probability) ? 0 : 1;
    state = std::move(branches[o].state);
    return o;
  };

  std::map<QubitLabel, int> r_d;
  for (const auto& d : plan.dummies) {
    r_d[d] = sample(state.measure_z(d));
    run.transcript.add(round, "client", "client", "classical",
                       "r[" + d + "]=" + std::to_string(r_d[d]));
  }
  ++round;
  std::vector<int> logical(plan.comp_path.size(), 0);
  for (size_t idx = 0; idx + 1 < plan.comp_path.size(); ++idx) {
    const QubitLabel& node = plan.comp_path[idx];
    int sx = 0, sz = 0;
    if (idx >= 1) sx = logical[idx - 1];
    if (idx >= 2) sz = logical[idx - 2];
    sz ^= dummy_parity(dtg, col, r_d, node);
    Angle delta = adapt_angle(plan.comp_angles[idx], sx, sz);
    if (node == plan.input_node) delta = delta.reflected_if(a).plus_pi_if(b);
    logical[idx] = sample(state.measure_xy(node, delta));
  }
  ++round;
  for (const auto& t : plan.traps) {
    const Angle delta = t == plan.input_trap ? theta_t : Angle();
    const int expected = dummy_parity(dtg, col, r_d, t);
    const int r_t = sample(state.measure_xy(t, delta));
    run.transcript.add(round, "client", "client", "classical",
                       "trap[" + t + "]=" + std::to_string(r_t));
    if (r_t != expected) run.aborted = true;
  }
  ++round;
  if (!run.aborted) {
    const QubitLabel& out = plan.comp_path.back();
    const size_t m = plan.comp_path.size();
    int sx = 0, sz = 0;
    if (m >= 2) sx = logical[m - 2];
    if (m >= 3) sz = logical[m - 3];
    sz ^= dummy_parity(dtg, col, r_d, out);
    if (sx) state.apply_x(out);
    if (sz) state.apply_z(out);
    if (m == 1) {
      if (a) state.apply_x(out);
      if (b) state.apply_z(out);
    }
    run.output_fingerprint = state.relabeled({"out"}).fingerprint();
    run.transcript.add(round, "client", "out", "quantum",
                       "fingerprint:" + std::to_string(run.output_fingerprint));
  }
  return run;
}

}  // namespace dqclab
