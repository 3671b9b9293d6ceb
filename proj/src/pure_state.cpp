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

#include <algorithm>
#include <cmath>

#include "dqclab/errors.hpp"
#include "dqclab/states.hpp"

namespace dqclab {

namespace {
constexpr double kInvSqrt2 = 0.7071067811865475244;
constexpr double kZeroBranch = 1e-14;

cdouble phase_of(Angle a) { return std::polar(1.0, a.radians()); }
}  // namespace

PureState::PureState(std::vector<QubitLabel> labels, std::vector<cdouble> amplitudes)
    : labels_(std::move(labels)), amps_(std::move(amplitudes)) {
  check_size(labels_.size());
  require(amps_.size() == (size_t{1} << labels_.size()), "amplitude vector has wrong length");
  std::set<QubitLabel> seen(labels_.begin(), labels_.end());
  require(seen.size() == labels_.size(), "duplicate label in register");
}

void PureState::check_size(size_t n_total) const {
  require(n_total <= kMaxQubits, "register exceeds the dense-simulation cap of 16 qubits");
}

PureState PureState::computational_basis(const std::vector<QubitLabel>& labels,
                                         const std::vector<int>& bits) {
  require(labels.size() == bits.size(), "labels/bits size mismatch");
  size_t idx = 0;
  for (int b : bits) idx = (idx << 1) | static_cast<size_t>(b & 1);
  std::vector<cdouble> amps(size_t{1} << labels.size(), cdouble{0, 0});
  amps[idx] = 1.0;
  return PureState(labels, std::move(amps));
}

PureState PureState::plus(const QubitLabel& q) {
  return PureState({q}, {kInvSqrt2, kInvSqrt2});
}

PureState PureState::minus(const QubitLabel& q) {
  return PureState({q}, {kInvSqrt2, -kInvSqrt2});
}

PureState PureState::plus_angle(const QubitLabel& q, Angle theta) {
  return PureState({q}, {kInvSqrt2, kInvSqrt2 * phase_of(theta)});
}

PureState PureState::pauli_eigenstate(const QubitLabel& q, PauliLetter letter, int outcome) {
  switch (letter) {
    case PauliLetter::X: return outcome == 0 ? plus(q) : minus(q);
    case PauliLetter::Y: return plus_angle(q, Angle::units(outcome == 0 ? 4 : 12));
    case PauliLetter::Z: return z_eigen(q, outcome);
    case PauliLetter::I: break;
  }
  fail("no eigenstate for the identity letter");
}

bool PureState::has_label(const QubitLabel& q) const {
  return std::find(labels_.begin(), labels_.end(), q) != labels_.end();
}

int PureState::position(const QubitLabel& q) const {
  auto it = std::find(labels_.begin(), labels_.end(), q);
  require(it != labels_.end(), "unknown label: " + q);
  return static_cast<int>(it - labels_.begin());
}

void PureState::apply_x(const QubitLabel& q) {
  const size_t step = size_t{1} << bit_of(position(q));
  for (size_t i = 0; i < amps_.size(); ++i) {
    if (i & step) continue;
    std::swap(amps_[i], amps_[i | step]);
  }
}

void PureState::apply_y(const QubitLabel& q) {
  const size_t step = size_t{1} << bit_of(position(q));
  const cdouble im{0, 1};
  for (size_t i = 0; i < amps_.size(); ++i) {
    if (i & step) continue;
    const cdouble a0 = amps_[i], a1 = amps_[i | step];
    amps_[i] = -im * a1;
    amps_[i | step] = im * a0;
  }
}

void PureState::apply_z(const QubitLabel& q) {
  const size_t step = size_t{1} << bit_of(position(q));
  for (size_t i = 0; i < amps_.size(); ++i) {
    if (i & step) amps_[i] = -amps_[i];
  }
}

void PureState::apply_h(const QubitLabel& q) {
  const size_t step = size_t{1} << bit_of(position(q));
  for (size_t i = 0; i < amps_.size(); ++i) {
    if (i & step) continue;
    const cdouble a0 = amps_[i], a1 = amps_[i | step];
    amps_[i] = (a0 + a1) * kInvSqrt2;
    amps_[i | step] = (a0 - a1) * kInvSqrt2;
  }
}

void PureState::apply_zrot(const QubitLabel& q, Angle theta) {
  const size_t step = size_t{1} << bit_of(position(q));
  const cdouble ph = phase_of(theta);
  for (size_t i = 0; i < amps_.size(); ++i) {
    if (i & step) amps_[i] *= ph;
  }
}

void PureState::apply_cz(const QubitLabel& a, const QubitLabel& b) {
  require(a != b, "CZ needs two distinct targets");
  const size_t sa = size_t{1} << bit_of(position(a));
  const size_t sb = size_t{1} << bit_of(position(b));
  for (size_t i = 0; i < amps_.size(); ++i) {
    if ((i & sa) && (i & sb)) amps_[i] = -amps_[i];
  }
}

void PureState::apply_cx(const QubitLabel& control, const QubitLabel& target) {
  require(control != target, "CX needs two distinct targets");
  const size_t sc = size_t{1} << bit_of(position(control));
  const size_t st = size_t{1} << bit_of(position(target));
  for (size_t i = 0; i < amps_.size(); ++i) {
    if ((i & sc) && !(i & st)) std::swap(amps_[i], amps_[i | st]);
  }
}

void PureState::apply_matrix1(const QubitLabel& q, const std::array<cdouble, 4>& m) {
  const size_t step = size_t{1} << bit_of(position(q));
  for (size_t i = 0; i < amps_.size(); ++i) {
    if (i & step) continue;
    const cdouble a0 = amps_[i], a1 = amps_[i | step];
    amps_[i] = m[0] * a0 + m[1] * a1;
    amps_[i | step] = m[2] * a0 + m[3] * a1;
  }
}

void PureState::apply_operator(const std::vector<QubitLabel>& in_labels,
                               const std::vector<QubitLabel>& out_labels,
                               const Eigen::MatrixXcd& m) {
  const auto d_in = Eigen::Index{1} << in_labels.size();
  const auto d_out = Eigen::Index{1} << out_labels.size();
  require(m.rows() == d_out && m.cols() == d_in, "operator dimensions do not match registers");

  // Move the input sub-register to the most significant positions.
  std::vector<QubitLabel> order = in_labels;
  for (const auto& q : labels_) {
    if (std::find(in_labels.begin(), in_labels.end(), q) == in_labels.end()) order.push_back(q);
  }
  require(order.size() == labels_.size(), "apply_operator input labels must be in the register");
  PureState arranged = reordered(order);

  const size_t d_rest = arranged.amps_.size() / static_cast<size_t>(d_in);
  std::vector<cdouble> next(static_cast<size_t>(d_out) * d_rest, cdouble{0, 0});
  for (Eigen::Index o = 0; o < d_out; ++o) {
    for (Eigen::Index i = 0; i < d_in; ++i) {
      const cdouble coeff = m(o, i);
      if (coeff == cdouble{0, 0}) continue;
      const size_t src = static_cast<size_t>(i) * d_rest;
      const size_t dst = static_cast<size_t>(o) * d_rest;
      for (size_t r = 0; r < d_rest; ++r) next[dst + r] += coeff * arranged.amps_[src + r];
    }
  }
  std::vector<QubitLabel> new_labels = out_labels;
  new_labels.insert(new_labels.end(), order.begin() + in_labels.size(), order.end());
  labels_ = std::move(new_labels);
  amps_ = std::move(next);
}

void PureState::apply_gate(Gate g, const std::vector<QubitLabel>& targets,
                           std::optional<Angle> angle) {
  switch (g) {
    case Gate::X: require(targets.size() == 1, "X is single-qubit"); return apply_x(targets[0]);
    case Gate::Y: require(targets.size() == 1, "Y is single-qubit"); return apply_y(targets[0]);
    case Gate::Z: require(targets.size() == 1, "Z is single-qubit"); return apply_z(targets[0]);
    case Gate::H: require(targets.size() == 1, "H is single-qubit"); return apply_h(targets[0]);
    case Gate::Zrot:
      require(targets.size() == 1 && angle.has_value(), "Zrot needs one target and an angle");
      return apply_zrot(targets[0], *angle);
    case Gate::CZ: require(targets.size() == 2, "CZ is two-qubit"); return apply_cz(targets[0], targets[1]);
    case Gate::CX: require(targets.size() == 2, "CX is two-qubit"); return apply_cx(targets[0], targets[1]);
  }
}

void PureState::apply_pauli(const PauliString& p) {
  for (const auto& [q, l] : p.letters()) {
    switch (l) {
      case PauliLetter::X: apply_x(q); break;
      case PauliLetter::Y: apply_y(q); break;
      case PauliLetter::Z: apply_z(q); break;
      case PauliLetter::I: break;
    }
  }
  const cdouble ph = p.phase();
  if (ph != cdouble{1, 0}) {
    for (auto& a : amps_) a *= ph;
  }
}

double PureState::norm() const {
  double s = 0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void PureState::renormalize() {
  const double n = norm();
  require(n > kZeroBranch, "cannot renormalize a zero state");
  for (auto& a : amps_) a /= n;
}

cdouble PureState::inner(const PureState& other) const {
  const PureState o = other.reordered(labels_);
  cdouble s{0, 0};
  for (size_t i = 0; i < amps_.size(); ++i) s += std::conj(amps_[i]) * o.amps_[i];
  return s;
}

std::vector<PureState::Branch> PureState::measure_xy(const QubitLabel& q, Angle delta) const {
  const int pos = position(q);
  const int b = bit_of(pos);
  const size_t step = size_t{1} << b;
  const size_t low_mask = step - 1;
  const cdouble ph = std::conj(phase_of(delta));

  std::vector<QubitLabel> new_labels = labels_;
  new_labels.erase(new_labels.begin() + pos);

  std::vector<Branch> out(2);
  for (int o = 0; o < 2; ++o) {
    std::vector<cdouble> reduced(amps_.size() / 2);
    const double sign = o == 0 ? 1.0 : -1.0;
    double prob = 0;
    for (size_t i = 0; i < amps_.size(); ++i) {
      if (i & step) continue;
      const cdouble v = (amps_[i] + sign * ph * amps_[i | step]) * kInvSqrt2;
      const size_t j = ((i >> (b + 1)) << b) | (i & low_mask);
      reduced[j] = v;
      prob += std::norm(v);
    }
    Branch& br = out[o];
    br.outcome = o;
    br.probability = prob;
    br.zero_probability = prob < kZeroBranch;
    if (!br.zero_probability) {
      const double inv = 1.0 / std::sqrt(prob);
      for (auto& v : reduced) v *= inv;
    }
    br.state = PureState(new_labels, std::move(reduced));
  }
  return out;
}

std::vector<PureState::Branch> PureState::measure_z(const QubitLabel& q) const {
  const int pos = position(q);
  const int b = bit_of(pos);
  const size_t step = size_t{1} << b;
  const size_t low_mask = step - 1;

  std::vector<QubitLabel> new_labels = labels_;
  new_labels.erase(new_labels.begin() + pos);

  std::vector<Branch> out(2);
  for (int o = 0; o < 2; ++o) {
    std::vector<cdouble> reduced(amps_.size() / 2);
    double prob = 0;
    for (size_t i = 0; i < amps_.size(); ++i) {
      if (((i & step) != 0) != (o == 1)) continue;
      const size_t j = ((i >> (b + 1)) << b) | (i & low_mask);
      reduced[j] = amps_[i];
      prob += std::norm(amps_[i]);
    }
    Branch& br = out[o];
    br.outcome = o;
    br.probability = prob;
    br.zero_probability = prob < kZeroBranch;
    if (!br.zero_probability) {
      const double inv = 1.0 / std::sqrt(prob);
      for (auto& v : reduced) v *= inv;
    }
    br.state = PureState(new_labels, std::move(reduced));
  }
  return out;
}

std::vector<PureState::Branch> PureState::measure_letter(const QubitLabel& q,
                                                         PauliLetter letter) const {
  switch (letter) {
    case PauliLetter::X: return measure_x(q);
    case PauliLetter::Y: return measure_xy(q, Angle::units(4));
    case PauliLetter::Z: return measure_z(q);
    case PauliLetter::I: break;
  }
  fail("cannot measure the identity letter");
}

std::vector<PureState::Branch> PureState::measure_pauli(const PauliString& p) const {
  require(!p.is_identity(), "measure_pauli needs a non-identity string");
  require(p.phase_power() == 0 || p.phase_power() == 2,
          "measure_pauli needs a Hermitian string (phase +1 or -1)");
  for (const auto& [q, l] : p.letters()) position(q);

  PureState applied = *this;
  applied.apply_pauli(p);

  std::vector<Branch> out(2);
  for (int r = 0; r < 2; ++r) {
    const double sign = r == 0 ? 1.0 : -1.0;
    std::vector<cdouble> proj(amps_.size());
    double prob = 0;
    for (size_t i = 0; i < amps_.size(); ++i) {
      proj[i] = 0.5 * (amps_[i] + sign * applied.amps_[i]);
      prob += std::norm(proj[i]);
    }
    Branch& br = out[r];
    br.outcome = r;
    br.probability = prob;
    br.zero_probability = prob < kZeroBranch;
    if (!br.zero_probability) {
      const double inv = 1.0 / std::sqrt(prob);
      for (auto& v : proj) v *= inv;
    }
    br.state = PureState(labels_, std::move(proj));
  }
  return out;
}

PureState PureState::reordered(const std::vector<QubitLabel>& new_order) const {
  require(new_order.size() == labels_.size(), "dimension mismatch in reorder");
  if (new_order == labels_) return *this;
  std::vector<int> src_bit(new_order.size());
  for (size_t p = 0; p < new_order.size(); ++p) {
    src_bit[p] = bit_of(position(new_order[p]));
  }
  const int n = num_qubits();
  std::vector<cdouble> out(amps_.size());
  for (size_t j = 0; j < out.size(); ++j) {
    size_t i = 0;
    for (int p = 0; p < n; ++p) {
      if (j & (size_t{1} << (n - 1 - p))) i |= size_t{1} << src_bit[p];
    }
    out[j] = amps_[i];
  }
  return PureState(new_order, std::move(out));
}

PureState PureState::relabeled(const std::vector<QubitLabel>& new_labels) const {
  require(new_labels.size() == labels_.size(), "dimension mismatch in relabel");
  return PureState(new_labels, amps_);
}

uint64_t PureState::fingerprint() const {
  std::vector<QubitLabel> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  const PureState canon = reordered(sorted);
  uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 0x100000001b3ULL;
  };
  for (const auto& q : sorted) {
    for (char c : q) mix(static_cast<unsigned char>(c));
  }
  for (const auto& a : canon.amps_) {
    mix(static_cast<uint64_t>(std::llround(a.real() / kTol)));
    mix(static_cast<uint64_t>(std::llround(a.imag() / kTol)));
  }
  return h;
}

PureState tensor(const std::vector<PureState>& parts) {
  if (parts.empty()) return PureState();
  std::vector<QubitLabel> labels;
  size_t dim = 1;
  for (const auto& p : parts) {
    for (const auto& q : p.labels()) {
      require(std::find(labels.begin(), labels.end(), q) == labels.end(),
              "duplicate label in tensor: " + q);
      labels.push_back(q);
    }
    dim *= p.amplitudes().size();
  }
  require(labels.size() <= kMaxQubits, "register exceeds the dense-simulation cap of 16 qubits");
  std::vector<cdouble> amps(1, cdouble{1, 0});
  amps.reserve(dim);
  for (const auto& p : parts) {
    std::vector<cdouble> next(amps.size() * p.amplitudes().size());
    size_t k = 0;
    for (const auto& a : amps) {
      for (const auto& b : p.amplitudes()) next[k++] = a * b;
    }
    amps = std::move(next);
  }
  return PureState(labels, std::move(amps));
}

double state_distance(const PureState& a, const PureState& b) {
  return 1.0 - fidelity(a, b);
}

double fidelity(const PureState& a, const PureState& b) {
  return std::norm(a.inner(b));
}

}  // namespace dqclab
