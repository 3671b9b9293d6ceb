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
constexpr double kZeroBranch = 1e-14;

Eigen::Matrix2cd letter_matrix(PauliLetter l) {
  Eigen::Matrix2cd m;
  const cdouble im{0, 1};
  switch (l) {
    case PauliLetter::I: m << 1, 0, 0, 1; break;
    case PauliLetter::X: m << 0, 1, 1, 0; break;
    case PauliLetter::Y: m << 0, -im, im, 0; break;
    case PauliLetter::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}
}  // namespace

MixedState::MixedState(std::vector<QubitLabel> labels, Eigen::MatrixXcd op)
    : labels_(std::move(labels)), op_(std::move(op)) {
  require(labels_.size() <= kMaxQubits, "register exceeds the dense-simulation cap of 16 qubits");
  const auto dim = Eigen::Index{1} << labels_.size();
  require(op_.rows() == dim && op_.cols() == dim, "operator has wrong dimension");
  std::set<QubitLabel> seen(labels_.begin(), labels_.end());
  require(seen.size() == labels_.size(), "duplicate label in register");
}

MixedState MixedState::from_pure(const PureState& psi) {
  const auto& amps = psi.amplitudes();
  const auto dim = static_cast<Eigen::Index>(amps.size());
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = amps[i];
  return MixedState(psi.labels(), v * v.adjoint());
}

MixedState MixedState::maximally_mixed(const std::vector<QubitLabel>& labels) {
  const auto dim = Eigen::Index{1} << labels.size();
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim);
  return MixedState(labels, std::move(op));
}

int MixedState::position(const QubitLabel& q) const {
  auto it = std::find(labels_.begin(), labels_.end(), q);
  require(it != labels_.end(), "unknown label: " + q);
  return static_cast<int>(it - labels_.begin());
}

void MixedState::apply_gate(Gate g, const std::vector<QubitLabel>& targets,
                            std::optional<Angle> angle) {
  // Conjugation through the pure-state kernels: evolve columns, then rows.
  const auto dim = op_.rows();
  for (Eigen::Index c = 0; c < dim; ++c) {
    std::vector<cdouble> col(dim);
    for (Eigen::Index r = 0; r < dim; ++r) col[r] = op_(r, c);
    PureState tmp(labels_, std::move(col));
    tmp.apply_gate(g, targets, angle);
    for (Eigen::Index r = 0; r < dim; ++r) op_(r, c) = tmp.amplitudes()[r];
  }
  for (Eigen::Index r = 0; r < dim; ++r) {
    std::vector<cdouble> row(dim);
    for (Eigen::Index c = 0; c < dim; ++c) row[c] = std::conj(op_(r, c));
    PureState tmp(labels_, std::move(row));
    tmp.apply_gate(g, targets, angle);
    for (Eigen::Index c = 0; c < dim; ++c) op_(r, c) = std::conj(tmp.amplitudes()[c]);
  }
}

void MixedState::apply_pauli(const PauliString& p) {
  for (const auto& [q, l] : p.letters()) {
    const int b = num_qubits() - 1 - position(q);
    const Eigen::Matrix2cd m = letter_matrix(l);
    // op -> (I ... m ... I) op (same)^dagger, one factor at a time.
    const auto dim = op_.rows();
    Eigen::MatrixXcd next = Eigen::MatrixXcd::Zero(dim, dim);
    const Eigen::Index step = Eigen::Index{1} << b;
    for (Eigen::Index r = 0; r < dim; ++r) {
      const int rb = (r & step) ? 1 : 0;
      for (Eigen::Index c = 0; c < dim; ++c) {
        const int cb = (c & step) ? 1 : 0;
        cdouble acc{0, 0};
        for (int rs = 0; rs < 2; ++rs) {
          for (int cs = 0; cs < 2; ++cs) {
            const Eigen::Index rr = (r & ~step) | (rs ? step : 0);
            const Eigen::Index cc = (c & ~step) | (cs ? step : 0);
            acc += m(rb, rs) * op_(rr, cc) * std::conj(m(cb, cs));
          }
        }
        next(r, c) = acc;
      }
    }
    op_ = std::move(next);
  }
  // |phase|^2 = 1: the global phase of a Pauli word drops out under conjugation.
}

std::vector<MixedState::Branch> MixedState::measure_xy(const QubitLabel& q, Angle delta) const {
  const int b = num_qubits() - 1 - position(q);
  const Eigen::Index step = Eigen::Index{1} << b;
  const cdouble ph = std::polar(1.0, -delta.radians());
  const auto dim = op_.rows();

  std::vector<QubitLabel> new_labels = labels_;
  new_labels.erase(new_labels.begin() + position(q));

  std::vector<Branch> out(2);
  for (int o = 0; o < 2; ++o) {
    const double sign = o == 0 ? 1.0 : -1.0;
    Eigen::MatrixXcd reduced(dim / 2, dim / 2);
    auto contract_index = [&](Eigen::Index i) {
      return ((i >> (b + 1)) << b) | (i & (step - 1));
    };
    for (Eigen::Index r = 0; r < dim; ++r) {
      if (r & step) continue;
      for (Eigen::Index c = 0; c < dim; ++c) {
        if (c & step) continue;
        // <o^delta| rho |o^delta> on the measured qubit.
        const cdouble v = 0.5 * (op_(r, c) + sign * ph * op_(r | step, c) +
                                 sign * std::conj(ph) * op_(r, c | step) +
                                 op_(r | step, c | step));
        reduced(contract_index(r), contract_index(c)) = v;
      }
    }
    Branch& br = out[o];
    br.outcome = o;
    br.probability = reduced.trace().real();
    br.zero_probability = br.probability < kZeroBranch;
    if (!br.zero_probability) reduced /= br.probability;
    br.state = MixedState(new_labels, std::move(reduced));
  }
  return out;
}

std::vector<MixedState::Branch> MixedState::measure_z(const QubitLabel& q) const {
  const int b = num_qubits() - 1 - position(q);
  const Eigen::Index step = Eigen::Index{1} << b;
  const auto dim = op_.rows();

  std::vector<QubitLabel> new_labels = labels_;
  new_labels.erase(new_labels.begin() + position(q));

  std::vector<Branch> out(2);
  for (int o = 0; o < 2; ++o) {
    Eigen::MatrixXcd reduced(dim / 2, dim / 2);
    auto contract_index = [&](Eigen::Index i) {
      return ((i >> (b + 1)) << b) | (i & (step - 1));
    };
    for (Eigen::Index r = 0; r < dim; ++r) {
      if (((r & step) != 0) != (o == 1)) continue;
      for (Eigen::Index c = 0; c < dim; ++c) {
        if (((c & step) != 0) != (o == 1)) continue;
        reduced(contract_index(r), contract_index(c)) = op_(r, c);
      }
    }
    Branch& br = out[o];
    br.outcome = o;
    br.probability = reduced.trace().real();
    br.zero_probability = br.probability < kZeroBranch;
    if (!br.zero_probability) reduced /= br.probability;
    br.state = MixedState(new_labels, std::move(reduced));
  }
  return out;
}

MixedState MixedState::partial_trace(const std::set<QubitLabel>& discard) const {
  for (const auto& q : discard) position(q);
  std::vector<QubitLabel> kept;
  std::vector<int> kept_bits, disc_bits;
  const int n = num_qubits();
  for (int p = 0; p < n; ++p) {
    if (discard.count(labels_[p])) {
      disc_bits.push_back(n - 1 - p);
    } else {
      kept.push_back(labels_[p]);
      kept_bits.push_back(n - 1 - p);
    }
  }
  const auto kd = static_cast<int>(kept.size());
  const Eigen::Index dim_k = Eigen::Index{1} << kd;
  const Eigen::Index dim_d = Eigen::Index{1} << disc_bits.size();
  auto expand = [](Eigen::Index packed, const std::vector<int>& bits) {
    Eigen::Index full = 0;
    for (size_t p = 0; p < bits.size(); ++p) {
      if (packed & (Eigen::Index{1} << (bits.size() - 1 - p))) full |= Eigen::Index{1} << bits[p];
    }
    return full;
  };
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim_k, dim_k);
  for (Eigen::Index r = 0; r < dim_k; ++r) {
    const Eigen::Index rk = expand(r, kept_bits);
    for (Eigen::Index c = 0; c < dim_k; ++c) {
      const Eigen::Index ck = expand(c, kept_bits);
      cdouble acc{0, 0};
      for (Eigen::Index d = 0; d < dim_d; ++d) {
        const Eigen::Index dd = expand(d, disc_bits);
        acc += op_(rk | dd, ck | dd);
      }
      out(r, c) = acc;
    }
  }
  return MixedState(kept, std::move(out));
}

MixedState MixedState::reordered(const std::vector<QubitLabel>& new_order) const {
  require(new_order.size() == labels_.size(), "dimension mismatch in reorder");
  if (new_order == labels_) return *this;
  const int n = num_qubits();
  std::vector<int> src_bit(new_order.size());
  for (size_t p = 0; p < new_order.size(); ++p) {
    src_bit[p] = n - 1 - position(new_order[p]);
  }
  auto map_index = [&](Eigen::Index j) {
    Eigen::Index i = 0;
    for (int p = 0; p < n; ++p) {
      if (j & (Eigen::Index{1} << (n - 1 - p))) i |= Eigen::Index{1} << src_bit[p];
    }
    return i;
  };
  const auto dim = op_.rows();
  Eigen::MatrixXcd out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) out(r, c) = op_(map_index(r), map_index(c));
  }
  return MixedState(new_order, std::move(out));
}

double MixedState::hermiticity_error() const {
  return (op_ - op_.adjoint()).cwiseAbs().maxCoeff();
}

double MixedState::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(op_);
  return solver.eigenvalues().minCoeff();
}

void MixedState::accumulate(const PureState& psi, double weight) {
  if (labels_.empty() && op_.size() == 0) {
    *this = from_pure(psi);
    op_ *= weight;
    return;
  }
  const PureState aligned = psi.reordered(labels_);
  const auto dim = op_.rows();
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = aligned.amplitudes()[i];
  op_ += weight * (v * v.adjoint());
}

MixedState tensor(const std::vector<MixedState>& parts) {
  require(!parts.empty(), "tensor of nothing");
  std::vector<QubitLabel> labels;
  for (const auto& p : parts) {
    for (const auto& q : p.labels()) {
      require(std::find(labels.begin(), labels.end(), q) == labels.end(),
              "duplicate label in tensor: " + q);
      labels.push_back(q);
    }
  }
  require(labels.size() <= kMaxQubits, "register exceeds the dense-simulation cap of 16 qubits");
  Eigen::MatrixXcd op = parts[0].op();
  for (size_t k = 1; k < parts.size(); ++k) {
    const auto& b = parts[k].op();
    Eigen::MatrixXcd next(op.rows() * b.rows(), op.cols() * b.cols());
    for (Eigen::Index r = 0; r < op.rows(); ++r) {
      for (Eigen::Index c = 0; c < op.cols(); ++c) {
        next.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = op(r, c) * b;
      }
    }
    op = std::move(next);
  }
  return MixedState(labels, std::move(op));
}

MixedState PureState::to_mixed() const { return MixedState::from_pure(*this); }

double half_trace_norm(const Eigen::MatrixXcd& hermitian) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

double state_distance(const MixedState& a, const MixedState& b) {
  const MixedState aligned = b.reordered(a.labels());
  return half_trace_norm(a.op() - aligned.op());
}

double fidelity(const MixedState& rho, const PureState& psi) {
  const PureState aligned = psi.reordered(rho.labels());
  const auto dim = rho.op().rows();
  Eigen::VectorXcd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = aligned.amplitudes()[i];
  return (v.adjoint() * rho.op() * v)(0, 0).real();
}

}  // namespace dqclab
