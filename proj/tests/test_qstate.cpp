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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dqclab/errors.hpp"
#include "dqclab/rng.hpp"
#include "dqclab/states.hpp"

using namespace dqclab;

namespace {

// Matrix oracle: dense single-qubit matrices combined by Kronecker products,
// independent of the state-vector kernels under test.
Eigen::Matrix2cd pauli_matrix(PauliLetter l) {
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

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

Eigen::MatrixXcd pauli_string_matrix(const PauliString& p,
                                     const std::vector<QubitLabel>& order) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (const auto& q : order) m = kron(m, pauli_matrix(p.at(q)));
  return p.phase() * m;
}

PureState random_state(int n, uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> dist;
  std::vector<QubitLabel> labels;
  for (int i = 0; i < n; ++i) labels.push_back("q" + std::to_string(i));
  std::vector<cdouble> amps(size_t{1} << n);
  for (auto& a : amps) a = cdouble{dist(gen), dist(gen)};
  PureState psi(labels, amps);
  psi.renormalize();
  return psi;
}

Eigen::VectorXcd as_vector(const PureState& psi) {
  Eigen::VectorXcd v(psi.amplitudes().size());
  for (size_t i = 0; i < psi.amplitudes().size(); ++i) v(i) = psi.amplitudes()[i];
  return v;
}

}  // namespace

TEST_CASE("angle arithmetic is exact integer arithmetic") {
  CHECK(Angle::units(3) + Angle::units(15) == Angle::units(2));
  CHECK(-Angle::units(5) == Angle::units(11));
  CHECK(Angle::units(2).plus_pi_if(true) == Angle::units(10));
  CHECK(Angle::units(2).reflected_if(true) == Angle::units(14));

  // A million compositions never drift: integers only.
  DetRng rng(123);
  Angle total;
  long sum = 0;
  for (int i = 0; i < 1000000; ++i) {
    const int k = rng.uniform(16);
    total += Angle::units(k);
    sum += k;
  }
  CHECK(total.k() == static_cast<int>(((sum % 16) + 16) % 16));
}

TEST_CASE("pauli phase algebra matches 2x2 matrix multiplication") {
  const std::vector<PauliLetter> letters{PauliLetter::I, PauliLetter::X, PauliLetter::Y,
                                         PauliLetter::Z};
  for (PauliLetter a : letters) {
    for (PauliLetter b : letters) {
      const PauliString pa = PauliString::single("q", a);
      const PauliString pb = PauliString::single("q", b);
      const Eigen::Matrix2cd expected = pauli_matrix(a) * pauli_matrix(b);
      const Eigen::MatrixXcd got = pauli_string_matrix(pa * pb, {"q"});
      CHECK((expected - got).cwiseAbs().maxCoeff() == doctest::Approx(0).epsilon(1e-15));
    }
  }
}

TEST_CASE("tensor products") {
  const PureState s00 = tensor({PureState::zero("a"), PureState::zero("b")});
  CHECK(s00.amplitudes()[0] == cdouble{1, 0});

  const PureState plus2 = tensor({PureState::plus("a"), PureState::plus("b")});
  for (const auto& amp : plus2.amplitudes()) {
    CHECK(std::abs(amp - cdouble{0.5, 0}) < kTol);
  }

  const MixedState m = tensor({MixedState::maximally_mixed({"a"}),
                               MixedState::from_pure(PureState::plus("b"))});
  CHECK(m.trace_real() == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(tensor({PureState::zero("a"), PureState::zero("a")}), SimError);
}

TEST_CASE("gate definitions") {
  // CZ on |+>|+>.
  PureState s = tensor({PureState::plus("a"), PureState::plus("b")});
  s.apply_cz("a", "b");
  CHECK(std::abs(s.amplitudes()[0] - cdouble{0.5, 0}) < kTol);
  CHECK(std::abs(s.amplitudes()[3] + cdouble{0.5, 0}) < kTol);

  // Zrot(pi) on |+> is |-> up to global phase.
  PureState p = PureState::plus("q");
  p.apply_zrot("q", Angle::units(8));
  CHECK(fidelity(p, PureState::minus("q")) == doctest::Approx(1.0).epsilon(1e-12));

  // Zrot on the control commutes with CX (4x4 oracle).
  for (int k = 0; k < 16; ++k) {
    PureState x = random_state(2, 77 + k);
    PureState y = x;
    x.apply_zrot("q0", Angle::units(k));
    x.apply_cx("q0", "q1");
    y.apply_cx("q0", "q1");
    y.apply_zrot("q0", Angle::units(k));
    CHECK((as_vector(x) - as_vector(y)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("unitarity on random states") {
  DetRng rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + rng.uniform(4);
    PureState psi = random_state(n, 1000 + trial);
    switch (rng.uniform(5)) {
      case 0: psi.apply_h("q0"); break;
      case 1: psi.apply_y("q0"); break;
      case 2: psi.apply_zrot("q0", Angle::units(rng.uniform(16))); break;
      case 3:
        if (n >= 2) psi.apply_cz("q0", "q1");
        break;
      default:
        if (n >= 2) psi.apply_cx("q0", "q1");
        break;
    }
    CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("apply_pauli matches the matrix oracle and the product rule") {
  // (X ⊗ I)|00> = |10>, Y|0> = i|1>.
  PureState s = tensor({PureState::zero("a"), PureState::zero("b")});
  s.apply_pauli(PauliString::single("a", PauliLetter::X));
  CHECK(std::abs(s.amplitudes()[2] - cdouble{1, 0}) < kTol);

  PureState y0 = PureState::zero("q");
  y0.apply_pauli(PauliString::single("q", PauliLetter::Y));
  CHECK(std::abs(y0.amplitudes()[1] - cdouble{0, 1}) < kTol);

  DetRng rng(7);
  const std::vector<QubitLabel> labels{"q0", "q1", "q2"};
  for (int trial = 0; trial < 25; ++trial) {
    PauliString p, q;
    for (const auto& l : labels) {
      p.set(l, static_cast<PauliLetter>(rng.uniform(4)));
      q.set(l, static_cast<PauliLetter>(rng.uniform(4)));
    }
    const PureState base = random_state(3, 500 + trial);
    PureState via_two = base;
    via_two.apply_pauli(q);
    via_two.apply_pauli(p);
    PureState via_product = base;
    via_product.apply_pauli(p * q);
    CHECK((as_vector(via_two) - as_vector(via_product)).cwiseAbs().maxCoeff() < 1e-12);

    // Against the dense matrix oracle.
    const Eigen::VectorXcd expected =
        pauli_string_matrix(p * q, labels) * as_vector(base);
    CHECK((as_vector(via_product) - expected).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("XY-plane measurements") {
  // |+^theta> measured at delta = theta -> outcome 0 with certainty.
  for (int k = 0; k < 16; ++k) {
    const PureState psi = PureState::plus_angle("q", Angle::units(k));
    const auto branches = psi.measure_xy("q", Angle::units(k));
    CHECK(branches[0].probability == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(branches[1].zero_probability);
  }
  // |+> measured at pi/2: both outcomes 1/2.
  const auto half = PureState::plus("q").measure_xy("q", Angle::units(4));
  CHECK(half[0].probability == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(half[1].probability == doctest::Approx(0.5).epsilon(1e-12));
  // |-> measured in X: outcome 1.
  const auto minus = PureState::minus("q").measure_x("q");
  CHECK(minus[1].probability == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(PureState::plus("q").measure_xy("nope", Angle()), SimError);
}

TEST_CASE("flip facts used by the stabilizer derivation") {
  // X before a Z measurement flips the outcome; Z flips X and Y outcomes.
  for (int bit = 0; bit < 2; ++bit) {
    PureState z = PureState::z_eigen("q", bit);
    z.apply_x("q");
    const auto br = z.measure_z("q");
    CHECK(br[1 - bit].probability == doctest::Approx(1.0).epsilon(1e-12));
  }
  for (PauliLetter l : {PauliLetter::X, PauliLetter::Y}) {
    for (int eig = 0; eig < 2; ++eig) {
      PureState s = PureState::pauli_eigenstate("q", l, eig);
      s.apply_z("q");
      const auto br = s.measure_letter("q", l);
      CHECK(br[1 - eig].probability == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  // |0> in Z -> outcome 0.
  CHECK(PureState::zero("q").measure_z("q")[0].probability ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("measurement branch probabilities sum to one") {
  DetRng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const PureState psi = random_state(3, 900 + trial);
    const Angle delta = Angle::units(rng.uniform(16));
    double total = 0;
    for (const auto& br : psi.measure_xy("q1", delta)) total += br.probability;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    total = 0;
    for (const auto& br : psi.measure_z("q0")) total += br.probability;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    PauliString obs;
    obs.set("q0", PauliLetter::X);
    obs.set("q2", PauliLetter::Z);
    total = 0;
    for (const auto& br : psi.measure_pauli(obs)) total += br.probability;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("measure_pauli basics") {
  CHECK(PureState::zero("q").measure_pauli(PauliString::single("q", PauliLetter::Z))[0]
            .probability == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(PureState::one("q").measure_pauli(PauliString::single("q", PauliLetter::Z))[1]
            .probability == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(PureState::zero("q").measure_pauli(PauliString::identity()), SimError);
}

TEST_CASE("partial trace") {
  // Half of an EPR pair is maximally mixed.
  PureState bell({"a", "b"}, {cdouble{0.7071067811865476, 0}, 0, 0,
                              cdouble{0.7071067811865476, 0}});
  const MixedState reduced = bell.to_mixed().partial_trace({"b"});
  CHECK((reduced.op() - Eigen::MatrixXcd::Identity(2, 2) * 0.5).cwiseAbs().maxCoeff() <
        1e-12);

  // Tracing a product factor removes it exactly, trace stays 1.
  const MixedState prod =
      tensor({MixedState::from_pure(PureState::plus("a")),
              MixedState::from_pure(PureState::plus_angle("b", Angle::units(3)))});
  const MixedState only_a = prod.partial_trace({"b"});
  CHECK(only_a.trace_real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((only_a.op() - MixedState::from_pure(PureState::plus("a")).op()).cwiseAbs()
            .maxCoeff() < 1e-12);
  CHECK(only_a.hermiticity_error() < 1e-12);
  CHECK(only_a.min_eigenvalue() > -1e-10);
}

TEST_CASE("state distance and fidelity") {
  const PureState zero = PureState::zero("q");
  CHECK(state_distance(zero, zero) == doctest::Approx(0.0));
  CHECK(state_distance(zero, PureState::one("q")) == doctest::Approx(1.0));

  // Trace distance between id/2 and |0><0| is 1/2 (eigenvalue oracle: the
  // difference has eigenvalues ±1/2).
  const double d = state_distance(MixedState::maximally_mixed({"q"}),
                                  MixedState::from_pure(zero));
  CHECK(d == doctest::Approx(0.5).epsilon(1e-12));

  // Global phase is ignored for pure states.
  PureState phased = zero;
  phased.apply_zrot("q", Angle::units(5));
  PureState one_phased = PureState::one("q");
  one_phased.apply_zrot("q", Angle::units(5));
  CHECK(state_distance(one_phased, PureState::one("q")) < 1e-12);
}

TEST_CASE("register cap and label errors") {
  std::vector<PureState> many;
  for (int i = 0; i < 17; ++i) many.push_back(PureState::zero("q" + std::to_string(i)));
  CHECK_THROWS_AS(tensor(many), SimError);
  CHECK_THROWS_AS(PureState::plus("a").apply_cz("a", "a"), SimError);
}

TEST_CASE("mixed-state measurement matches pure-state branches") {
  const PureState psi = random_state(2, 321);
  const MixedState rho = psi.to_mixed();
  const auto pure_br = psi.measure_xy("q0", Angle::units(3));
  const auto mixed_br = rho.measure_xy("q0", Angle::units(3));
  for (int o = 0; o < 2; ++o) {
    CHECK(mixed_br[o].probability ==
          doctest::Approx(pure_br[o].probability).epsilon(1e-10));
    if (!pure_br[o].zero_probability) {
      const MixedState from_pure = pure_br[o].state.to_mixed();
      CHECK((from_pure.op() - mixed_br[o].state.op()).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}
