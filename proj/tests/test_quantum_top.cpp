// Copyright 2026 The spintop Authors
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


#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "spintop/spintop.hpp"

namespace {

using namespace spintop;

TopParams top(int twice, double omega, double J) {
  return {omega, J, SpinQuantum::from_twice(twice)};
}

TEST(QuantumTop, EnergiesAreDiagonalOfHamiltonian) {
  const TopParams p = top(3, 0.4, 1.7);
  const CMatrix h = oracle::top_hamiltonian(p);
  EXPECT_LT((h.diagonal().real() - p.energies()).norm(), 1e-14);
  EXPECT_LT((h - CMatrix(h.diagonal().asDiagonal())).norm(), 1e-14);
  EXPECT_THROW(top(2, NAN, 1.0).validate(), InvalidArgument);
}

TEST(QuantumTop, EvolutionMatchesMatrixExponential) {
  std::mt19937_64 rng(21);
  for (int twice : {1, 2, 5}) {
    const TopParams p = top(twice, 0.3, 1.1);
    const auto rho = oracle::random_density(p.spin, rng);
    const double t = 2.7;
    const CMatrix u = oracle::expm_hermitian(oracle::top_hamiltonian(p), t);
    const CMatrix expect = u * rho.matrix() * u.adjoint();
    EXPECT_LT((evolve_unitary(rho, p, t).matrix() - expect).norm(), 1e-12);
    const auto psi = oracle::random_pure(p.spin, rng);
    EXPECT_LT((evolve_unitary(psi, p, t).amplitudes() - u * psi.amplitudes()).norm(), 1e-12);
  }
  EXPECT_THROW(evolve_unitary(DensityOperator::maximally_mixed(SpinQuantum::from_twice(1)), top(2, 0, 1), 1.0),
               InvalidArgument);
}

TEST(QuantumTop, RevivalAtNegatedLabel) {
  // omega = 0, s = 1: at t = 2 pi / J every coherent state maps to |-z0>.
  const TopParams p = top(2, 0.0, 1.0);
  std::mt19937_64 rng(22);
  for (int i = 0; i < 10; ++i) {
    const PhasePoint z0 = oracle::random_point(rng);
    const auto out = evolve_unitary(coherent_state(p.spin, z0), p, 2.0 * pi);
    EXPECT_NEAR(fidelity(out, coherent_state(p.spin, z0.negated())), 1.0, 1e-12);
  }
}

TEST(QuantumTop, CatStateIsHalfRevival) {
  std::mt19937_64 rng(23);
  for (int twice : {2, 4, 6, 20}) {
    const TopParams p = top(twice, 0.0, 1.3);
    for (int i = 0; i < 5; ++i) {
      const PhasePoint z0 = oracle::random_point(rng);
      const auto evolved = evolve_unitary(coherent_state(p.spin, z0), p, pi * p.spin.value() / p.J);
      const auto cat = cat_state(z0, p.spin);
      EXPECT_NEAR(cat.amplitudes().norm(), 1.0, 1e-14);
      EXPECT_NEAR(fidelity(evolved, cat), 1.0, 1e-11) << "2s=" << twice;
    }
  }
}

TEST(QuantumTop, CatStateRejectsHalfIntegerSpinAndPoles) {
  EXPECT_THROW(cat_state(PhasePoint::from_z(1.0), SpinQuantum::from_twice(3)), InvalidArgument);
  EXPECT_THROW(cat_state(PhasePoint::north_pole(), SpinQuantum::from_twice(2)), InvalidArgument);
  EXPECT_THROW(cat_state(PhasePoint::south_pole(), SpinQuantum::from_twice(2)), InvalidArgument);
}

TEST(QuantumTop, CatStateIsDoublePeaked) {
  const auto spin = SpinQuantum::from_twice(40);
  const PhasePoint z0 = PhasePoint::from_z(1.0);
  const auto rho = DensityOperator::from_pure(cat_state(z0, spin));
  EXPECT_NEAR(q_function(rho, z0), 0.5, 1e-10);
  EXPECT_NEAR(q_function(rho, z0.negated()), 0.5, 1e-10);
  EXPECT_LT(q_function(rho, PhasePoint::from_z(Complex(0.0, 1.0))), 1e-6);
}

TEST(QuantumTop, QdotMatchesTimeDerivative) {
  std::mt19937_64 rng(24);
  const double h = 1e-4;
  for (int twice : {1, 2, 4}) {
    const TopParams p = top(twice, 0.6, 1.4);
    const auto rho = oracle::random_density(p.spin, rng);
    for (int i = 0; i < 10; ++i) {
      const PhasePoint z = oracle::random_point(rng);
      const double fd = (q_function(evolve_unitary(rho, p, h), z) - q_function(evolve_unitary(rho, p, -h), z)) / (2 * h);
      EXPECT_NEAR(qdot_quantum(rho, p, z), fd, 1e-7);
    }
  }
}

// The canonical coefficients reproduce dQ/dt when applied to finite-difference
// derivatives of Q in the stereographic plane.
TEST(QuantumTop, GeneratorCoefficientsReproduceQdot) {
  std::mt19937_64 rng(25);
  for (int twice : {1, 2, 3, 6}) {
    const TopParams p = top(twice, 0.7, 1.3);
    const auto rho = oracle::random_density(p.spin, rng);
    const auto q = [&](Complex z) { return q_function(rho, PhasePoint::from_z(z)); };
    for (int i = 0; i < 10; ++i) {
      const Complex z = std::polar(0.3 + 1.5 * oracle::random_point(rng).sin2_half(), 6.0 * i / 10.0);
      const PhasePoint pt = PhasePoint::from_z(z);
      Eigen::Vector2d grad;
      Eigen::Matrix2d hess;
      oracle::derivatives_xy(q, z, 1e-4, grad, hess);
      const GeneratorCoefficients g = generator_coefficients(pt, p);
      EXPECT_NEAR(generator_action(g, z, grad, hess), qdot_quantum(rho, p, pt), 2e-6) << "2s=" << twice;
    }
  }
}

TEST(QuantumTop, DriftShiftIsMinusJOverTwoS) {
  // Flipping the sign of the constant drift shift breaks agreement.
  std::mt19937_64 rng(26);
  const TopParams p = top(2, 0.0, 1.0);
  const auto rho = oracle::random_density(p.spin, rng);
  const auto q = [&](Complex z) { return q_function(rho, PhasePoint::from_z(z)); };
  const Complex z(0.6, 0.5);
  const PhasePoint pt = PhasePoint::from_z(z);
  Eigen::Vector2d grad;
  Eigen::Matrix2d hess;
  oracle::derivatives_xy(q, z, 1e-4, grad, hess);
  GeneratorCoefficients g = generator_coefficients(pt, p);
  const double ok = std::abs(generator_action(g, z, grad, hess) - qdot_quantum(rho, p, pt));
  g.drift += kI * (p.J / p.spin.value());
  const double flipped = std::abs(generator_action(g, z, grad, hess) - qdot_quantum(rho, p, pt));
  EXPECT_LT(ok, 1e-6);
  EXPECT_GT(flipped, 1e-3);
}

TEST(QuantumTop, DiffusionIsIndefinite) {
  std::mt19937_64 rng(27);
  for (int twice : {1, 2, 10}) {
    const TopParams p = top(twice, 0.2, 0.9);
    for (int i = 0; i < 50; ++i) {
      const double r = 0.2 * std::pow(25.0, unit_uniform(rng));
      const PhasePoint pt = PhasePoint::from_z(std::polar(r, 2 * pi * unit_uniform(rng)));
      const Eigen::Matrix2d d = generator_coefficients(pt, p).diffusion;
      const double beta = p.J / (2.0 * p.spin.value()) * r * r;
      EXPECT_NEAR(d.trace(), 0.0, 1e-15);
      EXPECT_NEAR(d.determinant(), -0.25 * beta * beta, 1e-12 * beta * beta);
      EXPECT_LT(d.determinant(), 0.0);
    }
  }
}

}  // namespace
