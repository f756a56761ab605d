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
#include <vector>

#include "oracles.hpp"
#include "spintop/spintop.hpp"

namespace {

using namespace spintop;

DephasingParams dephasing(int twice, double omega, double J, double gamma) {
  return {gamma, {omega, J, SpinQuantum::from_twice(twice)}};
}

TEST(Dephasing, MatchesRungeKuttaIntegration) {
  std::mt19937_64 rng(51);
  for (int twice : {2, 4}) {
    for (double gamma : {0.1, 0.5, 1.0}) {
      const DephasingParams dp = dephasing(twice, 0.3, 1.1, gamma);
      const auto rho = oracle::random_density(dp.top.spin, rng);
      const double t = 2.0 / gamma;
      const CMatrix ref = oracle::rk4_master(rho.matrix(), dp, t, 20000);
      EXPECT_LT((evolve_dephasing(rho, dp, t).matrix() - ref).cwiseAbs().maxCoeff(), 1e-8)
          << "2s=" << twice << " gamma=" << gamma;
    }
  }
}

TEST(Dephasing, PopulationsConstantAndTracePreserved) {
  std::mt19937_64 rng(52);
  const DephasingParams dp = dephasing(3, 0.2, 0.7, 0.9);
  const auto rho = oracle::random_density(dp.top.spin, rng);
  for (double t : {0.0, 0.5, 3.0, 50.0}) {
    const CMatrix out = evolve_dephasing(rho, dp, t).matrix();
    EXPECT_LT((out.diagonal() - rho.matrix().diagonal()).norm(), 1e-15);
    EXPECT_NEAR(std::abs(out.trace() - Complex(1.0)), 0.0, 1e-14);
  }
}

TEST(Dephasing, SpinOneExtremeCoherenceDecay) {
  const DephasingParams dp = dephasing(2, 0.0, 0.0, 0.4);
  CMatrix m = CMatrix::Constant(3, 3, Complex(1.0 / 3.0));
  const auto rho = DensityOperator::from_matrix(dp.top.spin, m);
  for (double t : {0.5, 1.0, 2.5}) {
    const CMatrix out = evolve_dephasing(rho, dp, t).matrix();
    EXPECT_NEAR(std::abs(out(0, 2)), std::exp(-2.0 * dp.gamma * t) / 3.0, 1e-15);
    EXPECT_NEAR(std::abs(out(0, 1)), std::exp(-0.5 * dp.gamma * t) / 3.0, 1e-15);
  }
}

TEST(Dephasing, ZeroGammaIsUnitary) {
  std::mt19937_64 rng(53);
  const DephasingParams dp = dephasing(4, 0.3, 1.2, 0.0);
  const auto rho = oracle::random_density(dp.top.spin, rng);
  EXPECT_LT((evolve_dephasing(rho, dp, 2.2).matrix() - evolve_unitary(rho, dp.top, 2.2).matrix()).norm(),
            1e-15);
}

TEST(Dephasing, CompletePositivitySpotCheck) {
  std::mt19937_64 rng(54);
  for (int i = 0; i < 50; ++i) {
    const int twice = 1 + i % 6;
    const DephasingParams dp = dephasing(twice, 0.5, 1.0, 2.0 * unit_uniform(rng));
    const auto rho = oracle::random_density(dp.top.spin, rng);
    const CMatrix out = evolve_dephasing(rho, dp, 5.0 * unit_uniform(rng)).matrix();
    EXPECT_GE(min_eigenvalue(out), -1e-10);
    EXPECT_NO_THROW(DensityOperator::from_matrix(dp.top.spin, out));
  }
}

TEST(Dephasing, RejectsNegativeGamma) {
  const DephasingParams dp = dephasing(2, 0.0, 1.0, -0.1);
  EXPECT_THROW(dp.validate(), InvalidArgument);
  EXPECT_THROW(evolve_dephasing(DensityOperator::maximally_mixed(dp.top.spin), dp, 1.0), InvalidArgument);
}

TEST(PPropagator, ReducesToKnownLimits) {
  std::mt19937_64 rng(55);
  const DephasingParams unitary = dephasing(3, 0.4, 1.3, 0.0);
  for (int i = 0; i < 20; ++i) {
    const PhasePoint z = oracle::random_point(rng);
    const PhasePoint z1 = oracle::random_point(rng);
    const PhasePoint z2 = oracle::random_point(rng);
    const Complex p0 = p_propagator(z, z1, z1, 0.0, dephasing(3, 0.4, 1.3, 0.8));
    EXPECT_NEAR(std::abs(p0 - std::norm(coherent_overlap(unitary.top.spin, z, z1))), 0.0, 1e-14);
    const Complex pu = p_propagator(z, z1, z2, 1.7, unitary);
    EXPECT_NEAR(std::abs(pu - bilinear_kernel(z, z1, z2, 1.7, unitary.top)), 0.0, 1e-14);
  }
}

// Every Dicke matrix element of the dephased dyad decays, and so does its
// Hilbert-Schmidt overlap with the initial dyad; the sandwiched value |P|
// mixes terms of different phase and is not monotone in general.
TEST(PPropagator, PureDephasingDecaysTermwiseNotInModulus) {
  std::mt19937_64 rng(56);
  const DephasingParams dp = dephasing(4, 0.0, 0.0, 1.0);
  const auto spin = dp.top.spin;
  int non_monotone = 0;
  for (int i = 0; i < 200; ++i) {
    const PhasePoint z = oracle::random_point(rng);
    const PhasePoint z1 = oracle::random_point(rng);
    const PhasePoint z2 = oracle::random_point(rng);
    const CMatrix dyad = coherent_amplitudes(spin, z1) * coherent_amplitudes(spin, z2).adjoint();
    double previous_p = INFINITY;
    double previous_r = INFINITY;
    CMatrix previous_m = dyad;
    bool rises = false;
    for (double t = 0.0; t <= 4.0; t += 0.1) {
      const double v = std::abs(p_propagator(z, z1, z2, t, dp));
      rises = rises || v > previous_p + 1e-14;
      previous_p = v;
      const double r = coherence_retention(z1, z2, dp.gamma, spin, t);
      EXPECT_LE(r, previous_r + 1e-15);
      previous_r = r;
      const CMatrix m = apply_dephasing_map(dyad, dp, t);
      EXPECT_TRUE((m.cwiseAbs().array() <= previous_m.cwiseAbs().array() + 1e-16).all());
      previous_m = m;
    }
    non_monotone += rises ? 1 : 0;
  }
  EXPECT_GT(non_monotone, 0);
}

TEST(ShortTimeFactor, Examples) {
  const auto spin = SpinQuantum::from_twice(4);
  const PhasePoint a = PhasePoint::from_z(std::polar(0.7, 0.3));
  const PhasePoint b = PhasePoint::from_z(std::polar(0.7, 2.1));
  EXPECT_DOUBLE_EQ(short_time_factor(a, b, 1.0, spin, 0.1), 1.0);
  EXPECT_NEAR(short_time_factor(PhasePoint::north_pole(), PhasePoint::south_pole(), 0.3, spin, 0.01),
              1.0 - 0.5 * 0.3 * 2.0 * 0.01, 1e-15);
  std::mt19937_64 rng(57);
  for (int i = 0; i < 50; ++i) {
    EXPECT_LE(short_time_factor(oracle::random_point(rng), oracle::random_point(rng), 0.5, spin, 0.2), 1.0);
  }
  EXPECT_THROW(short_time_factor(a, b, 1.0, spin, -1.0), InvalidArgument);
}

TEST(CoherenceRetention, LeadingOrderCoefficient) {
  // d/dt at 0: -(gamma/2s) [ (s/2)(sin^2 th1 + sin^2 th2) + 4 s^2 X^2 ].
  std::mt19937_64 rng(58);
  const auto spin = SpinQuantum::from_twice(40);
  const double s = spin.value();
  const double gamma = 1.0;
  const double h = 1e-7;
  for (int i = 0; i < 20; ++i) {
    const PhasePoint a = oracle::random_point(rng);
    const PhasePoint b = oracle::random_point(rng);
    const double x = 0.5 * (std::cos(b.theta()) - std::cos(a.theta()));
    const double expected = -(gamma / (2 * s)) *
        (0.5 * s * (std::pow(std::sin(a.theta()), 2) + std::pow(std::sin(b.theta()), 2)) + 4 * s * s * x * x);
    const double slope = (coherence_retention(a, b, gamma, spin, h) - 1.0) / h;
    EXPECT_NEAR(slope, expected, 1e-5 * (1.0 + std::abs(expected)));
    EXPECT_NEAR(coherence_retention(a, b, gamma, spin, 0.0), 1.0, 1e-13);
  }
}

TEST(CoherenceRetention, FallsWithLatitudeSeparationAtLargeSpin) {
  std::mt19937_64 rng(59);
  const auto spin = SpinQuantum::from_twice(40);
  const double t = 1e-3;
  std::vector<double> x2, retained;
  for (int i = 0; i < 200; ++i) {
    const PhasePoint a = oracle::random_point(rng);
    const PhasePoint b = oracle::random_point(rng);
    const double f = short_time_factor(a, b, 1.0, spin, t);
    x2.push_back((1.0 - f) / (0.5 * spin.value() * t));
    retained.push_back(coherence_retention(a, b, 1.0, spin, t));
  }
  EXPECT_LT(oracle::spearman(x2, retained), -0.9);
}

TEST(LongTimeDephasing, AzimuthalStructureFadesAndMarginalHolds) {
  const DephasingParams dp = dephasing(2, 0.0, 1.0, 1.0);
  const PhasePoint z0 = PhasePoint::from_z(1.0);
  const auto rho0 = DensityOperator::from_pure(coherent_state(dp.top.spin, z0));
  const QGrid g = make_grid(dp.top.spin, 16, 32);
  const auto classical = evolve_classical([&](const PhasePoint& z) { return q_coherent(dp.top.spin, z, z0); },
                                          dp.top, 10.0, g);
  const auto m_classical = theta_marginal(classical);
  const auto m_initial = theta_marginal(q_grid(rho0, g));
  double previous = INFINITY;
  for (double gt : {10.0, 20.0, 40.0, 80.0}) {
    const QGrid q = q_grid(evolve_dephasing(rho0, dp, gt / dp.gamma), g);
    const double variation = azimuthal_variation(q);
    EXPECT_LT(variation, previous);
    previous = variation;
    const auto m = theta_marginal(q);
    for (std::size_t i = 0; i < m.size(); ++i) {
      EXPECT_NEAR(m[i], m_initial[i], 1e-13);
      EXPECT_NEAR(m[i], m_classical[i], 1e-13);
    }
  }
  // Slowest coherence decays as e^{-gamma t / 2s}.
  const QGrid q80 = q_grid(evolve_dephasing(rho0, dp, 80.0), g);
  EXPECT_LT(azimuthal_variation(q80), 1e-15 + 2.0 * std::exp(-40.0));
}

}  // namespace
