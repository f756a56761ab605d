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

TEST(AmplitudePropagator, IdentityAtTimeZero) {
  std::mt19937_64 rng(41);
  const TopParams p = top(3, 0.5, 1.0);
  for (int i = 0; i < 20; ++i) {
    const PhasePoint a = oracle::random_point(rng);
    const PhasePoint b = oracle::random_point(rng);
    EXPECT_NEAR(std::abs(amplitude_propagator(a, b, 0.0, p) - coherent_overlap(p.spin, a, b)), 0.0, 1e-14);
  }
}

TEST(AmplitudePropagator, MatchesMatrixExponential) {
  std::mt19937_64 rng(42);
  const TopParams p = top(4, 0.3, 1.7);
  const CMatrix u = oracle::expm_hermitian(oracle::top_hamiltonian(p), 0.9);
  for (int i = 0; i < 20; ++i) {
    const PhasePoint a = oracle::random_point(rng);
    const PhasePoint b = oracle::random_point(rng);
    const Complex expect = coherent_amplitudes(p.spin, a).dot(u * coherent_amplitudes(p.spin, b));
    EXPECT_NEAR(std::abs(amplitude_propagator(a, b, 0.9, p) - expect), 0.0, 1e-13);
  }
}

TEST(AmplitudePropagator, SpinOneClosedForm) {
  std::mt19937_64 rng(43);
  const TopParams p = top(2, 0.37, 1.21);
  for (int i = 0; i < 100; ++i) {
    const Complex z(oracle::gaussian(rng), oracle::gaussian(rng));
    const Complex z1(oracle::gaussian(rng), oracle::gaussian(rng));
    const double t = 3.0 * unit_uniform(rng);
    const Complex general = amplitude_propagator(PhasePoint::from_z(z), PhasePoint::from_z(z1), t, p);
    EXPECT_NEAR(std::abs(amplitude_propagator_spin1(z, z1, t, p) - general), 0.0, 1e-12);
  }
  EXPECT_THROW(amplitude_propagator_spin1(0.0, 1.0, 1.0, top(3, 0.0, 1.0)), InvalidArgument);
}

TEST(PropagateQ, EqualsQOfEvolvedState) {
  std::mt19937_64 rng(44);
  int cases = 0;
  for (int twice : {1, 2, 3, 4}) {
    const TopParams p = top(twice, 0.2, 1.1);
    const QGrid g = make_grid(p.spin, twice + 3, 2 * twice + 3);
    for (int i = 0; i < 5; ++i, ++cases) {
      const auto rho = oracle::random_density(p.spin, rng);
      const double t = 4.0 * unit_uniform(rng);
      const QGrid a = propagate_q(rho, g, t, p);
      const QGrid b = q_grid(evolve_unitary(rho, p, t), g);
      EXPECT_LT(compare(a, b).sup, 1e-12);
    }
  }
  EXPECT_EQ(cases, 20);
}

TEST(DiagonalKernel, NonnegativeAndNormalized) {
  std::mt19937_64 rng(45);
  const TopParams p = top(2, 0.0, 1.0);
  const QGrid inner = make_grid(p.spin, 6, 12);
  for (int i = 0; i < 10; ++i) {
    const PhasePoint z = oracle::random_point(rng);
    const QGrid k = sample(inner, [&](const PhasePoint& z1) { return diag_kernel(z, z1, pi / 2.0, p); });
    for (double v : k.values) EXPECT_GE(v, 0.0);
    EXPECT_NEAR(k.integral(), 1.0, 1e-12);
  }
}

TEST(BilinearKernel, HermitianSymmetryAndComplexWitness) {
  const TopParams p = top(2, 0.0, 1.0);
  const double t = pi / 2.0;
  const PhasePoint z = PhasePoint::from_z(Complex(0.5, 0.2));
  const PhasePoint z1 = PhasePoint::from_z(1.0);
  const PhasePoint z2 = PhasePoint::from_z(Complex(0.0, 1.0));
  const Complex v = bilinear_kernel(z, z1, z2, t, p);
  EXPECT_NEAR(std::abs(v - std::conj(bilinear_kernel(z, z2, z1, t, p))), 0.0, 1e-15);
  EXPECT_GT(std::abs(v.imag()), 0.05);
  // At z = 0 the same pair gives a real value, 1/4.
  const Complex at_origin = bilinear_kernel(PhasePoint::north_pole(), z1, z2, t, p);
  EXPECT_NEAR(at_origin.real(), 0.25, 1e-15);
  EXPECT_NEAR(at_origin.imag(), 0.0, 1e-15);
}

TEST(KernelScan, DeterministicAndWitnessesReproduce) {
  const TopParams p = top(2, 0.0, 1.0);
  const KernelScanReport a = kernel_positivity_scan(p, pi / 2.0, 2000, 7);
  const KernelScanReport b = kernel_positivity_scan(p, pi / 2.0, 2000, 7);
  EXPECT_EQ(a.max_abs_imag, b.max_abs_imag);
  EXPECT_EQ(a.min_real, b.min_real);
  ASSERT_EQ(a.witnesses.size(), 3u);
  for (const auto& w : a.witnesses) {
    const Complex again = bilinear_kernel(w.z, w.z1, w.z2, a.t, p);
    EXPECT_EQ(again, w.value) << w.kind;
  }
  EXPECT_GT(a.max_abs_imag, 0.1);
  EXPECT_GE(a.diag_min_real, 0.0);
  EXPECT_LT(a.diag_max_abs_imag, 1e-15);
  EXPECT_NE(kernel_positivity_scan(p, pi / 2.0, 2000, 8).max_abs_imag, a.max_abs_imag);
  EXPECT_THROW(kernel_positivity_scan(p, 1.0, 0, 1), InvalidArgument);
}

TEST(KernelScan, UnitaryAtTimeZeroStillHasComplexOffDiagonal) {
  // Even without dynamics, <z|z1><z2|z> is complex for generic triples.
  const KernelScanReport r = kernel_positivity_scan(top(2, 0.0, 1.0), 0.0, 500, 3);
  EXPECT_GT(r.max_abs_imag, 0.0);
}

}  // namespace
