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

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "spintop/coherent.hpp"
#include "spintop/grid.hpp"
#include "spintop/quantum_top.hpp"

namespace spintop {

/// L(z, z1; t) = <z| U(t) |z1>, for any s, through the Dicke basis where U is
/// diagonal.
inline Complex amplitude_propagator(const PhasePoint& z, const PhasePoint& z1, double t,
                                    const TopParams& p) {
  const CVector u = propagator_phases(p, t);
  const CVector a = coherent_amplitudes(p.spin, z);
  const CVector b = coherent_amplitudes(p.spin, z1);
  return a.dot(u.cwiseProduct(b));
}

/// Closed form of L for s = 1 in stereographic labels:
///   [e^{-i(omega + J/2)t} + 2 z* z1 + z*^2 z1^2 e^{-i(-omega + J/2)t}]
///   / ((1 + |z|^2)(1 + |z1|^2)).
inline Complex amplitude_propagator_spin1(Complex z, Complex z1, double t, const TopParams& p) {
  if (p.spin.twice() != 2) throw InvalidArgument("amplitude_propagator_spin1: requires s = 1");
  p.validate();
  const double twist = p.J / 2.0;
  const Complex zc = std::conj(z);
  const Complex num = std::polar(1.0, -(p.omega + twist) * t) + 2.0 * zc * z1 +
                      zc * zc * z1 * z1 * std::polar(1.0, -(-p.omega + twist) * t);
  return num / ((1.0 + std::norm(z)) * (1.0 + std::norm(z1)));
}

/// L(z, z1; t) L*(z, z2; t), the integrand of the bilinear Q propagation.
inline Complex bilinear_kernel(const PhasePoint& z, const PhasePoint& z1, const PhasePoint& z2,
                               double t, const TopParams& p) {
  return amplitude_propagator(z, z1, t, p) * std::conj(amplitude_propagator(z, z2, t, p));
}

/// K(z, z1; t) = |L(z, z1; t)|^2 >= 0.
inline double diag_kernel(const PhasePoint& z, const PhasePoint& z1, double t, const TopParams& p) {
  return std::norm(amplitude_propagator(z, z1, t, p));
}

/// Q(z, t) = \int\int L(z,z1) L*(z,z2) <z1|rho0|z2> d mu(z1) d mu(z2).
///
/// The double integral is contracted through the Dicke matrix elements of
/// rho0: with A_k(z) = \int d mu(z1) L(z, z1; t) <z1|k>, one has
/// Q(z, t) = sum_kl A_k rho0_kl A_l^*. Each A_k is a single spherical
/// integral of a trigonometric polynomial, evaluated exactly on the minimal
/// exact quadrature grid for s.
inline QGrid propagate_q(const DensityOperator& rho0, QGrid grid, double t, const TopParams& p) {
  if (rho0.spin() != p.spin || grid.spin != p.spin) {
    throw InvalidArgument("propagate_q: spin mismatch");
  }
  if (!grid.is_exact()) throw InvalidArgument("propagate_q: grid under-resolved");
  const Eigen::Index d = p.spin.dim();
  const QGrid inner = make_grid(p.spin, p.spin.twice() + 2, 2 * p.spin.twice() + 2);

  // U|z1> at the inner nodes, and <z1|k>.
  const CVector u = propagator_phases(p, t);
  std::vector<CVector> evolved_inner;
  std::vector<CVector> bra_inner;
  evolved_inner.reserve(inner.size());
  bra_inner.reserve(inner.size());
  for (const auto& n : inner.nodes) {
    const CVector c = coherent_amplitudes(p.spin, n);
    evolved_inner.push_back(u.cwiseProduct(c));
    bra_inner.push_back(c.conjugate());
  }

  for (std::size_t i = 0; i < grid.size(); ++i) {
    const CVector a = coherent_amplitudes(p.spin, grid.nodes[i]);
    CVector amp = CVector::Zero(d);
    for (std::size_t j = 0; j < inner.size(); ++j) {
      const Complex ell = a.dot(evolved_inner[j]);  // L(z, z1_j; t)
      amp += inner.weights[j] * ell * bra_inner[j];
    }
    grid.values[i] = (amp.transpose() * rho0.matrix() * amp.conjugate()).value().real();
  }
  return grid;
}

struct KernelWitness {
  std::string kind;  // "max_abs_imag", "min_real", "diag_min"
  PhasePoint z;
  PhasePoint z1;
  PhasePoint z2;
  Complex value;
};

struct KernelScanReport {
  TopParams params;
  double t = 0.0;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
  /// Over the sampled triples (z, z1 != z2).
  double min_real = 0.0;
  double max_abs_imag = 0.0;
  /// Over the diagonal slice z1 = z2, i.e. the kernel K.
  double diag_min_real = 0.0;
  double diag_max_abs_imag = 0.0;
  std::vector<KernelWitness> witnesses;
};

/// Uniform double in [0, 1) from the top 53 bits; unlike the standard
/// distributions this is bit-identical across library implementations.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Area-uniform point on the sphere.
inline PhasePoint random_sphere_point(std::mt19937_64& rng) {
  const double c = 1.0 - 2.0 * unit_uniform(rng);
  const double phi = 2.0 * pi * unit_uniform(rng);
  return PhasePoint::from_polar(std::acos(c), phi);
}

/// Seeded scan of the bilinear kernel over independent area-uniform triples.
inline KernelScanReport kernel_positivity_scan(const TopParams& p, double t, std::size_t n_samples,
                                               std::uint64_t seed) {
  if (n_samples < 1) throw InvalidArgument("kernel_positivity_scan: n_samples must be >= 1");
  p.validate();
  std::mt19937_64 rng(seed);
  KernelScanReport r;
  r.params = p;
  r.t = t;
  r.n_samples = n_samples;
  r.seed = seed;
  r.min_real = std::numeric_limits<double>::infinity();
  r.diag_min_real = std::numeric_limits<double>::infinity();
  KernelWitness w_imag{"max_abs_imag", {}, {}, {}, {}};
  KernelWitness w_real{"min_real", {}, {}, {}, {}};
  KernelWitness w_diag{"diag_min", {}, {}, {}, {}};
  for (std::size_t i = 0; i < n_samples; ++i) {
    const PhasePoint z = random_sphere_point(rng);
    const PhasePoint z1 = random_sphere_point(rng);
    const PhasePoint z2 = random_sphere_point(rng);
    const Complex v = bilinear_kernel(z, z1, z2, t, p);
    if (std::abs(v.imag()) > r.max_abs_imag || i == 0) {
      r.max_abs_imag = std::abs(v.imag());
      w_imag = {"max_abs_imag", z, z1, z2, v};
    }
    if (v.real() < r.min_real) {
      r.min_real = v.real();
      w_real = {"min_real", z, z1, z2, v};
    }
    const Complex dv = bilinear_kernel(z, z1, z1, t, p);
    if (dv.real() < r.diag_min_real) {
      r.diag_min_real = dv.real();
      w_diag = {"diag_min", z, z1, z1, dv};
    }
    r.diag_max_abs_imag = std::max(r.diag_max_abs_imag, std::abs(dv.imag()));
  }
  r.witnesses = {w_imag, w_real, w_diag};
  return r;
}

}  // namespace spintop
