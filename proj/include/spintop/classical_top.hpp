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

#include <algorithm>
#include <cmath>
#include <string>

#include "spintop/grid.hpp"
#include "spintop/phase_point.hpp"
#include "spintop/quantum_top.hpp"

namespace spintop {

/// Azimuthal angular velocity of the classical top at polar angle theta:
/// zdot = i (omega + J (1-|z|^2)/(1+|z|^2)) z, i.e. phidot = omega + J cos(theta).
inline double azimuthal_rate(double theta, const TopParams& p) {
  return p.omega + p.J * std::cos(theta);
}

/// Characteristic flow of the classical top. theta is conserved exactly (it
/// is carried over, never recomputed through the chart); the poles are fixed.
inline PhasePoint flow(const PhasePoint& z0, const TopParams& p, double t) {
  p.validate();
  if (z0.theta() == 0.0 || z0.is_south_pole()) return z0;
  return PhasePoint::from_polar(z0.theta(), z0.phi() + azimuthal_rate(z0.theta(), p) * t);
}

namespace detail {

inline void require_normalized(double integral, double tol, const char* what) {
  if (std::abs(integral - 1.0) > tol) {
    throw InvalidArgument(std::string(what) + ": initial distribution is not normalized (integral " +
                          std::to_string(integral) + ")");
  }
}

}  // namespace detail

/// Liouville propagation by backward characteristics:
///   Q(z, t) = Q0(flow(z, -t)),
/// evaluated at every node of `grid`. q0 is any callable PhasePoint -> double,
/// normalized against d mu.
template <class F>
QGrid evolve_classical(F&& q0, const TopParams& p, double t, QGrid grid) {
  p.validate();
  const QGrid initial = sample(grid, q0);
  detail::require_normalized(initial.integral(), 1e-6, "evolve_classical");
  return sample(std::move(grid), [&](const PhasePoint& z) { return q0(flow(z, p, -t)); });
}

struct InterpolatedEvolution {
  QGrid grid;
  /// max over nodes of |linear - cubic| periodic interpolation along phi.
  double interpolation_error = 0.0;
};

/// Grid-sampled variant. Because the flow conserves theta, the backward
/// characteristic of a node lands on the same ring, so the bilinear
/// interpolation in (cos theta, phi) reduces to periodic linear
/// interpolation along phi. The reported error compares against a periodic
/// Catmull-Rom interpolant.
inline InterpolatedEvolution evolve_classical(const QGrid& q0, const TopParams& p, double t) {
  p.validate();
  detail::require_normalized(q0.integral(), 1e-9, "evolve_classical");
  InterpolatedEvolution out{q0, 0.0};
  const int np = q0.n_phi;
  const double dphi = 2.0 * pi / np;
  for (int it = 0; it < q0.n_theta; ++it) {
    const auto ring = [&](int j) { return q0.values[q0.index(it, ((j % np) + np) % np)]; };
    for (int ip = 0; ip < np; ++ip) {
      const PhasePoint back = flow(q0.nodes[q0.index(it, ip)], p, -t);
      double u = back.phi() / dphi;
      const int j = std::min(static_cast<int>(std::floor(u)), np - 1);
      u -= j;
      const double f0 = ring(j - 1), f1 = ring(j), f2 = ring(j + 1), f3 = ring(j + 2);
      const double linear = (1.0 - u) * f1 + u * f2;
      const double cubic =
          f1 + 0.5 * u * (f2 - f0 + u * (2.0 * f0 - 5.0 * f1 + 4.0 * f2 - f3 + u * (3.0 * (f1 - f2) + f3 - f0)));
      out.grid.values[q0.index(it, ip)] = linear;
      out.interpolation_error = std::max(out.interpolation_error, std::abs(linear - cubic));
    }
  }
  return out;
}

/// Liouville counterpart of generator_coefficients: pure drift
/// zdot / z = i(omega + J cos(theta)), no second-order part.
inline GeneratorCoefficients classical_generator_coefficients(const PhasePoint& z, const TopParams& p) {
  p.validate();
  return {kI * azimuthal_rate(z.theta(), p), Eigen::Matrix2d::Zero()};
}

/// dQ/dt at t = 0 for the Liouville flow: -phidot(theta) dQ0/dphi. The flow
/// velocity is exact; the azimuthal derivative of q0 uses a 5-point central
/// stencil.
template <class F>
double qdot_classical(F&& q0, const TopParams& p, const PhasePoint& z, double h = 1e-3) {
  p.validate();
  if (z.theta() == 0.0 || z.is_south_pole()) return 0.0;
  const auto at = [&](double dphi) { return q0(PhasePoint::from_polar(z.theta(), z.phi() + dphi)); };
  const double dq = (-at(2.0 * h) + 8.0 * at(h) - 8.0 * at(-h) + at(-2.0 * h)) / (12.0 * h);
  return -azimuthal_rate(z.theta(), p) * dq;
}

}  // namespace spintop
