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

#include "spintop/coherent.hpp"
#include "spintop/phase_point.hpp"
#include "spintop/spin.hpp"
#include "spintop/states.hpp"

namespace spintop {

/// Nonlinear top H = omega S_z + (J / 2s) S_z^2.
struct TopParams {
  double omega = 0.0;
  double J = 0.0;
  SpinQuantum spin = SpinQuantum::from_twice(2);

  void validate() const {
    if (!std::isfinite(omega) || !std::isfinite(J)) {
      throw InvalidArgument("TopParams: omega and J must be finite");
    }
  }

  Eigen::VectorXd energies() const { return diagonal_energies(spin, omega, J); }
};

/// e^{-i E_k t} for each basis index.
inline CVector propagator_phases(const TopParams& p, double t) {
  p.validate();
  const Eigen::VectorXd e = p.energies();
  CVector u(e.size());
  for (Eigen::Index k = 0; k < e.size(); ++k) u(k) = std::polar(1.0, -e(k) * t);
  return u;
}

/// rho(t)_{kl} = rho_{kl} e^{-i (E_k - E_l) t}; H is diagonal in the Dicke basis.
inline DensityOperator evolve_unitary(const DensityOperator& rho0, const TopParams& p, double t) {
  if (rho0.spin() != p.spin) throw InvalidArgument("evolve_unitary: dimension mismatch");
  const CVector u = propagator_phases(p, t);
  CMatrix m = u.asDiagonal() * rho0.matrix() * u.conjugate().asDiagonal();
  return DensityOperator::trusted(p.spin, std::move(m));
}

inline PureState evolve_unitary(const PureState& psi, const TopParams& p, double t) {
  if (psi.spin() != p.spin) throw InvalidArgument("evolve_unitary: dimension mismatch");
  const CVector u = propagator_phases(p, t);
  return PureState::normalized(p.spin, u.cwiseProduct(psi.amplitudes()));
}

/// 2^{-1/2} (e^{-i pi/4} |z0> + (-1)^s e^{i pi/4} |-z0>), the state reached
/// from |z0> at t = pi s / J with omega = 0. The two branches need not be
/// orthogonal, but <z0|-z0> is real so the cross terms cancel and the sum is
/// already normalized; the explicit renormalization only absorbs rounding.
inline PureState cat_state(const PhasePoint& z0, SpinQuantum spin) {
  if (!spin.is_integer()) {
    throw InvalidArgument("cat_state: (-1)^s requires integer s");
  }
  if (z0.theta() == 0.0 || z0.is_south_pole()) {
    throw InvalidArgument("cat_state: |z0> and |-z0> coincide at the poles");
  }
  const double sign = (spin.twice() / 2) % 2 == 0 ? 1.0 : -1.0;
  const CVector a = coherent_amplitudes(spin, z0);
  const CVector b = coherent_amplitudes(spin, z0.negated());
  const CVector cat =
      (std::polar(1.0, -pi / 4.0) * a + sign * std::polar(1.0, pi / 4.0) * b) / std::sqrt(2.0);
  return PureState::normalized(spin, cat);
}

/// Coefficients of the Q-function evolution equation written in canonical
/// first- plus second-order form, with z = x + i y:
///
///   dQ/dt = -(drift * z dQ/dz + c.c.) + sum_ij diffusion_ij d_i d_j Q.
///
/// Expanding the nested operator gives drift = i(omega + J cos(theta) - J/2s)
/// and the second-order part i (J/2s) z^2 d^2/dz^2 + c.c. For the classical
/// Liouville flow the drift is zdot / z = i(omega + J cos(theta)) and the
/// diffusion vanishes.
struct GeneratorCoefficients {
  Complex drift;
  Eigen::Matrix2d diffusion;
};

inline GeneratorCoefficients generator_coefficients(const PhasePoint& p, const TopParams& params) {
  params.validate();
  const double s = params.spin.value();
  const Complex z = p.z();
  const double rate = params.omega + params.J * std::cos(p.theta());
  GeneratorCoefficients g;
  g.drift = kI * (rate - params.J / (2.0 * s));
  // beta d^2/dz^2 + c.c. with d/dz = (d_x - i d_y)/2 gives
  // (Re beta / 2)(Q_xx - Q_yy) + Im beta Q_xy.
  const Complex beta = kI * (params.J / (2.0 * s)) * z * z;
  g.diffusion << 0.5 * beta.real(), 0.5 * beta.imag(),
                 0.5 * beta.imag(), -0.5 * beta.real();
  return g;
}

/// Applies the generator to a function given its Cartesian gradient and
/// Hessian at z.
inline double generator_action(const GeneratorCoefficients& g, Complex z,
                               const Eigen::Vector2d& grad, const Eigen::Matrix2d& hess) {
  const double first = -(g.drift * z * Complex(grad(0), -grad(1))).real();
  return first + (g.diffusion.array() * hess.array()).sum();
}

/// dQ/dt at time 0 from the commutator: <z| -i[H, rho] |z>.
inline double qdot_quantum(const DensityOperator& rho, const TopParams& p, const PhasePoint& z) {
  if (rho.spin() != p.spin) throw InvalidArgument("qdot_quantum: dimension mismatch");
  p.validate();
  const Eigen::VectorXd e = p.energies();
  const CVector c = coherent_amplitudes(p.spin, z);
  const CMatrix& r = rho.matrix();
  Complex acc{};
  for (Eigen::Index k = 0; k < r.rows(); ++k) {
    for (Eigen::Index l = 0; l < r.cols(); ++l) {
      acc += std::conj(c(k)) * (-kI * (e(k) - e(l)) * r(k, l)) * c(l);
    }
  }
  return acc.real();
}

}  // namespace spintop
