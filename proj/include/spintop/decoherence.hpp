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
#include "spintop/quantum_top.hpp"
#include "spintop/states.hpp"

namespace spintop {

/// Collective dephasing on top of the nonlinear top:
///   drho/dt = -i[H, rho] - (gamma / 2s) [S_z, [S_z, rho]].
struct DephasingParams {
  double gamma = 0.0;
  TopParams top;

  void validate() const {
    top.validate();
    if (!std::isfinite(gamma) || gamma < 0.0) {
      throw InvalidArgument("DephasingParams: gamma must be finite and >= 0");
    }
  }
};

/// Closed-form solution of the master equation applied elementwise:
///   M_kl -> M_kl e^{-i(E_k - E_l)t} e^{-(gamma/2s)(m_k - m_l)^2 t}.
/// Linear, so it also acts on non-Hermitian operators such as |z1><z2|.
inline CMatrix apply_dephasing_map(const CMatrix& m, const DephasingParams& dp, double t) {
  dp.validate();
  const SpinQuantum spin = dp.top.spin;
  if (m.rows() != spin.dim() || m.cols() != spin.dim()) {
    throw InvalidArgument("apply_dephasing_map: dimension mismatch");
  }
  const Eigen::VectorXd e = dp.top.energies();
  const double rate = dp.gamma / (2.0 * spin.value());
  CMatrix out(m.rows(), m.cols());
  for (Eigen::Index k = 0; k < m.rows(); ++k) {
    for (Eigen::Index l = 0; l < m.cols(); ++l) {
      const double dm = spin.m(k) - spin.m(l);
      out(k, l) = m(k, l) * std::polar(std::exp(-rate * dm * dm * t), -(e(k) - e(l)) * t);
    }
  }
  return out;
}

inline DensityOperator evolve_dephasing(const DensityOperator& rho0, const DephasingParams& dp,
                                        double t) {
  if (rho0.spin() != dp.top.spin) throw InvalidArgument("evolve_dephasing: dimension mismatch");
  return DensityOperator::trusted(rho0.spin(), apply_dephasing_map(rho0.matrix(), dp, t));
}

/// P(z; z1, z2, t) = <z| e^{Dt}(|z1><z2|) |z>.
inline Complex p_propagator(const PhasePoint& z, const PhasePoint& z1, const PhasePoint& z2,
                            double t, const DephasingParams& dp) {
  const SpinQuantum spin = dp.top.spin;
  const CVector a = coherent_amplitudes(spin, z1);
  const CVector b = coherent_amplitudes(spin, z2);
  const CVector c = coherent_amplitudes(spin, z);
  const CMatrix dyad = apply_dephasing_map(a * b.adjoint(), dp, t);
  return c.dot(dyad * c);
}

/// Leading-order large-s suppression of an off-diagonal projector,
///   1 - (gamma s t / 2) X^2,  X = (|z1|^2 - |z2|^2) / ((1+|z1|^2)(1+|z2|^2)).
inline double short_time_factor(const PhasePoint& z1, const PhasePoint& z2, double gamma,
                                SpinQuantum spin, double t) {
  if (t < 0.0) throw InvalidArgument("short_time_factor: t must be >= 0");
  const double x = z1.sin2_half() * (1.0 - z2.sin2_half()) - z2.sin2_half() * (1.0 - z1.sin2_half());
  return 1.0 - 0.5 * gamma * spin.value() * t * x * x;
}

/// Hilbert-Schmidt overlap tr(M^dag e^{Dt} M) of the dyad M = |z1><z2| with
/// its image under pure dephasing:
///   sum_kl |c_k(z1)|^2 |c_l(z2)|^2 e^{-(gamma/2s)(m_k-m_l)^2 t}.
/// Independent of z and of H; equals 1 at t = 0 and decreases monotonically.
inline double coherence_retention(const PhasePoint& z1, const PhasePoint& z2, double gamma,
                                  SpinQuantum spin, double t) {
  if (t < 0.0) throw InvalidArgument("coherence_retention: t must be >= 0");
  const CVector a = coherent_amplitudes(spin, z1);
  const CVector b = coherent_amplitudes(spin, z2);
  const double rate = gamma / (2.0 * spin.value());
  double acc = 0.0;
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    for (Eigen::Index l = 0; l < b.size(); ++l) {
      const double dm = spin.m(k) - spin.m(l);
      acc += std::norm(a(k)) * std::norm(b(l)) * std::exp(-rate * dm * dm * t);
    }
  }
  return acc;
}

}  // namespace spintop
