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

#include "spintop/phase_point.hpp"
#include "spintop/spin.hpp"
#include "spintop/states.hpp"

namespace spintop {

inline Complex ipow(Complex base, int n) {
  Complex result(1.0, 0.0);
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

/// Amplitudes of the SU(2) coherent state |z> in the Dicke basis:
///   c_k = sqrt(binom(2s, k)) z^k / (1 + |z|^2)^s
///       = sqrt(binom(2s, k)) cos(theta/2)^(2s-k) sin(theta/2)^k e^{i k phi}.
/// The polar form is used so the south pole needs no special case.
inline CVector coherent_amplitudes(SpinQuantum spin, const PhasePoint& p) {
  const int n = spin.twice();
  const auto sb = sqrt_binomials(n);
  const double c = p.cos_half();
  const double s = p.sin_half();
  CVector out(spin.dim());
  for (int k = 0; k <= n; ++k) {
    const double mag = sb[static_cast<std::size_t>(k)] * std::pow(c, n - k) * std::pow(s, k);
    out(k) = std::polar(mag, k * p.phi());
  }
  return out;
}

inline PureState coherent_state(SpinQuantum spin, const PhasePoint& p) {
  return PureState::normalized(spin, coherent_amplitudes(spin, p));
}

/// <z1|z2> = (1 + z1* z2)^{2s} / ((1+|z1|^2)^s (1+|z2|^2)^s), written in
/// half-angle form.
inline Complex coherent_overlap(SpinQuantum spin, const PhasePoint& a, const PhasePoint& b) {
  const Complex base = a.cos_half() * b.cos_half() +
                       a.sin_half() * b.sin_half() * std::polar(1.0, b.phi() - a.phi());
  return ipow(base, spin.twice());
}

/// Q(z) = <z|rho|z>.
inline double q_function(const DensityOperator& rho, const PhasePoint& p) {
  const CVector c = coherent_amplitudes(rho.spin(), p);
  return c.dot(rho.matrix() * c).real();
}

/// Q-function of the coherent projector |z0><z0|:
///   [(1 + z0* z)(1 + z0 z*) / ((1 + |z0|^2)(1 + |z|^2))]^{2s}.
inline double q_coherent(SpinQuantum spin, const PhasePoint& p, const PhasePoint& p0) {
  return std::norm(coherent_overlap(spin, p0, p));
}

}  // namespace spintop
