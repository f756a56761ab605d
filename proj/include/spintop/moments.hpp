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

#include "spintop/grid.hpp"
#include "spintop/spin.hpp"
#include "spintop/states.hpp"

namespace spintop {

struct Moments {
  double sz = 0.0;
  Complex sminus{};
  double sz2 = 0.0;
  Complex sminus2{};
};

struct ClassicalMoments {
  double sz = 0.0;
  Complex sminus{};
};

/// Trace oracle: tr(rho A) for A in {S_z, S_-, S_z^2, S_-^2}.
inline Moments moments_from_rho(const DensityOperator& rho) {
  const SpinOps ops = spin_operators(rho.spin());
  Moments m;
  m.sz = rho.expectation(ops.sz).real();
  m.sminus = rho.expectation(ops.sminus);
  m.sz2 = rho.expectation(ops.sz * ops.sz).real();
  m.sminus2 = rho.expectation(ops.sminus * ops.sminus);
  return m;
}

/// Kernels K(z) with <A> = \int d mu Q(z) K(z). In terms of the polar chart,
/// with c = cos(theta) and w = |z|^2:
///   S_z    : (s+1) (1-w)/(1+w)                  = (s+1) c
///   S_-    : 2 (s+1) z* / (1+w)                  = (s+1) sin(theta) e^{-i phi}
///   S_-^2  : 2 (2s+3)(s+1) z*^2 / (1+w)^2        = (s+1)(s+3/2) sin^2(theta) e^{-2i phi}
///   S_z^2  : ((s+1)^2 - 2(s+1)(s+2) w + (s+1)^2 w^2) / (1+w)^2
///          = (s+1)(s+3/2) c^2 - (s+1)/2
/// The S_z^2 kernel was fixed by fitting its three coefficients against the
/// trace oracle; see test_spin_core.cpp (SecondMomentKernelFit).
struct MomentKernels {
  double s;
  double sz(const PhasePoint& p) const { return (s + 1.0) * std::cos(p.theta()); }
  Complex sminus(const PhasePoint& p) const {
    return std::polar((s + 1.0) * std::sin(p.theta()), -p.phi());
  }
  double sz2(const PhasePoint& p) const {
    const double c = std::cos(p.theta());
    return (s + 1.0) * (s + 1.5) * c * c - 0.5 * (s + 1.0);
  }
  Complex sminus2(const PhasePoint& p) const {
    const double st = std::sin(p.theta());
    return std::polar((s + 1.0) * (s + 1.5) * st * st, -2.0 * p.phi());
  }
};

inline void require_exact(const QGrid& g, const char* what) {
  if (!g.is_exact()) {
    throw InvalidArgument(std::string(what) + ": grid under-resolved for 2s=" +
                          std::to_string(g.spin.twice()));
  }
}

/// Quantum moments from Q samples; exact (to rounding) on an exact grid.
inline Moments moments_from_q(const QGrid& g) {
  require_exact(g, "moments_from_q");
  const MomentKernels k{g.spin.value()};
  Moments m;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double wq = g.weights[i] * g.values[i];
    const PhasePoint& p = g.nodes[i];
    m.sz += wq * k.sz(p);
    m.sminus += wq * k.sminus(p);
    m.sz2 += wq * k.sz2(p);
    m.sminus2 += wq * k.sminus2(p);
  }
  return m;
}

/// Classical expectation values E(S_z) = \int Q s cos(theta),
/// E(S_x - i S_y) = \int Q s sin(theta) e^{-i phi}.
inline ClassicalMoments classical_moments(const QGrid& g) {
  require_exact(g, "classical_moments");
  const double s = g.spin.value();
  ClassicalMoments m;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double wq = g.weights[i] * g.values[i];
    const PhasePoint& p = g.nodes[i];
    m.sz += wq * s * std::cos(p.theta());
    m.sminus += wq * std::polar(s * std::sin(p.theta()), -p.phi());
  }
  return m;
}

}  // namespace spintop
