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
#include <compare>
#include <string>
#include <vector>

#include "spintop/common.hpp"

namespace spintop {

/// Spin quantum number s, stored as the integer 2s.
///
/// Basis convention used throughout the library: index k = 0..2s labels the
/// Dicke state |s, s-k>, so k = 0 is the north pole (S_z = s) and k = 2s the
/// south pole (S_z = -s).
class SpinQuantum {
 public:
  static constexpr int kMaxTwice = 1000;

  static SpinQuantum from_twice(int twice_s) {
    if (twice_s < 1 || twice_s > kMaxTwice) {
      throw InvalidArgument("spin: 2s must be an integer in [1, " +
                            std::to_string(kMaxTwice) + "], got " +
                            std::to_string(twice_s));
    }
    return SpinQuantum(twice_s);
  }

  static SpinQuantum from_value(double s) {
    const double twice = 2.0 * s;
    if (!std::isfinite(twice) || std::abs(twice - std::round(twice)) > 1e-12) {
      throw InvalidArgument("spin: s must be a positive half-integer");
    }
    return from_twice(static_cast<int>(std::lround(twice)));
  }

  int twice() const noexcept { return twice_; }
  double value() const noexcept { return 0.5 * twice_; }
  Eigen::Index dim() const noexcept { return twice_ + 1; }
  bool is_integer() const noexcept { return twice_ % 2 == 0; }

  /// Magnetic quantum number of basis index k.
  double m(Eigen::Index k) const noexcept { return value() - static_cast<double>(k); }

  auto operator<=>(const SpinQuantum&) const = default;

 private:
  explicit SpinQuantum(int twice_s) : twice_(twice_s) {}
  int twice_;
};

struct SpinOps {
  CMatrix sz;
  CMatrix splus;
  CMatrix sminus;
  CMatrix sx;
  CMatrix sy;
};

inline SpinOps spin_operators(SpinQuantum spin) {
  const Eigen::Index d = spin.dim();
  const double s = spin.value();
  SpinOps ops;
  ops.sz = CMatrix::Zero(d, d);
  ops.splus = CMatrix::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    ops.sz(k, k) = spin.m(k);
  }
  // S+ |s,m> = sqrt(s(s+1) - m(m+1)) |s,m+1>; m+1 sits at index k-1.
  for (Eigen::Index k = 1; k < d; ++k) {
    const double m = spin.m(k);
    ops.splus(k - 1, k) = std::sqrt(s * (s + 1.0) - m * (m + 1.0));
  }
  ops.sminus = ops.splus.adjoint();
  ops.sx = 0.5 * (ops.splus + ops.sminus);
  ops.sy = (ops.splus - ops.sminus) / (2.0 * kI);
  return ops;
}

/// sqrt(binom(n, k)) for k = 0..n, by multiplicative recurrence.
inline std::vector<double> sqrt_binomials(int n) {
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  double b = 1.0;
  for (int k = 0; k <= n; ++k) {
    out[static_cast<std::size_t>(k)] = std::sqrt(b);
    b = b * static_cast<double>(n - k) / static_cast<double>(k + 1);
  }
  return out;
}

/// Diagonal of the top Hamiltonian, indexed by basis k.
inline Eigen::VectorXd diagonal_energies(SpinQuantum spin, double omega, double J) {
  Eigen::VectorXd e(spin.dim());
  const double twist = J / (2.0 * spin.value());
  for (Eigen::Index k = 0; k < spin.dim(); ++k) {
    const double m = spin.m(k);
    e(k) = omega * m + twist * m * m;
  }
  return e;
}

}  // namespace spintop
