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
#include <string>

#include "spintop/coherent.hpp"
#include "spintop/grid.hpp"
#include "spintop/states.hpp"

namespace spintop {

struct InversionResult {
  DensityOperator state;
  double residual;  // max_i |<z_i|rho|z_i> - Q_i|
  Eigen::Index rank;
};

/// Recovers rho from Q samples by linear least squares over Hermitian,
/// unit-trace matrices.
///
/// Unknowns: rho_kk for k >= 1 (rho_00 is eliminated by the trace), and
/// Re/Im rho_kl for k < l. Each sample gives one real equation
///   Q_i = sum_k rho_kk |c_k|^2 + sum_{k<l} 2 Re(rho_kl c_k^* c_l).
inline InversionResult invert_q(const QGrid& samples) {
  const SpinQuantum spin = samples.spin;
  const Eigen::Index d = spin.dim();
  const Eigen::Index unknowns = d * d - 1;
  const auto rows = static_cast<Eigen::Index>(samples.size());
  if (rows < d * d) {
    throw InvalidArgument("invert_q: need at least (2s+1)^2 = " + std::to_string(d * d) +
                          " samples, got " + std::to_string(rows));
  }

  Eigen::MatrixXd a(rows, unknowns);
  Eigen::VectorXd b(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const CVector c = coherent_amplitudes(spin, samples.nodes[static_cast<std::size_t>(i)]);
    const double p0 = std::norm(c(0));
    b(i) = samples.values[static_cast<std::size_t>(i)] - p0;
    Eigen::Index col = 0;
    for (Eigen::Index k = 1; k < d; ++k) a(i, col++) = std::norm(c(k)) - p0;
    for (Eigen::Index k = 0; k < d; ++k) {
      for (Eigen::Index l = k + 1; l < d; ++l) {
        const Complex g = std::conj(c(k)) * c(l);
        a(i, col++) = 2.0 * g.real();
        a(i, col++) = -2.0 * g.imag();
      }
    }
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  qr.setThreshold(1e-10);
  if (qr.rank() < unknowns) {
    throw NumericalError("invert_q: rank-deficient sample set (rank " + std::to_string(qr.rank()) +
                         " < " + std::to_string(unknowns) + ")");
  }
  const Eigen::VectorXd x = qr.solve(b);

  CMatrix rho = CMatrix::Zero(d, d);
  Eigen::Index col = 0;
  double rest = 0.0;
  for (Eigen::Index k = 1; k < d; ++k) {
    rho(k, k) = x(col);
    rest += x(col++);
  }
  rho(0, 0) = 1.0 - rest;
  for (Eigen::Index k = 0; k < d; ++k) {
    for (Eigen::Index l = k + 1; l < d; ++l) {
      rho(k, l) = Complex(x(col), x(col + 1));
      rho(l, k) = std::conj(rho(k, l));
      col += 2;
    }
  }
  const double residual = (a * x - b).cwiseAbs().maxCoeff();
  return {DensityOperator::from_matrix(spin, std::move(rho)), residual, qr.rank()};
}

}  // namespace spintop
