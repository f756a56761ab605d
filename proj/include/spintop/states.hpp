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

#include "spintop/common.hpp"
#include "spintop/spin.hpp"

namespace spintop {

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kEigenTol = 1e-10;

/// Smallest eigenvalue of the Hermitian part of m.
inline double min_eigenvalue(const CMatrix& m) {
  const CMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

/// Throws NumericalError unless m is Hermitian, unit-trace and positive
/// semidefinite within the library tolerances.
inline void validate_density_matrix(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw InvalidArgument(std::string(what) + ": matrix must be square and non-empty");
  }
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
    throw NumericalError(std::string(what) + ": matrix is not Hermitian");
  }
  if (std::abs(m.trace() - Complex(1.0)) > kTraceTol) {
    throw NumericalError(std::string(what) + ": trace differs from 1");
  }
  if (min_eigenvalue(m) < -kEigenTol) {
    throw NumericalError(std::string(what) + ": matrix has a negative eigenvalue");
  }
}

class PureState {
 public:
  static PureState from_amplitudes(SpinQuantum spin, CVector amplitudes) {
    check_size(spin, amplitudes);
    if (std::abs(amplitudes.norm() - 1.0) > 1e-12) {
      throw NumericalError("PureState: amplitudes are not normalized");
    }
    return PureState(spin, std::move(amplitudes));
  }

  static PureState normalized(SpinQuantum spin, CVector amplitudes) {
    check_size(spin, amplitudes);
    const double n = amplitudes.norm();
    if (!(n > 0.0)) throw InvalidArgument("PureState: zero vector");
    return PureState(spin, amplitudes / n);
  }

  SpinQuantum spin() const noexcept { return spin_; }
  const CVector& amplitudes() const noexcept { return amps_; }

 private:
  static void check_size(SpinQuantum spin, const CVector& a) {
    if (a.size() != spin.dim()) throw InvalidArgument("PureState: dimension mismatch");
  }
  PureState(SpinQuantum spin, CVector a) : spin_(spin), amps_(std::move(a)) {}

  SpinQuantum spin_;
  CVector amps_;
};

class DensityOperator {
 public:
  static DensityOperator from_matrix(SpinQuantum spin, CMatrix m) {
    if (m.rows() != spin.dim() || m.cols() != spin.dim()) {
      throw InvalidArgument("DensityOperator: dimension mismatch");
    }
    validate_density_matrix(m, "DensityOperator");
    return DensityOperator(spin, std::move(m));
  }

  /// For matrices produced by trace- and positivity-preserving maps of a
  /// valid state; skips the eigenvalue check.
  static DensityOperator trusted(SpinQuantum spin, CMatrix m) {
    return DensityOperator(spin, std::move(m));
  }

  static DensityOperator from_pure(const PureState& psi) {
    const CVector& a = psi.amplitudes();
    return DensityOperator(psi.spin(), a * a.adjoint());
  }

  static DensityOperator maximally_mixed(SpinQuantum spin) {
    const auto d = spin.dim();
    return DensityOperator(spin, CMatrix::Identity(d, d) / static_cast<double>(d));
  }

  SpinQuantum spin() const noexcept { return spin_; }
  const CMatrix& matrix() const noexcept { return m_; }

  Complex expectation(const CMatrix& op) const { return (m_ * op).trace(); }

 private:
  DensityOperator(SpinQuantum spin, CMatrix m) : spin_(spin), m_(std::move(m)) {}

  SpinQuantum spin_;
  CMatrix m_;
};

/// |<a|b>|^2; insensitive to global phase.
inline double fidelity(const PureState& a, const PureState& b) {
  if (a.spin() != b.spin()) throw InvalidArgument("fidelity: dimension mismatch");
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

/// <psi|rho|psi>.
inline double fidelity(const DensityOperator& rho, const PureState& psi) {
  if (rho.spin() != psi.spin()) throw InvalidArgument("fidelity: dimension mismatch");
  const CVector& a = psi.amplitudes();
  return a.dot(rho.matrix() * a).real();
}

}  // namespace spintop
