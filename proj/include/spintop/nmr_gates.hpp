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
#include <utility>
#include <vector>

#include "spintop/common.hpp"
#include "spintop/states.hpp"

namespace spintop {

// Qubit conventions used throughout this header: |down> = |0> = (1, 0),
// sigma_z = diag(1, -1), and qubit 0 is the most significant tensor factor,
// so basis index b = sum_q bit_q 2^(n-1-q).

inline constexpr int kMaxQubits = 12;

namespace pauli {

inline CMatrix identity() { return CMatrix::Identity(2, 2); }

inline CMatrix x() {
  CMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

inline CMatrix y() {
  CMatrix m(2, 2);
  m << 0.0, -kI, kI, 0.0;
  return m;
}

inline CMatrix z() {
  CMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

}  // namespace pauli

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline Eigen::Index qubit_dim(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw InvalidArgument("qubit count must be in [1, " + std::to_string(kMaxQubits) + "]");
  }
  return Eigen::Index{1} << n;
}

/// op acting on `target`, identity elsewhere.
inline CMatrix embed(const CMatrix& op, int target, int n) {
  qubit_dim(n);
  if (target < 0 || target >= n) throw InvalidArgument("qubit target out of range");
  CMatrix out = CMatrix::Identity(1, 1);
  for (int q = 0; q < n; ++q) out = kron(out, q == target ? op : pauli::identity());
  return out;
}

inline bool is_unitary(const CMatrix& u, double tol = 1e-12) {
  const CMatrix id = CMatrix::Identity(u.rows(), u.cols());
  return u.rows() == u.cols() && (u.adjoint() * u - id).cwiseAbs().maxCoeff() <= tol;
}

inline void require_unit_axis(const Eigen::Vector3d& axis, const char* what) {
  if (std::abs(axis.norm() - 1.0) > 1e-12) {
    throw InvalidArgument(std::string(what) + ": axis must be a unit vector");
  }
}

inline CMatrix axis_dot_sigma(const Eigen::Vector3d& a) {
  return a.x() * pauli::x() + a.y() * pauli::y() + a.z() * pauli::z();
}

/// Single-qubit rotation exp(-i (angle/2) axis.sigma) on `target`.
/// exp(-i B.sigma) corresponds to axis = B/|B|, angle = 2|B|.
inline CMatrix u1(const Eigen::Vector3d& axis, double angle, int target, int n) {
  require_unit_axis(axis, "u1");
  const CMatrix r = std::cos(angle / 2.0) * pauli::identity() -
                    kI * std::sin(angle / 2.0) * axis_dot_sigma(axis);
  return embed(r, target, n);
}

/// exp(-i angle/2 sigma_z^(i) sigma_z^(j)), diagonal in the computational basis.
inline CMatrix zz_coupling(double angle, int i, int j, int n) {
  const Eigen::Index d = qubit_dim(n);
  if (i < 0 || i >= n || j < 0 || j >= n || i == j) {
    throw InvalidArgument("zz_coupling: invalid qubit pair");
  }
  CMatrix out = CMatrix::Zero(d, d);
  for (Eigen::Index b = 0; b < d; ++b) {
    const int bi = static_cast<int>((b >> (n - 1 - i)) & 1);
    const int bj = static_cast<int>((b >> (n - 1 - j)) & 1);
    const double parity = bi == bj ? 1.0 : -1.0;
    out(b, b) = std::polar(1.0, -0.5 * angle * parity);
  }
  return out;
}

/// U2(t) = exp(-i (J/4) t sigma_z (x) sigma_z).
inline CMatrix u2(double J, double t) { return zz_coupling(0.5 * J * t, 0, 1, 2); }

struct PulseTerm {
  enum class Kind { Rotation, Coupling };
  Kind kind = Kind::Rotation;
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();
  double angle = 0.0;
  int target = 0;
  std::pair<int, int> pair{0, 1};

  static PulseTerm rotation(const Eigen::Vector3d& axis, double angle, int target) {
    require_unit_axis(axis, "PulseTerm");
    return {Kind::Rotation, axis, angle, target, {0, 1}};
  }
  static PulseTerm coupling(double angle, int i, int j) {
    return {Kind::Coupling, Eigen::Vector3d::UnitZ(), angle, 0, {i, j}};
  }

  CMatrix unitary(int n) const {
    return kind == Kind::Rotation ? u1(axis, angle, target, n)
                                  : zz_coupling(angle, pair.first, pair.second, n);
  }
};

/// Terms in application order (first applied first), plus a global phase.
struct PulseSequence {
  std::vector<PulseTerm> terms;
  double global_phase = 0.0;
};

inline CMatrix sequence_unitary(const PulseSequence& seq, int n) {
  const Eigen::Index d = qubit_dim(n);
  CMatrix u = CMatrix::Identity(d, d);
  for (const auto& term : seq.terms) u = term.unitary(n) * u;
  return std::polar(1.0, seq.global_phase) * u;
}

inline CVector apply_sequence(const PulseSequence& seq, const CVector& psi, int n) {
  if (psi.size() != qubit_dim(n)) throw InvalidArgument("apply_sequence: dimension mismatch");
  return sequence_unitary(seq, n) * psi;
}

inline CVector basis_ket(Eigen::Index index, int n) {
  const Eigen::Index d = qubit_dim(n);
  if (index < 0 || index >= d) throw InvalidArgument("basis_ket: index out of range");
  CVector v = CVector::Zero(d);
  v(index) = 1.0;
  return v;
}

/// (|down down> + |up up>) / sqrt(2).
inline CVector phi_plus() {
  CVector v = CVector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return v;
}

/// The seven-factor Bell product read right to left:
///   e^{-i pi/4} e^{i(pi/4)sx2} e^{i(pi/4)sz1} e^{-i(pi/4)sy2}
///   e^{-i(pi/4)sz1 sz2} e^{i(pi/4)sy2} e^{-i(pi/4)sy1}.
/// Each e^{-i a sigma} is a rotation by angle 2a. With include_coupling false
/// the entangling factor is dropped.
inline PulseSequence bell_pulses(bool include_coupling = true) {
  const double h = pi / 2.0;
  PulseSequence seq;
  seq.terms.push_back(PulseTerm::rotation(Eigen::Vector3d::UnitY(), h, 0));
  seq.terms.push_back(PulseTerm::rotation(Eigen::Vector3d::UnitY(), -h, 1));
  if (include_coupling) seq.terms.push_back(PulseTerm::coupling(h, 0, 1));
  seq.terms.push_back(PulseTerm::rotation(Eigen::Vector3d::UnitY(), h, 1));
  seq.terms.push_back(PulseTerm::rotation(Eigen::Vector3d::UnitZ(), -h, 0));
  seq.terms.push_back(PulseTerm::rotation(Eigen::Vector3d::UnitX(), -h, 1));
  seq.global_phase = -pi / 4.0;
  return seq;
}

inline CVector bell_sequence(bool include_coupling = true) {
  return apply_sequence(bell_pulses(include_coupling), basis_ket(0, 2), 2);
}

class MultiQubitState {
 public:
  static MultiQubitState from_matrix(int n, CMatrix m) {
    const Eigen::Index d = qubit_dim(n);
    if (m.rows() != d || m.cols() != d) throw InvalidArgument("MultiQubitState: dimension mismatch");
    validate_density_matrix(m, "MultiQubitState");
    return MultiQubitState(n, std::move(m));
  }

  static MultiQubitState from_pure(const CVector& psi, int n) {
    if (psi.size() != qubit_dim(n)) throw InvalidArgument("MultiQubitState: dimension mismatch");
    const CVector u = psi.normalized();
    return MultiQubitState(n, u * u.adjoint());
  }

  int n() const noexcept { return n_; }
  const CMatrix& matrix() const noexcept { return m_; }

 private:
  MultiQubitState(int n, CMatrix m) : n_(n), m_(std::move(m)) {}

  int n_;
  CMatrix m_;
};

/// 1/4 + (epsilon/4)(sigma_z^(1) + mu sigma_z^(2)), the high-temperature
/// expansion of the two-spin Zeeman state with Larmor ratio mu.
inline MultiQubitState thermal_two_spin(double epsilon, double mu) {
  if (!std::isfinite(epsilon) || !std::isfinite(mu) || epsilon * (1.0 + std::abs(mu)) > 1.0 ||
      epsilon < 0.0) {
    throw NumericalError("thermal_two_spin: parameters give a negative eigenvalue");
  }
  const CMatrix id = CMatrix::Identity(4, 4);
  const CMatrix m =
      0.25 * id + 0.25 * epsilon * (embed(pauli::z(), 0, 2) + mu * embed(pauli::z(), 1, 2));
  return MultiQubitState::from_matrix(2, m);
}

/// ((1 - epsilon) / 2^n) 1 + epsilon |psi><psi|.
inline MultiQubitState pseudo_pure(const CVector& psi, double epsilon, int n) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw InvalidArgument("pseudo_pure: epsilon must lie in [0, 1]");
  }
  const Eigen::Index d = qubit_dim(n);
  if (psi.size() != d) throw InvalidArgument("pseudo_pure: dimension mismatch");
  const CVector u = psi.normalized();
  const CMatrix m = (1.0 - epsilon) / static_cast<double>(d) * CMatrix::Identity(d, d) +
                    epsilon * (u * u.adjoint());
  return MultiQubitState::from_matrix(n, m);
}

/// Transpose on the second qubit of a two-qubit operator.
inline CMatrix partial_transpose(const CMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw InvalidArgument("partial_transpose: requires 4x4");
  CMatrix out(4, 4);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) out(2 * a + b, 2 * c + d) = m(2 * a + d, 2 * c + b);
  return out;
}

inline double min_partial_transpose_eigenvalue(const MultiQubitState& rho) {
  if (rho.n() != 2) throw InvalidArgument("ppt_entangled: requires exactly two qubits");
  return min_eigenvalue(partial_transpose(rho.matrix()));
}

/// Peres-Horodecki test; exact for two qubits.
inline bool ppt_entangled(const MultiQubitState& rho) {
  return min_partial_transpose_eigenvalue(rho) < -kEigenTol;
}

/// Isometry V (4x3) from the s = 1 Dicke basis |1,1>, |1,0>, |1,-1> into
/// two qubits: |00>, (|01> + |10>)/sqrt(2), |11>.
inline CMatrix triplet_isometry() {
  CMatrix v = CMatrix::Zero(4, 3);
  v(0, 0) = 1.0;
  v(1, 1) = v(2, 1) = 1.0 / std::sqrt(2.0);
  v(3, 2) = 1.0;
  return v;
}

/// V^dag A V.
inline CMatrix restrict_to_triplet(const CMatrix& a) {
  const CMatrix v = triplet_isometry();
  return v.adjoint() * a * v;
}

/// Max deviation of U2(t) restricted to the triplet from
/// e^{iJt/4} exp(-i (J/2) S_z^2 t), plus the leakage out of the triplet.
inline double triplet_residual(double J, double t) {
  const CMatrix v = triplet_isometry();
  const CMatrix u = u2(J, t);
  CMatrix expected = CMatrix::Zero(3, 3);
  for (int k = 0; k < 3; ++k) {
    const double m = 1.0 - k;
    expected(k, k) = std::polar(1.0, J * t / 4.0 - 0.5 * J * m * m * t);
  }
  const CMatrix projected = v * v.adjoint();
  const double leak = ((CMatrix::Identity(4, 4) - projected) * u * v).cwiseAbs().maxCoeff();
  return std::max(leak, (v.adjoint() * u * v - expected).cwiseAbs().maxCoeff());
}

inline CMatrix swap_gate() {
  CMatrix s = CMatrix::Zero(4, 4);
  s(0, 0) = s(3, 3) = 1.0;
  s(1, 2) = s(2, 1) = 1.0;
  return s;
}

/// exp(-i H t) with H = (J/4) sigma1.sigma2 = (J/4)(2 SWAP - 1):
/// phase e^{-iJt/4} on the triplet and e^{3iJt/4} on the singlet.
inline CMatrix exchange_unitary(double J, double t) {
  const CMatrix id = CMatrix::Identity(4, 4);
  const CMatrix triplet = 0.5 * (id + swap_gate());
  const CMatrix singlet = 0.5 * (id - swap_gate());
  return std::polar(1.0, -J * t / 4.0) * triplet + std::polar(1.0, 3.0 * J * t / 4.0) * singlet;
}

inline CMatrix exchange_hamiltonian(double J) {
  CMatrix h = CMatrix::Zero(4, 4);
  for (const CMatrix& p : {pauli::x(), pauli::y(), pauli::z()}) h += kron(p, p);
  return 0.25 * J * h;
}

/// Hadamard on qubit 0, then CNOT(q -> q+1) down the chain, applied to |0...0>.
inline CVector ghz_cascade(int n) {
  if (n < 2 || n > kMaxQubits) throw InvalidArgument("ghz_cascade: n must lie in [2, 12]");
  const Eigen::Index d = qubit_dim(n);
  CVector psi = basis_ket(0, n);
  CMatrix h(2, 2);
  h << 1.0, 1.0, 1.0, -1.0;
  psi = embed(h / std::sqrt(2.0), 0, n) * psi;
  for (int q = 0; q + 1 < n; ++q) {
    const Eigen::Index control = Eigen::Index{1} << (n - 1 - q);
    const Eigen::Index target = Eigen::Index{1} << (n - 2 - q);
    CVector next(d);
    for (Eigen::Index b = 0; b < d; ++b) next(b) = psi((b & control) ? (b ^ target) : b);
    psi = std::move(next);
  }
  return psi;
}

/// Solution of dn/dt = -B x n: rotation of n0 about -B/|B| by |B| t.
inline Eigen::Vector3d bloch_precession(const Eigen::Vector3d& n0, const Eigen::Vector3d& b, double t) {
  if (std::abs(n0.norm() - 1.0) > 1e-12) {
    throw InvalidArgument("bloch_precession: n0 must be a unit vector");
  }
  const double mag = b.norm();
  if (mag == 0.0) return n0;
  const Eigen::Vector3d k = -b / mag;
  const double a = mag * t;
  return n0 * std::cos(a) + k.cross(n0) * std::sin(a) + k * k.dot(n0) * (1.0 - std::cos(a));
}

/// <sigma> of a single-qubit state vector.
inline Eigen::Vector3d bloch_vector(const CVector& psi) {
  if (psi.size() != 2) throw InvalidArgument("bloch_vector: requires a qubit");
  return {psi.dot(pauli::x() * psi).real(), psi.dot(pauli::y() * psi).real(),
          psi.dot(pauli::z() * psi).real()};
}

/// Qubit state with Bloch vector n (polar form, phase fixed on |0>).
inline CVector qubit_from_bloch(const Eigen::Vector3d& n) {
  const double theta = std::acos(std::clamp(n.z(), -1.0, 1.0));
  const double phi = std::atan2(n.y(), n.x());
  CVector psi(2);
  psi << std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi);
  return psi;
}

/// log10 of (1 + 2^{2n-1})^{-g}.
inline double schack_caves_log10_decay(int n, double g) {
  if (n < 1 || !(g >= 0.0)) throw InvalidArgument("schack_caves_decay: need n >= 1 and g >= 0");
  const double log10_base = (2.0 * n - 1.0) * std::log10(2.0) + std::log10(1.0 + std::exp2(1.0 - 2.0 * n));
  return -g * log10_base;
}

/// (1 + 2^{2n-1})^{-g}. The base is exact in double for n <= 26, so pow
/// rounds once; beyond that the logarithm is used.
inline double schack_caves_decay(int n, double g) {
  const double log10_decay = schack_caves_log10_decay(n, g);
  if (n <= 26) return std::pow(1.0 + std::exp2(2.0 * n - 1.0), -g);
  return std::pow(10.0, log10_decay);
}

}  // namespace spintop
