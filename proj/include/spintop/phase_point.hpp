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

#include "spintop/common.hpp"

namespace spintop {

/// Wraps an angle into [0, 2pi).
inline double wrap_angle(double phi) {
  double r = std::fmod(phi, 2.0 * pi);
  if (r < 0.0) r += 2.0 * pi;
  if (r >= 2.0 * pi) r = 0.0;
  return r;
}

/// A point on the unit sphere. The polar chart (theta, phi) is the stored
/// representation; the stereographic label z = e^{i phi} tan(theta/2) is a
/// derived view that does not exist at the south pole.
class PhasePoint {
 public:
  PhasePoint() = default;

  static PhasePoint from_polar(double theta, double phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi) || theta < 0.0 || theta > pi) {
      throw InvalidArgument("PhasePoint: theta must lie in [0, pi]");
    }
    return PhasePoint(theta, wrap_angle(phi));
  }

  static PhasePoint from_z(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw InvalidArgument("PhasePoint: stereographic label must be finite");
    }
    const double r = std::abs(z);
    return PhasePoint(2.0 * std::atan(r), r == 0.0 ? 0.0 : wrap_angle(std::arg(z)));
  }

  static PhasePoint north_pole() { return PhasePoint(0.0, 0.0); }
  static PhasePoint south_pole(double phi = 0.0) { return PhasePoint(pi, wrap_angle(phi)); }

  double theta() const noexcept { return theta_; }
  double phi() const noexcept { return phi_; }
  double cos_half() const noexcept { return std::cos(0.5 * theta_); }
  double sin_half() const noexcept { return std::sin(0.5 * theta_); }
  bool is_south_pole() const noexcept { return theta_ == pi; }

  Complex z() const {
    if (is_south_pole()) {
      throw InvalidArgument("PhasePoint: stereographic label undefined at the south pole");
    }
    return std::polar(std::tan(0.5 * theta_), phi_);
  }

  /// |z|^2 / (1 + |z|^2), finite everywhere.
  double sin2_half() const noexcept { return sin_half() * sin_half(); }

  Eigen::Vector3d unit_vector() const {
    return {std::sin(theta_) * std::cos(phi_), std::sin(theta_) * std::sin(phi_), std::cos(theta_)};
  }

  /// The point labelled -z (same latitude, opposite meridian).
  PhasePoint negated() const { return PhasePoint(theta_, wrap_angle(phi_ + pi)); }

  /// The antipodal point -1/z*.
  PhasePoint antipode() const { return PhasePoint(pi - theta_, wrap_angle(phi_ + pi)); }

 private:
  PhasePoint(double theta, double phi) : theta_(theta), phi_(phi) {}
  double theta_ = 0.0;
  double phi_ = 0.0;
};

}  // namespace spintop
