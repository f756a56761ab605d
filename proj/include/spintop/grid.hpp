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
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "spintop/coherent.hpp"
#include "spintop/phase_point.hpp"
#include "spintop/spin.hpp"
#include "spintop/states.hpp"

namespace spintop {

struct GaussLegendreRule {
  std::vector<double> nodes;    // ascending in x
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton iteration on P_n).
inline GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw InvalidArgument("gauss_legendre: n must be positive");
  // Returns {P_n(x), P_n'(x)}.
  const auto legendre = [n](double x) {
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    return std::pair{p1, n * (x * p1 - p0) / (x * x - 1.0)};
  };
  GaussLegendreRule rule;
  rule.nodes.assign(static_cast<std::size_t>(n), 0.0);
  rule.weights.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre(x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    rule.weights[static_cast<std::size_t>(i)] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

/// Q-function samples on a product quadrature grid over the sphere.
///
/// Nodes are stored ring-major: index = i_theta * n_phi + i_phi, with theta
/// ascending (north to south) and phi_j = 2 pi j / n_phi. The weights realize
/// the measure d mu = ((2s+1) / (4 pi)) sin(theta) d theta d phi, so they sum
/// to 2s+1 and a normalized Q integrates to 1.
struct QGrid {
  SpinQuantum spin = SpinQuantum::from_twice(1);
  int n_theta = 0;
  int n_phi = 0;
  std::vector<PhasePoint> nodes;
  std::vector<double> weights;
  std::vector<double> values;

  std::size_t size() const noexcept { return nodes.size(); }
  std::size_t index(int i_theta, int i_phi) const noexcept {
    return static_cast<std::size_t>(i_theta) * static_cast<std::size_t>(n_phi) +
           static_cast<std::size_t>(i_phi);
  }

  /// Sum of w_i * values_i.
  double integral() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < size(); ++i) acc += weights[i] * values[i];
    return acc;
  }

  /// True when the grid integrates every Q-function moment kernel exactly.
  bool is_exact() const noexcept {
    return n_theta >= spin.twice() + 2 && n_phi >= 2 * spin.twice() + 2;
  }
};

inline QGrid make_grid(SpinQuantum spin, int n_theta, int n_phi) {
  if (n_theta < spin.twice() + 2 || n_phi < 2 * spin.twice() + 2) {
    throw InvalidArgument("make_grid: grid " + std::to_string(n_theta) + "x" +
                          std::to_string(n_phi) + " too small for 2s=" +
                          std::to_string(spin.twice()) + " (need n_theta >= 2s+2, n_phi >= 4s+2)");
  }
  const auto rule = gauss_legendre(n_theta);
  QGrid g;
  g.spin = spin;
  g.n_theta = n_theta;
  g.n_phi = n_phi;
  const std::size_t total = static_cast<std::size_t>(n_theta) * static_cast<std::size_t>(n_phi);
  g.nodes.reserve(total);
  g.weights.reserve(total);
  g.values.assign(total, 0.0);
  const double scale = (2.0 * spin.value() + 1.0) / (4.0 * pi) * (2.0 * pi / n_phi);
  for (int it = 0; it < n_theta; ++it) {
    // theta ascending means cos(theta) descending.
    const auto r = static_cast<std::size_t>(n_theta - 1 - it);
    const double theta = std::acos(rule.nodes[r]);
    for (int ip = 0; ip < n_phi; ++ip) {
      g.nodes.push_back(PhasePoint::from_polar(theta, 2.0 * pi * ip / n_phi));
      g.weights.push_back(scale * rule.weights[r]);
    }
  }
  return g;
}

/// Copy of grid with values[i] = f(nodes[i]).
template <class F>
QGrid sample(QGrid grid, F&& f) {
  for (std::size_t i = 0; i < grid.size(); ++i) grid.values[i] = f(grid.nodes[i]);
  return grid;
}

/// Q-function of rho sampled on the nodes of grid.
inline QGrid q_grid(const DensityOperator& rho, QGrid grid) {
  if (rho.spin() != grid.spin) throw InvalidArgument("q_grid: spin mismatch");
  return sample(std::move(grid), [&](const PhasePoint& p) { return q_function(rho, p); });
}

/// Mean of each theta ring (the phi nodes are equally weighted).
inline std::vector<double> theta_marginal(const QGrid& g) {
  std::vector<double> out(static_cast<std::size_t>(g.n_theta), 0.0);
  for (int it = 0; it < g.n_theta; ++it) {
    double acc = 0.0;
    for (int ip = 0; ip < g.n_phi; ++ip) acc += g.values[g.index(it, ip)];
    out[static_cast<std::size_t>(it)] = acc / g.n_phi;
  }
  return out;
}

/// Largest (max - min) of the values over any theta ring.
inline double azimuthal_variation(const QGrid& g) {
  double worst = 0.0;
  for (int it = 0; it < g.n_theta; ++it) {
    const auto first = g.values.begin() + static_cast<std::ptrdiff_t>(g.index(it, 0));
    const auto [lo, hi] = std::minmax_element(first, first + g.n_phi);
    worst = std::max(worst, *hi - *lo);
  }
  return worst;
}

/// Replaces every value by its ring average.
inline QGrid azimuthal_average(QGrid g) {
  const auto marginal = theta_marginal(g);
  for (int it = 0; it < g.n_theta; ++it) {
    for (int ip = 0; ip < g.n_phi; ++ip) g.values[g.index(it, ip)] = marginal[static_cast<std::size_t>(it)];
  }
  return g;
}

/// Circular variance of the phi marginal, 1 - |<e^{i phi}>|, with values
/// used as (nonnegative) weights. 0 for a point mass in phi, 1 for uniform.
inline double azimuthal_spread(const QGrid& g) {
  double total = 0.0;
  Complex first{};
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double wq = g.weights[i] * g.values[i];
    total += wq;
    first += wq * std::polar(1.0, g.nodes[i].phi());
  }
  if (!(total > 0.0)) throw InvalidArgument("azimuthal_spread: values integrate to zero");
  return 1.0 - std::abs(first) / total;
}

inline bool same_nodes(const QGrid& a, const QGrid& b) {
  if (a.spin != b.spin || a.n_theta != b.n_theta || a.n_phi != b.n_phi || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.nodes[i].theta() != b.nodes[i].theta() || a.nodes[i].phi() != b.nodes[i].phi() ||
        a.weights[i] != b.weights[i]) {
      return false;
    }
  }
  return true;
}

}  // namespace spintop
