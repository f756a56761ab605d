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
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spintop/grid.hpp"
#include "spintop/moments.hpp"

namespace spintop {

struct ComparisonReport {
  double l1 = 0.0;   // \int d mu |Q_a - Q_b|
  double sup = 0.0;  // max over nodes |Q_a - Q_b|
  std::map<std::string, double> moment_gaps;
  std::vector<double> times;
};

/// Metrics between two grids with identical nodes and weights. Moment gaps
/// use the quantum first-moment kernels for both inputs.
inline ComparisonReport compare(const QGrid& a, const QGrid& b, std::vector<double> times = {}) {
  if (!same_nodes(a, b)) throw InvalidArgument("compare: grids do not share nodes and weights");
  for (const QGrid* g : {&a, &b}) {
    for (double v : g->values) {
      if (!std::isfinite(v)) throw NumericalError("compare: non-finite Q value");
    }
  }
  ComparisonReport r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = std::abs(a.values[i] - b.values[i]);
    r.l1 += a.weights[i] * diff;
    r.sup = std::max(r.sup, diff);
  }
  if (a.is_exact()) {
    const Moments ma = moments_from_q(a);
    const Moments mb = moments_from_q(b);
    r.moment_gaps["sz"] = std::abs(ma.sz - mb.sz);
    r.moment_gaps["sminus"] = std::abs(ma.sminus - mb.sminus);
  }
  r.times = std::move(times);
  return r;
}

}  // namespace spintop
