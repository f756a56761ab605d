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
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "spintop/grid.hpp"

namespace spintop {

inline constexpr std::string_view kGridCsvHeader = "theta,phi,re_z,im_z,weight,Q";

/// Shortest-unambiguous is not required; 17 significant digits round-trips
/// every double exactly.
inline std::string format_double(double v) {
  std::array<char, 32> buf{};
  const int n = std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return std::string(buf.data(), static_cast<std::size_t>(n));
}

inline void write_grid_csv(std::ostream& os, const QGrid& g) {
  os << kGridCsvHeader << '\n';
  for (std::size_t i = 0; i < g.size(); ++i) {
    const PhasePoint& p = g.nodes[i];
    // Quadrature nodes never sit on the south pole, but keep the row well
    // formed if a caller builds such a grid by hand.
    const Complex z = p.is_south_pole() ? Complex(INFINITY, 0.0) : p.z();
    os << format_double(p.theta()) << ',' << format_double(p.phi()) << ','
       << format_double(z.real()) << ',' << format_double(z.imag()) << ','
       << format_double(g.weights[i]) << ',' << format_double(g.values[i]) << '\n';
  }
}

inline void write_grid_csv(const std::string& path, const QGrid& g) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open " + path + " for writing");
  write_grid_csv(os, g);
  if (!os) throw IoError("write failed: " + path);
}

namespace detail {

inline double parse_double(std::string_view field, std::size_t line) {
  double v = 0.0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    if (field == "inf") return INFINITY;
    throw InvalidArgument("grid csv line " + std::to_string(line) + ": bad number '" +
                          std::string(field) + "'");
  }
  return v;
}

}  // namespace detail

/// Reads a grid written by write_grid_csv. The ring structure is recovered
/// from the row order and 2s from the total weight (which equals 2s+1).
inline QGrid read_grid_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw InvalidArgument("grid csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kGridCsvHeader) throw InvalidArgument("grid csv: unexpected header '" + line + "'");

  QGrid g;
  std::size_t lineno = 1;
  double total_weight = 0.0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::array<double, 6> f{};
    std::size_t start = 0;
    for (std::size_t k = 0; k < 6; ++k) {
      const std::size_t end = line.find(',', start);
      if ((k < 5) == (end == std::string::npos)) {
        throw InvalidArgument("grid csv line " + std::to_string(lineno) + ": expected 6 fields");
      }
      const std::string_view field(line.data() + start,
                                   (end == std::string::npos ? line.size() : end) - start);
      f[k] = detail::parse_double(field, lineno);
      start = end + 1;
    }
    g.nodes.push_back(PhasePoint::from_polar(f[0], f[1]));
    g.weights.push_back(f[4]);
    g.values.push_back(f[5]);
    total_weight += f[4];
  }
  if (g.nodes.empty()) throw InvalidArgument("grid csv: no rows");

  int n_phi = 0;
  while (static_cast<std::size_t>(n_phi) < g.size() && g.nodes[static_cast<std::size_t>(n_phi)].theta() == g.nodes[0].theta()) {
    ++n_phi;
  }
  if (g.size() % static_cast<std::size_t>(n_phi) != 0) {
    throw InvalidArgument("grid csv: rows do not form complete theta rings");
  }
  g.n_phi = n_phi;
  g.n_theta = static_cast<int>(g.size() / static_cast<std::size_t>(n_phi));
  const double twice = total_weight - 1.0;
  if (std::abs(twice - std::round(twice)) > 1e-9) {
    throw InvalidArgument("grid csv: total weight is not 2s+1 for a half-integer s");
  }
  g.spin = SpinQuantum::from_twice(static_cast<int>(std::lround(twice)));
  return g;
}

inline QGrid read_grid_csv(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path);
  return read_grid_csv(is);
}

/// Binary graymap (P5) of the values: phi along columns, theta along rows
/// (north pole at the top), linear gray scale over [0, max value].
inline void write_pgm(std::ostream& os, const QGrid& g) {
  const double vmax = g.values.empty() ? 0.0 : *std::max_element(g.values.begin(), g.values.end());
  os << "P5\n" << g.n_phi << ' ' << g.n_theta << "\n255\n";
  for (int it = 0; it < g.n_theta; ++it) {
    for (int ip = 0; ip < g.n_phi; ++ip) {
      const double v = vmax > 0.0 ? std::clamp(g.values[g.index(it, ip)] / vmax, 0.0, 1.0) : 0.0;
      os.put(static_cast<char>(static_cast<unsigned char>(std::lround(255.0 * v))));
    }
  }
}

inline void write_pgm(const std::string& path, const QGrid& g) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open " + path + " for writing");
  write_pgm(os, g);
  if (!os) throw IoError("write failed: " + path);
}

}  // namespace spintop
