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

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "spintop/common.hpp"
#include "spintop/compare.hpp"
#include "spintop/nmr_gates.hpp"
#include "spintop/propagators.hpp"

namespace spintop {

using json = nlohmann::ordered_json;

inline json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

inline json to_json(const TopParams& p) {
  return {{"s", p.spin.value()}, {"omega", p.omega}, {"J", p.J}};
}

inline json to_json(const PhasePoint& p) {
  json j = {{"theta", p.theta()}, {"phi", p.phi()}};
  if (!p.is_south_pole()) j["z"] = complex_to_json(p.z());
  return j;
}

inline json to_json(const KernelScanReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back({{"kind", w.kind},
                         {"z", to_json(w.z)},
                         {"z1", to_json(w.z1)},
                         {"z2", to_json(w.z2)},
                         {"value", complex_to_json(w.value)}});
  }
  return {{"params", to_json(r.params)},
          {"t", r.t},
          {"n_samples", r.n_samples},
          {"seed", r.seed},
          {"min_real", r.min_real},
          {"max_abs_imag", r.max_abs_imag},
          {"diag_min_real", r.diag_min_real},
          {"diag_max_abs_imag", r.diag_max_abs_imag},
          {"witnesses", witnesses}};
}

inline json to_json(const ComparisonReport& r) {
  json gaps = json::object();
  for (const auto& [name, v] : r.moment_gaps) gaps[name] = v;
  return {{"l1", r.l1}, {"sup", r.sup}, {"moment_gaps", gaps}, {"times", r.times}};
}

inline json to_json(const PulseTerm& t) {
  if (t.kind == PulseTerm::Kind::Coupling) {
    return {{"kind", "coupling"}, {"pair", {t.pair.first, t.pair.second}}, {"angle", t.angle}};
  }
  return {{"kind", "rot"},
          {"axis", {t.axis.x(), t.axis.y(), t.axis.z()}},
          {"angle", t.angle},
          {"target", t.target}};
}

inline json to_json(const PulseSequence& s) {
  json terms = json::array();
  for (const auto& t : s.terms) terms.push_back(to_json(t));
  return terms;
}

/// Accepts the list form produced by to_json(PulseSequence).
inline PulseSequence pulse_sequence_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("pulse sequence: expected a JSON list");
  PulseSequence seq;
  try {
    for (const auto& item : j) {
      const std::string kind = item.at("kind").get<std::string>();
      const double angle = item.at("angle").get<double>();
      if (kind == "rot") {
        const auto a = item.at("axis").get<std::vector<double>>();
        if (a.size() != 3) throw InvalidArgument("pulse sequence: axis needs 3 components");
        seq.terms.push_back(PulseTerm::rotation({a[0], a[1], a[2]}, angle, item.at("target").get<int>()));
      } else if (kind == "coupling") {
        const auto p = item.at("pair").get<std::vector<int>>();
        if (p.size() != 2) throw InvalidArgument("pulse sequence: pair needs 2 entries");
        seq.terms.push_back(PulseTerm::coupling(angle, p[0], p[1]));
      } else {
        throw InvalidArgument("pulse sequence: unknown kind '" + kind + "'");
      }
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("pulse sequence: ") + e.what());
  }
  return seq;
}

struct RunManifest {
  std::string command;
  json params = json::object();
  std::uint64_t seed = 0;
  std::vector<std::string> outputs;
  std::string version{spintop::version};
};

inline json to_json(const RunManifest& m) {
  return {{"command", m.command},
          {"params", m.params},
          {"seed", m.seed},
          {"outputs", m.outputs},
          {"version", m.version}};
}

}  // namespace spintop
