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


// spintop_cli: evolutions, grid comparisons, kernel scans and two-qubit
// reports from the command line.
//
// Exit codes: 0 success, 2 usage error, 3 numerical-validation failure,
// 4 I/O error.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spintop/serialization.hpp"
#include "spintop/spintop.hpp"

namespace {

using namespace spintop;

enum ExitCode { kOk = 0, kUsage = 2, kNumerical = 3, kIo = 4 };

struct UsageError : InvalidArgument {
  using InvalidArgument::InvalidArgument;
};

struct TopOptions {
  double s = 1.0;
  double omega = 0.0;
  double J = 1.0;
  std::string z0 = "1";
  std::string grid = "64x128";

  void add_to(CLI::App* cmd) {
    cmd->add_option("--s", s, "spin quantum number (half-integer)")->capture_default_str();
    cmd->add_option("--omega", omega, "linear precession frequency")->capture_default_str();
    cmd->add_option("--J", J, "twisting strength")->capture_default_str();
    cmd->add_option("--z0", z0, "initial coherent-state label, a+bi")->capture_default_str();
    cmd->add_option("--grid", grid, "quadrature grid NxM (theta x phi)")->capture_default_str();
  }

  TopParams params() const {
    TopParams p{omega, J, SpinQuantum::from_value(s)};
    p.validate();
    return p;
  }
  PhasePoint start() const { return PhasePoint::from_z(parse_complex(z0)); }
  QGrid make(SpinQuantum spin) const {
    const auto [n, m] = parse_grid_size(grid);
    return make_grid(spin, n, m);
  }
  json to_json() const {
    const Complex z = parse_complex(z0);
    return {{"s", s}, {"omega", omega}, {"J", J}, {"z0", {z.real(), z.imag()}}, {"grid", grid}};
  }
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open " + path + " for writing");
  os << text;
  if (!os) throw IoError("write failed: " + path);
}

void emit_json(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    write_text(out, j.dump(2) + "\n");
  }
}

void write_manifest(const std::string& path, const std::string& command, json params, std::uint64_t seed,
                    std::vector<std::string> outputs) {
  RunManifest m;
  m.command = command;
  m.params = std::move(params);
  m.seed = seed;
  m.outputs = std::move(outputs);
  write_text(path, to_json(m).dump(2) + "\n");
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
  std::filesystem::path p(path);
  if (p.extension() == ".csv" || p.extension() == ".json") p.replace_extension();
  return p.string() + suffix;
}

std::string join(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum and classical nonlinear top: Q-functions, propagators, dephasing and NMR gates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(spintop::version));

  std::function<void()> action;
  TopOptions top;
  std::string out;
  std::uint64_t seed = 0;

  // evolve
  auto* evolve = app.add_subcommand("evolve", "evolve a coherent state and write its Q-grid as CSV");
  std::string mode = "quantum";
  double t = 0.0;
  double gamma = 0.0;
  bool heatmap = false;
  top.add_to(evolve);
  evolve->add_option("--mode", mode, "quantum | classical | dephasing")
      ->check(CLI::IsMember({"quantum", "classical", "dephasing"}))
      ->capture_default_str();
  evolve->add_option("--t", t, "evolution time")->capture_default_str();
  auto* gamma_opt = evolve->add_option("--gamma", gamma, "collective dephasing rate (dephasing mode only)");
  evolve->add_option("--out", out, "output CSV path")->required();
  evolve->add_option("--seed", seed, "recorded in the manifest");
  evolve->add_flag("--heatmap", heatmap, "also write a PGM heatmap next to the CSV");
  evolve->callback([&] {
    action = [&] {
      if (gamma_opt->count() > 0 && mode != "dephasing") throw UsageError("--gamma is only valid with --mode dephasing");
      if (mode == "dephasing" && gamma_opt->count() == 0) throw UsageError("--mode dephasing requires --gamma");
      const TopParams p = top.params();
      const PhasePoint z0 = top.start();
      const QGrid g = top.make(p.spin);
      const auto rho0 = DensityOperator::from_pure(coherent_state(p.spin, z0));
      QGrid q;
      if (mode == "quantum") {
        q = q_grid(evolve_unitary(rho0, p, t), g);
      } else if (mode == "classical") {
        q = evolve_classical([&](const PhasePoint& z) { return q_coherent(p.spin, z, z0); }, p, t, g);
      } else {
        q = q_grid(evolve_dephasing(rho0, DephasingParams{gamma, p}, t), g);
      }
      std::vector<std::string> outputs{out};
      write_grid_csv(out, q);
      if (heatmap) {
        outputs.push_back(with_suffix(out, ".pgm"));
        write_pgm(outputs.back(), q);
      }
      json params = top.to_json();
      params["mode"] = mode;
      params["t"] = t;
      if (mode == "dephasing") params["gamma"] = gamma;
      const std::string manifest = with_suffix(out, ".manifest.json");
      write_manifest(manifest, "evolve", params, seed, outputs);
      std::cout << out << '\n';
    };
  });

  // compare
  auto* cmp = app.add_subcommand("compare", "compare two Q-grid CSV files");
  std::string file_a, file_b;
  cmp->add_option("a", file_a, "first grid")->required();
  cmp->add_option("b", file_b, "second grid")->required();
  cmp->add_option("--out", out, "write the JSON report here instead of stdout");
  cmp->callback([&] {
    action = [&] { emit_json(to_json(compare(read_grid_csv(file_a), read_grid_csv(file_b))), out); };
  });

  // figure1
  auto* fig = app.add_subcommand("figure1", "initial, classical and quantum Q at t = 2 pi / J");
  std::string outdir;
  top.add_to(fig);
  fig->add_option("--outdir", outdir, "output directory")->required();
  fig->callback([&] {
    action = [&] {
      const TopParams p = top.params();
      if (p.J == 0.0) throw UsageError("figure1 requires J != 0");
      const PhasePoint z0 = top.start();
      const double tf = 2.0 * pi / std::abs(p.J);
      const QGrid g = top.make(p.spin);
      const auto q0 = [&](const PhasePoint& z) { return q_coherent(p.spin, z, z0); };
      const QGrid a = sample(g, q0);
      const QGrid b = evolve_classical(q0, p, tf, g);
      const QGrid c = q_grid(evolve_unitary(DensityOperator::from_pure(coherent_state(p.spin, z0)), p, tf), g);
      std::error_code ec;
      std::filesystem::create_directories(outdir, ec);
      if (ec) throw IoError("cannot create " + outdir + ": " + ec.message());
      std::vector<std::string> outputs;
      const std::pair<const char*, const QGrid*> panels[] = {{"a_initial", &a}, {"b_classical", &b}, {"c_quantum", &c}};
      for (const auto& [name, grid] : panels) {
        outputs.push_back(join(outdir, std::string(name) + ".csv"));
        write_grid_csv(outputs.back(), *grid);
        outputs.push_back(join(outdir, std::string(name) + ".pgm"));
        write_pgm(outputs.back(), *grid);
      }
      json report = to_json(compare(c, b, {tf}));
      const auto peak = [](const QGrid& q) {
        const auto it = std::max_element(q.values.begin(), q.values.end());
        const PhasePoint& at = q.nodes[static_cast<std::size_t>(it - q.values.begin())];
        return json{{"max", *it}, {"theta", at.theta()}, {"phi", at.phi()}};
      };
      report["panels"] = {{"a_initial", peak(a)}, {"b_classical", peak(b)}, {"c_quantum", peak(c)}};
      report["phi_spread"] = {{"a_initial", azimuthal_spread(a)}, {"b_classical", azimuthal_spread(b)}};
      outputs.push_back(join(outdir, "report.json"));
      write_text(outputs.back(), report.dump(2) + "\n");
      json params = top.to_json();
      params["t"] = tf;
      write_manifest(join(outdir, "manifest.json"), "figure1", params, seed, outputs);
      std::cout << outputs.back() << '\n';
    };
  });

  // scan
  auto* scan = app.add_subcommand("scan", "seeded scan of the bilinear propagator kernel");
  std::size_t samples = 10000;
  top.add_to(scan);
  scan->add_option("--t", t, "time")->capture_default_str();
  scan->add_option("--samples", samples, "number of (z, z1, z2) triples")->capture_default_str();
  scan->add_option("--seed", seed, "RNG seed")->capture_default_str();
  scan->add_option("--out", out, "write JSON here instead of stdout");
  scan->callback([&] {
    action = [&] {
      const json report = to_json(kernel_positivity_scan(top.params(), t, samples, seed));
      emit_json(report, out);
      if (!out.empty()) {
        json params = top.to_json();
        params["t"] = t;
        params["samples"] = samples;
        write_manifest(with_suffix(out, ".manifest.json"), "scan", params, seed, {out});
      }
    };
  });

  // dephase
  auto* deph = app.add_subcommand("dephase", "azimuthal structure and theta-marginal under collective dephasing");
  std::vector<double> times{1.0, 10.0, 100.0};
  top.add_to(deph);
  deph->add_option("--gamma", gamma, "collective dephasing rate")->required();
  deph->add_option("--t", times, "one or more times")->capture_default_str();
  deph->add_option("--out", out, "write JSON here instead of stdout");
  deph->callback([&] {
    action = [&] {
      const TopParams p = top.params();
      const DephasingParams dp{gamma, p};
      dp.validate();
      const PhasePoint z0 = top.start();
      const QGrid g = top.make(p.spin);
      const auto rho0 = DensityOperator::from_pure(coherent_state(p.spin, z0));
      const auto q0 = [&](const PhasePoint& z) { return q_coherent(p.spin, z, z0); };
      json rows = json::array();
      for (double ti : times) {
        const QGrid q = q_grid(evolve_dephasing(rho0, dp, ti), g);
        const auto mq = theta_marginal(q);
        const auto mc = theta_marginal(evolve_classical(q0, p, ti, g));
        double gap = 0.0;
        for (std::size_t i = 0; i < mq.size(); ++i) gap = std::max(gap, std::abs(mq[i] - mc[i]));
        const QGrid averaged = azimuthal_average(evolve_classical(q0, p, ti, g));
        rows.push_back({{"t", ti},
                        {"gamma_t", gamma * ti},
                        {"phi_variation", azimuthal_variation(q)},
                        {"theta_marginal_gap", gap},
                        {"sup_gap_vs_averaged_classical", compare(q, averaged).sup}});
      }
      json params = top.to_json();
      params["gamma"] = gamma;
      emit_json({{"params", params}, {"rows", rows}}, out);
      if (!out.empty()) write_manifest(with_suffix(out, ".manifest.json"), "dephase", params, seed, {out});
    };
  });

  // bell
  auto* bell = app.add_subcommand("bell", "run the Bell pulse sequence on |down down>");
  std::string sequence_path;
  bool no_coupling = false;
  bell->add_option("--sequence", sequence_path, "JSON pulse list to run instead of the built-in sequence");
  bell->add_flag("--no-coupling", no_coupling, "drop the entangling sigma_z sigma_z factor");
  bell->add_option("--out", out, "write JSON here instead of stdout");
  bell->callback([&] {
    action = [&] {
      PulseSequence seq = bell_pulses(!no_coupling);
      if (!sequence_path.empty()) {
        std::ifstream is(sequence_path);
        if (!is) throw IoError("cannot open " + sequence_path);
        json j;
        try {
          is >> j;
        } catch (const json::exception& e) {
          throw InvalidArgument(std::string("sequence file: ") + e.what());
        }
        seq = pulse_sequence_from_json(j);
      }
      const CVector psi = apply_sequence(seq, basis_ket(0, 2), 2);
      const auto rho = MultiQubitState::from_pure(psi, 2);
      json amps = json::array();
      for (Eigen::Index k = 0; k < psi.size(); ++k) amps.push_back(complex_to_json(psi(k)));
      emit_json({{"sequence", to_json(seq)},
                 {"global_phase", seq.global_phase},
                 {"amplitudes", amps},
                 {"fidelity", std::norm(phi_plus().dot(psi))},
                 {"min_partial_transpose_eigenvalue", min_partial_transpose_eigenvalue(rho)},
                 {"entangled", ppt_entangled(rho)}},
                out);
    };
  });

  // decay
  auto* decay = app.add_subcommand("decay", "Schack-Caves signal decay (1 + 2^{2n-1})^{-g}");
  int n_qubits = 1;
  double g_steps = 1.0;
  decay->add_option("--n", n_qubits, "qubits")->required();
  decay->add_option("--g", g_steps, "gates")->required();
  decay->add_option("--out", out, "write JSON here instead of stdout");
  decay->callback([&] {
    action = [&] {
      emit_json({{"n", n_qubits},
                 {"g", g_steps},
                 {"decay", schack_caves_decay(n_qubits, g_steps)},
                 {"log10_decay", schack_caves_log10_decay(n_qubits, g_steps)}},
                out);
    };
  });

  // ghz
  auto* ghz = app.add_subcommand("ghz", "GHZ state from a Hadamard and a CNOT cascade");
  int ghz_n = 3;
  ghz->add_option("--n", ghz_n, "qubits (2..12)")->required();
  ghz->add_option("--out", out, "write JSON here instead of stdout");
  ghz->callback([&] {
    action = [&] {
      const CVector psi = ghz_cascade(ghz_n);
      json nonzero = json::array();
      for (Eigen::Index k = 0; k < psi.size(); ++k) {
        if (std::abs(psi(k)) > 1e-12) nonzero.push_back({{"index", k}, {"amplitude", complex_to_json(psi(k))}});
      }
      emit_json({{"n", ghz_n}, {"norm", psi.norm()}, {"nonzero", nonzero}}, out);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    action();
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumerical;
  } catch (const InvalidArgument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumerical;
  }
  return kOk;
}
