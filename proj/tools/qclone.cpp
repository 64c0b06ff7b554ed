// Copyright 2026 The qclone Authors
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

// qclone command-line front end.
//
// Exit codes: 0 success, 1 solver or certification failure, 2 usage error.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qclone/qclone.hpp"

namespace {

using namespace qclone;

constexpr int kOk = 0;
constexpr int kSolverFailure = 1;
constexpr int kUsage = 2;

/// "a:b:n" is n evenly spaced points from a to b; otherwise a comma list.
std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  if (std::count(text.begin(), text.end(), ':') == 2) {
    const auto p1 = text.find(':'), p2 = text.rfind(':');
    const double a = std::stod(text.substr(0, p1));
    const double b = std::stod(text.substr(p1 + 1, p2 - p1 - 1));
    const int n = std::stoi(text.substr(p2 + 1));
    if (n < 1) throw InvalidArgument("grid '" + text + "': need at least one point");
    for (int i = 0; i < n; ++i)
      out.push_back(n == 1 ? a : a + (b - a) * i / (n - 1));
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stod(item));
  if (out.empty()) throw InvalidArgument("grid '" + text + "' is empty");
  return out;
}

std::vector<double> grid_or_throw(const std::string& text) {
  try {
    return parse_grid(text);
  } catch (const std::invalid_argument&) {
    throw InvalidArgument("grid '" + text + "' is not numeric");
  } catch (const std::out_of_range&) {
    throw InvalidArgument("grid '" + text + "' is out of range");
  }
}

/// Writes to `path`, or stdout when it is empty or "-".
void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  io::write_file(path, content);
}

std::string header(double tol) {
  return "# qclone " + std::string(kVersion) + " tol=" + io::fmt(tol, 3) + "\n";
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string config_file, save_config;
  std::string family, sampling, objective, symmetry, out_dir;
  int m = 1, n = 2;
  double theta = 0.0, lambda = 0.5, tol = 0.0, threshold = kraus::kDefaultThreshold;
  std::size_t copy = 0;
  std::uint64_t seed = 1;
  bool no_files = false;
};

RunConfig merge(const SolveArgs& a, CLI::App& cmd) {
  RunConfig c = a.config_file.empty() ? RunConfig{} : load_config(a.config_file);
  auto given = [&](const char* name) { return cmd.count(name) > 0; };
  auto& s = c.scenario;
  const auto family =
      given("--scenario") ? targets::family_from_string(a.family) : s.family;
  const int m = given("--m") ? a.m : s.m_in;
  const int n = given("--n") ? a.n : s.n_out;
  const double theta = given("--theta") ? a.theta : s.theta;
  s = targets::make_scenario(family, m, n, theta);
  if (given("--sampling")) c.sampling = a.sampling;
  if (given("--objective")) c.objective = kind_from_string(a.objective);
  if (given("--lambda")) c.lambda = a.lambda;
  if (given("--copy")) c.copy_index = a.copy;
  if (given("--tol")) c.tol = a.tol;
  if (given("--symmetry")) c.symmetry = sdp::symmetry_mode_from_string(a.symmetry);
  if (given("--threshold")) c.eig_threshold = a.threshold;
  if (given("--seed")) c.seed = a.seed;
  if (given("--out-dir")) c.out_dir = a.out_dir;
  return c;
}

int cmd_solve(const RunConfig& c, bool write_files) {
  const auto target = build_target(c);
  const auto settings = c.solver_settings();
  const auto problem = sdp::assemble_primal(target);
  sdp::SolveResult res;
  try {
    res = sdp::solve(problem, settings);
  } catch (const ConvergenceError& e) {
    std::fprintf(stderr, "solver failed: %s\n  primal residual %.3e  dual residual %.3e  gap %.3e  iterations %d\n",
                 e.what(), e.primal_residual(), e.dual_residual(), e.gap(), e.iterations());
    return kSolverFailure;
  }
  const auto& cert = res.certificate;
  const auto k = kraus::extract(res.choi, c.eig_threshold);
  const std::string sampling = c.sampling_set().descriptor.label();

  if (write_files) {
    std::filesystem::create_directories(c.out_dir);
    if (auto p = c.path_for(c.certificate_file); !p.empty())
      io::write_file(p, io::certificate_report(cert, target, sampling, settings).dump(2) + "\n");
    if (auto p = c.path_for(c.choi_file); !p.empty()) {
      auto j = io::to_json(res.choi);
      j["version"] = kVersion;
      j["tol"] = cert.tol;
      io::write_file(p, j.dump(2) + "\n");
    }
    if (auto p = c.path_for(c.kraus_file); !p.empty()) {
      auto j = io::to_json(k);
      j["version"] = kVersion;
      j["tol"] = cert.tol;
      io::write_file(p, j.dump(2) + "\n");
    }
  }

  std::printf("%-26s primal %s  dual %s  gap %.3e  #ops %zu  time %.2f s  %s\n",
              target.scenario.label().c_str(), io::fmt(cert.primal_value).c_str(),
              io::fmt(cert.dual_value).c_str(), cert.gap, k.size(), cert.wall_time,
              cert.pass ? "PASS" : "FAIL");
  if (!cert.pass) {
    std::fprintf(stderr,
                 "certificate failed at tol %.1e: gap %.3e  primal residual %.3e  dual residual %.3e\n",
                 cert.tol, cert.gap, cert.primal_feas_residual, cert.dual_feas_residual);
    return kSolverFailure;
  }
  return kOk;
}

// ---------------------------------------------------------------- sweeps

targets::CloningScenario sweep_scenario(const std::string& family) {
  return attacks::cloner_scenario(attacks::family_from_string(family));
}

int cmd_sweep_asymmetric(const std::string& family, const std::vector<double>& lambdas,
                         const sdp::SolverSettings& s, const std::string& out) {
  const auto sc = sweep_scenario(family);
  const auto set = targets::default_sampling(sc);
  const auto omega_a = targets::omega_local(set, sc, 0);
  const auto omega_b = targets::omega_local(set, sc, 1);
  std::string csv = header(s.tolerance_for(sc.shape().total()));
  csv += "# scenario " + sc.label() + " sampling " + set.descriptor.label() + "\n";
  csv += "lambda,F_A,F_B,gap,error\n";
  bool failed = false;
  for (double l : lambdas) {
    try {
      const auto res =
          sdp::solve(sdp::assemble_primal(targets::omega_asymmetric(set, sc, l)), s);
      if (!res.certificate.pass) throw Error("certificate failed");
      csv += io::fmt(l) + "," + io::fmt(targets::fidelity(res.choi.matrix, omega_a.matrix)) +
             "," + io::fmt(targets::fidelity(res.choi.matrix, omega_b.matrix)) + "," +
             io::fmt(res.certificate.gap, 4) + ",\n";
    } catch (const Error& e) {
      failed = true;
      csv += io::fmt(l) + ",,,,\"" + std::string(e.what()) + "\"\n";
    }
  }
  emit(out, csv);
  return failed ? kSolverFailure : kOk;
}

int cmd_two_pair(const std::vector<double>& thetas, const sdp::SolverSettings& s,
                 const std::string& out) {
  std::string csv = header(s.tolerance_for(8));
  csv += "theta,F_numeric,F_analytic,abs_diff,error\n";
  bool failed = false;
  for (double th : thetas) {
    try {
      const auto sc = targets::make_scenario(targets::Family::TwoPair, 1, 2, th);
      const auto t = targets::omega_local(targets::default_sampling(sc), sc);
      const auto res = sdp::solve(sdp::assemble_primal(t), s);
      if (!res.certificate.pass) throw Error("certificate failed");
      const double f = res.certificate.primal_value;
      const double exact = targets::analytic::two_pair(th);
      csv += io::fmt(th) + "," + io::fmt(f) + "," + io::fmt(exact) + "," +
             io::fmt(std::abs(f - exact), 4) + ",\n";
    } catch (const Error& e) {
      failed = true;
      csv += io::fmt(th) + ",,,,\"" + std::string(e.what()) + "\"\n";
    }
  }
  emit(out, csv);
  return failed ? kSolverFailure : kOk;
}

int cmd_bb84(const std::string& family, const std::string& protocol,
             const std::vector<double>& lambdas, const std::vector<double>& mus,
             const sdp::SolverSettings& s, double threshold, const std::string& out,
             const std::string& json_out) {
  const auto fam = attacks::family_from_string(family);
  const auto proto = attacks::protocol_from_string(protocol);
  attacks::SweepSettings settings{s, threshold};
  attacks::ClonerCache cache;
  const auto results = attacks::attack_sweep(fam, proto, lambdas, mus, settings, &cache);

  const auto model = attacks::default_model(proto);
  const double q = attacks::threshold(model);
  // f_bob at which the protocol's QBER equals its threshold
  const double f_contour = proto == attacks::Protocol::FourState ? 1.0 - q : 1.0 - q / 0.75;
  const double tol = s.tolerance_for(attacks::cloner_scenario(fam).shape().total());

  std::string csv = header(tol);
  csv += "# family " + attacks::to_string(fam) + " protocol " + attacks::to_string(proto) + "\n";
  csv += "# contour f_bob=" + io::fmt(f_contour, 4) + " qber=" + io::fmt(q, 4) + "\n";
  csv += "lambda,mu,f_bob,f_eve,qber,secure,concurrence,error\n";
  bool failed = false;
  io::json rows = io::json::array();
  for (const auto& r : results) {
    rows.push_back(io::to_json(r));
    if (!r.ok()) {
      failed = true;
      csv += io::fmt(r.point.lambda) + "," + io::fmt(r.point.mu) + ",,,,,,\"" + r.error + "\"\n";
      continue;
    }
    csv += io::fmt(r.point.lambda) + "," + io::fmt(r.point.mu) + "," + io::fmt(r.f_bob) +
           "," + io::fmt(r.f_eve) + "," + io::fmt(r.qber) + "," + (r.secure ? "1" : "0") +
           "," + io::fmt(r.concurrence_bob_eve) + ",\n";
  }
  emit(out, csv);
  if (!json_out.empty()) {
    io::json j = {{"version", kVersion},
                  {"tol", tol},
                  {"family", attacks::to_string(fam)},
                  {"protocol", attacks::to_string(proto)},
                  {"contour", {{"f_bob", f_contour}, {"qber", q}}},
                  {"points", rows}};
    io::write_file(json_out, j.dump(2) + "\n");
  }
  return failed ? kSolverFailure : kOk;
}

int cmd_bench(const std::string& table, const std::string& budget, const std::string& format,
              bool timings, const sdp::SolverSettings& s, const std::string& out) {
  bench::Budget b;
  if (budget == "extended") b = bench::Budget::extended();
  else if (budget != "default") throw InvalidArgument("unknown budget '" + budget + "'");
  auto report = bench::run(table, b, s);
  report.include_timings = timings;
  if (format == "markdown") emit(out, bench::to_markdown(report));
  else if (format == "csv") emit(out, bench::to_csv(report));
  else throw InvalidArgument("unknown format '" + format + "'");
  return report.ok() ? kOk : kSolverFailure;
}

int cmd_export_kraus(const std::string& choi_path, double threshold, const std::string& out,
                     bool text) {
  const auto choi = io::choi_from_json(io::json::parse(io::read_file(choi_path)));
  const auto k = kraus::extract(choi, threshold);
  if (text) {
    std::cout << kraus::render_text(k);
  }
  auto j = io::to_json(k);
  j["version"] = kVersion;
  if (!out.empty()) io::write_file(out, j.dump(2) + "\n");
  else if (!text) std::cout << j.dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal quantum cloning channels via semidefinite programming"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // solve
  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Solve and certify one cloning scenario");
  solve->add_option("--config", sa.config_file, "JSON run configuration");
  solve->add_option("--save-config", sa.save_config, "Write the effective configuration");
  solve->add_option("--scenario", sa.family,
                    "universal | covariant | xz-covariant | two-pair | entanglement-real | "
                    "entanglement-general");
  solve->add_option("--m", sa.m, "Number of input copies");
  solve->add_option("--n", sa.n, "Number of output copies");
  solve->add_option("--theta", sa.theta, "Two-pair angle");
  solve->add_option("--sampling", sa.sampling, "Sampling set label, e.g. sic4 or fibonacci:100");
  solve->add_option("--objective", sa.objective, "local | global | asymmetric");
  solve->add_option("--lambda", sa.lambda, "Asymmetry weight of copy A");
  solve->add_option("--copy", sa.copy, "Output copy for the local objective");
  solve->add_option("--tol", sa.tol, "Certificate tolerance");
  solve->add_option("--symmetry", sa.symmetry, "auto | explicit | projected");
  solve->add_option("--threshold", sa.threshold, "Kraus eigenvalue cut-off");
  solve->add_option("--seed", sa.seed, "Seed for random sampling sets");
  solve->add_option("--out-dir", sa.out_dir, "Directory for output files");
  solve->add_flag("--no-files", sa.no_files, "Only print the summary line");

  // sweeps
  std::string family = "universal", protocol = "four-state", lambdas = "0:1:11",
              mus = "0:0.75:11", thetas, out, json_out;
  double tol = 0.0, threshold = kraus::kDefaultThreshold;
  auto* sweep = app.add_subcommand("sweep-asymmetric", "Asymmetric 1->2 fidelities over lambda");
  sweep->add_option("--family", family, "universal | covariant");
  sweep->add_option("--lambdas", lambdas, "Grid a:b:n or comma list");
  sweep->add_option("--tol", tol);
  sweep->add_option("--out", out, "CSV file (default stdout)");

  auto* two = app.add_subcommand("two-pair", "Two-pair cloning fidelity against the closed form");
  two->add_option("--thetas", thetas, "Grid a:b:n or comma list (default 0..pi/4, 7 points)");
  two->add_option("--tol", tol);
  two->add_option("--out", out, "CSV file (default stdout)");

  auto* bb84 = app.add_subcommand("bb84", "Cloning attack on BB84 / six-state under noise");
  bb84->add_option("--family", family, "universal | covariant");
  bb84->add_option("--protocol", protocol, "four-state | six-state");
  bb84->add_option("--lambdas", lambdas, "Grid a:b:n or comma list");
  bb84->add_option("--mus", mus, "Grid a:b:n or comma list within [0, 0.75]");
  bb84->add_option("--threshold", threshold, "Kraus eigenvalue cut-off");
  bb84->add_option("--tol", tol);
  bb84->add_option("--out", out, "CSV file (default stdout)");
  bb84->add_option("--json", json_out, "Also write the results as JSON");

  std::string table = "all", budget = "default", format = "markdown";
  bool timings = false;
  auto* bench = app.add_subcommand("bench", "Reproduce the reference tables");
  bench->add_option("--table", table, "table1 | table2 | table3 | table4 | all");
  bench->add_option("--budget", budget, "default | extended");
  bench->add_option("--format", format, "markdown | csv");
  bench->add_flag("--timings", timings, "Include wall times (output no longer reproducible)");
  bench->add_option("--out", out, "Report file (default stdout)");

  std::string choi_path;
  bool text = false;
  auto* exp = app.add_subcommand("export-kraus", "Kraus operators of a stored Choi matrix");
  exp->add_option("--choi", choi_path, "Choi JSON written by solve")->required();
  exp->add_option("--threshold", threshold, "Eigenvalue cut-off");
  exp->add_option("--out", out, "Kraus JSON file (default stdout)");
  exp->add_flag("--text", text, "Print the operators as text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  sdp::SolverSettings settings;
  settings.tol = tol;
  settings.record_history = false;
  try {
    if (solve->parsed()) {
      const RunConfig c = merge(sa, *solve);
      if (!sa.save_config.empty()) save_config(c, sa.save_config);
      return cmd_solve(c, !sa.no_files);
    }
    if (sweep->parsed()) return cmd_sweep_asymmetric(family, grid_or_throw(lambdas), settings, out);
    if (two->parsed()) {
      const auto grid = thetas.empty()
                            ? std::vector<double>{0.0, std::numbers::pi / 24, std::numbers::pi / 12,
                                                  std::numbers::pi / 8, std::numbers::pi / 6,
                                                  5 * std::numbers::pi / 24, std::numbers::pi / 4}
                            : grid_or_throw(thetas);
      return cmd_two_pair(grid, settings, out);
    }
    if (bb84->parsed())
      return cmd_bb84(family, protocol, grid_or_throw(lambdas), grid_or_throw(mus), settings,
                      threshold, out, json_out);
    if (bench->parsed()) return cmd_bench(table, budget, format, timings, settings, out);
    if (exp->parsed()) return cmd_export_kraus(choi_path, threshold, out, text);
  } catch (const InvalidArgument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kUsage;
  } catch (const DimensionError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kUsage;
  } catch (const ConvergenceError& e) {
    std::fprintf(stderr, "solver failed: %s\n", e.what());
    return kSolverFailure;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kSolverFailure;
  }
  return kUsage;
}
