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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "qclone/io.hpp"

namespace qclone {

/// Everything needed to reproduce one solve. Stored as JSON.
struct RunConfig {
  targets::CloningScenario scenario;
  std::string sampling;  // descriptor label; empty selects the family default
  targets::Kind objective = targets::Kind::Local;
  double lambda = 0.5;
  std::size_t copy_index = 0;
  double tol = 0.0;  // <= 0 selects the size-dependent default
  int max_iterations = 200;
  sdp::SymmetryMode symmetry = sdp::SymmetryMode::Auto;
  double eig_threshold = kraus::kDefaultThreshold;
  std::uint64_t seed = 1;
  std::string out_dir = ".";
  std::string certificate_file = "certificate.json";
  std::string choi_file = "choi.json";
  std::string kraus_file = "kraus.json";

  bool operator==(const RunConfig&) const = default;

  sdp::SolverSettings solver_settings() const {
    sdp::SolverSettings s;
    s.tol = tol;
    s.max_iterations = max_iterations;
    s.symmetry = symmetry;
    return s;
  }

  states::SamplingSet sampling_set() const {
    if (sampling.empty()) return targets::default_sampling(scenario, seed);
    return states::generate(states::parse_descriptor(sampling, seed));
  }

  /// Empty file names disable that artifact.
  std::string path_for(const std::string& file) const {
    if (file.empty()) return {};
    return (std::filesystem::path(out_dir) / file).string();
  }
};

inline targets::Kind kind_from_string(const std::string& s) {
  for (auto k : {targets::Kind::Global, targets::Kind::Local, targets::Kind::Asymmetric})
    if (targets::to_string(k) == s) return k;
  throw InvalidArgument("unknown objective '" + s + "'");
}

inline io::json to_json(const RunConfig& c) {
  return {{"scenario", io::to_json(c.scenario)},
          {"sampling", c.sampling},
          {"objective", targets::to_string(c.objective)},
          {"lambda", c.lambda},
          {"copy_index", c.copy_index},
          {"solver",
           {{"tol", c.tol},
            {"max_iterations", c.max_iterations},
            {"symmetry", sdp::to_string(c.symmetry)}}},
          {"eig_threshold", c.eig_threshold},
          {"seed", c.seed},
          {"output",
           {{"dir", c.out_dir},
            {"certificate", c.certificate_file},
            {"choi", c.choi_file},
            {"kraus", c.kraus_file}}}};
}

/// Missing keys keep their defaults, so a config file may be partial.
inline RunConfig config_from_json(const io::json& j) {
  RunConfig c;
  if (j.contains("scenario")) {
    const auto& s = j.at("scenario");
    c.scenario = targets::make_scenario(
        targets::family_from_string(s.value("family", std::string("universal"))),
        s.value("m", 1), s.value("n", 2), s.value("theta", 0.0));
  }
  c.sampling = j.value("sampling", c.sampling);
  if (j.contains("objective")) c.objective = kind_from_string(j.at("objective"));
  c.lambda = j.value("lambda", c.lambda);
  c.copy_index = j.value("copy_index", c.copy_index);
  if (j.contains("solver")) {
    const auto& s = j.at("solver");
    c.tol = s.value("tol", c.tol);
    c.max_iterations = s.value("max_iterations", c.max_iterations);
    if (s.contains("symmetry"))
      c.symmetry = sdp::symmetry_mode_from_string(s.at("symmetry"));
  }
  c.eig_threshold = j.value("eig_threshold", c.eig_threshold);
  c.seed = j.value("seed", c.seed);
  if (j.contains("output")) {
    const auto& o = j.at("output");
    c.out_dir = o.value("dir", c.out_dir);
    c.certificate_file = o.value("certificate", c.certificate_file);
    c.choi_file = o.value("choi", c.choi_file);
    c.kraus_file = o.value("kraus", c.kraus_file);
  }
  return c;
}

inline RunConfig load_config(const std::string& path) {
  try {
    return config_from_json(io::json::parse(io::read_file(path)));
  } catch (const io::json::exception& e) {
    throw InvalidArgument("config '" + path + "': " + e.what());
  }
}

inline void save_config(const RunConfig& c, const std::string& path) {
  io::write_file(path, to_json(c).dump(2) + "\n");
}

/// Target operator for the configured scenario, sampling and objective.
inline targets::TargetOperator build_target(const RunConfig& c) {
  c.scenario.validate();
  const states::SamplingSet set = c.sampling_set();
  switch (c.objective) {
    case targets::Kind::Global: return targets::omega_global(set, c.scenario);
    case targets::Kind::Local:
      return targets::omega_local(set, c.scenario, c.copy_index);
    case targets::Kind::Asymmetric:
      return targets::omega_asymmetric(set, c.scenario, c.lambda);
  }
  throw InvalidArgument("build_target: unknown objective");
}

}  // namespace qclone
