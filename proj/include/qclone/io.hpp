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

// JSON encodings. Complex numbers are [re, im] pairs and matrices are
// row-major nested arrays.

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qclone/attacks.hpp"
#include "qclone/kraus.hpp"
#include "qclone/sdp/solve.hpp"
#include "qclone/states.hpp"
#include "qclone/targets.hpp"
#include "qclone/version.hpp"

namespace qclone::io {

using json = nlohmann::json;

inline json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline Complex complex_from_json(const json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

inline json to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ComplexMatrix matrix_from_json(const json& j) {
  const auto rows = static_cast<Index>(j.size());
  const auto cols = rows ? static_cast<Index>(j.at(0).size()) : 0;
  ComplexMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const json& row = j.at(static_cast<std::size_t>(r));
    if (static_cast<Index>(row.size()) != cols)
      throw DimensionError("matrix_from_json: ragged rows");
    for (Index c = 0; c < cols; ++c)
      m(r, c) = complex_from_json(row.at(static_cast<std::size_t>(c)));
  }
  return m;
}

inline json to_json(const SubsystemShape& s) { return s.dims; }

inline SubsystemShape shape_from_json(const json& j) {
  return SubsystemShape(j.get<std::vector<Index>>());
}

inline json to_json(const states::SamplingSet& s) {
  json states = json::array();
  for (const auto& k : s.states) {
    json amps = json::array();
    for (Index i = 0; i < k.dim(); ++i) amps.push_back(complex_to_json(k[i]));
    states.push_back(std::move(amps));
  }
  return {{"descriptor", s.descriptor.label()}, {"dim", s.dim()}, {"states", states}};
}

inline states::SamplingSet sampling_set_from_json(const json& j) {
  states::SamplingSet s;
  s.descriptor = states::parse_descriptor(j.at("descriptor").get<std::string>());
  for (const auto& amps : j.at("states")) {
    ComplexVector v(static_cast<Index>(amps.size()));
    for (std::size_t i = 0; i < amps.size(); ++i)
      v(static_cast<Index>(i)) = complex_from_json(amps[i]);
    s.states.emplace_back(v, 1e-10);
  }
  s.validate();
  return s;
}

inline json to_json(const targets::CloningScenario& s) {
  return {{"family", targets::to_string(s.family)},
          {"m", s.m_in},
          {"n", s.n_out},
          {"subsystem_dim", s.subsystem_dim},
          {"theta", s.theta},
          {"label", s.label()}};
}

inline targets::CloningScenario scenario_from_json(const json& j) {
  targets::CloningScenario s = targets::make_scenario(
      targets::family_from_string(j.at("family").get<std::string>()),
      j.at("m").get<int>(), j.at("n").get<int>(), j.value("theta", 0.0));
  return s;
}

inline json to_json(const targets::TargetOperator& t) {
  return {{"scenario", to_json(t.scenario)},
          {"kind", targets::to_string(t.kind)},
          {"copy_index", t.copy_index},
          {"lambda", t.lambda},
          {"shape", to_json(t.shape)},
          {"matrix", to_json(t.matrix)}};
}

inline targets::TargetOperator target_from_json(const json& j) {
  targets::TargetOperator t;
  t.scenario = scenario_from_json(j.at("scenario"));
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "global") t.kind = targets::Kind::Global;
  else if (kind == "local") t.kind = targets::Kind::Local;
  else if (kind == "asymmetric") t.kind = targets::Kind::Asymmetric;
  else throw InvalidArgument("target_from_json: unknown kind '" + kind + "'");
  t.copy_index = j.at("copy_index").get<std::size_t>();
  t.lambda = j.at("lambda").get<double>();
  t.shape = shape_from_json(j.at("shape"));
  t.matrix = matrix_from_json(j.at("matrix"));
  if (t.matrix.rows() != t.shape.total())
    throw DimensionError("target_from_json: matrix does not match shape");
  return t;
}

inline json to_json(const sdp::ChoiMatrix& c) {
  return {{"d_in", c.d_in},
          {"d_out", c.d_out()},
          {"output_shape", to_json(c.output_shape)},
          {"matrix", to_json(c.matrix)}};
}

inline sdp::ChoiMatrix choi_from_json(const json& j) {
  sdp::ChoiMatrix c;
  c.d_in = j.at("d_in").get<Index>();
  c.output_shape = shape_from_json(j.at("output_shape"));
  c.matrix = matrix_from_json(j.at("matrix"));
  if (c.matrix.rows() != c.d_in * c.d_out())
    throw DimensionError("choi_from_json: matrix does not match dimensions");
  return c;
}

inline json to_json(const kraus::KrausSet& k) {
  json ops = json::array();
  for (const auto& op : k.operators) ops.push_back(to_json(op));
  return {{"d_in", k.d_in},
          {"d_out", k.d_out},
          {"threshold", k.eig_threshold_used},
          {"operators", ops},
          {"completeness_residual", k.completeness_residual}};
}

inline kraus::KrausSet kraus_from_json(const json& j) {
  std::vector<ComplexMatrix> ops;
  for (const auto& op : j.at("operators")) ops.push_back(matrix_from_json(op));
  kraus::KrausSet k = kraus::make_kraus_set(std::move(ops));
  if (k.d_in != j.at("d_in").get<Index>() || k.d_out != j.at("d_out").get<Index>())
    throw DimensionError("kraus_from_json: operator size does not match header");
  k.eig_threshold_used = j.at("threshold").get<double>();
  return k;
}

inline json to_json(const sdp::SolverSettings& s, Index cone_dim) {
  return {{"tol", s.tolerance_for(cone_dim)},
          {"gap_tol", s.gap_tol},
          {"max_iterations", s.max_iterations},
          {"symmetry", sdp::to_string(s.symmetry)},
          {"dual_accuracy", s.dual.accuracy}};
}

/// Certificate with optional audit context. Wall time is omitted unless
/// requested so that repeated runs produce identical files.
inline json to_json(const sdp::Certificate& c, bool include_wall_time = false) {
  json j = {{"primal_value", c.primal_value},
            {"dual_value", c.dual_value},
            {"gap", c.gap},
            {"primal_feas_residual", c.primal_feas_residual},
            {"dual_feas_residual", c.dual_feas_residual},
            {"iterations", c.iterations},
            {"tol", c.tol},
            {"status", c.pass ? "PASS" : "FAIL"}};
  if (include_wall_time) j["wall_time"] = c.wall_time;
  return j;
}

inline json certificate_report(const sdp::Certificate& c,
                               const targets::TargetOperator& t,
                               const std::string& sampling,
                               const sdp::SolverSettings& s,
                               bool include_wall_time = false) {
  json j = to_json(c, include_wall_time);
  j["scenario"] = to_json(t.scenario);
  j["objective"] = targets::to_string(t.kind);
  if (t.kind == targets::Kind::Asymmetric) j["lambda"] = t.lambda;
  j["sampling"] = sampling;
  j["solver"] = to_json(s, t.shape.total());
  j["version"] = kVersion;
  return j;
}

inline json to_json(const sdp::SdpProblem& p) {
  json cons = json::array();
  for (const auto& c : p.constraints) {
    json entries = json::array();
    for (const auto& e : c.entries)
      entries.push_back({e.row, e.col, e.value.real(), e.value.imag()});
    cons.push_back({{"entries", entries}, {"rhs", c.rhs}});
  }
  return {{"form", sdp::to_string(p.form)},
          {"sense", p.sense == sdp::Sense::Maximize ? "maximize" : "minimize"},
          {"cone_dim", p.cone_dim()},
          {"shape", to_json(p.shape)},
          {"objective", to_json(p.objective)},
          {"equality_constraints", cons},
          {"symmetry_generators", p.symmetry_generators}};
}

inline sdp::SdpProblem problem_from_json(const json& j) {
  sdp::SdpProblem p;
  p.form = j.at("form").get<std::string>() == "choi-dual" ? sdp::Form::ChoiDual
                                                          : sdp::Form::ChoiPrimal;
  p.sense = j.at("sense").get<std::string>() == "minimize" ? sdp::Sense::Minimize
                                                           : sdp::Sense::Maximize;
  p.shape = shape_from_json(j.at("shape"));
  p.objective = matrix_from_json(j.at("objective"));
  for (const auto& c : j.at("equality_constraints")) {
    sdp::HermitianConstraint hc;
    hc.rhs = c.at("rhs").get<double>();
    for (const auto& e : c.at("entries"))
      hc.entries.push_back({e.at(0).get<Index>(), e.at(1).get<Index>(),
                            Complex(e.at(2).get<double>(), e.at(3).get<double>())});
    p.constraints.push_back(std::move(hc));
  }
  p.symmetry_generators = j.at("symmetry_generators").get<std::vector<sdp::IndexMap>>();
  return p;
}

inline json to_json(const attacks::AttackResult& r) {
  json j = {{"lambda", r.point.lambda},
            {"mu", r.point.mu},
            {"protocol", attacks::to_string(r.point.protocol)},
            {"family", attacks::to_string(r.point.family)}};
  if (!r.ok()) {
    j["error"] = r.error;
    return j;
  }
  j["f_bob"] = r.f_bob;
  j["f_eve"] = r.f_eve;
  j["qber"] = r.qber;
  j["secure"] = r.secure;
  j["concurrence"] = r.concurrence_bob_eve;
  return j;
}

/// Fixed significant-digit formatting used by every CSV writer.
inline std::string fmt(double v, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw Error("failed writing '" + path + "'");
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace qclone::io
