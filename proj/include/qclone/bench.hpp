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

// Reference tables for the standard cloning scenarios, re-solved and checked
// row by row.

#include <chrono>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qclone/io.hpp"

namespace qclone::bench {

enum class Status { Pass, Fail, Skipped };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
  }
  return "?";
}

/// Size caps. Rows above a cap are reported as SKIPPED.
struct Budget {
  int max_m_plus_n = 6;
  std::size_t max_samples = 10000;

  static Budget extended() { return {8, 500000}; }
};

struct Row {
  std::string table;
  std::string label;
  double reference = 0.0;  // value the row is checked against
  double tol = 1e-6;
  std::optional<double> primal;
  std::optional<double> dual;
  std::optional<double> gap;
  std::optional<int> ops;
  std::optional<int> expected_ops;
  double seconds = 0.0;
  Status status = Status::Skipped;
  std::string note;
};

struct Report {
  std::vector<Row> rows;
  bool include_timings = false;

  bool ok() const {
    for (const auto& r : rows)
      if (r.status == Status::Fail) return false;
    return true;
  }
};

/// Least-squares slope of log(y) against log(x).
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw InvalidArgument("loglog_slope: need at least two matching points");
  double mx = 0, my = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]) / n;
    my += std::log(y[i]) / n;
  }
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

namespace detail {

struct Solved {
  sdp::SolveResult result;
  kraus::KrausSet kraus;
  double seconds = 0.0;
};

inline Solved run(const targets::TargetOperator& t, double eig_threshold,
                  const sdp::SolverSettings& s) {
  const auto t0 = std::chrono::steady_clock::now();
  Solved out{sdp::solve(sdp::assemble_primal(t), s), {}, 0.0};
  out.kraus = kraus::extract(out.result.choi, eig_threshold);
  out.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

/// Fills the numeric columns and decides PASS/FAIL from the value, the
/// certificate and, when given, the operator count.
inline void fill(Row& row, const Solved& s) {
  const auto& c = s.result.certificate;
  row.primal = c.primal_value;
  row.dual = c.dual_value;
  row.gap = c.gap;
  row.ops = static_cast<int>(s.kraus.size());
  row.seconds = s.seconds;
  const bool value_ok = std::abs(c.primal_value - row.reference) <= row.tol;
  const bool ops_ok = !row.expected_ops || *row.expected_ops == *row.ops;
  row.status = value_ok && c.pass && ops_ok ? Status::Pass : Status::Fail;
  if (!c.pass) row.note = "certificate failed";
  else if (!value_ok) row.note = "value outside tolerance";
  else if (!ops_ok) row.note = "operator count differs";
}

inline Row failed(Row row, const std::string& what) {
  row.status = Status::Fail;
  row.note = what;
  return row;
}

}  // namespace detail

/// Universal 1 -> 2 under different sampling sets, plus the convergence fit
/// over Fibonacci sets of size 10, 100 and 1000.
inline std::vector<Row> table1(const Budget& b, const sdp::SolverSettings& s = {}) {
  struct Case {
    std::string sampling;
    std::size_t size;
    double reference;
    double tol;
  };
  const double exact = targets::analytic::universal(1, 2);
  const std::vector<Case> cases = {
      {"sic4", 4, exact, 1e-6},
      {"pauli6", 6, exact, 1e-6},
      {"fibonacci:10", 10, 0.8358345438, 2e-5},
      {"fibonacci:100", 100, 0.8333473964, 2e-5},
      {"fibonacci:1000", 1000, 0.8333334456, 2e-5},
      {"fibonacci:10000", 10000, exact, 1e-6},
      {"fibonacci:100000", 100000, exact, 1e-6},
  };
  const auto sc = targets::make_scenario(targets::Family::Universal, 1, 2);
  std::vector<Row> rows;
  std::vector<double> xs, errs;
  for (const auto& sp : cases) {
    Row row{"table1", sp.sampling, sp.reference, sp.tol};
    if (sp.size > b.max_samples) {
      rows.push_back(row);
      continue;
    }
    try {
      const auto set = states::generate(states::parse_descriptor(sp.sampling));
      detail::fill(row, detail::run(targets::omega_local(set, sc), kraus::kDefaultThreshold, s));
      if (sp.size >= 10 && sp.size <= 1000) {
        xs.push_back(static_cast<double>(sp.size));
        errs.push_back(std::abs(*row.primal - exact));
      }
    } catch (const Error& e) {
      row = detail::failed(row, e.what());
    }
    rows.push_back(row);
  }
  Row fit{"table1", "log-log slope of error, 10..1000", -2.0, 0.4};
  if (xs.size() == 3) {
    const double slope = loglog_slope(xs, errs);
    fit.primal = slope;
    fit.status = std::abs(slope - fit.reference) <= fit.tol ? Status::Pass : Status::Fail;
  } else {
    fit.note = "needs the 10/100/1000 rows";
  }
  rows.push_back(fit);
  return rows;
}

/// Universal M -> N. Operator counts are checked for the 1 -> N rows.
inline std::vector<Row> table2(const Budget& b, const sdp::SolverSettings& s = {}) {
  const std::vector<std::pair<int, int>> cases = {
      {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7},
      {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}};
  std::vector<Row> rows;
  for (auto [m, n] : cases) {
    Row row{"table2", std::to_string(m) + "->" + std::to_string(n),
            targets::analytic::universal(m, n), 1e-6};
    if (m == 1) row.expected_ops = n;
    if (m + n > b.max_m_plus_n) {
      rows.push_back(row);
      continue;
    }
    try {
      const auto sc = targets::make_scenario(targets::Family::Universal, m, n);
      const auto set = targets::default_sampling(sc);
      detail::fill(row, detail::run(targets::omega_local(set, sc), kraus::kDefaultThreshold, s));
    } catch (const Error& e) {
      row = detail::failed(row, e.what());
    }
    rows.push_back(row);
  }
  return rows;
}

/// Phase-covariant 1 -> N with operator counts.
inline std::vector<Row> table3(const Budget& b, const sdp::SolverSettings& s = {}) {
  const int expected[] = {2, 1, 2, 3, 2, 3};
  std::vector<Row> rows;
  for (int n = 2; n <= 7; ++n) {
    Row row{"table3", "1->" + std::to_string(n), targets::analytic::phase_covariant(n),
            1e-6};
    row.expected_ops = expected[n - 2];
    if (1 + n > b.max_m_plus_n) {
      rows.push_back(row);
      continue;
    }
    try {
      const auto sc = targets::make_scenario(targets::Family::PhaseCovariant, 1, n);
      const auto set = targets::default_sampling(sc);
      detail::fill(row, detail::run(targets::omega_local(set, sc), kraus::kDefaultThreshold, s));
    } catch (const Error& e) {
      row = detail::failed(row, e.what());
    }
    rows.push_back(row);
  }
  return rows;
}

/// General entanglement cloning against the closed form. A row passes when
/// its error is no larger than the reference error for that set size.
inline std::vector<Row> table4(const Budget& b, const sdp::SolverSettings& s = {},
                               std::uint64_t seed = 1) {
  struct Case {
    std::size_t size;
    double reference_error;
  };
  const std::vector<Case> cases = {{100, 1.730e-2}, {1000, 6.406e-5},
                                   {10000, 5.409e-7}, {100000, 3.180e-8},
                                   {200000, 1.964e-9}, {500000, 5.719e-10}};
  const double exact = targets::analytic::entanglement_general();
  std::vector<Row> rows;
  for (const auto& sp : cases) {
    Row row{"table4", std::to_string(sp.size) + " states", exact, sp.reference_error};
    if (sp.size > b.max_samples) {
      rows.push_back(row);
      continue;
    }
    try {
      const auto set = states::max_entangled_lattice(sp.size, seed);
      const auto t = targets::omega_entanglement(set, targets::Family::EntanglementGeneral);
      detail::fill(row, detail::run(t, kraus::kDefaultThreshold, s));
    } catch (const Error& e) {
      row = detail::failed(row, e.what());
    }
    rows.push_back(row);
  }
  return rows;
}

inline Report run(const std::string& selector, const Budget& b,
                  const sdp::SolverSettings& s = {}) {
  Report r;
  auto add = [&](std::vector<Row> rows) {
    r.rows.insert(r.rows.end(), rows.begin(), rows.end());
  };
  const bool all = selector == "all";
  if (!all && selector != "table1" && selector != "table2" && selector != "table3" &&
      selector != "table4")
    throw InvalidArgument("unknown table selector '" + selector + "'");
  if (all || selector == "table1") add(table1(b, s));
  if (all || selector == "table2") add(table2(b, s));
  if (all || selector == "table3") add(table3(b, s));
  if (all || selector == "table4") add(table4(b, s));
  return r;
}

namespace detail {
inline std::string opt(const std::optional<double>& v, int digits = 10) {
  return v ? io::fmt(*v, digits) : "";
}
inline std::string opt(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "";
}
}  // namespace detail

inline std::string to_csv(const Report& r) {
  std::ostringstream out;
  out << "# qclone " << kVersion << "\n";
  out << "table,row,reference,tol,primal,dual,gap,ops,expected_ops,status";
  if (r.include_timings) out << ",seconds";
  out << ",note\n";
  for (const auto& row : r.rows) {
    out << row.table << "," << row.label << "," << io::fmt(row.reference) << ","
        << io::fmt(row.tol, 3) << "," << detail::opt(row.primal) << ","
        << detail::opt(row.dual) << "," << detail::opt(row.gap, 4) << ","
        << detail::opt(row.ops) << "," << detail::opt(row.expected_ops) << ","
        << to_string(row.status);
    if (r.include_timings) out << "," << io::fmt(row.seconds, 4);
    out << ",\"" << row.note << "\"\n";
  }
  return out.str();
}

inline std::string to_markdown(const Report& r) {
  std::ostringstream out;
  out << "# qclone benchmark report\n\nversion " << kVersion << "\n";
  std::string current;
  for (const auto& row : r.rows) {
    if (row.table != current) {
      current = row.table;
      out << "\n## " << current << "\n\n"
          << "| row | reference | tol | primal | dual | gap | #ops | status |";
      if (r.include_timings) out << " seconds |";
      out << " note |\n|---|---|---|---|---|---|---|---|";
      if (r.include_timings) out << "---|";
      out << "---|\n";
    }
    std::string ops = detail::opt(row.ops);
    if (row.expected_ops) ops += " (" + std::to_string(*row.expected_ops) + ")";
    out << "| " << row.label << " | " << io::fmt(row.reference) << " | "
        << io::fmt(row.tol, 3) << " | " << detail::opt(row.primal) << " | "
        << detail::opt(row.dual) << " | " << detail::opt(row.gap, 4) << " | " << ops
        << " | " << to_string(row.status) << " |";
    if (r.include_timings) out << " " << io::fmt(row.seconds, 4) << " |";
    out << " " << row.note << " |\n";
  }
  return out.str();
}

}  // namespace qclone::bench
