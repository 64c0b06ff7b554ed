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

#include <chrono>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qclone/sdp/barrier.hpp"
#include "qclone/sdp/ipm.hpp"
#include "qclone/sdp/problem.hpp"
#include "qclone/sdp/symmetry.hpp"

namespace qclone::sdp {

/// How J = G J G^dagger enters the primal solve.
///  Explicit:  one real equality per independent orbit relation.
///  Projected: the objective is replaced by its group average, whose optimal
///             face contains invariant points, and the solution is averaged.
enum class SymmetryMode { Auto, Explicit, Projected };

inline std::string to_string(SymmetryMode m) {
  switch (m) {
    case SymmetryMode::Auto: return "auto";
    case SymmetryMode::Explicit: return "explicit";
    case SymmetryMode::Projected: return "projected";
  }
  return "unknown";
}

inline SymmetryMode symmetry_mode_from_string(const std::string& s) {
  if (s == "auto") return SymmetryMode::Auto;
  if (s == "explicit") return SymmetryMode::Explicit;
  if (s == "projected") return SymmetryMode::Projected;
  throw InvalidArgument("unknown symmetry mode '" + s + "'");
}

struct SolverSettings {
  double tol = 0.0;  // certificate tolerance; <= 0 selects default_tolerance
  int max_iterations = 200;
  double gap_tol = 1e-10;
  SymmetryMode symmetry = SymmetryMode::Auto;
  Index explicit_max_dim = 16;  // Auto uses Explicit up to this cone dimension
  bool record_history = true;
  BarrierSettings dual;

  double tolerance_for(Index cone_dim) const {
    return tol > 0.0 ? tol : default_tolerance(cone_dim);
  }
};

struct PrimalSolution {
  ChoiMatrix choi;
  double value = 0.0;
  int iterations = 0;
  IpmStatus status = IpmStatus::Optimal;
  SymmetryMode mode = SymmetryMode::Projected;
  std::vector<IpmIterate> history;  // objectives in the original scale
};

struct SolveResult {
  ChoiMatrix choi;
  DualSolution dual;
  Certificate certificate;
  PrimalSolution primal;
};

/// Real equalities that, together with Hermiticity, are equivalent to
/// X = G X G^dagger for every generator. Entries of X are tied to a
/// representative of their orbit; redundant relations are not emitted.
inline std::vector<HermitianConstraint> explicit_symmetry_constraints(
    const std::vector<IndexMap>& generators, Index n) {
  const auto nn = static_cast<std::size_t>(n * n);
  std::vector<std::size_t> root(nn);
  std::iota(root.begin(), root.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (root[a] != a) a = root[a] = root[root[a]];
    return a;
  };
  auto pair_id = [n](Index a, Index b) { return static_cast<std::size_t>(a * n + b); };
  for (const auto& g : generators)
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) {
        const std::size_t u = find(pair_id(a, b));
        const std::size_t v = find(pair_id(g[static_cast<std::size_t>(a)],
                                           g[static_cast<std::size_t>(b)]));
        if (u != v) root[std::max(u, v)] = std::min(u, v);
      }

  std::map<std::size_t, std::vector<std::size_t>> orbits;
  for (std::size_t k = 0; k < nn; ++k) orbits[find(k)].push_back(k);

  using Entry = HermitianConstraint::Entry;
  auto re = [n](std::size_t k, double s) -> std::vector<Entry> {
    const Index a = static_cast<Index>(k) / n, b = static_cast<Index>(k) % n;
    if (a == b) return {{a, a, s}};
    return {{b, a, 0.5 * s}, {a, b, 0.5 * s}};
  };
  auto im = [n](std::size_t k, double s) -> std::vector<Entry> {
    const Index a = static_cast<Index>(k) / n, b = static_cast<Index>(k) % n;
    return {{b, a, Complex(0, -0.5 * s)}, {a, b, Complex(0, 0.5 * s)}};
  };
  auto diff = [](std::vector<Entry> x, const std::vector<Entry>& y) {
    x.insert(x.end(), y.begin(), y.end());
    HermitianConstraint c;
    c.entries = std::move(x);
    return c;
  };

  std::vector<HermitianConstraint> out;
  for (const auto& [rep, members] : orbits) {
    const Index ra = static_cast<Index>(rep) / n, rb = static_cast<Index>(rep) % n;
    const std::size_t trep = find(pair_id(rb, ra));
    if (trep < rep) continue;  // fixed by Hermiticity through the transposed orbit
    if (trep != rep) {
      for (std::size_t k : members) {
        if (k == rep) continue;
        out.push_back(diff(re(k, 1.0), re(rep, -1.0)));
        out.push_back(diff(im(k, 1.0), im(rep, -1.0)));
      }
      continue;
    }
    if (ra == rb) {
      for (std::size_t k : members)
        if (k != rep) out.push_back(diff(re(k, 1.0), re(rep, -1.0)));
      continue;
    }
    std::vector<std::size_t> upper;
    for (std::size_t k : members)
      if (static_cast<Index>(k) / n < static_cast<Index>(k) % n) upper.push_back(k);
    const std::size_t ur = upper.front();
    for (std::size_t k : upper) {
      if (k == ur) continue;
      out.push_back(diff(re(k, 1.0), re(ur, -1.0)));
      out.push_back(diff(im(k, 1.0), im(ur, -1.0)));
    }
    HermitianConstraint c;
    c.entries = im(ur, 1.0);
    out.push_back(std::move(c));
  }
  return out;
}

/// Real symmetric embedding of tr(A X) = b: tr(A~ X~) = 2b.
inline SparseSymmetric embed_constraint(const HermitianConstraint& c, Index n) {
  std::map<std::pair<Index, Index>, double> acc;
  for (const auto& e : c.entries) {
    acc[{e.row, e.col}] += e.value.real();
    acc[{e.row + n, e.col + n}] += e.value.real();
    acc[{e.row, e.col + n}] -= e.value.imag();
    acc[{e.row + n, e.col}] += e.value.imag();
  }
  SparseSymmetric out;
  for (const auto& [rc, v] : acc)
    if (v != 0.0) out.push_back({rc.first, rc.second, v});
  return out;
}

inline SymmetryMode resolve_mode(const SdpProblem& p, const SolverSettings& s) {
  if (s.symmetry != SymmetryMode::Auto) return s.symmetry;
  if (p.symmetry_generators.empty()) return SymmetryMode::Projected;
  return p.cone_dim() <= s.explicit_max_dim ? SymmetryMode::Explicit
                                            : SymmetryMode::Projected;
}

/// Maximizes tr(J Omega) over the feasible Choi matrices of the problem.
/// The iteration starts from the depolarizing channel I / d_out, which is
/// feasible and invariant, and a strictly feasible dual point.
inline PrimalSolution solve_primal(const SdpProblem& problem,
                                   const SolverSettings& settings = {}) {
  const Index n = problem.cone_dim();
  const Index d_out = problem.d_out();
  PrimalSolution out;
  out.mode = resolve_mode(problem, settings);
  const bool symmetric = !problem.symmetry_generators.empty();
  PermutationGroup group;
  ComplexMatrix omega = problem.objective;
  std::vector<HermitianConstraint> constraints = problem.constraints;
  if (symmetric) {
    group = generate_group(problem.symmetry_generators, n);
    if (out.mode == SymmetryMode::Projected) {
      omega = group_average(omega, group);
    } else {
      auto extra = explicit_symmetry_constraints(problem.symmetry_generators, n);
      constraints.insert(constraints.end(), extra.begin(), extra.end());
    }
  }

  RealSdp real;
  real.c = -real_embedding(omega);
  real.b.resize(static_cast<Index>(constraints.size()));
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    real.a.push_back(embed_constraint(constraints[i], n));
    real.b(static_cast<Index>(i)) = 2.0 * constraints[i].rhs;
  }

  const RealMatrix x0 =
      RealMatrix::Identity(2 * n, 2 * n) / static_cast<double>(d_out);
  RealVector y0 = RealVector::Zero(real.num_constraints());
  const double shift = max_eigenvalue(hermitian_part(omega)) + 1.0;
  for (Index a = 0; a < problem.d_in(); ++a) y0(a) = -shift;

  IpmSettings ipm;
  ipm.gap_tol = settings.gap_tol;
  ipm.feas_tol = settings.gap_tol;
  ipm.max_iterations = settings.max_iterations;
  ipm.record_history = settings.record_history;
  IpmResult r = solve_ipm(real, ipm, &x0, &y0);
  out.status = r.status;
  out.iterations = r.iterations;
  if (r.status != IpmStatus::Optimal &&
      (r.last.relative_gap > 1e-6 || r.last.primal_infeasibility > 1e-6 ||
       r.last.dual_infeasibility > 1e-6))
    throw ConvergenceError("primal interior-point iteration did not converge",
                           r.last.primal_infeasibility, r.last.dual_infeasibility,
                           r.last.relative_gap, r.iterations);

  for (auto& h : r.history) {
    h.primal_objective *= -0.5;
    h.dual_objective *= -0.5;
  }
  out.history = std::move(r.history);

  ComplexMatrix j = hermitian_part(complex_from_embedding(r.x));
  if (symmetric && out.mode == SymmetryMode::Projected) j = group_average(j, group);
  out.choi.matrix = std::move(j);
  out.choi.d_in = problem.d_in();
  out.choi.output_shape = problem.output_shape();
  out.value = targets::fidelity(out.choi.matrix, problem.objective);
  return out;
}

/// Minimizes tr Y over the dual feasible set, independently of any primal
/// iterate. The symmetry multipliers Z_g are recovered exactly so that the
/// slack equals Y (x) I minus the group average of Omega.
inline DualSolution solve_dual(const SdpProblem& problem,
                               const SolverSettings& settings = {}) {
  const Index n = problem.cone_dim();
  DualSolution out;
  ComplexMatrix omega_sym = problem.objective;
  if (!problem.symmetry_generators.empty()) {
    const PermutationGroup group = generate_group(problem.symmetry_generators, n);
    omega_sym = group_average(problem.objective, group);
    out.z = commutator_multipliers(problem.objective, problem.symmetry_generators,
                                   group);
  }
  const BarrierResult b =
      solve_dual_barrier(omega_sym, problem.d_in(), problem.d_out(), settings.dual);
  out.y = b.y;
  out.objective = b.value;
  out.iterations = b.newton_steps;
  return out;
}

/// Solves primal and dual separately and certifies the pair.
inline SolveResult solve(const SdpProblem& problem,
                         const SolverSettings& settings = {}) {
  const auto start = std::chrono::steady_clock::now();
  SolveResult res;
  res.primal = solve_primal(problem, settings);
  res.dual = solve_dual(problem, settings);
  res.choi = res.primal.choi;
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  res.certificate =
      certify(problem, res.choi, res.dual, settings.tolerance_for(problem.cone_dim()),
              res.primal.iterations, elapsed);
  return res;
}

}  // namespace qclone::sdp
