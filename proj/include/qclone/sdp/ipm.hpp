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

// Primal-dual interior-point method for real symmetric SDPs in standard form
//
//   min <C, X>  s.t. <A_i, X> = b_i,  X >= 0
//   max b^T y   s.t. sum_i y_i A_i + Z = C,  Z >= 0
//
// using the HKM search direction with Mehrotra's predictor-corrector.

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "qclone/errors.hpp"
#include "qclone/tensorlab.hpp"

namespace qclone::sdp {

struct SparseEntry {
  Index row;
  Index col;
  double value;
};

/// Symmetric constraint matrix listed entry by entry (both triangles, no
/// duplicates).
using SparseSymmetric = std::vector<SparseEntry>;

struct RealSdp {
  RealMatrix c;
  std::vector<SparseSymmetric> a;
  RealVector b;

  Index dim() const { return c.rows(); }
  Index num_constraints() const { return static_cast<Index>(a.size()); }
};

struct IpmSettings {
  double gap_tol = 1e-10;    // relative complementarity
  double feas_tol = 1e-10;   // relative residuals
  int max_iterations = 200;
  bool record_history = true;
};

struct IpmIterate {
  int iteration = 0;
  double primal_objective = 0.0;  // <C, X>
  double dual_objective = 0.0;    // b^T y
  double primal_infeasibility = 0.0;
  double dual_infeasibility = 0.0;
  double relative_gap = 0.0;
  double step_primal = 0.0;
  double step_dual = 0.0;
};

enum class IpmStatus { Optimal, Stalled, MaxIterations };

struct IpmResult {
  RealMatrix x;
  RealVector y;
  RealMatrix z;
  IpmStatus status = IpmStatus::MaxIterations;
  int iterations = 0;
  IpmIterate last;
  std::vector<IpmIterate> history;
};

namespace detail {

inline double inner(const SparseSymmetric& a, const RealMatrix& w) {
  double s = 0.0;
  for (const auto& e : a) s += e.value * w(e.row, e.col);
  return s;
}

inline RealVector apply_constraints(const RealSdp& p, const RealMatrix& w) {
  RealVector out(p.num_constraints());
  for (Index i = 0; i < p.num_constraints(); ++i)
    out(i) = inner(p.a[static_cast<std::size_t>(i)], w);
  return out;
}

inline RealMatrix adjoint(const RealSdp& p, const RealVector& y) {
  RealMatrix out = RealMatrix::Zero(p.dim(), p.dim());
  for (Index i = 0; i < p.num_constraints(); ++i)
    for (const auto& e : p.a[static_cast<std::size_t>(i)])
      out(e.row, e.col) += y(i) * e.value;
  return out;
}

inline RealMatrix symmetrize(const RealMatrix& m) {
  return 0.5 * (m + m.transpose());
}

/// Largest alpha with x + alpha dx >= 0 (infinity if unbounded).
inline double max_step(const Eigen::LLT<RealMatrix>& chol, const RealMatrix& dx) {
  const auto& l = chol.matrixL();
  RealMatrix s = l.solve(dx);
  s = l.solve(s.transpose()).transpose();
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(symmetrize(s),
                                               Eigen::EigenvaluesOnly);
  const double lmin = es.eigenvalues()(0);
  return lmin >= 0.0 ? std::numeric_limits<double>::infinity() : -1.0 / lmin;
}

/// Schur complement M_ij = tr(A_i X A_j Z^{-1}).
inline RealMatrix schur(const RealSdp& p, const RealMatrix& x,
                        const RealMatrix& zinv) {
  const Index m = p.num_constraints();
  RealMatrix out(m, m);
  for (Index i = 0; i < m; ++i) {
    const auto& ai = p.a[static_cast<std::size_t>(i)];
    for (Index j = i; j < m; ++j) {
      const auto& aj = p.a[static_cast<std::size_t>(j)];
      double s = 0.0;
      for (const auto& ei : ai)
        for (const auto& ej : aj)
          s += ei.value * ej.value * x(ei.col, ej.row) * zinv(ej.col, ei.row);
      out(i, j) = s;
      out(j, i) = s;
    }
  }
  return out;
}

}  // namespace detail

/// Runs the iteration from (x0, y0) with Z0 = C - A*(y0). Both x0 and Z0 must
/// be positive definite; otherwise the scaled identity start is used.
inline IpmResult solve_ipm(const RealSdp& p, const IpmSettings& settings = {},
                           const RealMatrix* x0 = nullptr,
                           const RealVector* y0 = nullptr) {
  using detail::adjoint;
  using detail::apply_constraints;
  using detail::symmetrize;
  const Index n = p.dim();
  const Index m = p.num_constraints();
  if (p.c.cols() != n || p.b.size() != m)
    throw DimensionError("solve_ipm: inconsistent problem data");

  RealMatrix x, z;
  RealVector y;
  bool started = false;
  if (x0 && y0) {
    x = *x0;
    y = *y0;
    z = p.c - adjoint(p, y);
    started = Eigen::LLT<RealMatrix>(x).info() == Eigen::Success &&
              Eigen::LLT<RealMatrix>(z).info() == Eigen::Success;
  }
  if (!started) {
    const double scale = 1.0 + p.c.cwiseAbs().maxCoeff();
    x = RealMatrix::Identity(n, n);
    y = RealVector::Zero(m);
    z = scale * static_cast<double>(n) * RealMatrix::Identity(n, n);
  }

  const double bnorm = p.b.norm();
  const double cnorm = p.c.norm();
  IpmResult res;
  double prev_gap = std::numeric_limits<double>::infinity();
  int stagnant = 0;

  for (int it = 0;; ++it) {
    const RealVector rp = p.b - apply_constraints(p, x);
    const RealMatrix rd = p.c - z - adjoint(p, y);
    IpmIterate rec;
    rec.iteration = it;
    rec.primal_objective = (p.c.array() * x.array()).sum();
    rec.dual_objective = p.b.dot(y);
    rec.primal_infeasibility = rp.norm() / (1.0 + bnorm);
    rec.dual_infeasibility = rd.norm() / (1.0 + cnorm);
    const double comp = (x.array() * z.array()).sum();
    rec.relative_gap = comp / (1.0 + std::abs(rec.primal_objective) +
                               std::abs(rec.dual_objective));
    res.last = rec;
    res.iterations = it;
    if (settings.record_history) res.history.push_back(rec);

    if (rec.relative_gap <= settings.gap_tol &&
        rec.primal_infeasibility <= settings.feas_tol &&
        rec.dual_infeasibility <= settings.feas_tol) {
      res.status = IpmStatus::Optimal;
      break;
    }
    if (it >= settings.max_iterations) {
      res.status = IpmStatus::MaxIterations;
      break;
    }
    if (rec.relative_gap > 0.9 * prev_gap) {
      if (++stagnant >= 10) {
        res.status = IpmStatus::Stalled;
        break;
      }
    } else {
      stagnant = 0;
    }
    prev_gap = std::min(prev_gap, rec.relative_gap);

    const double mu = comp / static_cast<double>(n);
    Eigen::LLT<RealMatrix> zchol(z);
    Eigen::LLT<RealMatrix> xchol(x);
    if (zchol.info() != Eigen::Success || xchol.info() != Eigen::Success) {
      res.status = IpmStatus::Stalled;
      break;
    }
    const RealMatrix zinv =
        symmetrize(zchol.solve(RealMatrix::Identity(n, n)));
    const RealMatrix schur = detail::schur(p, x, zinv);
    Eigen::LLT<RealMatrix> mchol(schur);
    Eigen::LDLT<RealMatrix> mldlt;
    const bool use_llt = mchol.info() == Eigen::Success;
    if (!use_llt) mldlt.compute(schur);
    auto solve_schur = [&](const RealVector& r) -> RealVector {
      return use_llt ? RealVector(mchol.solve(r)) : RealVector(mldlt.solve(r));
    };

    const RealMatrix x_rd_zinv = x * rd * zinv;
    const RealVector base_rhs = p.b + apply_constraints(p, x_rd_zinv);

    // Predictor (sigma = 0).
    const RealVector dy_a = solve_schur(base_rhs);
    const RealMatrix dz_a = rd - adjoint(p, dy_a);
    const RealMatrix dx_a = symmetrize(-x - x * dz_a * zinv);
    const double ap_a = std::min(1.0, detail::max_step(xchol, dx_a));
    const double ad_a = std::min(1.0, detail::max_step(zchol, dz_a));
    const double mu_aff =
        ((x + ap_a * dx_a).array() * (z + ad_a * dz_a).array()).sum() /
        static_cast<double>(n);
    const double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);

    // Corrector.
    const RealMatrix second = dx_a * dz_a * zinv;
    const RealVector rhs = base_rhs - sigma * mu * apply_constraints(p, zinv) +
                           apply_constraints(p, second);
    const RealVector dy = solve_schur(rhs);
    const RealMatrix dz = symmetrize(rd - adjoint(p, dy));
    const RealMatrix dx = symmetrize(sigma * mu * zinv - x - x * dz * zinv - second);

    const double gamma = 0.9 + 0.09 * std::min(ap_a, ad_a);
    const double ap = std::min(1.0, gamma * detail::max_step(xchol, dx));
    const double ad = std::min(1.0, gamma * detail::max_step(zchol, dz));
    x += ap * dx;
    y += ad * dy;
    z += ad * dz;
    x = symmetrize(x);
    z = symmetrize(z);
    if (settings.record_history) {
      res.history.back().step_primal = ap;
      res.history.back().step_dual = ad;
    }
    if (ap < 1e-12 && ad < 1e-12) {
      res.status = IpmStatus::Stalled;
      break;
    }
  }
  res.x = std::move(x);
  res.y = std::move(y);
  res.z = std::move(z);
  return res;
}

}  // namespace qclone::sdp
