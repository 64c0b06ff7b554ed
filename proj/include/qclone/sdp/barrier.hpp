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

// Log-barrier method for
//
//   min tr Y  s.t.  Y (x) I_out - Omega > 0
//
// over Hermitian Y, parametrized by the real Hermitian basis of the input
// space. Omega must already be invariant under any symmetry of the problem.

#include <Eigen/Cholesky>
#include <cmath>
#include <limits>
#include <vector>

#include "qclone/errors.hpp"
#include "qclone/sdp/problem.hpp"
#include "qclone/tensorlab.hpp"

namespace qclone::sdp {

struct BarrierSettings {
  double accuracy = 1e-11;  // stop once cone_dim / t falls below this
  double t_growth = 10.0;
  double newton_tol = 1e-9;  // squared Newton decrement per centering
  int max_newton = 2000;
};

struct BarrierResult {
  ComplexMatrix y;
  double value = 0.0;  // tr Y
  int newton_steps = 0;
  int centering_steps = 0;
  double t = 0.0;
};

namespace detail {

inline ComplexMatrix dual_slack(const ComplexMatrix& y, const ComplexMatrix& omega,
                                Index d_out) {
  ComplexMatrix f = -omega;
  for (Index a = 0; a < y.rows(); ++a)
    for (Index b = 0; b < y.cols(); ++b)
      f.block(a * d_out, b * d_out, d_out, d_out).diagonal().array() += y(a, b);
  return f;
}

inline ComplexMatrix hermitian_from_params(
    const RealVector& p, const std::vector<HermitianBasisElement>& basis, Index d) {
  ComplexMatrix y = ComplexMatrix::Zero(d, d);
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (const auto& e : basis_entries(basis[k]))
      y(e.row, e.col) += p(static_cast<Index>(k)) * e.value;
  return y;
}

}  // namespace detail

inline BarrierResult solve_dual_barrier(const ComplexMatrix& omega, Index d_in,
                                        Index d_out,
                                        const BarrierSettings& settings = {}) {
  const Index n = d_in * d_out;
  if (omega.rows() != n || omega.cols() != n)
    throw DimensionError("solve_dual_barrier: Omega does not match d_in * d_out");
  const auto basis = hermitian_basis(d_in);
  const auto np = static_cast<Index>(basis.size());
  std::vector<std::vector<HermitianConstraint::Entry>> terms;
  RealVector trace_b = RealVector::Zero(np);
  for (Index k = 0; k < np; ++k) {
    terms.push_back(basis_entries(basis[static_cast<std::size_t>(k)]));
    if (basis[static_cast<std::size_t>(k)].part ==
        HermitianBasisElement::Part::Diagonal)
      trace_b(k) = 1.0;
  }

  RealVector p = RealVector::Zero(np);
  const double shift = max_eigenvalue(hermitian_part(omega)) + 1.0;
  for (Index a = 0; a < d_in; ++a) p(a) = shift;

  BarrierResult res;
  double t = 1.0;
  const double cone = static_cast<double>(n);
  std::vector<ComplexMatrix> blocks(static_cast<std::size_t>(d_in * d_in));
  auto blk = [&](Index r, Index c) -> const ComplexMatrix& {
    return blocks[static_cast<std::size_t>(r * d_in + c)];
  };

  for (;;) {
    // Centering by damped Newton.
    double prev_dec2 = std::numeric_limits<double>::infinity();
    for (;;) {
      if (res.newton_steps >= settings.max_newton)
        throw ConvergenceError("dual barrier: Newton step limit reached", 0.0, 0.0,
                               cone / t, res.newton_steps);
      const ComplexMatrix f =
          detail::dual_slack(detail::hermitian_from_params(p, basis, d_in), omega,
                             d_out);
      Eigen::LLT<ComplexMatrix> chol(f);
      if (chol.info() != Eigen::Success)
        throw ConvergenceError("dual barrier: iterate left the cone", 0.0, 0.0,
                               cone / t, res.newton_steps);
      const ComplexMatrix w = chol.solve(ComplexMatrix::Identity(n, n));
      for (Index r = 0; r < d_in; ++r)
        for (Index c = 0; c < d_in; ++c)
          blocks[static_cast<std::size_t>(r * d_in + c)] =
              w.block(r * d_out, c * d_out, d_out, d_out);

      RealVector g(np);
      for (Index k = 0; k < np; ++k) {
        Complex s = 0.0;
        for (const auto& e : terms[static_cast<std::size_t>(k)])
          s += e.value * blk(e.col, e.row).trace();
        g(k) = t * trace_b(k) - s.real();
      }
      // tr(W (E_rc (x) I) W (E_r'c' (x) I)) = tr(W_{c'r} W_{cr'})
      RealMatrix h(np, np);
      for (Index k = 0; k < np; ++k)
        for (Index l = k; l < np; ++l) {
          Complex s = 0.0;
          for (const auto& e : terms[static_cast<std::size_t>(k)])
            for (const auto& q : terms[static_cast<std::size_t>(l)])
              s += e.value * q.value *
                   (blk(q.col, e.row).cwiseProduct(blk(e.col, q.row).transpose()))
                       .sum();
          h(k, l) = s.real();
          h(l, k) = s.real();
        }
      Eigen::LDLT<RealMatrix> hs(h);
      const RealVector dp = -hs.solve(g);
      const double dec2 = std::max(0.0, -g.dot(dp));
      // Near the roundoff floor the decrement stops shrinking.
      if (dec2 <= settings.newton_tol || (dec2 < 1e-5 && dec2 > 0.25 * prev_dec2))
        break;
      prev_dec2 = dec2;
      const double lam = std::sqrt(dec2);
      double alpha = lam > 0.25 ? 1.0 / (1.0 + lam) : 1.0;
      for (int back = 0;; ++back) {
        const RealVector trial = p + alpha * dp;
        const ComplexMatrix ft = detail::dual_slack(
            detail::hermitian_from_params(trial, basis, d_in), omega, d_out);
        if (Eigen::LLT<ComplexMatrix>(ft).info() == Eigen::Success) {
          p = trial;
          break;
        }
        if (back > 60)
          throw ConvergenceError("dual barrier: line search failed", 0.0, 0.0,
                                 cone / t, res.newton_steps);
        alpha *= 0.5;
      }
      ++res.newton_steps;
    }
    ++res.centering_steps;
    if (cone / t <= settings.accuracy) break;
    t = std::min(t * settings.t_growth, cone / settings.accuracy);
  }

  res.y = detail::hermitian_from_params(p, basis, d_in);
  res.value = p.dot(trace_b);
  res.t = t;
  return res;
}

}  // namespace qclone::sdp
