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

// Kraus representations of channels and the diagnostics computed on them.

#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "qclone/errors.hpp"
#include "qclone/sdp/problem.hpp"
#include "qclone/states.hpp"
#include "qclone/targets.hpp"
#include "qclone/tensorlab.hpp"

namespace qclone::kraus {

inline constexpr double kDefaultThreshold = 1e-7;

/// E(rho) = sum_k K_k rho K_k^dagger with every K_k of size d_out x d_in.
struct KrausSet {
  std::vector<ComplexMatrix> operators;
  Index d_in = 0;
  Index d_out = 0;
  double completeness_residual = 0.0;  // || sum K^dagger K - I ||_F
  double eig_threshold_used = 0.0;

  std::size_t size() const { return operators.size(); }
};

struct ChannelDiagnostics {
  double purity = 0.0;
  double concurrence = 0.0;
  RealMatrix hs_gram;
};

inline double completeness_residual(const std::vector<ComplexMatrix>& ops,
                                    Index d_in) {
  ComplexMatrix s = ComplexMatrix::Zero(d_in, d_in);
  for (const auto& k : ops) s += k.adjoint() * k;
  return (s - identity(d_in)).norm();
}

inline double completeness_residual(const KrausSet& k) {
  return completeness_residual(k.operators, k.d_in);
}

/// Builds a set from explicit operators and records its completeness residual.
inline KrausSet make_kraus_set(std::vector<ComplexMatrix> ops) {
  if (ops.empty()) throw InvalidArgument("KrausSet: no operators");
  KrausSet k;
  k.d_out = ops.front().rows();
  k.d_in = ops.front().cols();
  for (const auto& op : ops)
    if (op.rows() != k.d_out || op.cols() != k.d_in)
      throw DimensionError("KrausSet: operators differ in size");
  k.operators = std::move(ops);
  k.completeness_residual = completeness_residual(k);
  return k;
}

/// One operator sqrt(lambda_i) unvec(v_i) per Choi eigenvalue above the
/// threshold.
inline KrausSet extract(const sdp::ChoiMatrix& j,
                        double eig_threshold = kDefaultThreshold,
                        double psd_tol = 1e-6) {
  const Index d_in = j.d_in, d_out = j.d_out();
  if (j.matrix.rows() != d_in * d_out)
    throw DimensionError("extract: Choi matrix size does not match d_in * d_out");
  const EigenDecomposition e = herm_eig(j.matrix, 1e-8);
  if (e.eigenvalues(e.eigenvalues.size() - 1) < -psd_tol)
    throw InvalidArgument("extract: Choi matrix is not positive semidefinite");
  KrausSet k;
  k.d_in = d_in;
  k.d_out = d_out;
  k.eig_threshold_used = eig_threshold;
  for (Index i = 0; i < e.eigenvalues.size(); ++i) {
    const double lam = e.eigenvalues(i);
    if (lam <= eig_threshold) break;
    k.operators.push_back(std::sqrt(lam) * unvec(e.eigenvectors.col(i), d_out, d_in));
  }
  k.completeness_residual = completeness_residual(k);
  return k;
}

inline ComplexMatrix apply(const KrausSet& k, const ComplexMatrix& rho) {
  if (rho.rows() != k.d_in || rho.cols() != k.d_in)
    throw DimensionError("apply: state dimension does not match d_in");
  ComplexMatrix out = ComplexMatrix::Zero(k.d_out, k.d_out);
  for (const auto& op : k.operators) out += op * rho * op.adjoint();
  return out;
}

inline sdp::ChoiMatrix choi_from_kraus(const KrausSet& k,
                                       const SubsystemShape& output_shape) {
  if (output_shape.total() != k.d_out)
    throw DimensionError("choi_from_kraus: output shape does not match d_out");
  sdp::ChoiMatrix j;
  j.d_in = k.d_in;
  j.output_shape = output_shape;
  j.matrix = ComplexMatrix::Zero(k.d_in * k.d_out, k.d_in * k.d_out);
  for (const auto& op : k.operators) {
    const ComplexVector v = vec(op);
    j.matrix += v * v.adjoint();
  }
  return j;
}

inline sdp::ChoiMatrix choi_from_kraus(const KrausSet& k) {
  return choi_from_kraus(k, SubsystemShape{k.d_out});
}

/// Kraus set of K2 after K1: {K2_l K1_k}.
inline KrausSet compose_serial(const KrausSet& k2, const KrausSet& k1) {
  if (k2.d_in != k1.d_out)
    throw DimensionError("compose_serial: K2 input does not match K1 output");
  std::vector<ComplexMatrix> ops;
  ops.reserve(k2.size() * k1.size());
  for (const auto& b : k2.operators)
    for (const auto& a : k1.operators) ops.push_back(b * a);
  KrausSet k = make_kraus_set(std::move(ops));
  k.eig_threshold_used = std::max(k1.eig_threshold_used, k2.eig_threshold_used);
  return k;
}

/// Each operator becomes 1 (x) K_l (x) 1 acting on factor `target` of `shape`.
inline KrausSet extend_on_subsystem(const KrausSet& k, const SubsystemShape& shape,
                                    std::size_t target) {
  if (target >= shape.size())
    throw DimensionError("extend_on_subsystem: target factor out of range");
  const Index d = shape[target];
  if (k.d_in != d || k.d_out != d)
    throw DimensionError("extend_on_subsystem: operator size does not match factor");
  Index left = 1, right = 1;
  for (std::size_t i = 0; i < target; ++i) left *= shape[i];
  for (std::size_t i = target + 1; i < shape.size(); ++i) right *= shape[i];
  std::vector<ComplexMatrix> ops;
  for (const auto& op : k.operators)
    ops.push_back(kron(kron(identity(left), op), identity(right)));
  KrausSet out = make_kraus_set(std::move(ops));
  out.eig_threshold_used = k.eig_threshold_used;
  return out;
}

/// Unitary U on the output space with U (|i> (x) |0...0>) = K|i>, where the
/// output space is read as input register (x) ancilla of dimension
/// d_out / d_in. The columns of K therefore sit at indices i * (d_out / d_in);
/// the remaining columns complete an orthonormal basis.
inline ComplexMatrix unitary_completion(const ComplexMatrix& k,
                                        double isometry_tol = tol::kIsometry) {
  const Index d_out = k.rows(), d_in = k.cols();
  if (d_in == 0 || d_out < d_in || d_out % d_in != 0)
    throw DimensionError("unitary_completion: d_out must be a multiple of d_in");
  if ((k.adjoint() * k - identity(d_in)).norm() > isometry_tol)
    throw InvalidArgument("unitary_completion: operator is not an isometry");
  const Index stride = d_out / d_in;

  // Orthonormal basis whose first d_in vectors span K; the tail comes from
  // Householder QR of [K | I].
  ComplexMatrix stacked(d_out, d_in + d_out);
  stacked << k, identity(d_out);
  Eigen::HouseholderQR<ComplexMatrix> qr(stacked);
  const ComplexMatrix q = qr.householderQ() * identity(d_out);

  ComplexMatrix u(d_out, d_out);
  Index next = d_in;
  for (Index c = 0; c < d_out; ++c) {
    if (c % stride == 0) {
      u.col(c) = k.col(c / stride);
    } else {
      u.col(c) = q.col(next++);
    }
  }
  return u;
}

inline double purity(const ComplexMatrix& rho) {
  return (rho * rho).trace().real();
}

/// Wootters concurrence max(0, m1 - m2 - m3 - m4), m_i the descending square
/// roots of the eigenvalues of rho (Y (x) Y) rho* (Y (x) Y).
inline double concurrence(const ComplexMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4)
    throw DimensionError("concurrence: two-qubit (4 x 4) state required");
  const ComplexMatrix yy = kron(pauli::Y(), pauli::Y());
  const ComplexMatrix tilde = yy * rho.conjugate() * yy;
  // sqrt(rho) tilde sqrt(rho) is Hermitian and isospectral with rho tilde.
  const EigenDecomposition e = herm_eig(hermitian_part(rho), 1e-8);
  const RealVector sq = e.eigenvalues.cwiseMax(0.0).cwiseSqrt();
  const ComplexMatrix root =
      e.eigenvectors * sq.cast<Complex>().asDiagonal() * e.eigenvectors.adjoint();
  const ComplexMatrix r = hermitian_part(root * tilde * root);
  const RealVector m = herm_eig(r, 1e-8).eigenvalues.cwiseMax(0.0).cwiseSqrt();
  return std::max(0.0, m(0) - m(1) - m(2) - m(3));
}

/// |tr(K_i^dagger K_j)|
inline RealMatrix hs_orthogonality(const KrausSet& k) {
  const auto n = static_cast<Index>(k.size());
  RealMatrix g(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      g(i, j) = std::abs((k.operators[static_cast<std::size_t>(i)].adjoint() *
                          k.operators[static_cast<std::size_t>(j)])
                             .trace());
  return g;
}

inline ChannelDiagnostics diagnostics(const KrausSet& k, const ComplexMatrix& rho_out) {
  ChannelDiagnostics d;
  d.purity = purity(rho_out);
  d.concurrence = rho_out.rows() == 4 ? concurrence(rho_out) : 0.0;
  d.hs_gram = hs_orthogonality(k);
  return d;
}

/// Reduced state of output copy `copy` (0-based) of an output state on `shape`.
inline ComplexMatrix marginal(const ComplexMatrix& rho_out, const SubsystemShape& shape,
                              std::size_t copy) {
  return partial_trace(rho_out, shape, {copy});
}

/// Average fidelity of the channel measured directly on the sampling states:
/// the input is psi^{(x) M} and the figure of merit follows the target kind.
inline double average_fidelity(const KrausSet& k, const targets::TargetOperator& t,
                               const states::SamplingSet& set) {
  const auto& sc = t.scenario;
  const SubsystemShape out_shape = t.output_shape();
  double acc = 0.0;
  for (const auto& psi : set.states) {
    const ComplexVector& a = psi.amplitudes();
    const ComplexVector in = kron_power(a, sc.m_in);
    ComplexMatrix rho = ComplexMatrix::Zero(k.d_out, k.d_out);
    for (const auto& op : k.operators) {
      const ComplexVector v = op * in;
      rho.noalias() += v * v.adjoint();
    }
    auto local = [&](std::size_t copy) {
      return (a.adjoint() * marginal(rho, out_shape, copy) * a)(0, 0).real();
    };
    switch (t.kind) {
      case targets::Kind::Global: {
        const ComplexVector target = kron_power(a, sc.n_out);
        acc += (target.adjoint() * rho * target)(0, 0).real();
        break;
      }
      case targets::Kind::Local: acc += local(t.copy_index); break;
      case targets::Kind::Asymmetric:
        acc += t.lambda * local(0) + (1.0 - t.lambda) * local(1);
        break;
    }
  }
  return acc / static_cast<double>(set.size());
}

/// Aligned fixed-point rendering of every operator.
inline std::string render_text(const KrausSet& k, int digits = 6) {
  std::ostringstream os;
  char buf[64];
  os << "KrausSet d_in=" << k.d_in << " d_out=" << k.d_out
     << " operators=" << k.size() << '\n';
  std::snprintf(buf, sizeof buf, "%.3e", k.completeness_residual);
  os << "completeness residual " << buf << '\n';
  for (std::size_t i = 0; i < k.size(); ++i) {
    os << "K" << i + 1 << " =\n";
    const auto& op = k.operators[i];
    for (Index r = 0; r < op.rows(); ++r) {
      os << "  ";
      for (Index c = 0; c < op.cols(); ++c) {
        std::snprintf(buf, sizeof buf, " %+.*f%+.*fi", digits, op(r, c).real(), digits,
                      op(r, c).imag());
        os << buf;
      }
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace qclone::kraus
