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

// Dense complex linear algebra used throughout qclone: tensor products,
// partial traces, subsystem permutations, vectorization and Hermitian
// eigendecomposition. Matrices are Eigen dense types; tensor factors are
// ordered with factor 0 most significant, matching Eigen's kron layout.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "qclone/errors.hpp"

namespace qclone {

using Index = Eigen::Index;
using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Default numerical tolerances. Every function taking a tolerance accepts
/// an override.
namespace tol {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kKetNorm = 1e-12;
inline constexpr double kIsometry = 1e-8;
}  // namespace tol

/// Dimensions of the tensor factors of a composite Hilbert space.
struct SubsystemShape {
  std::vector<Index> dims;

  SubsystemShape() = default;
  SubsystemShape(std::initializer_list<Index> d) : dims(d) { validate(); }
  explicit SubsystemShape(std::vector<Index> d) : dims(std::move(d)) {
    validate();
  }

  Index total() const {
    return std::accumulate(dims.begin(), dims.end(), Index{1},
                           std::multiplies<>());
  }
  std::size_t size() const { return dims.size(); }
  Index operator[](std::size_t k) const { return dims[k]; }

  bool operator==(const SubsystemShape&) const = default;

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t k = 0; k < dims.size(); ++k) {
      if (k) os << ',';
      os << dims[k];
    }
    os << ']';
    return os.str();
  }

 private:
  void validate() const {
    if (dims.empty()) throw DimensionError("SubsystemShape: no factors");
    for (Index d : dims)
      if (d <= 0) throw DimensionError("SubsystemShape: non-positive factor");
  }
};

/// Unit-norm pure state in the computational basis.
class Ket {
 public:
  Ket() = default;

  /// Takes amplitudes that must already be normalized.
  explicit Ket(ComplexVector amplitudes, double norm_tol = tol::kKetNorm)
      : amps_(std::move(amplitudes)) {
    if (amps_.size() == 0) throw DimensionError("Ket: empty amplitude vector");
    if (std::abs(amps_.norm() - 1.0) > norm_tol)
      throw InvalidArgument("Ket: amplitudes are not unit norm");
  }

  /// Normalizes arbitrary nonzero amplitudes.
  static Ket normalized(const ComplexVector& v) {
    const double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n))
      throw InvalidArgument("Ket::normalized: zero or non-finite vector");
    return Ket(v / n, 1e-10);
  }

  Index dim() const { return amps_.size(); }
  const ComplexVector& amplitudes() const { return amps_; }
  Complex operator[](Index k) const { return amps_(k); }

  /// |psi><psi|
  ComplexMatrix projector() const { return amps_ * amps_.adjoint(); }

  bool operator==(const Ket& o) const { return amps_ == o.amps_; }

 private:
  ComplexVector amps_;
};

/// Spectrum of a Hermitian matrix, eigenvalues sorted in descending order.
/// Column k of `eigenvectors` belongs to eigenvalues(k).
struct EigenDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;

  ComplexMatrix reconstruct() const {
    return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() *
           eigenvectors.adjoint();
  }
};

inline ComplexMatrix identity(Index n) { return ComplexMatrix::Identity(n, n); }

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

inline ComplexMatrix kron_all(const std::vector<ComplexMatrix>& factors) {
  if (factors.empty()) return ComplexMatrix::Ones(1, 1);
  ComplexMatrix out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = kron(out, factors[k]);
  return out;
}

/// A^{(x) n}; the zeroth power is the 1x1 identity.
inline ComplexMatrix kron_power(const ComplexMatrix& a, int n) {
  ComplexMatrix out = ComplexMatrix::Ones(1, 1);
  for (int k = 0; k < n; ++k) out = kron(out, a);
  return out;
}

inline ComplexVector kron_power(const ComplexVector& a, int n) {
  ComplexVector out = ComplexVector::Ones(1);
  for (int k = 0; k < n; ++k) out = kron(out, a);
  return out;
}

inline double hermitian_residual(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

inline ComplexMatrix hermitian_part(const ComplexMatrix& a) {
  return 0.5 * (a + a.adjoint());
}

/// Splits a flat index into per-factor digits (factor 0 most significant).
inline void unravel(Index flat, const std::vector<Index>& dims,
                    std::vector<Index>& digits) {
  digits.resize(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    digits[k] = flat % dims[k];
    flat /= dims[k];
  }
}

inline Index ravel(const std::vector<Index>& digits,
                   const std::vector<Index>& dims) {
  Index flat = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) flat = flat * dims[k] + digits[k];
  return flat;
}

/// Partial trace over every factor not listed in `keep`. The kept factors
/// appear in the result in increasing index order.
inline ComplexMatrix partial_trace(const ComplexMatrix& a,
                                   const SubsystemShape& shape,
                                   std::vector<std::size_t> keep) {
  if (a.rows() != a.cols())
    throw DimensionError("partial_trace: matrix is not square");
  if (shape.total() != a.rows())
    throw DimensionError("partial_trace: shape " + shape.to_string() +
                         " does not match dimension " +
                         std::to_string(a.rows()));
  if (keep.empty()) throw InvalidArgument("partial_trace: empty keep set");
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.back() >= shape.size())
    throw InvalidArgument("partial_trace: factor index out of range");

  std::vector<bool> kept(shape.size(), false);
  for (auto k : keep) kept[k] = true;
  std::vector<Index> kdims, tdims;
  for (std::size_t k = 0; k < shape.size(); ++k)
    (kept[k] ? kdims : tdims).push_back(shape.dims[k]);
  const Index nk = std::accumulate(kdims.begin(), kdims.end(), Index{1},
                                   std::multiplies<>());
  const Index nt = std::accumulate(tdims.begin(), tdims.end(), Index{1},
                                   std::multiplies<>());

  // Flat index of (kept digits, traced digits) in the full space.
  std::vector<Index> full_index(static_cast<std::size_t>(nk * nt));
  std::vector<Index> kd, td, digits(shape.size());
  for (Index ki = 0; ki < nk; ++ki) {
    unravel(ki, kdims, kd);
    for (Index ti = 0; ti < nt; ++ti) {
      unravel(ti, tdims, td);
      std::size_t a_k = 0, a_t = 0;
      for (std::size_t k = 0; k < shape.size(); ++k)
        digits[k] = kept[k] ? kd[a_k++] : td[a_t++];
      full_index[static_cast<std::size_t>(ki * nt + ti)] =
          ravel(digits, shape.dims);
    }
  }

  ComplexMatrix out = ComplexMatrix::Zero(nk, nk);
  for (Index i = 0; i < nk; ++i)
    for (Index j = 0; j < nk; ++j) {
      Complex s = 0;
      for (Index t = 0; t < nt; ++t)
        s += a(full_index[static_cast<std::size_t>(i * nt + t)],
               full_index[static_cast<std::size_t>(j * nt + t)]);
      out(i, j) = s;
    }
  return out;
}

/// Basis-index map of the subsystem permutation operator: the operator sends
/// |j> to |map[j]>. Input factor k is moved to position perm[k].
inline std::vector<Index> permutation_indices(const SubsystemShape& shape,
                                              const std::vector<std::size_t>& perm) {
  const std::size_t nf = shape.size();
  if (perm.size() != nf)
    throw InvalidArgument("permutation: length does not match shape");
  std::vector<bool> seen(nf, false);
  for (auto p : perm) {
    if (p >= nf || seen[p]) throw InvalidArgument("permutation: invalid");
    seen[p] = true;
  }
  std::vector<Index> out_dims(nf);
  for (std::size_t k = 0; k < nf; ++k) out_dims[perm[k]] = shape.dims[k];

  const Index n = shape.total();
  std::vector<Index> map(static_cast<std::size_t>(n));
  std::vector<Index> in_digits, out_digits(nf);
  for (Index j = 0; j < n; ++j) {
    unravel(j, shape.dims, in_digits);
    for (std::size_t k = 0; k < nf; ++k) out_digits[perm[k]] = in_digits[k];
    map[static_cast<std::size_t>(j)] = ravel(out_digits, out_dims);
  }
  return map;
}

inline ComplexMatrix permutation_matrix(const std::vector<Index>& map) {
  const auto n = static_cast<Index>(map.size());
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  for (Index j = 0; j < n; ++j) p(map[static_cast<std::size_t>(j)], j) = 1.0;
  return p;
}

/// Unitary 0/1 matrix permuting tensor factors (see permutation_indices).
inline ComplexMatrix permutation_operator(const SubsystemShape& shape,
                                          const std::vector<std::size_t>& perm) {
  return permutation_matrix(permutation_indices(shape, perm));
}

/// Hermitian eigendecomposition with eigenvalues in descending order.
inline EigenDecomposition herm_eig(const ComplexMatrix& a,
                                   double herm_tol = tol::kHermitian) {
  if (a.rows() != a.cols()) throw DimensionError("herm_eig: not square");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if (hermitian_residual(a) > herm_tol * scale)
    throw InvalidArgument("herm_eig: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(a));
  if (es.info() != Eigen::Success) throw Error("herm_eig: solver failed");
  EigenDecomposition out;
  out.eigenvalues = es.eigenvalues().reverse();
  out.eigenvectors = es.eigenvectors().rowwise().reverse();
  return out;
}

/// Smallest eigenvalue of the Hermitian part of `a`.
inline double min_eigenvalue(const ComplexMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(a),
                                                  Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

inline double max_eigenvalue(const ComplexMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(a),
                                                  Eigen::EigenvaluesOnly);
  return es.eigenvalues()(es.eigenvalues().size() - 1);
}

/// Vectorization with input index major, output index minor:
/// v[i * d_out + o] = A(o, i) for a d_out x d_in matrix A.
inline ComplexVector vec(const ComplexMatrix& a) {
  const Index d_out = a.rows(), d_in = a.cols();
  ComplexVector v(d_out * d_in);
  for (Index i = 0; i < d_in; ++i)
    for (Index o = 0; o < d_out; ++o) v(i * d_out + o) = a(o, i);
  return v;
}

inline ComplexMatrix unvec(const ComplexVector& v, Index d_out, Index d_in) {
  if (d_out <= 0 || d_in <= 0 || v.size() != d_out * d_in)
    throw DimensionError("unvec: length " + std::to_string(v.size()) +
                         " != d_out*d_in");
  ComplexMatrix a(d_out, d_in);
  for (Index i = 0; i < d_in; ++i)
    for (Index o = 0; o < d_out; ++o) a(o, i) = v(i * d_out + o);
  return a;
}

/// Entry-wise complex conjugate in the computational basis.
inline Ket conj_ket(const Ket& phi) {
  return Ket(phi.amplitudes().conjugate(), 1e-10);
}

/// Unnormalized maximally entangled vector sum_j |j>|j>.
inline ComplexVector gamma_vector(Index d) {
  ComplexVector g = ComplexVector::Zero(d * d);
  for (Index j = 0; j < d; ++j) g(j * d + j) = 1.0;
  return g;
}

/// Real symmetric embedding [[Re X, -Im X], [Im X, Re X]] of a complex
/// matrix. Hermitian maps to symmetric, PSD to PSD, and traces double.
inline RealMatrix real_embedding(const ComplexMatrix& x) {
  const Index n = x.rows(), m = x.cols();
  RealMatrix r(2 * n, 2 * m);
  r.topLeftCorner(n, m) = x.real();
  r.topRightCorner(n, m) = -x.imag();
  r.bottomLeftCorner(n, m) = x.imag();
  r.bottomRightCorner(n, m) = x.real();
  return r;
}

/// Inverse of real_embedding; averages the two redundant copies.
inline ComplexMatrix complex_from_embedding(const RealMatrix& r) {
  const Index n = r.rows() / 2, m = r.cols() / 2;
  const RealMatrix re = 0.5 * (r.topLeftCorner(n, m) + r.bottomRightCorner(n, m));
  const RealMatrix im = 0.5 * (r.bottomLeftCorner(n, m) - r.topRightCorner(n, m));
  ComplexMatrix x(n, m);
  x.real() = re;
  x.imag() = im;
  return x;
}

namespace pauli {
inline ComplexMatrix I() { return identity(2); }
inline ComplexMatrix X() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
inline ComplexMatrix Y() {
  ComplexMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}
inline ComplexMatrix Z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}
}  // namespace pauli

}  // namespace qclone
