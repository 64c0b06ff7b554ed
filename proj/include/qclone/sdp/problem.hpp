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

#include <string>
#include <vector>

#include "qclone/sdp/symmetry.hpp"
#include "qclone/targets.hpp"
#include "qclone/tensorlab.hpp"

namespace qclone::sdp {

/// Linear functional X -> tr(A X) = rhs with A Hermitian, stored as the
/// nonzero entries of A (both triangles).
struct HermitianConstraint {
  struct Entry {
    Index row;
    Index col;
    Complex value;
  };
  std::vector<Entry> entries;
  double rhs = 0.0;

  double evaluate(const ComplexMatrix& x) const {
    Complex s = 0.0;
    for (const auto& e : entries) s += e.value * x(e.col, e.row);
    return s.real();
  }

  ComplexMatrix dense(Index n) const {
    ComplexMatrix a = ComplexMatrix::Zero(n, n);
    for (const auto& e : entries) a(e.row, e.col) += e.value;
    return a;
  }
};

/// Real parametrization of the Hermitian d x d matrices: E_aa, then for each
/// a < b the pair (E_ab + E_ba)/2 and i(E_ab - E_ba)/2.
struct HermitianBasisElement {
  Index a;
  Index b;
  enum class Part { Diagonal, Real, Imag } part;
};

inline std::vector<HermitianBasisElement> hermitian_basis(Index d) {
  std::vector<HermitianBasisElement> out;
  for (Index a = 0; a < d; ++a)
    out.push_back({a, a, HermitianBasisElement::Part::Diagonal});
  for (Index a = 0; a < d; ++a)
    for (Index b = a + 1; b < d; ++b) {
      out.push_back({a, b, HermitianBasisElement::Part::Real});
      out.push_back({a, b, HermitianBasisElement::Part::Imag});
    }
  return out;
}

/// Nonzero entries (row, col, value) of a Hermitian basis element.
inline std::vector<HermitianConstraint::Entry> basis_entries(
    const HermitianBasisElement& e) {
  using P = HermitianBasisElement::Part;
  switch (e.part) {
    case P::Diagonal: return {{e.a, e.a, 1.0}};
    case P::Real: return {{e.a, e.b, 0.5}, {e.b, e.a, 0.5}};
    case P::Imag: return {{e.a, e.b, Complex(0, 0.5)}, {e.b, e.a, Complex(0, -0.5)}};
  }
  return {};
}

enum class Form { ChoiPrimal, ChoiDual };
enum class Sense { Maximize, Minimize };

inline std::string to_string(Form f) {
  return f == Form::ChoiPrimal ? "choi-primal" : "choi-dual";
}

/// Fidelity-maximization SDP over Choi matrices.
///
/// Primal: max tr(J Omega) s.t. J >= 0, tr_out J = I, J = G J G^dagger for
/// each symmetry generator G.
/// Dual:   min tr Y s.t. Y (x) I + sum_G (Z_G - G Z_G G^dagger) >= Omega.
struct SdpProblem {
  Form form = Form::ChoiPrimal;
  Sense sense = Sense::Maximize;
  ComplexMatrix objective;  // Omega
  SubsystemShape shape;     // [d_in, output factors...]
  std::vector<HermitianConstraint> constraints;  // tr_out J = I
  std::vector<IndexMap> symmetry_generators;

  Index d_in() const { return shape.dims.front(); }
  Index d_out() const { return shape.total() / d_in(); }
  Index cone_dim() const { return shape.total(); }
  SubsystemShape output_shape() const {
    return SubsystemShape(
        std::vector<Index>(shape.dims.begin() + 1, shape.dims.end()));
  }
};

/// Hermitian-basis form of tr_out J = I: one real equality per basis element
/// B of the input space, tr((B (x) I) J) = tr(B).
inline std::vector<HermitianConstraint> partial_trace_constraints(Index d_in,
                                                                  Index d_out) {
  std::vector<HermitianConstraint> out;
  for (const auto& e : hermitian_basis(d_in)) {
    HermitianConstraint c;
    for (const auto& t : basis_entries(e))
      for (Index o = 0; o < d_out; ++o)
        c.entries.push_back({t.row * d_out + o, t.col * d_out + o, t.value});
    c.rhs = e.part == HermitianBasisElement::Part::Diagonal ? 1.0 : 0.0;
    out.push_back(std::move(c));
  }
  return out;
}

/// Transpositions of neighbouring output factors of `shape`.
inline std::vector<IndexMap> output_transpositions(const SubsystemShape& shape) {
  std::vector<IndexMap> gens;
  for (std::size_t k = 1; k + 1 < shape.size(); ++k) {
    std::vector<std::size_t> perm(shape.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::swap(perm[k], perm[k + 1]);
    gens.push_back(permutation_indices(shape, perm));
  }
  return gens;
}

namespace detail {
inline SdpProblem assemble(const targets::TargetOperator& target, Form form,
                           bool impose_symmetry) {
  const Index n = target.shape.total();
  if (target.matrix.rows() != n || target.matrix.cols() != n)
    throw DimensionError("assemble: target matrix does not match its shape");
  if (hermitian_residual(target.matrix) >
      tol::kHermitian * std::max(1.0, target.matrix.cwiseAbs().maxCoeff()))
    throw InvalidArgument("assemble: target is not Hermitian");
  SdpProblem p;
  p.form = form;
  p.sense = form == Form::ChoiPrimal ? Sense::Maximize : Sense::Minimize;
  p.objective = hermitian_part(target.matrix);
  p.shape = target.shape;
  p.constraints = partial_trace_constraints(target.d_in(), target.d_out());
  if (impose_symmetry) p.symmetry_generators = output_transpositions(target.shape);
  return p;
}

inline bool default_symmetry(const targets::TargetOperator& t) {
  return t.kind != targets::Kind::Asymmetric;
}
}  // namespace detail

inline SdpProblem assemble_primal(const targets::TargetOperator& target,
                                  bool impose_symmetry) {
  return detail::assemble(target, Form::ChoiPrimal, impose_symmetry);
}
/// Output-permutation symmetry is imposed unless the target is asymmetric.
inline SdpProblem assemble_primal(const targets::TargetOperator& target) {
  return assemble_primal(target, detail::default_symmetry(target));
}

inline SdpProblem assemble_dual(const targets::TargetOperator& target,
                                bool impose_symmetry) {
  return detail::assemble(target, Form::ChoiDual, impose_symmetry);
}
inline SdpProblem assemble_dual(const targets::TargetOperator& target) {
  return assemble_dual(target, detail::default_symmetry(target));
}

/// The dual of a primal problem and vice versa share all data.
inline SdpProblem counterpart(const SdpProblem& p) {
  SdpProblem q = p;
  q.form = p.form == Form::ChoiPrimal ? Form::ChoiDual : Form::ChoiPrimal;
  q.sense = q.form == Form::ChoiPrimal ? Sense::Maximize : Sense::Minimize;
  return q;
}

/// Choi matrix sum_ij |i><j| (x) E(|i><j|) of a channel.
struct ChoiMatrix {
  ComplexMatrix matrix;
  Index d_in = 0;
  SubsystemShape output_shape;

  Index d_out() const { return output_shape.total(); }

  /// || tr_out J - I ||_F
  double trace_preservation_residual() const {
    const Index dout = d_out();
    ComplexMatrix red = ComplexMatrix::Zero(d_in, d_in);
    for (Index a = 0; a < d_in; ++a)
      for (Index b = 0; b < d_in; ++b)
        red(a, b) = matrix.block(a * dout, b * dout, dout, dout).trace();
    return (red - identity(d_in)).norm();
  }
  /// max(0, -lambda_min(J))
  double positivity_residual() const {
    return std::max(0.0, -min_eigenvalue(hermitian_part(matrix)));
  }
  double hermiticity_residual() const { return hermitian_residual(matrix); }
};

/// Optimal dual variables; slack() = Y (x) I + sum_g (Z_g - G Z_g G^dagger) - Omega.
struct DualSolution {
  ComplexMatrix y;
  std::vector<ComplexMatrix> z;  // one per symmetry generator
  double objective = 0.0;        // tr Y
  int iterations = 0;            // Newton steps

  ComplexMatrix slack(const SdpProblem& p) const {
    const Index dout = p.d_out();
    ComplexMatrix s = -p.objective;
    for (Index a = 0; a < p.d_in(); ++a)
      for (Index b = 0; b < p.d_in(); ++b)
        s.block(a * dout, b * dout, dout, dout).diagonal().array() += y(a, b);
    for (std::size_t g = 0; g < z.size(); ++g)
      s += z[g] - conjugate(z[g], p.symmetry_generators[g]);
    return s;
  }
};

/// Optimality certificate of a primal/dual pair.
struct Certificate {
  double primal_value = 0.0;
  double dual_value = 0.0;
  double gap = 0.0;  // |dual - primal|
  double primal_feas_residual = 0.0;
  double dual_feas_residual = 0.0;
  int iterations = 0;
  double wall_time = 0.0;  // seconds
  double tol = 0.0;
  bool pass = false;
};

/// Default certification tolerance for a cone of the given dimension.
inline double default_tolerance(Index cone_dim) {
  return cone_dim <= 64 ? 1e-7 : 1e-6;
}

/// Residuals of a primal point: trace preservation, positivity and symmetry.
inline double primal_residual(const SdpProblem& p, const ChoiMatrix& j) {
  double r = std::max(j.trace_preservation_residual(), j.positivity_residual());
  r = std::max(r, j.hermiticity_residual());
  return std::max(r, symmetry_residual(j.matrix, p.symmetry_generators));
}

inline double dual_residual(const SdpProblem& p, const DualSolution& d) {
  const ComplexMatrix s = d.slack(p);
  return std::max(0.0, -min_eigenvalue(hermitian_part(s)));
}

/// Recomputes every quantity of the certificate from the two points.
inline Certificate certify(const SdpProblem& p, const ChoiMatrix& j,
                           const DualSolution& d, double tol, int iterations = 0,
                           double wall_time = 0.0) {
  Certificate c;
  c.primal_value = targets::fidelity(j.matrix, p.objective);
  c.dual_value = hermitian_part(d.y).trace().real();
  c.gap = std::abs(c.dual_value - c.primal_value);
  c.primal_feas_residual = primal_residual(p, j);
  c.dual_feas_residual = dual_residual(p, d);
  c.iterations = iterations;
  c.wall_time = wall_time;
  c.tol = tol;
  c.pass = c.gap <= tol && c.primal_feas_residual <= tol &&
           c.dual_feas_residual <= tol;
  return c;
}

}  // namespace qclone::sdp
