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

// Target operators: Hermitian matrices Omega on input (x) outputs such that
// the average cloning fidelity of a channel with Choi matrix J is tr(J Omega).

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "qclone/states.hpp"
#include "qclone/tensorlab.hpp"

namespace qclone::targets {

enum class Family {
  Universal,
  PhaseCovariant,  // equatorial great circle
  XZCovariant,     // real-amplitude great circle
  TwoPair,
  EntanglementReal,
  EntanglementGeneral,
};

inline std::string to_string(Family f) {
  switch (f) {
    case Family::Universal: return "universal";
    case Family::PhaseCovariant: return "covariant";
    case Family::XZCovariant: return "xz-covariant";
    case Family::TwoPair: return "two-pair";
    case Family::EntanglementReal: return "entanglement-real";
    case Family::EntanglementGeneral: return "entanglement-general";
  }
  return "unknown";
}

inline Family family_from_string(const std::string& s) {
  for (auto f : {Family::Universal, Family::PhaseCovariant, Family::XZCovariant,
                 Family::TwoPair, Family::EntanglementReal,
                 Family::EntanglementGeneral})
    if (to_string(f) == s) return f;
  if (s == "phase-covariant") return Family::PhaseCovariant;
  throw InvalidArgument("unknown scenario family '" + s + "'");
}

inline bool is_entanglement(Family f) {
  return f == Family::EntanglementReal || f == Family::EntanglementGeneral;
}

/// M -> N cloning of d-dimensional systems.
struct CloningScenario {
  int m_in = 1;
  int n_out = 2;
  Index subsystem_dim = 2;
  Family family = Family::Universal;
  double theta = 0.0;  // TwoPair rotation angle

  bool operator==(const CloningScenario&) const = default;

  void validate() const {
    if (m_in < 1) throw InvalidArgument("scenario: M must be >= 1");
    if (n_out < m_in) throw InvalidArgument("scenario: N must be >= M");
    if (subsystem_dim < 2) throw InvalidArgument("scenario: d must be >= 2");
  }

  Index d_in() const {
    return static_cast<Index>(std::llround(std::pow(subsystem_dim, m_in)));
  }
  Index d_out() const {
    return static_cast<Index>(std::llround(std::pow(subsystem_dim, n_out)));
  }

  /// [d^M, d, ..., d] with N output factors.
  SubsystemShape shape() const {
    std::vector<Index> dims{d_in()};
    for (int k = 0; k < n_out; ++k) dims.push_back(subsystem_dim);
    return SubsystemShape(std::move(dims));
  }

  SubsystemShape output_shape() const {
    return SubsystemShape(std::vector<Index>(static_cast<std::size_t>(n_out),
                                             subsystem_dim));
  }

  std::string label() const {
    return to_string(family) + " " + std::to_string(m_in) + "->" +
           std::to_string(n_out);
  }
};

/// The standard M -> N scenario of a family. Entanglement families are
/// 1 -> 2 cloning of one four-dimensional (two-qubit) system.
inline CloningScenario make_scenario(Family f, int m, int n, double theta = 0.0) {
  CloningScenario s;
  s.family = f;
  s.m_in = m;
  s.n_out = n;
  s.theta = theta;
  if (is_entanglement(f)) {
    s.m_in = 1;
    s.n_out = 2;
    s.subsystem_dim = 4;
  }
  s.validate();
  return s;
}

enum class Kind { Global, Local, Asymmetric };

inline std::string to_string(Kind k) {
  switch (k) {
    case Kind::Global: return "global";
    case Kind::Local: return "local";
    case Kind::Asymmetric: return "asymmetric";
  }
  return "unknown";
}

struct TargetOperator {
  ComplexMatrix matrix;
  SubsystemShape shape;  // [d_in, d, ..., d]
  CloningScenario scenario;
  Kind kind = Kind::Local;
  std::size_t copy_index = 0;  // Local
  double lambda = 0.5;         // Asymmetric

  Index d_in() const { return shape.dims.front(); }
  Index d_out() const { return shape.total() / d_in(); }
  SubsystemShape output_shape() const {
    return SubsystemShape(
        std::vector<Index>(shape.dims.begin() + 1, shape.dims.end()));
  }
};

/// Number of samples accumulated per rank-k update when building Omega.
inline constexpr Index kAccumulateChunk = 2048;

namespace detail {

/// (1/|S|) sum_k v_k v_k^dagger for v_k = conj(psi)^{(x) M} (x) psi^{(x) copies}.
inline ComplexMatrix average_projector(const states::SamplingSet& set, int m,
                                       int copies) {
  set.validate();
  const Index d = set.dim();
  const Index dim = static_cast<Index>(std::llround(std::pow(d, m + copies)));
  ComplexMatrix acc = ComplexMatrix::Zero(dim, dim);
  const auto total = static_cast<Index>(set.size());
  for (Index start = 0; start < total; start += kAccumulateChunk) {
    const Index len = std::min(kAccumulateChunk, total - start);
    ComplexMatrix block(dim, len);
    for (Index c = 0; c < len; ++c) {
      const ComplexVector& psi =
          set.states[static_cast<std::size_t>(start + c)].amplitudes();
      block.col(c) =
          kron(kron_power(ComplexVector(psi.conjugate()), m), kron_power(psi, copies));
    }
    acc.selfadjointView<Eigen::Lower>().rankUpdate(block, 1.0);
  }
  acc = acc.selfadjointView<Eigen::Lower>();
  return acc / static_cast<double>(total);
}

inline void check_dim(const states::SamplingSet& set, const CloningScenario& s) {
  s.validate();
  if (set.dim() != s.subsystem_dim)
    throw DimensionError("target: sampling set dimension " +
                         std::to_string(set.dim()) +
                         " does not match subsystem dimension " +
                         std::to_string(s.subsystem_dim));
}

}  // namespace detail

/// Omega = (1/|S|) sum_k (|psi_k*><psi_k*|)^{(x) M} (x) (|psi_k><psi_k|)^{(x) N}.
inline TargetOperator omega_global(const states::SamplingSet& set,
                                   const CloningScenario& scenario) {
  detail::check_dim(set, scenario);
  TargetOperator t;
  t.matrix = detail::average_projector(set, scenario.m_in, scenario.n_out);
  t.shape = scenario.shape();
  t.scenario = scenario;
  t.kind = Kind::Global;
  return t;
}

/// Single-copy projector average placed on output `copy_index`, identity on
/// every other output copy.
inline TargetOperator omega_local(const states::SamplingSet& set,
                                  const CloningScenario& scenario,
                                  std::size_t copy_index = 0) {
  detail::check_dim(set, scenario);
  const auto n = static_cast<std::size_t>(scenario.n_out);
  if (copy_index >= n)
    throw InvalidArgument("omega_local: copy index " + std::to_string(copy_index) +
                          " out of range");
  const Index d = scenario.subsystem_dim;
  const ComplexMatrix omega_a = detail::average_projector(set, scenario.m_in, 1);
  const Index rest = scenario.d_out() / d;
  ComplexMatrix m = kron(omega_a, identity(rest));
  if (copy_index != 0) {
    // Factor 1 (first output) moves to position 1 + copy_index.
    const SubsystemShape sh = scenario.shape();
    std::vector<std::size_t> perm(sh.size());
    for (std::size_t k = 0; k < sh.size(); ++k) perm[k] = k;
    perm[1] = 1 + copy_index;
    for (std::size_t k = 2; k <= 1 + copy_index; ++k) perm[k] = k - 1;
    const auto map = permutation_indices(sh, perm);
    ComplexMatrix p(m.rows(), m.cols());
    for (Index a = 0; a < m.rows(); ++a)
      for (Index b = 0; b < m.cols(); ++b)
        p(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]) = m(a, b);
    m = std::move(p);
  }
  TargetOperator t;
  t.matrix = std::move(m);
  t.shape = scenario.shape();
  t.scenario = scenario;
  t.kind = Kind::Local;
  t.copy_index = copy_index;
  return t;
}

/// lambda * Omega_A + (1 - lambda) * Omega_B for 1 -> 2 cloning.
inline TargetOperator omega_asymmetric(const states::SamplingSet& set,
                                       const CloningScenario& scenario,
                                       double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw InvalidArgument("omega_asymmetric: lambda must lie in [0, 1]");
  if (scenario.m_in != 1 || scenario.n_out != 2)
    throw InvalidArgument("omega_asymmetric: scenario must be 1 -> 2");
  const TargetOperator a = omega_local(set, scenario, 0);
  const TargetOperator b = omega_local(set, scenario, 1);
  TargetOperator t = a;
  t.matrix = lambda * a.matrix + (1.0 - lambda) * b.matrix;
  t.kind = Kind::Asymmetric;
  t.lambda = lambda;
  t.copy_index = 0;
  return t;
}

/// Local target for cloning a two-qubit state treated as one 4-dim system:
/// (1/|S|) sum |psi*><psi*| (x) |psi><psi| (x) 1_4.
inline TargetOperator omega_entanglement(const states::SamplingSet& set,
                                         Family family = Family::EntanglementGeneral) {
  if (set.dim() != 4)
    throw DimensionError("omega_entanglement: states must be two-qubit (dim 4)");
  if (!is_entanglement(family))
    throw InvalidArgument("omega_entanglement: not an entanglement family");
  return omega_local(set, make_scenario(family, 1, 2), 0);
}

/// Sampling set used by default for a scenario family.
inline states::SamplingSet default_sampling(const CloningScenario& s,
                                            std::uint64_t seed = 1,
                                            std::size_t general_entangled_count = 1000,
                                            std::size_t fibonacci_count = 250000) {
  switch (s.family) {
    case Family::Universal:
      if (s.m_in == 1) return states::sic4();
      if (s.m_in == 2) return states::pauli6();
      return states::fibonacci_sphere(fibonacci_count);
    case Family::PhaseCovariant: return states::equatorial3();
    case Family::XZCovariant: return states::two_pair(std::numbers::pi / 4.0);
    case Family::TwoPair: return states::two_pair(s.theta);
    case Family::EntanglementReal: return states::bell_real8();
    case Family::EntanglementGeneral:
      return states::max_entangled_lattice(general_entangled_count, seed);
  }
  throw InvalidArgument("default_sampling: unknown family");
}

/// Average fidelity functional tr(J Omega).
inline double fidelity(const ComplexMatrix& choi, const ComplexMatrix& omega) {
  if (choi.rows() != omega.rows() || choi.cols() != omega.cols())
    throw DimensionError("fidelity: Choi and target sizes differ");
  // tr(J Omega) = sum_ij J_ij Omega_ji
  return (choi.cwiseProduct(omega.transpose())).sum().real();
}

/// Closed-form optimal fidelities of the analytically solved families.
namespace analytic {
inline double universal(int m, int n) {
  return static_cast<double>(n * m + m + n) / static_cast<double>(n * (m + 2));
}
inline double phase_covariant(int n) {
  const double dn = n;
  if (n % 2 == 0) return 0.5 + std::sqrt(dn * (dn + 2.0)) / (4.0 * dn);
  return 0.5 + (dn + 1.0) / (4.0 * dn);
}
inline double two_pair(double theta) {
  const double s = std::sin(theta), c = std::cos(theta);
  return 0.5 * (1.0 + std::sqrt(s * s * s * s + c * c * c * c));
}
inline double entanglement_real() { return 0.5 + 1.0 / (2.0 * std::sqrt(2.0)); }
inline double entanglement_general() { return (5.0 + std::sqrt(13.0)) / 12.0; }
}  // namespace analytic

}  // namespace qclone::targets
