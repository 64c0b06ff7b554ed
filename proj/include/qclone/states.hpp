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

// Sampling sets of pure input states used to build target operators.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qclone/tensorlab.hpp"

namespace qclone::states {

/// Seedable generator with platform-independent output. The engine is
/// std::mt19937_64 (fully specified by the standard); the uniform and
/// Gaussian transforms are implemented here because the std distributions
/// are implementation defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal deviate (Box-Muller, both outputs used).
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  /// Complex Gaussian with independent N(0,1) real and imaginary parts.
  Complex complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

enum class SetKind {
  Sic4,
  Pauli6,
  Equatorial3,
  FibonacciSphere,
  FibonacciOffset,
  Haar,
  TwoPair,
  BellReal8,
  MaxEntangledRandom,
  MaxEntangledLattice,
};

/// Tag identifying how a sampling set was generated; enough to regenerate it.
struct Descriptor {
  SetKind kind = SetKind::Sic4;
  std::size_t count = 0;   // Fibonacci*, Haar, MaxEntangled*
  Index dim = 2;           // Haar
  std::uint64_t seed = 0;  // Haar, MaxEntangled*
  double theta = 0.0;      // TwoPair

  bool operator==(const Descriptor&) const = default;

  std::string label() const {
    switch (kind) {
      case SetKind::Sic4: return "sic4";
      case SetKind::Pauli6: return "pauli6";
      case SetKind::Equatorial3: return "equatorial3";
      case SetKind::FibonacciSphere: return "fibonacci:" + std::to_string(count);
      case SetKind::FibonacciOffset:
        return "fibonacci-offset:" + std::to_string(count);
      case SetKind::Haar:
        return "haar:" + std::to_string(dim) + ":" + std::to_string(count) +
               ":" + std::to_string(seed);
      case SetKind::TwoPair: {
        char buf[64];
        std::snprintf(buf, sizeof buf, "two-pair:%.17g", theta);
        return buf;
      }
      case SetKind::BellReal8: return "bell-real8";
      case SetKind::MaxEntangledRandom:
        return "max-entangled:" + std::to_string(count) + ":" +
               std::to_string(seed);
      case SetKind::MaxEntangledLattice:
        return "max-entangled-lattice:" + std::to_string(count) + ":" +
               std::to_string(seed);
    }
    return "unknown";
  }
};

/// Uniformly weighted list of same-dimension pure states.
struct SamplingSet {
  Descriptor descriptor;
  std::vector<Ket> states;

  Index dim() const { return states.empty() ? 0 : states.front().dim(); }
  std::size_t size() const { return states.size(); }
  double weight() const { return 1.0 / static_cast<double>(states.size()); }

  void validate() const {
    if (states.empty()) throw InvalidArgument("SamplingSet: empty");
    for (const auto& s : states)
      if (s.dim() != dim()) throw DimensionError("SamplingSet: mixed dimensions");
  }
};

namespace detail {
inline Ket qubit(Complex a, Complex b) {
  ComplexVector v(2);
  v << a, b;
  return Ket::normalized(v);
}
inline Ket two_qubit(double c00, double c01, double c10, double c11) {
  ComplexVector v(4);
  v << c00, c01, c10, c11;
  return Ket::normalized(v);
}
}  // namespace detail

/// Tetrahedral SIC set: |0> and sqrt(1/3)|0> + sqrt(2/3) e^{2 pi i (k-1)/3}|1>.
inline SamplingSet sic4() {
  SamplingSet s;
  s.descriptor.kind = SetKind::Sic4;
  s.states.push_back(detail::qubit(1.0, 0.0));
  for (int k = 1; k <= 3; ++k) {
    const double phase = 2.0 * std::numbers::pi * (k - 1) / 3.0;
    s.states.push_back(detail::qubit(std::sqrt(1.0 / 3.0),
                                     std::sqrt(2.0 / 3.0) * std::polar(1.0, phase)));
  }
  return s;
}

/// Eigenstates of X, Y and Z: |0>, |1>, |+>, |->, |i>, |-i>.
inline SamplingSet pauli6() {
  SamplingSet s;
  s.descriptor.kind = SetKind::Pauli6;
  const Complex i(0.0, 1.0);
  s.states = {detail::qubit(1.0, 0.0), detail::qubit(0.0, 1.0),
              detail::qubit(1.0, 1.0), detail::qubit(1.0, -1.0),
              detail::qubit(1.0, i),   detail::qubit(1.0, -i)};
  return s;
}

/// Three equatorial states (|0> + e^{2 pi i (k-1)/3}|1>)/sqrt2.
inline SamplingSet equatorial3() {
  SamplingSet s;
  s.descriptor.kind = SetKind::Equatorial3;
  for (int k = 1; k <= 3; ++k)
    s.states.push_back(detail::qubit(
        1.0, std::polar(1.0, 2.0 * std::numbers::pi * (k - 1) / 3.0)));
  return s;
}

/// Qubit state with Bloch polar angle theta and azimuth phi.
inline Ket bloch_ket(double theta, double phi) {
  ComplexVector v(2);
  v << std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi);
  return Ket(v, 1e-12);
}

/// Bloch vector (<X>, <Y>, <Z>) of a qubit ket.
inline std::array<double, 3> bloch_vector(const Ket& k) {
  if (k.dim() != 2) throw DimensionError("bloch_vector: not a qubit");
  const Complex a = k[0], b = k[1];
  const Complex ab = std::conj(a) * b;
  return {2.0 * ab.real(), 2.0 * ab.imag(), std::norm(a) - std::norm(b)};
}

/// Placement of the heights of the spherical Fibonacci lattice.
///  Closed: z_k = 1 - 2k/(n-1), both poles included (z = 0 when n = 1).
///  Offset: z_k = 1 - (2k+1)/n, cell midpoints.
enum class FibonacciGrid { Closed, Offset };

/// Golden-angle spiral with azimuth 2 pi k (1 - 1/golden), k = 0..n-1.
inline SamplingSet fibonacci_sphere(std::size_t n,
                                    FibonacciGrid grid = FibonacciGrid::Closed) {
  if (n == 0) throw InvalidArgument("fibonacci_sphere: n must be positive");
  SamplingSet s;
  s.descriptor.kind = grid == FibonacciGrid::Closed ? SetKind::FibonacciSphere
                                                    : SetKind::FibonacciOffset;
  s.descriptor.count = n;
  s.states.reserve(n);
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  const double step = 2.0 * std::numbers::pi * (1.0 - 1.0 / golden);
  const auto dn = static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto dk = static_cast<double>(k);
    double z = 0.0;
    if (grid == FibonacciGrid::Offset)
      z = 1.0 - (2.0 * dk + 1.0) / dn;
    else if (n > 1)
      z = 1.0 - 2.0 * dk / (dn - 1.0);
    const double phi = std::fmod(step * dk, 2.0 * std::numbers::pi);
    s.states.push_back(bloch_ket(std::acos(std::clamp(z, -1.0, 1.0)), phi));
  }
  return s;
}

/// Haar-random pure states from normalized complex Gaussian vectors.
inline SamplingSet haar_random(Index dim, std::size_t n, std::uint64_t seed) {
  if (dim < 2) throw InvalidArgument("haar_random: dim must be >= 2");
  if (n == 0) throw InvalidArgument("haar_random: n must be positive");
  SamplingSet s;
  s.descriptor = {SetKind::Haar, n, dim, seed, 0.0};
  Rng rng(seed);
  s.states.reserve(n);
  ComplexVector v(dim);
  for (std::size_t k = 0; k < n; ++k) {
    for (Index j = 0; j < dim; ++j) v(j) = rng.complex_normal();
    s.states.push_back(Ket::normalized(v));
  }
  return s;
}

/// Real rotation [[cos, -sin], [sin, cos]].
inline ComplexMatrix rotation(double theta) {
  ComplexMatrix r(2, 2);
  r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return r;
}

/// {|0>, |1>, R(theta)|0>, R(theta)|1>}.
inline SamplingSet two_pair(double theta) {
  SamplingSet s;
  s.descriptor.kind = SetKind::TwoPair;
  s.descriptor.theta = theta;
  const double c = std::cos(theta), sn = std::sin(theta);
  s.states = {detail::qubit(1.0, 0.0), detail::qubit(0.0, 1.0),
              detail::qubit(c, sn), detail::qubit(-sn, c)};
  return s;
}

/// The four Bell states and the four states obtained from them with H (x) 1
/// (all real, maximally entangled).
inline SamplingSet bell_real8() {
  SamplingSet s;
  s.descriptor.kind = SetKind::BellReal8;
  s.states = {
      detail::two_qubit(1, 0, 0, 1),   detail::two_qubit(1, 0, 0, -1),
      detail::two_qubit(0, 1, 1, 0),   detail::two_qubit(0, 1, -1, 0),
      detail::two_qubit(-1, 1, 1, 1),  detail::two_qubit(1, -1, 1, 1),
      detail::two_qubit(1, 1, -1, 1),  detail::two_qubit(1, 1, 1, -1),
  };
  return s;
}

/// Haar-random SU(2) element built from a normalized Gaussian pair (a, b)
/// as [[a, -conj b], [b, conj a]].
inline ComplexMatrix haar_su2(Rng& rng) {
  ComplexVector ab(2);
  ab << rng.complex_normal(), rng.complex_normal();
  ab.normalize();
  ComplexMatrix u(2, 2);
  u << ab(0), -std::conj(ab(1)), ab(1), std::conj(ab(0));
  return u;
}

/// (U (x) 1)|Phi+> with U Haar-random on one qubit.
inline SamplingSet max_entangled_random(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("max_entangled_random: n must be positive");
  SamplingSet s;
  s.descriptor = {SetKind::MaxEntangledRandom, n, 4, seed, 0.0};
  Rng rng(seed);
  const ComplexVector phi_plus = gamma_vector(2) / std::sqrt(2.0);
  s.states.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const ComplexMatrix u = haar_su2(rng);
    s.states.push_back(Ket::normalized(kron(u, identity(2)) * phi_plus));
  }
  return s;
}

/// (W U_k (x) 1)|Phi+> with U_k the super-Fibonacci spiral on SU(2) = S^3,
///   U_k = [[a, -conj b], [b, conj a]],
///   a = r e^{i(pi/2 - alpha)}, b = R e^{i(pi/2 - beta)},
///   s = k + 1/2, r = sqrt(s/n), R = sqrt(1 - s/n),
///   alpha = 2 pi s / sqrt(2), beta = 2 pi s / psi with psi^4 = psi + 4,
/// and W a Haar-random rotation drawn from the seed (identity for seed 0).
inline SamplingSet max_entangled_lattice(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("max_entangled_lattice: n must be positive");
  SamplingSet s;
  s.descriptor = {SetKind::MaxEntangledLattice, n, 4, seed, 0.0};
  Rng rng(seed);
  const ComplexMatrix w = seed == 0 ? identity(2) : haar_su2(rng);
  const double psi = 1.533751168755204288118041;
  const ComplexVector phi_plus = gamma_vector(2) / std::sqrt(2.0);
  const auto dn = static_cast<double>(n);
  s.states.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) + 0.5;
    const double r = std::sqrt(t / dn), rr = std::sqrt(1.0 - t / dn);
    const double alpha = 2.0 * std::numbers::pi * t / std::numbers::sqrt2;
    const double beta = 2.0 * std::numbers::pi * t / psi;
    const Complex a(r * std::sin(alpha), r * std::cos(alpha));
    const Complex b(rr * std::sin(beta), rr * std::cos(beta));
    ComplexMatrix u(2, 2);
    u << a, -std::conj(b), b, std::conj(a);
    s.states.push_back(Ket::normalized(kron(ComplexMatrix(w * u), identity(2)) * phi_plus));
  }
  return s;
}

/// Regenerates a set from its descriptor.
inline SamplingSet generate(const Descriptor& d) {
  switch (d.kind) {
    case SetKind::Sic4: return sic4();
    case SetKind::Pauli6: return pauli6();
    case SetKind::Equatorial3: return equatorial3();
    case SetKind::FibonacciSphere: return fibonacci_sphere(d.count);
    case SetKind::FibonacciOffset:
      return fibonacci_sphere(d.count, FibonacciGrid::Offset);
    case SetKind::Haar: return haar_random(d.dim, d.count, d.seed);
    case SetKind::TwoPair: return two_pair(d.theta);
    case SetKind::BellReal8: return bell_real8();
    case SetKind::MaxEntangledRandom: return max_entangled_random(d.count, d.seed);
    case SetKind::MaxEntangledLattice: return max_entangled_lattice(d.count, d.seed);
  }
  throw InvalidArgument("generate: unknown set kind");
}

/// Parses labels such as "sic4", "fibonacci:100", "haar:2:1000:7",
/// "two-pair:0.5", "max-entangled:1000:7", "max-entangled-lattice:1000".
/// The inverse of Descriptor::label.
inline Descriptor parse_descriptor(const std::string& label,
                                   std::uint64_t default_seed = 0) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = label.find(':', start);
    parts.push_back(label.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  const std::string& name = parts.front();
  auto count_at = [&](std::size_t i) -> std::size_t {
    if (parts.size() <= i) throw InvalidArgument("sampling '" + label + "': missing count");
    return static_cast<std::size_t>(std::stoull(parts[i]));
  };
  auto seed_at = [&](std::size_t i) -> std::uint64_t {
    return parts.size() > i ? std::stoull(parts[i]) : default_seed;
  };
  Descriptor d;
  try {
    if (name == "sic4") {
      d.kind = SetKind::Sic4;
    } else if (name == "pauli6") {
      d.kind = SetKind::Pauli6;
    } else if (name == "equatorial3") {
      d.kind = SetKind::Equatorial3;
    } else if (name == "fibonacci") {
      d.kind = SetKind::FibonacciSphere;
      d.count = count_at(1);
    } else if (name == "fibonacci-offset") {
      d.kind = SetKind::FibonacciOffset;
      d.count = count_at(1);
    } else if (name == "haar") {
      d.kind = SetKind::Haar;
      if (parts.size() < 3) throw InvalidArgument("haar needs dim and count");
      d.dim = static_cast<Index>(std::stoll(parts[1]));
      d.count = count_at(2);
      d.seed = seed_at(3);
    } else if (name == "two-pair") {
      d.kind = SetKind::TwoPair;
      d.theta = parts.size() > 1 ? std::stod(parts[1]) : 0.0;
    } else if (name == "bell-real8") {
      d.kind = SetKind::BellReal8;
    } else if (name == "max-entangled") {
      d.kind = SetKind::MaxEntangledRandom;
      d.dim = 4;
      d.count = count_at(1);
      d.seed = seed_at(2);
    } else if (name == "max-entangled-lattice") {
      d.kind = SetKind::MaxEntangledLattice;
      d.dim = 4;
      d.count = count_at(1);
      d.seed = seed_at(2);
    } else {
      throw InvalidArgument("unknown sampling set '" + label + "'");
    }
  } catch (const std::logic_error&) {
    throw InvalidArgument("malformed sampling set '" + label + "'");
  }
  return d;
}

}  // namespace qclone::states
