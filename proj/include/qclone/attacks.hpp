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

// Intercept-resend analysis of BB84 and the six-state protocol: an
// asymmetric 1 -> 2 cloner keeps one copy for the eavesdropper and forwards
// the other to Bob through a depolarizing line.

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qclone/errors.hpp"
#include "qclone/kraus.hpp"
#include "qclone/sdp/solve.hpp"
#include "qclone/states.hpp"
#include "qclone/targets.hpp"

namespace qclone::attacks {

enum class Protocol { FourState, SixState };
enum class Family { Universal, PhaseCovariant };
enum class AttackModel { Individual15, Collective11, SixState126 };

inline std::string to_string(Protocol p) {
  return p == Protocol::FourState ? "four-state" : "six-state";
}
inline std::string to_string(Family f) {
  return f == Family::Universal ? "universal" : "covariant";
}
inline Protocol protocol_from_string(const std::string& s) {
  if (s == "four-state" || s == "bb84") return Protocol::FourState;
  if (s == "six-state") return Protocol::SixState;
  throw InvalidArgument("unknown protocol '" + s + "'");
}
inline Family family_from_string(const std::string& s) {
  if (s == "universal") return Family::Universal;
  if (s == "covariant" || s == "phase-covariant") return Family::PhaseCovariant;
  throw InvalidArgument("unknown attack family '" + s + "'");
}

inline double threshold(AttackModel m) {
  switch (m) {
    case AttackModel::Individual15: return 0.15;
    case AttackModel::Collective11: return 0.11;
    case AttackModel::SixState126: return 0.126;
  }
  return 0.0;
}

inline AttackModel default_model(Protocol p) {
  return p == Protocol::FourState ? AttackModel::Individual15
                                  : AttackModel::SixState126;
}

struct AttackPoint {
  double lambda = 0.5;
  double mu = 0.0;
  Protocol protocol = Protocol::FourState;
  Family family = Family::Universal;
};

struct AttackResult {
  AttackPoint point;
  double f_bob = 0.0;
  double f_eve = 0.0;
  double qber = 0.0;
  bool secure = false;
  double concurrence_bob_eve = 0.0;
  std::string error;  // nonempty when the cloner solve failed

  bool ok() const { return error.empty(); }
};

/// N0 = sqrt(1 - mu) 1, N_{1,2,3} = sqrt(mu / 3) {X, Y, Z}.
inline kraus::KrausSet depolarizing_kraus(double mu) {
  if (!(mu >= 0.0 && mu <= 0.75))
    throw InvalidArgument("depolarizing_kraus: mu must lie in [0, 3/4]");
  const double a = std::sqrt(1.0 - mu), b = std::sqrt(mu / 3.0);
  return kraus::make_kraus_set(
      {a * pauli::I(), b * pauli::X(), b * pauli::Y(), b * pauli::Z()});
}

inline double qber(double f_bob, Protocol p) {
  return p == Protocol::FourState ? 1.0 - f_bob : 0.75 * (1.0 - f_bob);
}

inline double security_margin(const AttackResult& r, AttackModel m) {
  return threshold(m) - r.qber;
}
inline double security_margin(const AttackResult& r) {
  return security_margin(r, default_model(r.point.protocol));
}

/// States sent by Alice.
inline states::SamplingSet protocol_states(Protocol p) {
  if (p == Protocol::SixState) return states::pauli6();
  return states::two_pair(std::numbers::pi / 4.0);  // |0>, |1>, |+>, |->
}

/// Scenario whose optimal asymmetric cloner is used against a family.
inline targets::CloningScenario cloner_scenario(Family f) {
  return targets::make_scenario(
      f == Family::Universal ? targets::Family::Universal
                             : targets::Family::XZCovariant,
      1, 2);
}

struct SweepSettings {
  sdp::SolverSettings solver;
  double eig_threshold = kraus::kDefaultThreshold;
};

/// Optimal asymmetric cloners keyed by (family, lambda). Fill from one thread;
/// concurrent lookups of existing entries are safe afterwards.
class ClonerCache {
 public:
  const kraus::KrausSet& get(Family f, double lambda, const SweepSettings& s) {
    const auto key = std::make_pair(static_cast<int>(f), lambda);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const auto sc = cloner_scenario(f);
    const auto target =
        targets::omega_asymmetric(targets::default_sampling(sc), sc, lambda);
    const auto res = sdp::solve(sdp::assemble_primal(target), s.solver);
    if (!res.certificate.pass)
      throw ConvergenceError("asymmetric cloner failed certification",
                             res.certificate.primal_feas_residual,
                             res.certificate.dual_feas_residual, res.certificate.gap,
                             res.certificate.iterations);
    return cache_.emplace(key, kraus::extract(res.choi, s.eig_threshold))
        .first->second;
  }
  std::size_t size() const { return cache_.size(); }

 private:
  std::map<std::pair<int, double>, kraus::KrausSet> cache_;
};

/// Bob (output 0) and Eve (output 1) figures for one cloner and noise level.
inline AttackResult evaluate(const kraus::KrausSet& cloner, const AttackPoint& pt) {
  const SubsystemShape out{2, 2};
  const kraus::KrausSet noisy = kraus::compose_serial(
      kraus::extend_on_subsystem(depolarizing_kraus(pt.mu), out, 0), cloner);
  const auto set = protocol_states(pt.protocol);
  AttackResult r;
  r.point = pt;
  for (const auto& psi : set.states) {
    const ComplexVector& a = psi.amplitudes();
    const ComplexMatrix rho = kraus::apply(noisy, a * a.adjoint());
    r.f_bob += (a.adjoint() * kraus::marginal(rho, out, 0) * a)(0, 0).real();
    r.f_eve += (a.adjoint() * kraus::marginal(rho, out, 1) * a)(0, 0).real();
    r.concurrence_bob_eve += kraus::concurrence(rho);
  }
  const double n = static_cast<double>(set.size());
  r.f_bob /= n;
  r.f_eve /= n;
  r.concurrence_bob_eve /= n;
  r.qber = qber(r.f_bob, pt.protocol);
  r.secure = security_margin(r) > 0.0;
  return r;
}

/// Every (lambda, mu) pair of the grids, lambda-major. A failed cloner solve
/// marks all its points with the error message and the sweep continues.
inline std::vector<AttackResult> attack_sweep(Family family, Protocol protocol,
                                              const std::vector<double>& lambdas,
                                              const std::vector<double>& mus,
                                              const SweepSettings& settings = {},
                                              ClonerCache* cache = nullptr) {
  if (lambdas.empty() || mus.empty())
    throw InvalidArgument("attack_sweep: empty grid");
  for (double mu : mus)
    if (!(mu >= 0.0 && mu <= 0.75))
      throw InvalidArgument("attack_sweep: mu must lie in [0, 3/4]");
  ClonerCache local;
  ClonerCache& c = cache ? *cache : local;
  std::vector<AttackResult> out;
  for (double lambda : lambdas) {
    const kraus::KrausSet* cloner = nullptr;
    std::string err;
    try {
      cloner = &c.get(family, lambda, settings);
    } catch (const Error& e) {
      err = e.what();
    }
    for (double mu : mus) {
      const AttackPoint pt{lambda, mu, protocol, family};
      if (cloner) {
        out.push_back(evaluate(*cloner, pt));
      } else {
        AttackResult r;
        r.point = pt;
        r.error = err;
        out.push_back(r);
      }
    }
  }
  return out;
}

}  // namespace qclone::attacks
