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

// Prints Bob's and Eve's fidelities for a symmetric phase-covariant attack on
// BB84 as the line noise grows.

#include <cstdio>

#include "qclone/qclone.hpp"

int main() {
  using namespace qclone;
  const std::vector<double> mus = {0.0, 0.05, 0.1, 0.2, 0.4, 0.75};
  const auto rows = attacks::attack_sweep(attacks::Family::PhaseCovariant,
                                          attacks::Protocol::FourState, {0.5}, mus);
  std::printf("%6s %10s %10s %8s %s\n", "mu", "F_bob", "F_eve", "QBER", "secure");
  for (const auto& r : rows) {
    if (!r.ok()) {
      std::printf("%6.3f  error: %s\n", r.point.mu, r.error.c_str());
      continue;
    }
    std::printf("%6.3f %10.6f %10.6f %8.4f %s\n", r.point.mu, r.f_bob, r.f_eve, r.qber,
                r.secure ? "yes" : "no");
  }
  return 0;
}
