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

// Solves the universal 1 -> 2 cloner, certifies it and prints its Kraus
// operators together with a unitary completion of the first one.

#include <cstdio>
#include <iostream>

#include "qclone/qclone.hpp"

int main() {
  using namespace qclone;
  const auto sc = targets::make_scenario(targets::Family::Universal, 1, 2);
  const auto target = targets::omega_local(states::sic4(), sc);
  const auto res = sdp::solve(sdp::assemble_primal(target));
  const auto& c = res.certificate;
  std::printf("primal %.10f  dual %.10f  gap %.2e  %s\n", c.primal_value, c.dual_value,
              c.gap, c.pass ? "certified" : "NOT certified");
  std::printf("analytic bound %.10f\n\n", targets::analytic::universal(1, 2));

  const auto k = kraus::extract(res.choi);
  std::cout << kraus::render_text(k, 5);
  std::printf("completeness residual %.2e\n\n", k.completeness_residual);

  const ComplexMatrix u = kraus::unitary_completion(k.operators.front());
  std::cout << "unitary completion of K0:\n" << u.real() << "\n";
  return c.pass ? 0 : 1;
}
