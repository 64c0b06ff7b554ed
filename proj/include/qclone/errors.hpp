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

#include <stdexcept>
#include <string>

namespace qclone {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not conform (matrix sizes, subsystem factorizations).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A precondition on values was violated (non-Hermitian input, lambda out of
/// range, invalid permutation, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The interior-point or barrier iteration did not reach the requested
/// accuracy. Carries the residuals of the best iterate.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double primal_residual,
                   double dual_residual, double gap, int iterations)
      : Error(what),
        primal_residual_(primal_residual),
        dual_residual_(dual_residual),
        gap_(gap),
        iterations_(iterations) {}

  double primal_residual() const noexcept { return primal_residual_; }
  double dual_residual() const noexcept { return dual_residual_; }
  double gap() const noexcept { return gap_; }
  int iterations() const noexcept { return iterations_; }

 private:
  double primal_residual_;
  double dual_residual_;
  double gap_;
  int iterations_;
};

/// The problem was detected to be primal or dual infeasible.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace qclone
