// Copyright 2026 The Coherent Authors.
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

#ifndef COHERENT_ERRORS_H_
#define COHERENT_ERRORS_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace coherent {

// Malformed inputs: unknown labels, dimension mismatches, invalid files.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A resource budget (vertex count, basis count, dimension guard) was hit.
struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// A request that is well-formed but provably not satisfiable, e.g. a target
// outcome that is not jointly coherent.
struct RejectionError : std::runtime_error {
  explicit RejectionError(const std::string& what)
      : std::runtime_error(what) {}
};

// Iterative solver failed to reach tolerance; carries the best iterate.
struct ConvergenceError : std::runtime_error {
  ConvergenceError(const std::string& what, double residual,
                   std::vector<double> best_point)
      : std::runtime_error(what),
        residual(residual),
        best_point(std::move(best_point)) {}
  double residual;
  std::vector<double> best_point;
};

// Violated internal invariant (e.g. an infeasible plausible set built from a
// valid data-generating process).
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace coherent

#endif  // COHERENT_ERRORS_H_
