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

#ifndef COHERENT_SIMPLEX_H_
#define COHERENT_SIMPLEX_H_

#include <span>
#include <vector>

#include "coherent/polytope.h"
#include "coherent/rational.h"

namespace coherent {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };
enum class LpSense { kMax, kMin };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rat value;
  // Basic feasible solution attaining the optimum (a vertex when the
  // polytope is pointed). Empty unless kOptimal.
  std::vector<Rat> point;
};

// Exact primal simplex over rationals; Bland's rule, so it terminates under
// the heavy degeneracy that correlated-equilibrium polytopes exhibit.
// Requires nonneg polytopes (all uses here are subsets of a simplex).
LpResult solve_lp(const HPolytope& poly, std::span<const Rat> objective,
                  LpSense sense);

struct VertexEnumOptions {
  int vertex_budget = 10000;
  long basis_budget = 400000;
  int max_dim = 64;
};

// All extreme points of a bounded polytope, deduplicated and sorted
// lexicographically. Pivot-based search over lexicographically positive
// bases (symbolic perturbation anchored at a starting feasible basis), which
// visits every vertex of a bounded polytope. Throws BudgetError when a
// budget or the dimension guard is exceeded, InputError on unbounded input.
std::vector<std::vector<Rat>> enumerate_vertices(
    const HPolytope& poly, const VertexEnumOptions& options = {});

}  // namespace coherent

#endif  // COHERENT_SIMPLEX_H_
