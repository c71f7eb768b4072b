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

#ifndef COHERENT_TESTS_ORACLES_H_
#define COHERENT_TESTS_ORACLES_H_

#include <random>
#include <vector>

#include "coherent/game.h"
#include "coherent/maxent.h"
#include "coherent/polytope.h"

// Independent reference implementations used only by tests. They share no
// code with the solver paths they check: vertex enumeration by exhaustive
// tight-row subsets, and entropy maximization by projected gradient ascent
// with Euclidean active-set projections.
namespace coherent::testing {

// All vertices of a small polytope by solving every maximal tight-row
// system and filtering feasible solutions. Exponential; dimensions <= 10.
std::vector<std::vector<Rat>> BruteForceVertices(const HPolytope& poly);

struct PgResult {
  std::vector<double> q;
  double entropy = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Projected gradient ascent on H(q) over the plausible set, projecting onto
// {rows, normalization, q >= 0} with an NNLS-style active set. Needs the
// feasible starting point carried by the constraints (eta).
PgResult ProjectedGradientMaxent(const MomentConstraints& constraints,
                                 double tol = 1e-11, int max_iter = 400000);

Game RandomGame(std::mt19937& rng, int num_players, int max_actions,
                int payoff_range = 8);

// Random exact distribution with numerators over a common denominator;
// keep_prob controls the support density (at least one cell survives).
Distribution RandomDistribution(std::mt19937& rng, const SpacePtr& space,
                                int max_numerator = 12,
                                double keep_prob = 1.0);

// Random (q, eta) pair satisfying both inducibility conditions exactly:
// q has duplicated value classes and eta reshuffles mass within classes.
struct InduciblePair {
  Distribution q;
  Distribution eta;
};
InduciblePair RandomInduciblePair(std::mt19937& rng, const SpacePtr& space);

}  // namespace coherent::testing

#endif  // COHERENT_TESTS_ORACLES_H_
