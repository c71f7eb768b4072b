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

#ifndef COHERENT_CE_H_
#define COHERENT_CE_H_

#include <vector>

#include "coherent/game.h"
#include "coherent/polytope.h"
#include "coherent/simplex.h"

namespace coherent {

// H-representation of the correlated-equilibrium set: one inequality per
// (player, recommended, deviation) triple plus the probability simplex.
HPolytope ce_polytope(const Game& game);

// Action profiles carrying positive mass in some correlated equilibrium,
// computed exactly by maximizing each profile's mass over the CE polytope.
// The optimum-positive test has no tolerance.
std::vector<int> jointly_coherent_support(const Game& game);

bool is_jointly_coherent(const Game& game, const Distribution& mu);

std::vector<std::vector<Rat>> enumerate_extreme_points(
    const HPolytope& poly, const VertexEnumOptions& options = {});

// Average of all extreme points of the CE polytope: a rational correlated
// equilibrium whose support equals jointly_coherent_support (convexity).
// Propagates BudgetError from vertex enumeration.
Distribution maximal_support_rational_ce(
    const Game& game, const VertexEnumOptions& options = {});

}  // namespace coherent

#endif  // COHERENT_CE_H_
