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

#ifndef COHERENT_MECHANISM_H_
#define COHERENT_MECHANISM_H_

#include <optional>
#include <vector>

#include "coherent/ce.h"
#include "coherent/game.h"
#include "coherent/linesum.h"
#include "coherent/psdgp.h"
#include "coherent/strategy.h"
#include "coherent/verifier.h"

namespace coherent {

// Correlated equilibrium with a pinned common denominator: p_a = k_a / k.
// ic_tolerance is 0 for exact equilibria; the rational-approximation path
// produces epsilon-equilibria with the bound recorded.
struct RationalCe {
  Distribution p;
  Int denominator;
  std::vector<Int> numerators;
  Rat ic_tolerance = 0;
};

// Validates the correlated-equilibrium inequalities exactly and extracts the
// common denominator.
RationalCe exact_rational_ce(const Game& game, const Distribution& p);

// Rational approximation of a float equilibrium belief with the same
// support: per-coordinate continued-fraction rounding within eps / (B |A|),
// exact renormalization, and an exact epsilon-equilibrium certificate, where
// B is the largest payoff gap. Realizes the density step of the
// epsilon-implementation pipeline.
RationalCe approximate_rational_ce(const Game& game, const Distribution& q,
                                   const Rat& eps);

enum class MechanismKind {
  kHypercube,        // equal blocks of side k, binary line-sum arrays
  kMarginalProduct,  // product equilibrium: per-action block sizes, F empty
};

// Explicit disclosure mechanism: message blocks per action profile, the
// pure block strategy, zero-cell indicator feedback, and the predicted
// uniform belief, which is the exact entropy maximizer of `dgp`.
struct ConstructedMechanism {
  PSDGP dgp;
  StrategyProfile sigma;
  Distribution predicted_belief;
  Distribution target;
  MechanismKind kind = MechanismKind::kHypercube;
  Rat epsilon = 0;  // incentive bound inherited from the equilibrium used
  // Per player, per action: [begin, end) message index range of the block.
  std::vector<std::vector<std::pair<int, int>>> blocks;
  // Hypercube arrays per action profile, indexed by profile.
  std::vector<BinaryLineSumArray> arrays;
};

// Block construction for a rational correlated equilibrium p: message blocks
// M_i^{a_i} of side k, a k^N binary array with line sums k_a per profile,
// feedback indicators on the zero cells, and eta placing each target mass on
// the lexicographically first one-cell of its block. Requires
// supp(target) within supp(p); target may be float (eta then carries the
// same float masses and the belief is still exact).
ConstructedMechanism build_mechanism(const Game& game, const RationalCe& p,
                                     const Distribution& target);

// Specialization for equilibria that factor into their marginals: block
// sizes k_i p_i(a_i) per player, empty feedback, uniform belief over all of
// M. Message sets shrink from k|A_i| to the marginal denominator k_i.
ConstructedMechanism build_product_mechanism(const Game& game,
                                             const RationalCe& p,
                                             const Distribution& target);

bool is_product_of_marginals(const Distribution& p);

// Action whose block contains `message` on the player's message axis.
int BlockOf(const ConstructedMechanism& mechanism, int player, int message);

// Exact check of the block conditionals: for every player and message with
// positive belief marginal, the conditional over opponents' induced action
// profiles equals p(a_{-i} | a_i).
bool conditional_block_check(const ConstructedMechanism& mechanism,
                             const RationalCe& p);

struct ImplementOptions {
  VertexEnumOptions enumeration;
  // Skip candidates whose message spaces would exceed this cell count.
  long max_cells = 250000;
};

// End-to-end construction for a jointly coherent target: checks coherence
// profile-by-profile (exact LPs), picks a small rational CE covering the
// target support (single covering vertices, the average of per-profile
// maximizers, and the extreme-point average when enumerable), builds the
// block mechanism, and verifies epsilon = 0. Throws RejectionError when the
// target is not jointly coherent. `eps` only matters for float targets fed
// through the approximation path; the rational route is exact.
ConstructedMechanism implement_jointly_coherent(
    const Game& game, const Distribution& target, const Rat& eps = Rat(1, 100),
    const ImplementOptions& options = {});

}  // namespace coherent

#endif  // COHERENT_MECHANISM_H_
