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

#ifndef COHERENT_CATALOG_H_
#define COHERENT_CATALOG_H_

#include <optional>
#include <string>
#include <vector>

#include "coherent/game.h"
#include "coherent/psdgp.h"
#include "coherent/strategy.h"

namespace coherent {
namespace catalog {

// Built-in worked examples: small benchmark games, the disclosure processes
// that implement non-equilibrium outcomes in them, and the belief tables
// they induce. These back the `examples` CLI verb and the integration
// tests.

Game ChickenGame();            // (5,5) (2,7) / (7,2) (0,0)
Game CoordinationGame();       // (2,1) (0,0) / (0,0) (1,2)
Game DirectGame();             // 3x3 game with recommendations h, m, l
Game MatchingPennies();        // (2,-2) (0,0) / (0,0) (1,-1)
Game CyclicGame();             // (2,0) (0,1) / (0,1) (1,0), unique CE

// Chicken: point mass on (m1,n1), one disclosed zero cell; the belief is
// uniform on the remaining three cells and supports the outcome (a1,b1).
PSDGP ChickenDisclosure();
StrategyProfile ChickenSigma();
Distribution ChickenTarget();
Distribution ChickenExpectedBelief();
Distribution ChickenOptimalCe();  // (1/3,1/3,1/3,0)

// Coordination: anti-correlated process, marginals disclosed; the belief is
// the product of the marginals and implements the anti-diagonal outcome.
PSDGP CoordinationDisclosure();
StrategyProfile CoordinationSigma();
Distribution CoordinationTarget();
Distribution CoordinationExpectedBelief();

// Direct 3x3 example: canonical messages, diagonal process, one dense
// feedback row; the belief has cells 1/12, 1/2 and 1/20.
PSDGP DirectDisclosure();
StrategyProfile DirectSigma();  // obedient
Distribution DirectTarget();    // diag(1/4, 1/2, 1/4)
Distribution DirectExpectedBelief();

// Matching pennies with a 3x3 message grid and empty feedback: uniform
// belief, merged strategies, degenerate target outcome.
PSDGP PenniesLargeDisclosure();
StrategyProfile PenniesLargeSigma();
Distribution PenniesLargeTarget();
Distribution PenniesUniqueCe();  // (1/9,2/9,2/9,4/9)

// Cyclic 2x2 game: 4x4 messages, four disclosed zero cells, 1/12-pattern
// belief, merged strategies implementing (1/3,1/3,1/3,0).
PSDGP CyclicDisclosure();
StrategyProfile CyclicSigma();
Distribution CyclicTarget();
Distribution CyclicExpectedBelief();

// Block constructions from a target correlated belief (no game attached):
// the message belief is uniform on its support, feedback discloses the zero
// cells, and the strategies push the belief forward onto the target.
struct BeliefConstruction {
  std::string name;
  SpacePtr action_space;
  Distribution target_belief;
  Distribution message_belief;
  std::vector<FeedbackFunction> feedback;
  StrategyProfile sigma;
};

BeliefConstruction ConstructionA();  // 3x2 messages onto a 2x2 belief
BeliefConstruction ConstructionB();  // 4x6 messages onto a 2x3 belief
BeliefConstruction ConstructionC();  // 5x5 messages onto a 2x2 belief

}  // namespace catalog
}  // namespace coherent

#endif  // COHERENT_CATALOG_H_
