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

#ifndef COHERENT_VERIFIER_H_
#define COHERENT_VERIFIER_H_

#include <string>

#include "coherent/game.h"
#include "coherent/maxent.h"
#include "coherent/psdgp.h"
#include "coherent/strategy.h"

namespace coherent {

// Signed incentive slack of obeying sigma at (player, message) against a
// pure deviation, under belief q over messages:
//   sum_{m_-i} q(m_i, m_-i) [u_i(sigma_i(m_i), sigma_-i(m_-i))
//                            - u_i(deviation, sigma_-i(m_-i))],
// with utilities extended multilinearly over mixed strategies. Exact form
// requires an exact belief.
Rat ic_slack(const Game& game, const Distribution& belief,
             const StrategyProfile& sigma, int player, int message,
             int deviation);
double ic_slack_approx(const Game& game, const Distribution& belief,
                       const StrategyProfile& sigma, int player, int message,
                       int deviation);

struct WorstSlack {
  int player = -1;
  int message = -1;
  int deviation = -1;
  double slack = 0.0;
};

struct ConditionReport {
  bool pass = false;
  std::string detail;
};

// Verified bundle for the three implementation conditions: the belief is
// the entropy maximizer (KKT residual at tolerance), obedience is an
// epsilon-best response at every message the belief marks possible, and the
// true process pushes forward to the target.
struct ImplementationCertificate {
  Distribution belief;
  Distribution outcome;  // pushforward of eta through sigma
  double epsilon = 0.0;
  Rat epsilon_exact;     // meaningful when exact_epsilon
  bool exact_epsilon = false;
  ConditionReport belief_condition;      // condition 1
  ConditionReport incentive_condition;   // condition 2 (pass iff eps <= tol)
  ConditionReport pushforward_condition; // condition 3
  WorstSlack worst;
  KktReport kkt;
  bool pass = false;
};

ImplementationCertificate check_implementation(const Game& game,
                                               const PSDGP& dgp,
                                               const StrategyProfile& sigma,
                                               const Distribution& target,
                                               double tol = 1e-9);

// Minimal epsilon for which the epsilon-implementation inequalities hold
// under the maxent belief of `dgp`: max(0, -min slack) over messages with
// positive belief marginal.
double epsilon_bound(const Game& game, const PSDGP& dgp,
                     const StrategyProfile& sigma);

}  // namespace coherent

#endif  // COHERENT_VERIFIER_H_
