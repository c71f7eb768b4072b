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

#ifndef COHERENT_GAME_H_
#define COHERENT_GAME_H_

#include <string>
#include <vector>

#include "coherent/distribution.h"
#include "coherent/product_space.h"
#include "coherent/rational.h"

namespace coherent {

// Finite normal-form game with exact rational payoffs. Action profiles are
// indexed row-major through the shared ProductSpace.
class Game {
 public:
  // payoffs[i] is player i's dense payoff tensor over action profiles.
  Game(std::vector<std::string> players,
       std::vector<std::vector<std::string>> actions,
       std::vector<std::vector<Rat>> payoffs);

  int num_players() const { return static_cast<int>(players_.size()); }
  const std::vector<std::string>& players() const { return players_; }
  const SpacePtr& action_space() const { return space_; }
  int num_actions(int player) const { return space_->axis_size(player); }
  int num_profiles() const { return space_->size(); }

  const Rat& payoff(int player, int profile) const {
    return payoffs_[player][profile];
  }
  const std::vector<Rat>& payoff_tensor(int player) const {
    return payoffs_[player];
  }

  int player_index(std::string_view name) const;  // -1 if unknown

 private:
  std::vector<std::string> players_;
  SpacePtr space_;
  std::vector<std::vector<Rat>> payoffs_;
};

// Signed gain of obeying `recommended` over playing `deviation`, weighted by
// q on the recommended slice:
//   sum_{a_-i} q(rec, a_-i) [u_i(rec, a_-i) - u_i(dev, a_-i)].
// Unnormalized by the marginal q(rec). Requires an exact distribution.
Rat deviation_gain(const Game& game, const Distribution& q, int player,
                   int recommended, int deviation);
// Same quantity in doubles; works for both modes.
double deviation_gain_approx(const Game& game, const Distribution& q,
                             int player, int recommended, int deviation);

struct CeCheck {
  bool is_ce = false;
  // Worst (most negative) slack over players, recommended actions with
  // positive marginal, and deviations. Zero when no constraint is active.
  double worst_slack = 0.0;
  int player = -1;
  int recommended = -1;
  int deviation = -1;
  bool exact = false;
};

// Correlated-equilibrium membership. Exact distributions are tested with
// exact arithmetic against an exact tolerance (tol = 0 is meaningful);
// float distributions against `tol` with a 1e-12 marginal threshold.
CeCheck is_correlated_equilibrium(const Game& game, const Distribution& q,
                                  double tol = 1e-9);

std::vector<Rat> expected_payoffs(const Game& game, const Distribution& mu);
std::vector<double> expected_payoffs_approx(const Game& game,
                                            const Distribution& mu);

}  // namespace coherent

#endif  // COHERENT_GAME_H_
