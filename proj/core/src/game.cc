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

#include "coherent/game.h"

#include "coherent/errors.h"

namespace coherent {

Game::Game(std::vector<std::string> players,
           std::vector<std::vector<std::string>> actions,
           std::vector<std::vector<Rat>> payoffs)
    : players_(std::move(players)),
      space_(MakeSpace(players_, std::move(actions))),
      payoffs_(std::move(payoffs)) {
  if (players_.size() < 2) throw InputError("a game needs at least 2 players");
  if (payoffs_.size() != players_.size()) {
    throw InputError("payoff tensor count != player count");
  }
  for (const auto& tensor : payoffs_) {
    if (static_cast<int>(tensor.size()) != space_->size()) {
      throw InputError("payoff tensor is not total over the profile space");
    }
  }
}

int Game::player_index(std::string_view name) const {
  for (size_t i = 0; i < players_.size(); ++i) {
    if (players_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

namespace {

void CheckDeviationArgs(const Game& game, const Distribution& q, int player,
                        int recommended, int deviation) {
  if (player < 0 || player >= game.num_players()) {
    throw InputError("unknown player index");
  }
  if (recommended < 0 || recommended >= game.num_actions(player) ||
      deviation < 0 || deviation >= game.num_actions(player)) {
    throw InputError("unknown action index");
  }
  if (!q.space()->same_labels(*game.action_space())) {
    throw InputError("distribution is not over this game's action profiles");
  }
}

}  // namespace

Rat deviation_gain(const Game& game, const Distribution& q, int player,
                   int recommended, int deviation) {
  CheckDeviationArgs(game, q, player, recommended, deviation);
  Rat gain = 0;
  std::vector<int> coords;
  const ProductSpace& space = *game.action_space();
  for (int a = 0; a < space.size(); ++a) {
    space.coords_of(a, coords);
    if (coords[player] != recommended) continue;
    if (!(q.r(a) > 0)) continue;
    coords[player] = deviation;
    const int dev_profile = space.index_of(coords);
    gain += q.r(a) * (game.payoff(player, a) - game.payoff(player, dev_profile));
  }
  return gain;
}

double deviation_gain_approx(const Game& game, const Distribution& q,
                             int player, int recommended, int deviation) {
  CheckDeviationArgs(game, q, player, recommended, deviation);
  double gain = 0;
  std::vector<int> coords;
  const ProductSpace& space = *game.action_space();
  for (int a = 0; a < space.size(); ++a) {
    space.coords_of(a, coords);
    if (coords[player] != recommended) continue;
    const double w = q.f(a);
    if (w == 0) continue;
    coords[player] = deviation;
    const int dev_profile = space.index_of(coords);
    gain += w * (ToDouble(game.payoff(player, a)) -
                 ToDouble(game.payoff(player, dev_profile)));
  }
  return gain;
}

CeCheck is_correlated_equilibrium(const Game& game, const Distribution& q,
                                  double tol) {
  if (!q.space()->same_labels(*game.action_space())) {
    throw InputError("distribution is not over this game's action profiles");
  }
  CeCheck out;
  out.is_ce = true;
  out.exact = q.exact();
  const double marginal_floor = 1e-12;
  Rat worst_exact = 0;
  double worst = 0;
  for (int i = 0; i < game.num_players(); ++i) {
    for (int rec = 0; rec < game.num_actions(i); ++rec) {
      if (q.exact()) {
        if (!(q.marginal_r(i, rec) > 0)) continue;
      } else {
        if (q.marginal_f(i, rec) <= marginal_floor) continue;
      }
      for (int dev = 0; dev < game.num_actions(i); ++dev) {
        if (dev == rec) continue;
        if (q.exact()) {
          const Rat g = deviation_gain(game, q, i, rec, dev);
          if (g < worst_exact) {
            worst_exact = g;
            out.player = i;
            out.recommended = rec;
            out.deviation = dev;
          }
        } else {
          const double g = deviation_gain_approx(game, q, i, rec, dev);
          if (g < worst) {
            worst = g;
            out.player = i;
            out.recommended = rec;
            out.deviation = dev;
          }
        }
      }
    }
  }
  if (q.exact()) {
    out.worst_slack = ToDouble(worst_exact);
    out.is_ce = worst_exact >= -RatFromDouble(tol);
  } else {
    out.worst_slack = worst;
    out.is_ce = worst >= -tol;
  }
  return out;
}

std::vector<Rat> expected_payoffs(const Game& game, const Distribution& mu) {
  if (!mu.space()->same_labels(*game.action_space())) {
    throw InputError("distribution is not over this game's action profiles");
  }
  std::vector<Rat> u(game.num_players(), Rat(0));
  for (int a = 0; a < game.num_profiles(); ++a) {
    if (!(mu.r(a) > 0)) continue;
    for (int i = 0; i < game.num_players(); ++i) {
      u[i] += mu.r(a) * game.payoff(i, a);
    }
  }
  return u;
}

std::vector<double> expected_payoffs_approx(const Game& game,
                                            const Distribution& mu) {
  if (!mu.space()->same_labels(*game.action_space())) {
    throw InputError("distribution is not over this game's action profiles");
  }
  std::vector<double> u(game.num_players(), 0.0);
  for (int a = 0; a < game.num_profiles(); ++a) {
    const double w = mu.f(a);
    if (w == 0) continue;
    for (int i = 0; i < game.num_players(); ++i) {
      u[i] += w * ToDouble(game.payoff(i, a));
    }
  }
  return u;
}

}  // namespace coherent
