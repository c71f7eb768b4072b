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

#include "coherent/strategy.h"

#include "coherent/errors.h"

namespace coherent {

StrategyProfile::StrategyProfile(
    SpacePtr message_space, SpacePtr action_space,
    std::vector<std::vector<std::vector<Rat>>> rows)
    : message_space_(std::move(message_space)),
      action_space_(std::move(action_space)),
      rows_(std::move(rows)) {
  if (message_space_->num_axes() != action_space_->num_axes()) {
    throw InputError("message/action player count mismatch");
  }
  const int n = message_space_->num_axes();
  if (static_cast<int>(rows_.size()) != n) {
    throw InputError("strategy row count != player count");
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows_[i].size()) != message_space_->axis_size(i)) {
      throw InputError("strategy domain of player " +
                       message_space_->axis_name(i) +
                       " does not equal its message set");
    }
    for (const auto& row : rows_[i]) {
      if (static_cast<int>(row.size()) != action_space_->axis_size(i)) {
        throw InputError("strategy image dimension mismatch");
      }
      Rat sum = 0;
      for (const Rat& p : row) {
        if (p < 0) throw InputError("negative strategy weight");
        sum += p;
      }
      if (sum != 1) throw InputError("strategy row does not sum to 1");
    }
  }
}

StrategyProfile StrategyProfile::Pure(
    SpacePtr message_space, SpacePtr action_space,
    const std::vector<std::vector<int>>& choice) {
  std::vector<std::vector<std::vector<Rat>>> rows(choice.size());
  for (size_t i = 0; i < choice.size(); ++i) {
    rows[i].resize(choice[i].size());
    for (size_t m = 0; m < choice[i].size(); ++m) {
      std::vector<Rat> row(action_space->axis_size(static_cast<int>(i)),
                           Rat(0));
      const int a = choice[i][m];
      if (a < 0 || a >= static_cast<int>(row.size())) {
        throw InputError("pure strategy action out of range");
      }
      row[a] = 1;
      rows[i][m] = std::move(row);
    }
  }
  return StrategyProfile(std::move(message_space), std::move(action_space),
                         std::move(rows));
}

StrategyProfile StrategyProfile::Obedient(SpacePtr action_space) {
  std::vector<std::vector<int>> choice(action_space->num_axes());
  for (int i = 0; i < action_space->num_axes(); ++i) {
    choice[i].resize(action_space->axis_size(i));
    for (int a = 0; a < action_space->axis_size(i); ++a) choice[i][a] = a;
  }
  return Pure(action_space, action_space, choice);
}

bool StrategyProfile::pure() const {
  for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
    for (int m = 0; m < static_cast<int>(rows_[i].size()); ++m) {
      if (pure_action(i, m) < 0) return false;
    }
  }
  return true;
}

int StrategyProfile::pure_action(int player, int message) const {
  const auto& row = rows_[player][message];
  int which = -1;
  for (int a = 0; a < static_cast<int>(row.size()); ++a) {
    if (row[a] == 1) which = a;
    if (row[a] != 0 && row[a] != 1) return -1;
  }
  return which;
}

Distribution pushforward(const Distribution& eta,
                         const StrategyProfile& sigma) {
  if (!eta.space()->same_labels(*sigma.message_space())) {
    throw InputError("eta is not over the strategy profile's message space");
  }
  const ProductSpace& msg = *eta.space();
  const ProductSpace& act = *sigma.action_space();
  const int n = msg.num_axes();
  std::vector<int> mcoords;
  std::vector<int> acoords(n);
  if (eta.exact()) {
    std::vector<Rat> out(act.size(), Rat(0));
    for (int m = 0; m < msg.size(); ++m) {
      if (!(eta.r(m) > 0)) continue;
      msg.coords_of(m, mcoords);
      // Distribute eta(m) over the product of per-player mixtures; zero
      // sigma entries cut the product early.
      for (int a = 0; a < act.size(); ++a) {
        act.coords_of(a, acoords);
        Rat w = eta.r(m);
        for (int i = 0; i < n && w != 0; ++i) {
          w *= sigma.prob(i, mcoords[i], acoords[i]);
        }
        if (w != 0) out[a] += w;
      }
    }
    return Distribution::Exact(sigma.action_space(), std::move(out));
  }
  std::vector<double> out(act.size(), 0.0);
  for (int m = 0; m < msg.size(); ++m) {
    const double em = eta.f(m);
    if (em == 0) continue;
    msg.coords_of(m, mcoords);
    for (int a = 0; a < act.size(); ++a) {
      act.coords_of(a, acoords);
      double w = em;
      for (int i = 0; i < n && w != 0; ++i) {
        w *= ToDouble(sigma.prob(i, mcoords[i], acoords[i]));
      }
      if (w != 0) out[a] += w;
    }
  }
  return Distribution::Float(sigma.action_space(), std::move(out));
}

}  // namespace coherent
