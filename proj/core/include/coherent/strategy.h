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

#ifndef COHERENT_STRATEGY_H_
#define COHERENT_STRATEGY_H_

#include <vector>

#include "coherent/distribution.h"
#include "coherent/product_space.h"
#include "coherent/rational.h"

namespace coherent {

// Per-player map from own messages to mixtures over own actions. Rows are
// exact and total: rows[i][m][a] = sigma_i(a | m) for every m in M_i.
class StrategyProfile {
 public:
  // Empty placeholder; use the factories or the full constructor.
  StrategyProfile() = default;

  StrategyProfile(SpacePtr message_space, SpacePtr action_space,
                  std::vector<std::vector<std::vector<Rat>>> rows);

  // Pure profile from per-player message -> action choices.
  static StrategyProfile Pure(SpacePtr message_space, SpacePtr action_space,
                              const std::vector<std::vector<int>>& choice);

  // Obedient profile on a canonical space (messages are the actions).
  static StrategyProfile Obedient(SpacePtr action_space);

  const SpacePtr& message_space() const { return message_space_; }
  const SpacePtr& action_space() const { return action_space_; }

  const Rat& prob(int player, int message, int action) const {
    return rows_[player][message][action];
  }

  bool pure() const;
  // Action played at (player, message) for a pure row, -1 when mixed.
  int pure_action(int player, int message) const;

 private:
  SpacePtr message_space_;
  SpacePtr action_space_;
  std::vector<std::vector<std::vector<Rat>>> rows_;
};

// Pushforward outcome mu = eta o sigma:
//   mu(a) = sum_m eta(m) prod_i sigma_i(a_i | m_i).
// Exact when eta is exact.
Distribution pushforward(const Distribution& eta, const StrategyProfile& sigma);

}  // namespace coherent

#endif  // COHERENT_STRATEGY_H_
