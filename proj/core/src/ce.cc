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

#include "coherent/ce.h"

#include "coherent/errors.h"

namespace coherent {

HPolytope ce_polytope(const Game& game) {
  const ProductSpace& space = *game.action_space();
  HPolytope poly = HPolytope::Simplex(space.size());
  std::vector<int> coords;
  for (int i = 0; i < game.num_players(); ++i) {
    for (int rec = 0; rec < game.num_actions(i); ++rec) {
      for (int dev = 0; dev < game.num_actions(i); ++dev) {
        if (dev == rec) continue;
        std::vector<Rat> row(space.size(), Rat(0));
        for (int a = 0; a < space.size(); ++a) {
          space.coords_of(a, coords);
          if (coords[i] != rec) continue;
          coords[i] = dev;
          const int dev_profile = space.index_of(coords);
          row[a] = game.payoff(i, a) - game.payoff(i, dev_profile);
        }
        poly.add_inequality(std::move(row), Rat(0));
      }
    }
  }
  return poly;
}

std::vector<int> jointly_coherent_support(const Game& game) {
  const HPolytope poly = ce_polytope(game);
  std::vector<int> support;
  std::vector<Rat> objective(poly.dim, Rat(0));
  for (int a = 0; a < poly.dim; ++a) {
    objective[a] = 1;
    const LpResult res = solve_lp(poly, objective, LpSense::kMax);
    objective[a] = 0;
    if (res.status != LpStatus::kOptimal) {
      // A finite game always has a Nash equilibrium, hence a CE.
      throw InternalError("correlated equilibrium polytope is empty");
    }
    if (res.value > 0) support.push_back(a);
  }
  return support;
}

bool is_jointly_coherent(const Game& game, const Distribution& mu) {
  if (!mu.space()->same_labels(*game.action_space())) {
    throw InputError("outcome is not over this game's action profiles");
  }
  const std::vector<int> support = jointly_coherent_support(game);
  std::vector<bool> in(game.num_profiles(), false);
  for (int a : support) in[a] = true;
  for (int a : mu.support()) {
    if (!in[a]) return false;
  }
  return true;
}

std::vector<std::vector<Rat>> enumerate_extreme_points(
    const HPolytope& poly, const VertexEnumOptions& options) {
  return enumerate_vertices(poly, options);
}

Distribution maximal_support_rational_ce(const Game& game,
                                         const VertexEnumOptions& options) {
  const std::vector<std::vector<Rat>> verts =
      enumerate_vertices(ce_polytope(game), options);
  if (verts.empty()) {
    throw InternalError("correlated equilibrium polytope is empty");
  }
  std::vector<Rat> avg(game.num_profiles(), Rat(0));
  for (const auto& v : verts) {
    for (int a = 0; a < game.num_profiles(); ++a) avg[a] += v[a];
  }
  const Rat count(static_cast<unsigned long>(verts.size()));
  for (Rat& w : avg) w /= count;
  return Distribution::Exact(game.action_space(), std::move(avg));
}

}  // namespace coherent
