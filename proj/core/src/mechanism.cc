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

#include "coherent/mechanism.h"

#include <algorithm>

#include "coherent/errors.h"
#include "coherent/maxent.h"

namespace coherent {
namespace {

std::vector<int> ThresholdSupport(const Distribution& d) {
  std::vector<int> s;
  for (int i = 0; i < d.size(); ++i) {
    if (d.exact() ? d.r(i) > 0 : d.f(i) > 1e-12) s.push_back(i);
  }
  return s;
}

Rat WorstCeSlack(const Game& game, const Distribution& p) {
  Rat worst = 0;
  for (int i = 0; i < game.num_players(); ++i) {
    for (int rec = 0; rec < game.num_actions(i); ++rec) {
      if (!(p.marginal_r(i, rec) > 0)) continue;
      for (int dev = 0; dev < game.num_actions(i); ++dev) {
        if (dev == rec) continue;
        const Rat g = deviation_gain(game, p, i, rec, dev);
        if (g < worst) worst = g;
      }
    }
  }
  return worst;
}

RationalCe MakeRationalCe(const Distribution& p, Rat ic_tolerance) {
  RationalCe ce;
  ce.p = p;
  ce.denominator = LcmOfDenominators(p.rationals());
  ce.numerators.reserve(p.size());
  for (int a = 0; a < p.size(); ++a) {
    Rat scaled = p.r(a) * Rat(ce.denominator);
    if (!IsInteger(scaled)) throw InternalError("denominator extraction failed");
    ce.numerators.push_back(scaled.get_num());
  }
  ce.ic_tolerance = std::move(ic_tolerance);
  return ce;
}

}  // namespace

RationalCe exact_rational_ce(const Game& game, const Distribution& p) {
  if (!p.exact()) {
    throw InputError("exact_rational_ce requires an exact distribution");
  }
  if (!p.space()->same_labels(*game.action_space())) {
    throw InputError("equilibrium is not over this game's action profiles");
  }
  const Rat worst = WorstCeSlack(game, p);
  if (worst < 0) {
    throw InputError("distribution is not a correlated equilibrium (slack " +
                     RatToString(worst) + ")");
  }
  return MakeRationalCe(p, Rat(0));
}

RationalCe approximate_rational_ce(const Game& game, const Distribution& q,
                                   const Rat& eps) {
  if (!q.space()->same_labels(*game.action_space())) {
    throw InputError("belief is not over this game's action profiles");
  }
  if (eps <= 0) throw InputError("eps must be positive");

  // Largest payoff gap between obedience and any deviation.
  Rat bound = 0;
  const ProductSpace& space = *game.action_space();
  std::vector<int> coords;
  for (int i = 0; i < game.num_players(); ++i) {
    for (int a = 0; a < space.size(); ++a) {
      space.coords_of(a, coords);
      for (int dev = 0; dev < game.num_actions(i); ++dev) {
        coords[i] = dev;
        const Rat gap = abs(game.payoff(i, a) -
                            game.payoff(i, space.index_of(coords)));
        if (gap > bound) bound = gap;
      }
      space.coords_of(a, coords);
    }
  }
  const Rat delta = bound > 0 ? eps / bound : eps;
  const Rat per_coord = delta / (2 * std::max(1, q.size()));

  std::vector<Rat> approx(q.size(), Rat(0));
  Rat total = 0;
  for (int a = 0; a < q.size(); ++a) {
    const double w = q.f(a);
    if (w <= 0) continue;
    const Rat exact_w = RatFromDouble(w);
    const Rat err = std::min(per_coord, Rat(exact_w / 2));
    approx[a] = ContinuedFractionRound(exact_w, err);
    total += approx[a];
  }
  if (total == 0) throw InputError("belief has empty support");
  for (Rat& w : approx) w /= total;
  Distribution p = Distribution::Exact(q.space(), std::move(approx));

  const Rat worst = WorstCeSlack(game, p);
  const Rat tolerance = worst < 0 ? -worst : Rat(0);
  if (tolerance > eps) {
    throw InputError(
        "input belief is too far from a correlated equilibrium for the "
        "requested eps (achieved " +
        RatToString(tolerance) + ")");
  }
  return MakeRationalCe(p, tolerance);
}

namespace {

struct BlockLayout {
  SpacePtr message_space;
  // blocks[i][a_i] = [begin, end) message range of player i's block.
  std::vector<std::vector<std::pair<int, int>>> blocks;
  // block_of[i][m_i] = action whose block contains message m_i.
  std::vector<std::vector<int>> block_of;
};

BlockLayout MakeLayout(const Game& game,
                       const std::vector<std::vector<long>>& sizes) {
  BlockLayout layout;
  const ProductSpace& act = *game.action_space();
  std::vector<std::vector<std::string>> labels(game.num_players());
  layout.blocks.resize(game.num_players());
  layout.block_of.resize(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    for (int a = 0; a < act.axis_size(i); ++a) {
      const int begin = static_cast<int>(labels[i].size());
      for (long j = 1; j <= sizes[i][a]; ++j) {
        labels[i].push_back(act.axis_labels(i)[a] + "#" + std::to_string(j));
        layout.block_of[i].push_back(a);
      }
      layout.blocks[i].emplace_back(begin, static_cast<int>(labels[i].size()));
    }
    if (labels[i].empty()) {
      throw InternalError("player with no messages in block layout");
    }
  }
  layout.message_space = MakeSpace(game.players(), std::move(labels));
  return layout;
}

StrategyProfile BlockStrategy(const Game& game, const BlockLayout& layout) {
  return StrategyProfile::Pure(layout.message_space, game.action_space(),
                               layout.block_of);
}

Distribution PlaceTargetMass(const SpacePtr& message_space,
                             const Distribution& target,
                             const std::vector<int>& designated) {
  // designated[a] = message index carrying target mass of profile a, or -1.
  if (target.exact()) {
    std::vector<Rat> eta(message_space->size(), Rat(0));
    for (int a = 0; a < target.size(); ++a) {
      if (!(target.r(a) > 0)) continue;
      if (designated[a] < 0) {
        throw InputError("target mass on a profile with an empty block");
      }
      eta[designated[a]] = target.r(a);
    }
    return Distribution::Exact(message_space, std::move(eta));
  }
  std::vector<double> eta(message_space->size(), 0.0);
  for (int a = 0; a < target.size(); ++a) {
    const double w = target.f(a);
    if (w <= 0) continue;
    if (designated[a] < 0) {
      throw InputError("target mass on a profile with an empty block");
    }
    eta[designated[a]] = w;
  }
  return Distribution::Float(message_space, std::move(eta));
}

void CheckTargetSupport(const Distribution& target, const Distribution& p) {
  for (int a : ThresholdSupport(target)) {
    if (!(p.r(a) > 0)) {
      throw InputError("target mass on profile outside supp(p)");
    }
  }
}

}  // namespace

ConstructedMechanism build_mechanism(const Game& game, const RationalCe& p,
                                     const Distribution& target) {
  if (!target.space()->same_labels(*game.action_space())) {
    throw InputError("target is not over this game's action profiles");
  }
  CheckTargetSupport(target, p.p);
  if (!p.denominator.fits_slong_p()) {
    throw BudgetError("equilibrium denominator too large for construction");
  }
  const long k = p.denominator.get_si();
  const int n = game.num_players();
  const ProductSpace& act = *game.action_space();

  long cells = 1;
  for (int i = 0; i < n; ++i) {
    const long mi = k * act.axis_size(i);
    if (mi > (1L << 20) || cells > (1L << 26) / std::max(mi, 1L)) {
      throw BudgetError("constructed message space too large");
    }
    cells *= mi;
  }

  std::vector<std::vector<long>> sizes(n);
  for (int i = 0; i < n; ++i) sizes[i].assign(act.axis_size(i), k);
  BlockLayout layout = MakeLayout(game, sizes);
  const ProductSpace& msg = *layout.message_space;

  // One binary hypercube per action profile, line sums k_a.
  std::vector<BinaryLineSumArray> arrays;
  arrays.reserve(act.size());
  for (int a = 0; a < act.size(); ++a) {
    if (!p.numerators[a].fits_slong_p()) {
      throw BudgetError("equilibrium numerator too large");
    }
    arrays.push_back(line_sum_array(n, static_cast<int>(k),
                                    static_cast<int>(p.numerators[a].get_si())));
  }

  // Scan messages: classify one-cells, zero-cell feedback indicators, and
  // the lexicographically first one-cell of each block for eta.
  std::vector<int> ones;
  std::vector<FeedbackFunction> feedback;
  std::vector<int> designated(act.size(), -1);
  std::vector<int> mcoords, acoords(n), local(n);
  for (int m = 0; m < msg.size(); ++m) {
    msg.coords_of(m, mcoords);
    for (int i = 0; i < n; ++i) {
      acoords[i] = layout.block_of[i][mcoords[i]];
      local[i] = mcoords[i] - layout.blocks[i][acoords[i]].first;
    }
    const int a = act.index_of(acoords);
    if (arrays[a].at(local)) {
      ones.push_back(m);
      if (designated[a] < 0) {
        // Global row-major order visits each block in its local row-major
        // order, so the first hit is the block-lexicographic first one-cell.
        designated[a] = m;
      }
    } else {
      feedback.push_back(FeedbackFunction::Indicator({m}));
    }
  }

  ConstructedMechanism mech{
      PSDGP(layout.message_space,
            PlaceTargetMass(layout.message_space, target, designated),
            std::move(feedback)),
      BlockStrategy(game, layout),
      Distribution::Uniform(layout.message_space, ones),
      target,
      MechanismKind::kHypercube,
      p.ic_tolerance,
      std::move(layout.blocks),
      std::move(arrays)};
  return mech;
}

bool is_product_of_marginals(const Distribution& p) {
  if (!p.exact()) throw InputError("product test requires an exact distribution");
  const ProductSpace& space = *p.space();
  std::vector<std::vector<Rat>> marginals(space.num_axes());
  for (int i = 0; i < space.num_axes(); ++i) marginals[i] = p.axis_marginal(i);
  std::vector<int> coords;
  for (int a = 0; a < p.size(); ++a) {
    space.coords_of(a, coords);
    Rat prod = 1;
    for (int i = 0; i < space.num_axes(); ++i) prod *= marginals[i][coords[i]];
    if (prod != p.r(a)) return false;
  }
  return true;
}

ConstructedMechanism build_product_mechanism(const Game& game,
                                             const RationalCe& p,
                                             const Distribution& target) {
  if (!target.space()->same_labels(*game.action_space())) {
    throw InputError("target is not over this game's action profiles");
  }
  if (!is_product_of_marginals(p.p)) {
    throw InputError("equilibrium does not factor into its marginals");
  }
  CheckTargetSupport(target, p.p);
  const int n = game.num_players();
  const ProductSpace& act = *game.action_space();

  std::vector<std::vector<long>> sizes(n);
  long cells = 1;
  for (int i = 0; i < n; ++i) {
    const std::vector<Rat> marginal = p.p.axis_marginal(i);
    const Int ki = LcmOfDenominators(marginal);
    if (!ki.fits_slong_p() || ki.get_si() > (1L << 20)) {
      throw BudgetError("marginal denominator too large for construction");
    }
    sizes[i].resize(act.axis_size(i));
    for (int a = 0; a < act.axis_size(i); ++a) {
      Rat scaled = marginal[a] * Rat(ki);
      sizes[i][a] = scaled.get_num().get_si();
    }
    if (cells > (1L << 26) / std::max(ki.get_si(), 1L)) {
      throw BudgetError("constructed message space too large");
    }
    cells *= ki.get_si();
  }
  BlockLayout layout = MakeLayout(game, sizes);
  const ProductSpace& msg = *layout.message_space;

  // With no feedback the belief is uniform over all of M; block masses are
  // the products of the per-player block shares, i.e. exactly p.
  std::vector<int> all(msg.size());
  for (int m = 0; m < msg.size(); ++m) all[m] = m;

  std::vector<int> designated(act.size(), -1);
  std::vector<int> mcoords, acoords(n);
  for (int m = 0; m < msg.size(); ++m) {
    msg.coords_of(m, mcoords);
    for (int i = 0; i < n; ++i) acoords[i] = layout.block_of[i][mcoords[i]];
    const int a = act.index_of(acoords);
    if (designated[a] < 0) designated[a] = m;
  }

  ConstructedMechanism mech{
      PSDGP(layout.message_space,
            PlaceTargetMass(layout.message_space, target, designated), {}),
      BlockStrategy(game, layout),
      Distribution::Uniform(layout.message_space, all),
      target,
      MechanismKind::kMarginalProduct,
      p.ic_tolerance,
      std::move(layout.blocks),
      {}};
  return mech;
}

int BlockOf(const ConstructedMechanism& mechanism, int player, int message) {
  for (size_t a = 0; a < mechanism.blocks[player].size(); ++a) {
    const auto& [begin, end] = mechanism.blocks[player][a];
    if (message >= begin && message < end) return static_cast<int>(a);
  }
  throw InternalError("message outside every block");
}

bool conditional_block_check(const ConstructedMechanism& mechanism,
                             const RationalCe& p) {
  const ProductSpace& msg = *mechanism.dgp.space;
  const ProductSpace& act = *p.p.space();
  const int n = msg.num_axes();
  const Distribution& q = mechanism.predicted_belief;

  std::vector<int> mcoords, acoords(n);
  for (int i = 0; i < n; ++i) {
    for (int m = 0; m < msg.axis_size(i); ++m) {
      // Conditional mass of each opponent block profile given message m.
      std::vector<Rat> mass(act.size(), Rat(0));
      Rat marginal = 0;
      int own_block = -1;
      for (int idx = 0; idx < msg.size(); ++idx) {
        msg.coords_of(idx, mcoords);
        if (mcoords[i] != m) continue;
        for (int j = 0; j < n; ++j) {
          acoords[j] = BlockOf(mechanism, j, mcoords[j]);
        }
        own_block = acoords[i];
        const int a = act.index_of(acoords);
        mass[a] += q.r(idx);
        marginal += q.r(idx);
      }
      if (!(marginal > 0)) continue;
      // q(a_{-i} | m) must equal p(a_{-i} | a_i): cross-multiplied to stay
      // division-free.
      const Rat p_marg = p.p.marginal_r(i, own_block);
      for (int a = 0; a < act.size(); ++a) {
        std::vector<int> ac;
        act.coords_of(a, ac);
        if (ac[i] != own_block) {
          if (mass[a] != 0) return false;
          continue;
        }
        if (mass[a] * p_marg != p.p.r(a) * marginal) return false;
      }
    }
  }
  return true;
}

namespace {

long MechanismCellCount(const Game& game, const Distribution& p,
                        bool product) {
  if (product) {
    long cells = 1;
    for (int i = 0; i < game.num_players(); ++i) {
      const Int ki = LcmOfDenominators(p.axis_marginal(i));
      if (!ki.fits_slong_p()) return -1;
      if (cells > (4L << 30) / std::max(ki.get_si(), 1L)) return -1;
      cells *= ki.get_si();
    }
    return cells;
  }
  const Int k = LcmOfDenominators(p.rationals());
  if (!k.fits_slong_p()) return -1;
  long cells = 1;
  for (int i = 0; i < game.num_players(); ++i) {
    const long mi = k.get_si() * game.num_actions(i);
    if (mi <= 0 || cells > (4L << 30) / mi) return -1;
    cells *= mi;
  }
  return cells;
}

}  // namespace

ConstructedMechanism implement_jointly_coherent(const Game& game,
                                                const Distribution& target,
                                                const Rat& eps,
                                                const ImplementOptions& options) {
  if (!target.space()->same_labels(*game.action_space())) {
    throw InputError("target is not over this game's action profiles");
  }
  const std::vector<int> supp = ThresholdSupport(target);
  if (supp.empty()) throw InputError("target has empty support");

  // Joint coherence, profile by profile; keep the maximizing vertices.
  const HPolytope poly = ce_polytope(game);
  std::vector<Distribution> maximizers;
  std::vector<Rat> objective(poly.dim, Rat(0));
  for (int a : supp) {
    objective[a] = 1;
    const LpResult res = solve_lp(poly, objective, LpSense::kMax);
    objective[a] = 0;
    if (res.status != LpStatus::kOptimal) {
      throw InternalError("correlated equilibrium polytope is empty");
    }
    if (!(res.value > 0)) {
      throw RejectionError(
          "target is not jointly coherent: profile " +
          game.action_space()->key_of(a) +
          " lies outside the support of every correlated equilibrium");
    }
    maximizers.push_back(
        Distribution::Exact(game.action_space(), res.point));
  }

  auto covers = [&](const Distribution& p) {
    for (int a : supp) {
      if (!(p.r(a) > 0)) return false;
    }
    return true;
  };

  // Candidate equilibria, cheapest message space wins. Enumerated covering
  // vertices come first so e.g. product equilibria with tiny denominators
  // are preferred over the maximal-support average.
  std::vector<Distribution> candidates;
  try {
    for (const auto& v :
         enumerate_vertices(poly, options.enumeration)) {
      Distribution d = Distribution::Exact(game.action_space(), v);
      if (covers(d)) candidates.push_back(std::move(d));
    }
  } catch (const BudgetError&) {
    // Fall back to LP-derived equilibria below.
  }
  for (const auto& v : maximizers) {
    if (covers(v)) candidates.push_back(v);
  }
  {
    std::vector<Rat> avg(game.num_profiles(), Rat(0));
    for (const auto& v : maximizers) {
      for (int a = 0; a < game.num_profiles(); ++a) avg[a] += v.r(a);
    }
    const Rat count(static_cast<unsigned long>(maximizers.size()));
    for (Rat& w : avg) w /= count;
    candidates.push_back(
        Distribution::Exact(game.action_space(), std::move(avg)));
  }

  int best = -1;
  long best_cells = -1;
  bool best_product = false;
  for (size_t c = 0; c < candidates.size(); ++c) {
    const bool product = is_product_of_marginals(candidates[c]);
    const long cells = MechanismCellCount(game, candidates[c], product);
    if (cells < 0 || cells > options.max_cells) continue;
    if (best < 0 || cells < best_cells) {
      best = static_cast<int>(c);
      best_cells = cells;
      best_product = product;
    }
  }
  if (best < 0) {
    throw BudgetError(
        "no covering correlated equilibrium yields a message space within "
        "the cell budget");
  }

  const RationalCe ce = exact_rational_ce(game, candidates[best]);
  ConstructedMechanism mech = best_product
                                  ? build_product_mechanism(game, ce, target)
                                  : build_mechanism(game, ce, target);

  // The construction is exact: the maxent belief must match the prediction
  // bit for bit and the certificate must verify at eps = 0.
  const MaxEntSolution sol = max_entropy(build_constraints(mech.dgp));
  if (!sol.exact ||
      !Distribution::SameExact(sol.belief, mech.predicted_belief)) {
    throw InternalError("constructed belief does not match the prediction");
  }
  const ImplementationCertificate cert =
      check_implementation(game, mech.dgp, mech.sigma, target);
  if (!cert.pass || (cert.exact_epsilon && cert.epsilon_exact != 0)) {
    throw InternalError("constructed mechanism failed verification");
  }
  if (RatFromDouble(cert.epsilon) > eps && eps > 0) {
    throw InternalError("constructed mechanism exceeds the requested eps");
  }
  return mech;
}

}  // namespace coherent
