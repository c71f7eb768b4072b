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

#include "coherent/verifier.h"

#include <cmath>
#include <sstream>

#include "coherent/errors.h"

namespace coherent {
namespace {

constexpr double kMarginalFloor = 1e-12;  // solver-zero threshold

void CheckIcArgs(const Game& game, const Distribution& belief,
                 const StrategyProfile& sigma, int player, int message,
                 int deviation) {
  if (!belief.space()->same_labels(*sigma.message_space())) {
    throw InputError("belief is not over the strategy's message space");
  }
  if (!sigma.action_space()->same_labels(*game.action_space())) {
    throw InputError("strategy is not over this game's actions");
  }
  if (player < 0 || player >= game.num_players()) {
    throw InputError("unknown player index");
  }
  if (message < 0 || message >= belief.space()->axis_size(player)) {
    throw InputError("unknown message index");
  }
  if (deviation < 0 || deviation >= game.num_actions(player)) {
    throw InputError("unknown action index");
  }
}

// Expected payoff of player i when they play `own` (a mixture over A_i) and
// the opponents play sigma at m_-i; multilinear in all mixtures.
template <typename Scalar, typename Weight>
Scalar OpponentExpectedPayoff(const Game& game, const StrategyProfile& sigma,
                              const std::vector<int>& mcoords, int player,
                              const std::vector<Scalar>& own,
                              Weight to_scalar) {
  const ProductSpace& act = *game.action_space();
  std::vector<int> acoords;
  Scalar total(0);
  for (int a = 0; a < act.size(); ++a) {
    act.coords_of(a, acoords);
    Scalar w = own[acoords[player]];
    if (w == 0) continue;
    for (int i = 0; i < game.num_players() && w != 0; ++i) {
      if (i == player) continue;
      w *= to_scalar(sigma.prob(i, mcoords[i], acoords[i]));
    }
    if (w != 0) total += w * to_scalar(game.payoff(player, a));
  }
  return total;
}

template <typename Scalar, typename BeliefAt, typename Weight>
Scalar IcSlackImpl(const Game& game, const Distribution& belief,
                   const StrategyProfile& sigma, int player, int message,
                   int deviation, BeliefAt belief_at, Weight to_scalar) {
  const ProductSpace& msg = *belief.space();
  const int na = game.num_actions(player);
  std::vector<Scalar> obey(na);
  for (int a = 0; a < na; ++a) {
    obey[a] = to_scalar(sigma.prob(player, message, a));
  }
  std::vector<Scalar> dev(na, Scalar(0));
  dev[deviation] = Scalar(1);

  Scalar slack(0);
  std::vector<int> mcoords;
  for (int m = 0; m < msg.size(); ++m) {
    msg.coords_of(m, mcoords);
    if (mcoords[player] != message) continue;
    const Scalar w = belief_at(m);
    if (w == 0) continue;
    const Scalar u_obey =
        OpponentExpectedPayoff(game, sigma, mcoords, player, obey, to_scalar);
    const Scalar u_dev =
        OpponentExpectedPayoff(game, sigma, mcoords, player, dev, to_scalar);
    slack += w * (u_obey - u_dev);
  }
  return slack;
}

}  // namespace

Rat ic_slack(const Game& game, const Distribution& belief,
             const StrategyProfile& sigma, int player, int message,
             int deviation) {
  CheckIcArgs(game, belief, sigma, player, message, deviation);
  return IcSlackImpl<Rat>(
      game, belief, sigma, player, message, deviation,
      [&](int m) { return belief.r(m); }, [](const Rat& r) { return r; });
}

double ic_slack_approx(const Game& game, const Distribution& belief,
                       const StrategyProfile& sigma, int player, int message,
                       int deviation) {
  CheckIcArgs(game, belief, sigma, player, message, deviation);
  return IcSlackImpl<double>(
      game, belief, sigma, player, message, deviation,
      [&](int m) { return belief.f(m); },
      [](const Rat& r) { return ToDouble(r); });
}

namespace {

struct SlackScan {
  double min_slack = 0.0;
  Rat min_slack_exact = 0;
  WorstSlack worst;
  bool any = false;
};

SlackScan ScanSlacks(const Game& game, const Distribution& belief,
                     const StrategyProfile& sigma) {
  SlackScan out;
  for (int i = 0; i < game.num_players(); ++i) {
    for (int m = 0; m < belief.space()->axis_size(i); ++m) {
      if (belief.exact()) {
        if (!(belief.marginal_r(i, m) > 0)) continue;
      } else {
        if (belief.marginal_f(i, m) <= kMarginalFloor) continue;
      }
      for (int dev = 0; dev < game.num_actions(i); ++dev) {
        if (belief.exact()) {
          const Rat s = ic_slack(game, belief, sigma, i, m, dev);
          if (!out.any || s < out.min_slack_exact) {
            out.min_slack_exact = s;
            out.worst = {i, m, dev, ToDouble(s)};
          }
        } else {
          const double s = ic_slack_approx(game, belief, sigma, i, m, dev);
          if (!out.any || s < out.min_slack) {
            out.min_slack = s;
            out.worst = {i, m, dev, s};
          }
        }
        out.any = true;
      }
    }
  }
  return out;
}

}  // namespace

ImplementationCertificate check_implementation(const Game& game,
                                               const PSDGP& dgp,
                                               const StrategyProfile& sigma,
                                               const Distribution& target,
                                               double tol) {
  if (!sigma.message_space()->same_labels(*dgp.space)) {
    throw InputError("strategy domains do not match the message space");
  }
  if (!target.space()->same_labels(*game.action_space())) {
    throw InputError("target is not over this game's action profiles");
  }

  ImplementationCertificate cert;

  // Condition 1: belief formation. The certificate accepts any belief whose
  // KKT residual meets the tolerance rather than a bitwise-canonical solve.
  const MomentConstraints constraints = build_constraints(dgp);
  const MaxEntSolution sol = max_entropy(constraints);
  cert.belief = sol.belief;
  cert.kkt = verify_kkt(sol, constraints);
  const double belief_res =
      std::max(cert.kkt.primal_residual, cert.kkt.stationarity_residual);
  cert.belief_condition.pass = belief_res <= std::max(tol, 1e-9);
  {
    std::ostringstream os;
    os << "kkt residual " << belief_res;
    cert.belief_condition.detail = os.str();
  }

  // Condition 2: incentive compatibility at every message the belief deems
  // possible.
  const SlackScan scan = ScanSlacks(game, cert.belief, sigma);
  if (cert.belief.exact()) {
    cert.exact_epsilon = true;
    cert.epsilon_exact = scan.min_slack_exact < 0 ? -scan.min_slack_exact : Rat(0);
    cert.epsilon = ToDouble(cert.epsilon_exact);
  } else {
    cert.exact_epsilon = false;
    cert.epsilon = scan.min_slack < 0 ? -scan.min_slack : 0.0;
  }
  cert.worst = scan.worst;
  cert.incentive_condition.pass = cert.epsilon <= tol;
  {
    std::ostringstream os;
    os << "epsilon " << cert.epsilon;
    cert.incentive_condition.detail = os.str();
  }

  // Condition 3: the true process pushes forward to the target, exactly in
  // exact mode.
  cert.outcome = pushforward(dgp.eta, sigma);
  if (cert.outcome.exact() && target.exact()) {
    cert.pushforward_condition.pass =
        Distribution::SameExact(cert.outcome, target);
  } else {
    cert.pushforward_condition.pass =
        Distribution::TotalVariation(cert.outcome, target) <= 1e-12;
  }
  cert.pushforward_condition.detail =
      cert.pushforward_condition.pass ? "pushforward equals target"
                                      : "pushforward differs from target";

  cert.pass = cert.belief_condition.pass && cert.incentive_condition.pass &&
              cert.pushforward_condition.pass;
  return cert;
}

double epsilon_bound(const Game& game, const PSDGP& dgp,
                     const StrategyProfile& sigma) {
  const MaxEntSolution sol = max_entropy(build_constraints(dgp));
  const SlackScan scan = ScanSlacks(game, sol.belief, sigma);
  if (sol.belief.exact()) {
    const Rat eps = scan.min_slack_exact < 0 ? -scan.min_slack_exact : Rat(0);
    return ToDouble(eps);
  }
  return scan.min_slack < 0 ? -scan.min_slack : 0.0;
}

}  // namespace coherent
