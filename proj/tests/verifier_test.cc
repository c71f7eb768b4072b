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

#include <doctest.h>

#include "coherent/catalog.h"
#include "coherent/ce.h"
#include "coherent/errors.h"
#include "coherent/verifier.h"

namespace coherent {
namespace {

TEST_CASE("incentive slacks of the chicken bundle") {
  const Game chicken = catalog::ChickenGame();
  const Distribution belief = catalog::ChickenExpectedBelief();
  const StrategyProfile sigma = catalog::ChickenSigma();
  // Player 1 at m1 deviating to a2: (1/3)(5-7) + (1/3)(2-0) = 0.
  CHECK(ic_slack(chicken, belief, sigma, 0, 0, 1) == 0);
  // Deviating to the played action is free.
  CHECK(ic_slack(chicken, belief, sigma, 0, 0, 0) == 0);
  // Player 1 at m2: (1/3)(7-5) = 2/3 of slack.
  CHECK(ic_slack(chicken, belief, sigma, 0, 1, 0) == Rat(2, 3));
  CHECK_THROWS_AS(ic_slack(chicken, belief, sigma, 0, 5, 0), InputError);
}

TEST_CASE("uniform 3x3 belief slacks in matching pennies") {
  const Game pennies = catalog::MatchingPennies();
  const PSDGP dgp = catalog::PenniesLargeDisclosure();
  const StrategyProfile sigma = catalog::PenniesLargeSigma();
  const Distribution belief = Distribution::Uniform(
      dgp.space, {0, 1, 2, 3, 4, 5, 6, 7, 8});
  // Player 1 at m1, deviation a2: (1/9)(2-0) + (2/9)(0-1) = 0.
  CHECK(ic_slack(pennies, belief, sigma, 0, 0, 1) == 0);
  // Every other slack vanishes as well: the induced play is the unique CE.
  for (int player = 0; player < 2; ++player) {
    for (int m = 0; m < 3; ++m) {
      for (int dev = 0; dev < 2; ++dev) {
        CHECK(ic_slack(pennies, belief, sigma, player, m, dev) == 0);
      }
    }
  }
}

TEST_CASE("mixed strategies verify through multilinear payoffs") {
  const Game coord = catalog::CoordinationGame();
  SpacePtr msg = MakeSpace({"P1", "P2"}, {{"m1"}, {"n1"}});
  // Both players mix 50/50 regardless of the message; belief degenerate.
  std::vector<std::vector<std::vector<Rat>>> rows{
      {{Rat(1, 2), Rat(1, 2)}}, {{Rat(1, 2), Rat(1, 2)}}};
  const StrategyProfile sigma(msg, coord.action_space(), rows);
  const Distribution belief = Distribution::PointMass(msg, 0);
  // u1(mix, mix) = (2+0+0+1)/4 = 3/4; u1(a1, mix) = 1, u1(a2, mix) = 1/2.
  CHECK(ic_slack(coord, belief, sigma, 0, 0, 0) == Rat(3, 4) - 1);
  CHECK(ic_slack(coord, belief, sigma, 0, 0, 1) == Rat(3, 4) - Rat(1, 2));
}

TEST_CASE("chicken implementation certificate") {
  const ImplementationCertificate cert = check_implementation(
      catalog::ChickenGame(), catalog::ChickenDisclosure(),
      catalog::ChickenSigma(), catalog::ChickenTarget());
  CHECK(cert.pass);
  CHECK(cert.exact_epsilon);
  CHECK(cert.epsilon_exact == 0);
  CHECK(cert.belief_condition.pass);
  CHECK(cert.incentive_condition.pass);
  CHECK(cert.pushforward_condition.pass);
  CHECK(Distribution::SameExact(cert.outcome, catalog::ChickenTarget()));
}

TEST_CASE("coordination certificate and a broken variant") {
  const Game coord = catalog::CoordinationGame();
  const ImplementationCertificate good = check_implementation(
      coord, catalog::CoordinationDisclosure(), catalog::CoordinationSigma(),
      catalog::CoordinationTarget());
  CHECK(good.pass);
  CHECK(good.epsilon <= 1e-10);

  // Swap eta mass to the other anti-diagonal cell: condition 3 breaks.
  SpacePtr m = catalog::CoordinationDisclosure().space;
  std::vector<Rat> swapped(m->size(), Rat(0));
  swapped[m->parse_key("m1,n2")] = Rat(1, 3);
  swapped[m->parse_key("m2,n1")] = Rat(2, 3);
  const PSDGP moved(m, Distribution::Exact(m, std::move(swapped)),
                    catalog::CoordinationDisclosure().feedback);
  const ImplementationCertificate bad = check_implementation(
      coord, moved, catalog::CoordinationSigma(),
      catalog::CoordinationTarget());
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.pushforward_condition.pass);
}

TEST_CASE("epsilon bound reacts linearly to payoff perturbations") {
  // Lower u1(a1,b1) from 5 to 5 - gamma: the only binding slack becomes
  // -gamma/3, so the bound is exactly gamma/3.
  const Rat gamma(1, 10);
  Game bent({"P1", "P2"}, {{"a1", "a2"}, {"b1", "b2"}},
            {{Rat(5) - gamma, Rat(2), Rat(7), Rat(0)},
             {Rat(5), Rat(7), Rat(2), Rat(0)}});
  const double eps = epsilon_bound(bent, catalog::ChickenDisclosure(),
                                   catalog::ChickenSigma());
  CHECK(eps == doctest::Approx(ToDouble(gamma / 3)).epsilon(1e-12));

  // The certificate reports the same exact value.
  const ImplementationCertificate cert = check_implementation(
      bent, catalog::ChickenDisclosure(), catalog::ChickenSigma(),
      catalog::ChickenTarget());
  CHECK(cert.exact_epsilon);
  CHECK(cert.epsilon_exact == gamma / 3);
  CHECK(cert.worst.player == 0);

  // Epsilon shrinks back to zero when the gap is restored.
  CHECK(epsilon_bound(catalog::ChickenGame(), catalog::ChickenDisclosure(),
                      catalog::ChickenSigma()) == 0.0);
}

TEST_CASE("epsilon is monotone along a payoff-gap family") {
  // As the obedience payoff at (a1,b1) falls, the bound weakly grows; as it
  // is restored, the bound weakly shrinks back to zero.
  double previous = -1.0;
  for (int step = 0; step <= 6; ++step) {
    const Rat gamma = MakeRat(step, 20);
    const Game bent({"P1", "P2"}, {{"a1", "a2"}, {"b1", "b2"}},
                    {{Rat(5) - gamma, Rat(2), Rat(7), Rat(0)},
                     {Rat(5), Rat(7), Rat(2), Rat(0)}});
    const double eps = epsilon_bound(bent, catalog::ChickenDisclosure(),
                                     catalog::ChickenSigma());
    CHECK(eps >= previous);
    previous = eps;
  }
  CHECK(previous == doctest::Approx(ToDouble(MakeRat(6, 20) / 3)));
}

TEST_CASE("passing certificates imply joint coherence and equilibrium play") {
  const Game chicken = catalog::ChickenGame();
  const ImplementationCertificate cert = check_implementation(
      chicken, catalog::ChickenDisclosure(), catalog::ChickenSigma(),
      catalog::ChickenTarget());
  REQUIRE(cert.pass);
  CHECK(is_jointly_coherent(chicken, cert.outcome));
  const Distribution induced =
      pushforward(cert.belief, catalog::ChickenSigma());
  CHECK(is_correlated_equilibrium(chicken, induced, 0.0).is_ce);
}

TEST_CASE("cyclic example verifies end to end") {
  const ImplementationCertificate cert = check_implementation(
      catalog::CyclicGame(), catalog::CyclicDisclosure(),
      catalog::CyclicSigma(), catalog::CyclicTarget());
  CHECK(cert.pass);
  CHECK(cert.exact_epsilon);
  CHECK(cert.epsilon_exact == 0);
}

}  // namespace
}  // namespace coherent
