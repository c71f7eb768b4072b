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

#include "coherent/catalog.h"

#include <cmath>

namespace coherent {
namespace catalog {
namespace {

std::vector<Rat> Rats(const std::vector<std::string>& vals) {
  std::vector<Rat> out;
  out.reserve(vals.size());
  for (const auto& v : vals) out.push_back(RatFromString(v));
  return out;
}

Game TwoByTwo(const std::vector<std::string>& u1,
              const std::vector<std::string>& u2) {
  return Game({"P1", "P2"}, {{"a1", "a2"}, {"b1", "b2"}},
              {Rats(u1), Rats(u2)});
}

SpacePtr Messages(int rows, int cols) {
  std::vector<std::string> m1, m2;
  for (int i = 1; i <= rows; ++i) m1.push_back("m" + std::to_string(i));
  for (int j = 1; j <= cols; ++j) m2.push_back("n" + std::to_string(j));
  return MakeSpace({"P1", "P2"}, {std::move(m1), std::move(m2)});
}

Distribution Table(const SpacePtr& space,
                   const std::vector<std::string>& cells) {
  return Distribution::Exact(space, Rats(cells));
}

}  // namespace

Game ChickenGame() {
  return TwoByTwo({"5", "2", "7", "0"}, {"5", "7", "2", "0"});
}

Game CoordinationGame() {
  return TwoByTwo({"2", "0", "0", "1"}, {"1", "0", "0", "2"});
}

Game DirectGame() {
  return Game({"P1", "P2"}, {{"h", "m", "l"}, {"h", "m", "l"}},
              {Rats({"9", "4", "1", "6", "6", "0", "10", "0", "6"}),
               Rats({"9", "6", "10", "4", "6", "0", "1", "0", "6"})});
}

Game MatchingPennies() {
  return TwoByTwo({"2", "0", "0", "1"}, {"-2", "0", "0", "-1"});
}

Game CyclicGame() {
  return TwoByTwo({"2", "0", "0", "1"}, {"0", "1", "1", "0"});
}

PSDGP ChickenDisclosure() {
  SpacePtr m = Messages(2, 2);
  Distribution eta = Table(m, {"1", "0", "0", "0"});
  // Disclose only that (m2, n2) never happens.
  std::vector<FeedbackFunction> feedback{
      FeedbackFunction::Indicator({m->parse_key("m2,n2")})};
  return PSDGP(m, std::move(eta), std::move(feedback));
}

StrategyProfile ChickenSigma() {
  SpacePtr m = Messages(2, 2);
  return StrategyProfile::Pure(m, ChickenGame().action_space(),
                               {{0, 1}, {0, 1}});
}

Distribution ChickenTarget() {
  return Table(ChickenGame().action_space(), {"1", "0", "0", "0"});
}

Distribution ChickenExpectedBelief() {
  return Table(Messages(2, 2), {"1/3", "1/3", "1/3", "0"});
}

Distribution ChickenOptimalCe() {
  return Table(ChickenGame().action_space(), {"1/3", "1/3", "1/3", "0"});
}

PSDGP CoordinationDisclosure() {
  SpacePtr m = Messages(2, 2);
  Distribution eta = Table(m, {"0", "2/3", "1/3", "0"});
  // The four marginal events: rows m1, m2 and columns n1, n2.
  std::vector<FeedbackFunction> feedback{
      FeedbackFunction::Indicator(
          {m->parse_key("m1,n1"), m->parse_key("m1,n2")}),
      FeedbackFunction::Indicator(
          {m->parse_key("m2,n1"), m->parse_key("m2,n2")}),
      FeedbackFunction::Indicator(
          {m->parse_key("m1,n1"), m->parse_key("m2,n1")}),
      FeedbackFunction::Indicator(
          {m->parse_key("m1,n2"), m->parse_key("m2,n2")})};
  return PSDGP(m, std::move(eta), std::move(feedback));
}

StrategyProfile CoordinationSigma() {
  return StrategyProfile::Pure(Messages(2, 2),
                               CoordinationGame().action_space(),
                               {{0, 1}, {0, 1}});
}

Distribution CoordinationTarget() {
  return Table(CoordinationGame().action_space(), {"0", "2/3", "1/3", "0"});
}

Distribution CoordinationExpectedBelief() {
  return Table(Messages(2, 2), {"2/9", "4/9", "1/9", "2/9"});
}

PSDGP DirectDisclosure() {
  SpacePtr m = DirectGame().action_space();
  Distribution eta = Table(
      m, {"1/4", "0", "0", "0", "1/2", "0", "0", "0", "1/4"});
  // One dense row: log2(3)+2 on the high-coordination cells, 1 at (m,m),
  // log2(5)+2 elsewhere.
  const Rat hi = RatFromDouble(std::log2(3.0) + 2.0);
  const Rat lo = RatFromDouble(std::log2(5.0) + 2.0);
  std::vector<Rat> values{hi, hi, lo, hi, Rat(1), lo, lo, lo, lo};
  return PSDGP(m, std::move(eta),
               {FeedbackFunction::Dense(std::move(values))});
}

StrategyProfile DirectSigma() {
  return StrategyProfile::Obedient(DirectGame().action_space());
}

Distribution DirectTarget() {
  return Table(DirectGame().action_space(),
               {"1/4", "0", "0", "0", "1/2", "0", "0", "0", "1/4"});
}

Distribution DirectExpectedBelief() {
  return Table(DirectGame().action_space(),
               {"1/12", "1/12", "1/20", "1/12", "1/2", "1/20", "1/20", "1/20",
                "1/20"});
}

PSDGP PenniesLargeDisclosure() {
  SpacePtr m = Messages(3, 3);
  std::vector<Rat> eta(9, Rat(0));
  eta[m->parse_key("m1,n1")] = 1;
  return PSDGP(m, Distribution::Exact(m, std::move(eta)), {});
}

StrategyProfile PenniesLargeSigma() {
  return StrategyProfile::Pure(Messages(3, 3),
                               MatchingPennies().action_space(),
                               {{0, 1, 1}, {0, 1, 1}});
}

Distribution PenniesLargeTarget() {
  return Table(MatchingPennies().action_space(), {"1", "0", "0", "0"});
}

Distribution PenniesUniqueCe() {
  return Table(MatchingPennies().action_space(),
               {"1/9", "2/9", "2/9", "4/9"});
}

PSDGP CyclicDisclosure() {
  SpacePtr m = Messages(4, 4);
  std::vector<Rat> eta(16, Rat(0));
  eta[m->parse_key("m1,n1")] = RatFromString("1/3");
  eta[m->parse_key("m1,n3")] = RatFromString("1/3");
  eta[m->parse_key("m3,n1")] = RatFromString("1/3");
  std::vector<FeedbackFunction> feedback{
      FeedbackFunction::Indicator({m->parse_key("m1,n2")}),
      FeedbackFunction::Indicator({m->parse_key("m2,n1")}),
      FeedbackFunction::Indicator({m->parse_key("m4,n1")}),
      FeedbackFunction::Indicator({m->parse_key("m3,n2")})};
  return PSDGP(m, Distribution::Exact(m, std::move(eta)),
               std::move(feedback));
}

StrategyProfile CyclicSigma() {
  return StrategyProfile::Pure(Messages(4, 4), CyclicGame().action_space(),
                               {{0, 0, 1, 1}, {0, 0, 1, 1}});
}

Distribution CyclicTarget() {
  return Table(CyclicGame().action_space(), {"1/3", "1/3", "1/3", "0"});
}

Distribution CyclicExpectedBelief() {
  SpacePtr m = Messages(4, 4);
  std::vector<Rat> q(16, Rat(0));
  const Rat w = RatFromString("1/12");
  for (const char* key :
       {"m1,n1", "m1,n3", "m1,n4", "m2,n2", "m2,n3", "m2,n4", "m3,n1",
        "m3,n3", "m3,n4", "m4,n2", "m4,n3", "m4,n4"}) {
    q[m->parse_key(key)] = w;
  }
  return Distribution::Exact(m, std::move(q));
}

BeliefConstruction ConstructionA() {
  BeliefConstruction c;
  c.name = "construction-a";
  c.action_space = MakeSpace({"P1", "P2"}, {{"a1", "a2"}, {"b1", "b2"}});
  c.target_belief = Table(c.action_space, {"1/4", "1/4", "2/4", "0"});
  SpacePtr m = Messages(3, 2);
  c.message_belief = Table(m, {"1/4", "1/4", "1/4", "0", "1/4", "0"});
  c.feedback = {FeedbackFunction::Indicator({m->parse_key("m2,n2")}),
                FeedbackFunction::Indicator({m->parse_key("m3,n2")})};
  c.sigma = StrategyProfile::Pure(m, c.action_space, {{0, 1, 1}, {0, 1}});
  return c;
}

BeliefConstruction ConstructionB() {
  BeliefConstruction c;
  c.name = "construction-b";
  c.action_space =
      MakeSpace({"P1", "P2"}, {{"a1", "a2"}, {"b1", "b2", "b3"}});
  c.target_belief =
      Table(c.action_space, {"2/5", "1/5", "0", "1/5", "0", "1/5"});
  SpacePtr m = Messages(4, 6);
  std::vector<Rat> q(24, Rat(0));
  const Rat w = RatFromString("1/10");
  for (const char* key : {"m1,n1", "m1,n2", "m1,n3", "m2,n1", "m2,n2",
                          "m2,n4", "m3,n1", "m3,n5", "m4,n2", "m4,n6"}) {
    q[m->parse_key(key)] = w;
  }
  c.message_belief = Distribution::Exact(m, std::move(q));
  for (int cell = 0; cell < 24; ++cell) {
    if (!c.message_belief.in_support(cell)) {
      c.feedback.push_back(FeedbackFunction::Indicator({cell}));
    }
  }
  c.sigma = StrategyProfile::Pure(m, c.action_space,
                                  {{0, 0, 1, 1}, {0, 0, 1, 1, 2, 2}});
  return c;
}

BeliefConstruction ConstructionC() {
  BeliefConstruction c;
  c.name = "construction-c";
  c.action_space = MakeSpace({"P1", "P2"}, {{"a1", "a2"}, {"b1", "b2"}});
  c.target_belief = Table(c.action_space, {"2/5", "0", "0", "3/5"});
  SpacePtr m = Messages(5, 5);
  std::vector<Rat> q(25, Rat(0));
  for (int i = 0; i < 5; ++i) q[i * 5 + i] = RatFromString("1/5");
  c.message_belief = Distribution::Exact(m, std::move(q));
  for (int cell = 0; cell < 25; ++cell) {
    if (cell / 5 != cell % 5) {
      c.feedback.push_back(FeedbackFunction::Indicator({cell}));
    }
  }
  c.sigma = StrategyProfile::Pure(m, c.action_space,
                                  {{0, 0, 1, 1, 1}, {0, 0, 1, 1, 1}});
  return c;
}

}  // namespace catalog
}  // namespace coherent
