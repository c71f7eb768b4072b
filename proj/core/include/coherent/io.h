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

#ifndef COHERENT_IO_H_
#define COHERENT_IO_H_

#include <string>

#include "coherent/game.h"
#include "coherent/mechanism.h"
#include "coherent/psdgp.h"
#include "coherent/strategy.h"

namespace coherent {

// JSON file formats, schema-versioned ("game/1", "dgp/1", "strategy/1",
// "target/1", "mechanism/1"). Rationals are "num/den" strings or decimal
// literals (parsed exactly); float tables carry "mode": "float" and use
// shortest round-trip decimals. Dense feedback values may be written as
// {"expr": "log2(3)+2"} and are evaluated at parse time.

Game ParseGame(const std::string& text);
PSDGP ParseDgp(const std::string& text);
StrategyProfile ParseStrategy(const std::string& text, SpacePtr messages,
                              SpacePtr actions);
Distribution ParseDistributionFile(const std::string& text, SpacePtr space,
                                   const std::string& expected_schema);

// Self-contained mechanism bundle: the pieces cmd_check needs to re-verify.
struct MechanismFile {
  SpacePtr action_space;
  PSDGP dgp;
  StrategyProfile sigma;
  Distribution target;
  Distribution predicted_belief;
  std::string kind;
  Rat epsilon;
};

bool IsMechanismFile(const std::string& text);
MechanismFile ParseMechanism(const std::string& text);

std::string SerializeGame(const Game& game);
std::string SerializeDgp(const PSDGP& dgp);
std::string SerializeStrategy(const StrategyProfile& sigma);
std::string SerializeTarget(const Distribution& target);
std::string SerializeMechanism(const ConstructedMechanism& mechanism);

std::string Sha256Hex(const std::string& bytes);
// Shortest decimal that round-trips to the same double.
std::string FormatDouble(double value);

}  // namespace coherent

#endif  // COHERENT_IO_H_
