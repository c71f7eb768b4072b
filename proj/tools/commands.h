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

#ifndef COHERENT_TOOLS_COMMANDS_H_
#define COHERENT_TOOLS_COMMANDS_H_

#include <optional>
#include <string>

#include <json.hpp>

#include "coherent/direct.h"
#include "coherent/game.h"
#include "coherent/io.h"
#include "coherent/mechanism.h"

namespace coherent::cli {

using Json = nlohmann::ordered_json;

struct CommandOptions {
  double tol = 1e-9;         // verification / acceptance tolerance
  double solver_tol = 1e-10; // entropy solver residual tolerance
  Rat eps = Rat(1, 100);
  int budget = 10000;
  unsigned seed = 0;
};

// Digest map of the raw input files, keyed by role.
Json DigestMap(
    const std::vector<std::pair<std::string, std::string>>& inputs);

Json RunAnalyze(const Game& game, const Json& digests,
                const CommandOptions& options);
Json RunMaxent(const PSDGP& dgp, const Json& digests,
               const CommandOptions& options);
Json RunCheck(const Game& game, const PSDGP& dgp, const StrategyProfile& sigma,
              const Distribution& target, const Json& digests,
              const CommandOptions& options);

struct ConstructOutcome {
  Json report;
  ConstructedMechanism mechanism;
};
ConstructOutcome RunConstruct(const Game& game, const Distribution& target,
                              const Json& digests,
                              const CommandOptions& options);

Json RunDirect(const Game& game, const Distribution& target,
               const Json& digests, const CommandOptions& options);

struct ExamplesOutcome {
  Json report;
  bool all_pass = false;
  bool degraded = false;
};
// Runs the embedded worked-example suite at its stated tolerances.
// `corrupt` names a figure whose expected table is perturbed first (harness
// self-test). A loose `tol` (> 1e-6) flags the run as degraded.
ExamplesOutcome RunExamples(double tol, const std::string& corrupt);

std::string RenderText(const Json& report);

}  // namespace coherent::cli

#endif  // COHERENT_TOOLS_COMMANDS_H_
