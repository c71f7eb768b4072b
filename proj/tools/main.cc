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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "coherent/errors.h"
#include "commands.h"

namespace {

using coherent::cli::CommandOptions;
using coherent::cli::Json;

// Exit codes: 0 success, 1 generic failure (e.g. example mismatch),
// 2 input error, 3 rejection, 4 resource budget, 5 non-convergence.
constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInputError = 2;
constexpr int kRejection = 3;
constexpr int kBudget = 4;
constexpr int kNoConvergence = 5;

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw coherent::InputError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void Emit(const Json& report, const std::string& format) {
  if (format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << coherent::cli::RenderText(report);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "coherent: disclosure mechanisms and maximum-entropy beliefs in "
      "finite games"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "Output format: json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  CommandOptions options;
  std::string eps_text = "1/100";
  std::string game_path, dgp_path, sigma_path, target_path, out_path, corrupt;

  auto* analyze = app.add_subcommand(
      "analyze", "Equilibrium polytope summary of a game file");
  analyze->add_option("game", game_path, "game/1 file ('-' for stdin)")
      ->required();
  analyze->add_option("--budget", options.budget, "vertex enumeration budget");

  auto* maxent = app.add_subcommand(
      "maxent", "Maximum-entropy belief of a disclosure file");
  maxent->add_option("dgp", dgp_path, "dgp/1 file ('-' for stdin)")
      ->required();
  double maxent_tol = 1e-10;
  maxent->add_option("--tol", maxent_tol, "solver tolerance")
      ->capture_default_str();

  auto* check = app.add_subcommand(
      "check", "Verify an implementation bundle");
  check->add_option("game", game_path, "game/1 file")->required();
  check->add_option("dgp", dgp_path, "dgp/1 or mechanism/1 file")->required();
  check->add_option("sigma", sigma_path,
                    "strategy/1 file (defaults to the mechanism's)");
  check->add_option("target", target_path,
                    "target/1 file (defaults to the mechanism's)");
  check->add_option("--tol", options.tol, "verification tolerance");

  auto* construct = app.add_subcommand(
      "construct", "Build a disclosure mechanism for a jointly coherent target");
  construct->add_option("game", game_path, "game/1 file")->required();
  construct->add_option("target", target_path, "target/1 file")->required();
  construct->add_option("--eps", eps_text, "incentive slack bound (rational)");
  construct->add_option("--budget", options.budget, "vertex budget");
  construct->add_option("-o,--out", out_path,
                        "mechanism output file (default mechanism.json)");

  auto* direct = app.add_subcommand(
      "direct", "Search for a canonical (direct) implementation witness");
  direct->add_option("game", game_path, "game/1 file")->required();
  direct->add_option("target", target_path, "target/1 file")->required();
  direct->add_option("--budget", options.budget, "vertex budget");
  direct->add_option("--seed", options.seed, "search seed");
  direct->add_option("--tol", options.tol, "acceptance tolerance");

  auto* examples = app.add_subcommand(
      "examples", "Run the embedded worked-example suite");
  examples->add_option("--tol", options.tol, "entropy tolerance");
  examples
      ->add_option("--corrupt", corrupt,
                   "perturb the named expected table (harness self-test)")
      ->group("");  // hidden

  CLI11_PARSE(app, argc, argv);

  try {
    options.eps = coherent::RatFromString(eps_text);

    if (*analyze) {
      const std::string text = ReadInput(game_path);
      const coherent::Game game = coherent::ParseGame(text);
      Emit(coherent::cli::RunAnalyze(
               game, coherent::cli::DigestMap({{"game", text}}), options),
           format);
      return kOk;
    }
    if (*maxent) {
      const std::string text = ReadInput(dgp_path);
      const coherent::PSDGP dgp = coherent::ParseDgp(text);
      options.solver_tol = maxent_tol;
      Emit(coherent::cli::RunMaxent(
               dgp, coherent::cli::DigestMap({{"dgp", text}}), options),
           format);
      return kOk;
    }
    if (*check) {
      const std::string game_text = ReadInput(game_path);
      const coherent::Game game = coherent::ParseGame(game_text);
      const std::string dgp_text = ReadInput(dgp_path);
      std::vector<std::pair<std::string, std::string>> inputs{
          {"game", game_text}, {"dgp", dgp_text}};
      coherent::PSDGP dgp = coherent::ParseDgp(dgp_text);
      coherent::StrategyProfile sigma;
      coherent::Distribution target;
      if (coherent::IsMechanismFile(dgp_text) && sigma_path.empty()) {
        const coherent::MechanismFile mech =
            coherent::ParseMechanism(dgp_text);
        sigma = mech.sigma;
        target = mech.target;
      } else {
        if (sigma_path.empty() || target_path.empty()) {
          throw coherent::InputError(
              "check needs sigma and target files unless a mechanism file "
              "is given");
        }
        const std::string sigma_text = ReadInput(sigma_path);
        const std::string target_text = ReadInput(target_path);
        inputs.push_back({"sigma", sigma_text});
        inputs.push_back({"target", target_text});
        sigma = coherent::ParseStrategy(sigma_text, dgp.space,
                                        game.action_space());
        target = coherent::ParseDistributionFile(
            target_text, game.action_space(), "target/1");
      }
      const Json report = coherent::cli::RunCheck(
          game, dgp, sigma, target, coherent::cli::DigestMap(inputs), options);
      Emit(report, format);
      return report["results"]["pass"].get<bool>() ? kOk : kFailure;
    }
    if (*construct) {
      const std::string game_text = ReadInput(game_path);
      const std::string target_text = ReadInput(target_path);
      const coherent::Game game = coherent::ParseGame(game_text);
      const coherent::Distribution target = coherent::ParseDistributionFile(
          target_text, game.action_space(), "target/1");
      coherent::cli::ConstructOutcome outcome = coherent::cli::RunConstruct(
          game, target,
          coherent::cli::DigestMap({{"game", game_text},
                                    {"target", target_text}}),
          options);
      const std::string path = out_path.empty() ? "mechanism.json" : out_path;
      const std::string mech_text =
          coherent::SerializeMechanism(outcome.mechanism);
      if (path == "-") {
        std::cout << mech_text << "\n";
      } else {
        std::ofstream out(path, std::ios::binary);
        if (!out) {
          throw coherent::InputError("cannot write mechanism file: " + path);
        }
        out << mech_text;
        outcome.report["results"]["mechanism_file"] = path;
      }
      Emit(outcome.report, format);
      return kOk;
    }
    if (*direct) {
      const std::string game_text = ReadInput(game_path);
      const std::string target_text = ReadInput(target_path);
      const coherent::Game game = coherent::ParseGame(game_text);
      const coherent::Distribution target = coherent::ParseDistributionFile(
          target_text, game.action_space(), "target/1");
      Emit(coherent::cli::RunDirect(
               game, target,
               coherent::cli::DigestMap(
                   {{"game", game_text}, {"target", target_text}}),
               options),
           format);
      return kOk;
    }
    if (*examples) {
      const coherent::cli::ExamplesOutcome outcome =
          coherent::cli::RunExamples(options.tol, corrupt);
      if (format == "json") {
        Emit(outcome.report, format);
      } else {
        for (const auto& entry : outcome.report["results"]) {
          std::cout << (entry["pass"].get<bool>() ? "PASS " : "FAIL ")
                    << entry["figure"].get<std::string>();
          if (entry["degraded"].get<bool>()) std::cout << "  [degraded]";
          const std::string detail = entry["detail"].get<std::string>();
          if (!detail.empty()) std::cout << "  " << detail;
          std::cout << "\n";
        }
        std::cout << (outcome.all_pass ? "ALL EXAMPLES PASS"
                                       : "EXAMPLE MISMATCHES PRESENT")
                  << "\n";
      }
      return outcome.all_pass ? kOk : kFailure;
    }
  } catch (const coherent::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const coherent::RejectionError& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kRejection;
  } catch (const coherent::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const coherent::ConvergenceError& e) {
    std::cerr << "no convergence: " << e.what() << "\n";
    return kNoConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}
