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

#include "coherent/io.h"

#include <openssl/evp.h>

#include <charconv>
#include <cstdlib>

#include <json.hpp>

#include "coherent/errors.h"
#include "coherent/expr.h"

namespace coherent {
namespace {

using Json = nlohmann::ordered_json;

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Recover line/column from the byte offset for a usable message.
    size_t line = 1, col = 1;
    for (size_t i = 0; i < text.size() && i + 1 < e.byte; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError("JSON parse error at line " + std::to_string(line) +
                     ", column " + std::to_string(col) + ": " + e.what());
  }
}

void ExpectSchema(const Json& j, const std::string& schema) {
  if (!j.is_object() || !j.contains("schema") || !j["schema"].is_string()) {
    throw InputError("missing schema field (expected \"" + schema + "\")");
  }
  if (j["schema"].get<std::string>() != schema) {
    throw InputError("schema is '" + j["schema"].get<std::string>() +
                     "', expected '" + schema + "'");
  }
}

std::string RequireString(const Json& j, const std::string& context) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InputError("expected a string value for " + context);
}

Rat ValueToRat(const Json& j, const std::string& context) {
  if (j.is_object() && j.contains("expr")) {
    return EvalExpr(RequireString(j["expr"], context + ".expr"));
  }
  return RatFromString(RequireString(j, context));
}

std::vector<std::string> StringList(const Json& j, const std::string& context) {
  if (!j.is_array()) throw InputError(context + " must be a list");
  std::vector<std::string> out;
  for (const auto& v : j) out.push_back(RequireString(v, context));
  return out;
}

// Shared layout of game and dgp headers: an ordered player list plus a
// per-player label list.
SpacePtr SpaceFromJson(const Json& j, const std::string& label_field) {
  const std::vector<std::string> players =
      StringList(j.at("players"), "players");
  if (!j.contains(label_field) || !j[label_field].is_object()) {
    throw InputError("missing " + label_field + " object");
  }
  std::vector<std::vector<std::string>> labels;
  for (const auto& p : players) {
    if (!j[label_field].contains(p)) {
      throw InputError(label_field + " missing for player " + p);
    }
    labels.push_back(StringList(j[label_field][p], label_field + "." + p));
  }
  return MakeSpace(players, std::move(labels));
}

Distribution WeightsToDistribution(const Json& weights, const SpacePtr& space,
                                   bool float_mode,
                                   const std::string& context) {
  if (!weights.is_object()) throw InputError(context + " must be an object");
  if (float_mode) {
    std::vector<double> w(space->size(), 0.0);
    for (const auto& [key, value] : weights.items()) {
      w[space->parse_key(key)] =
          std::strtod(RequireString(value, context).c_str(), nullptr);
    }
    return Distribution::Float(space, std::move(w));
  }
  std::vector<Rat> w(space->size(), Rat(0));
  for (const auto& [key, value] : weights.items()) {
    w[space->parse_key(key)] = ValueToRat(value, context);
  }
  return Distribution::Exact(space, std::move(w));
}

Json DistributionToWeights(const Distribution& d) {
  Json weights = Json::object();
  for (int i = 0; i < d.size(); ++i) {
    if (!d.in_support(i)) continue;
    if (d.exact()) {
      weights[d.space()->key_of(i)] = RatToString(d.r(i));
    } else {
      weights[d.space()->key_of(i)] = FormatDouble(d.f(i));
    }
  }
  return weights;
}

void AppendSpaceHeader(Json& j, const ProductSpace& space,
                       const std::string& label_field) {
  j["players"] = space.axis_names();
  Json labels = Json::object();
  for (int i = 0; i < space.num_axes(); ++i) {
    labels[space.axis_name(i)] = space.axis_labels(i);
  }
  j[label_field] = std::move(labels);
}

Json FeedbackToJson(const FeedbackFunction& f, const ProductSpace& space) {
  Json j = Json::object();
  if (f.indicator()) {
    j["kind"] = "indicator";
    Json cells = Json::array();
    for (int c : f.cells()) cells.push_back(space.key_of(c));
    j["cells"] = std::move(cells);
  } else {
    j["kind"] = "dense";
    Json values = Json::object();
    for (int m = 0; m < space.size(); ++m) {
      values[space.key_of(m)] = RatToString(f.value_at(m));
    }
    j["values"] = std::move(values);
  }
  return j;
}

FeedbackFunction FeedbackFromJson(const Json& j, const ProductSpace& space) {
  const std::string kind = RequireString(j.at("kind"), "feedback.kind");
  if (kind == "indicator") {
    std::vector<int> cells;
    for (const auto& key : j.at("cells")) {
      cells.push_back(space.parse_key(RequireString(key, "feedback.cells")));
    }
    return FeedbackFunction::Indicator(std::move(cells));
  }
  if (kind == "dense") {
    std::vector<Rat> values(space.size(), Rat(0));
    for (const auto& [key, value] : j.at("values").items()) {
      values[space.parse_key(key)] = ValueToRat(value, "feedback.values");
    }
    return FeedbackFunction::Dense(std::move(values));
  }
  throw InputError("unknown feedback kind '" + kind + "'");
}

Json DgpToJson(const PSDGP& dgp) {
  Json j = Json::object();
  j["schema"] = "dgp/1";
  AppendSpaceHeader(j, *dgp.space, "messages");
  if (!dgp.eta.exact()) j["mode"] = "float";
  j["eta"] = DistributionToWeights(dgp.eta);
  Json feedback = Json::array();
  for (const auto& f : dgp.feedback) {
    feedback.push_back(FeedbackToJson(f, *dgp.space));
  }
  j["feedback"] = std::move(feedback);
  return j;
}

PSDGP DgpFromJson(const Json& j) {
  SpacePtr space = SpaceFromJson(j, "messages");
  const bool float_mode =
      j.contains("mode") && j["mode"].get<std::string>() == "float";
  Distribution eta =
      WeightsToDistribution(j.at("eta"), space, float_mode, "eta");
  std::vector<FeedbackFunction> feedback;
  if (j.contains("feedback")) {
    for (const auto& f : j["feedback"]) {
      feedback.push_back(FeedbackFromJson(f, *space));
    }
  }
  return PSDGP(std::move(space), std::move(eta), std::move(feedback));
}

Json StrategyToJson(const StrategyProfile& sigma) {
  const ProductSpace& msg = *sigma.message_space();
  const ProductSpace& act = *sigma.action_space();
  Json strategies = Json::object();
  for (int i = 0; i < msg.num_axes(); ++i) {
    Json rows = Json::object();
    for (int m = 0; m < msg.axis_size(i); ++m) {
      const int pure = sigma.pure_action(i, m);
      if (pure >= 0) {
        rows[msg.axis_labels(i)[m]] = act.axis_labels(i)[pure];
      } else {
        Json mix = Json::object();
        for (int a = 0; a < act.axis_size(i); ++a) {
          if (sigma.prob(i, m, a) != 0) {
            mix[act.axis_labels(i)[a]] = RatToString(sigma.prob(i, m, a));
          }
        }
        rows[msg.axis_labels(i)[m]] = std::move(mix);
      }
    }
    strategies[msg.axis_name(i)] = std::move(rows);
  }
  Json j = Json::object();
  j["schema"] = "strategy/1";
  j["strategies"] = std::move(strategies);
  return j;
}

StrategyProfile StrategyFromJson(const Json& j, SpacePtr messages,
                                 SpacePtr actions) {
  if (!j.contains("strategies") || !j["strategies"].is_object()) {
    throw InputError("missing strategies object");
  }
  const Json& strategies = j["strategies"];
  std::vector<std::vector<std::vector<Rat>>> rows(messages->num_axes());
  for (int i = 0; i < messages->num_axes(); ++i) {
    const std::string& player = messages->axis_name(i);
    if (!strategies.contains(player)) {
      throw InputError("strategy missing for player " + player);
    }
    const Json& per_msg = strategies[player];
    rows[i].resize(messages->axis_size(i));
    for (int m = 0; m < messages->axis_size(i); ++m) {
      const std::string& label = messages->axis_labels(i)[m];
      if (!per_msg.contains(label)) {
        throw InputError("strategy of player " + player +
                         " undefined at message " + label);
      }
      std::vector<Rat> row(actions->axis_size(i), Rat(0));
      const Json& image = per_msg[label];
      if (image.is_string()) {
        const int a = actions->label_index(i, image.get<std::string>());
        if (a < 0) {
          throw InputError("unknown action '" + image.get<std::string>() +
                           "' for player " + player);
        }
        row[a] = 1;
      } else if (image.is_object()) {
        for (const auto& [action, weight] : image.items()) {
          const int a = actions->label_index(i, action);
          if (a < 0) {
            throw InputError("unknown action '" + action + "' for player " +
                             player);
          }
          row[a] = ValueToRat(weight, "strategy weight");
        }
      } else {
        throw InputError("strategy image must be an action or a mixture");
      }
      rows[i][m] = std::move(row);
    }
  }
  return StrategyProfile(std::move(messages), std::move(actions),
                         std::move(rows));
}

}  // namespace

Game ParseGame(const std::string& text) {
  const Json j = ParseJson(text);
  ExpectSchema(j, "game/1");
  SpacePtr space = SpaceFromJson(j, "actions");
  const std::vector<std::string> players =
      StringList(j.at("players"), "players");
  std::vector<std::vector<Rat>> payoffs;
  if (!j.contains("payoffs") || !j["payoffs"].is_object()) {
    throw InputError("missing payoffs object");
  }
  for (const auto& p : players) {
    if (!j["payoffs"].contains(p)) {
      throw InputError("payoffs missing for player " + p);
    }
    std::vector<Rat> tensor(space->size(), Rat(0));
    std::vector<bool> seen(space->size(), false);
    for (const auto& [key, value] : j["payoffs"][p].items()) {
      const int idx = space->parse_key(key);
      tensor[idx] = ValueToRat(value, "payoffs." + p);
      seen[idx] = true;
    }
    for (int a = 0; a < space->size(); ++a) {
      if (!seen[a]) {
        throw InputError("payoff of player " + p + " missing at profile " +
                         space->key_of(a));
      }
    }
    payoffs.push_back(std::move(tensor));
  }
  std::vector<std::vector<std::string>> actions;
  for (int i = 0; i < space->num_axes(); ++i) {
    actions.push_back(space->axis_labels(i));
  }
  return Game(players, std::move(actions), std::move(payoffs));
}

PSDGP ParseDgp(const std::string& text) {
  const Json j = ParseJson(text);
  if (j.is_object() && j.contains("schema") && j["schema"].is_string() &&
      j["schema"].get<std::string>() == "mechanism/1") {
    return ParseMechanism(text).dgp;
  }
  ExpectSchema(j, "dgp/1");
  return DgpFromJson(j);
}

StrategyProfile ParseStrategy(const std::string& text, SpacePtr messages,
                              SpacePtr actions) {
  const Json j = ParseJson(text);
  if (j.is_object() && j.contains("schema") && j["schema"].is_string() &&
      j["schema"].get<std::string>() == "mechanism/1") {
    return ParseMechanism(text).sigma;
  }
  ExpectSchema(j, "strategy/1");
  return StrategyFromJson(j, std::move(messages), std::move(actions));
}

Distribution ParseDistributionFile(const std::string& text, SpacePtr space,
                                   const std::string& expected_schema) {
  const Json j = ParseJson(text);
  if (j.is_object() && j.contains("schema") && j["schema"].is_string() &&
      j["schema"].get<std::string>() == "mechanism/1" &&
      expected_schema == "target/1") {
    return ParseMechanism(text).target;
  }
  ExpectSchema(j, expected_schema);
  const bool float_mode =
      j.contains("mode") && j["mode"].get<std::string>() == "float";
  return WeightsToDistribution(j.at("weights"), space, float_mode, "weights");
}

bool IsMechanismFile(const std::string& text) {
  try {
    const Json j = Json::parse(text, nullptr, false);
    return j.is_object() && j.contains("schema") && j["schema"].is_string() &&
           j["schema"].get<std::string>() == "mechanism/1";
  } catch (...) {
    return false;
  }
}

MechanismFile ParseMechanism(const std::string& text) {
  const Json j = ParseJson(text);
  ExpectSchema(j, "mechanism/1");
  MechanismFile out{SpaceFromJson(j, "actions"),
                    DgpFromJson(j.at("dgp")),
                    StrategyProfile(),
                    Distribution(),
                    Distribution(),
                    RequireString(j.at("kind"), "kind"),
                    RatFromString(RequireString(j.at("epsilon"), "epsilon"))};
  out.sigma = StrategyFromJson(j.at("strategy"), out.dgp.space,
                               out.action_space);
  const bool target_float = j.contains("target_mode") &&
                            j["target_mode"].get<std::string>() == "float";
  out.target = WeightsToDistribution(j.at("target"), out.action_space,
                                     target_float, "target");
  out.predicted_belief = WeightsToDistribution(j.at("predicted_belief"),
                                               out.dgp.space, false,
                                               "predicted_belief");
  return out;
}

std::string SerializeGame(const Game& game) {
  Json j = Json::object();
  j["schema"] = "game/1";
  AppendSpaceHeader(j, *game.action_space(), "actions");
  Json payoffs = Json::object();
  for (int i = 0; i < game.num_players(); ++i) {
    Json tensor = Json::object();
    for (int a = 0; a < game.num_profiles(); ++a) {
      tensor[game.action_space()->key_of(a)] = RatToString(game.payoff(i, a));
    }
    payoffs[game.players()[i]] = std::move(tensor);
  }
  j["payoffs"] = std::move(payoffs);
  return j.dump(2);
}

std::string SerializeDgp(const PSDGP& dgp) { return DgpToJson(dgp).dump(2); }

std::string SerializeStrategy(const StrategyProfile& sigma) {
  return StrategyToJson(sigma).dump(2);
}

std::string SerializeTarget(const Distribution& target) {
  Json j = Json::object();
  j["schema"] = "target/1";
  if (!target.exact()) j["mode"] = "float";
  j["weights"] = DistributionToWeights(target);
  return j.dump(2);
}

std::string SerializeMechanism(const ConstructedMechanism& mechanism) {
  Json j = Json::object();
  j["schema"] = "mechanism/1";
  j["kind"] = mechanism.kind == MechanismKind::kHypercube ? "hypercube"
                                                          : "marginal-product";
  j["epsilon"] = RatToString(mechanism.epsilon);
  const ProductSpace& act = *mechanism.sigma.action_space();
  j["players"] = act.axis_names();
  Json actions = Json::object();
  for (int i = 0; i < act.num_axes(); ++i) {
    actions[act.axis_name(i)] = act.axis_labels(i);
  }
  j["actions"] = std::move(actions);
  j["dgp"] = DgpToJson(mechanism.dgp);
  j["strategy"] = StrategyToJson(mechanism.sigma);
  if (!mechanism.target.exact()) j["target_mode"] = "float";
  j["target"] = DistributionToWeights(mechanism.target);
  j["predicted_belief"] = DistributionToWeights(mechanism.predicted_belief);
  Json blocks = Json::object();
  for (int i = 0; i < act.num_axes(); ++i) {
    Json per_action = Json::object();
    for (int a = 0; a < act.axis_size(i); ++a) {
      const auto& [begin, end] = mechanism.blocks[i][a];
      per_action[act.axis_labels(i)[a]] = Json::array({begin, end});
    }
    blocks[act.axis_name(i)] = std::move(per_action);
  }
  j["blocks"] = std::move(blocks);
  return j.dump(2);
}

std::string Sha256Hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw InternalError("sha256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

std::string FormatDouble(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

}  // namespace coherent
