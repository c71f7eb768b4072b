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

#include "commands.h"

#include <cmath>
#include <sstream>

#include "coherent/catalog.h"
#include "coherent/entropy.h"
#include "coherent/errors.h"
#include "coherent/maxent.h"
#include "coherent/verifier.h"

namespace coherent::cli {
namespace {

Json ReportSkeleton(const std::string& command, const Json& digests) {
  Json j = Json::object();
  j["schema"] = "report/1";
  j["command"] = command;
  j["inputs_digest"] = digests;
  j["results"] = Json::object();
  j["diagnostics"] = Json::object();
  return j;
}

Json Weights(const Distribution& d) {
  Json w = Json::object();
  for (int i = 0; i < d.size(); ++i) {
    if (!d.in_support(i)) continue;
    w[d.space()->key_of(i)] =
        d.exact() ? Json(RatToString(d.r(i))) : Json(FormatDouble(d.f(i)));
  }
  return w;
}

Json CertificateJson(const ImplementationCertificate& cert) {
  Json j = Json::object();
  j["pass"] = cert.pass;
  j["epsilon"] = cert.exact_epsilon ? Json(RatToString(cert.epsilon_exact))
                                    : Json(FormatDouble(cert.epsilon));
  Json conditions = Json::object();
  conditions["belief"] =
      Json{{"pass", cert.belief_condition.pass},
           {"detail", cert.belief_condition.detail}};
  conditions["incentives"] =
      Json{{"pass", cert.incentive_condition.pass},
           {"detail", cert.incentive_condition.detail}};
  conditions["pushforward"] =
      Json{{"pass", cert.pushforward_condition.pass},
           {"detail", cert.pushforward_condition.detail}};
  j["conditions"] = std::move(conditions);
  j["worst_slack"] = Json{{"player", cert.worst.player},
                          {"message", cert.worst.message},
                          {"deviation", cert.worst.deviation},
                          {"slack", cert.worst.slack}};
  j["belief"] = Weights(cert.belief);
  j["outcome"] = Weights(cert.outcome);
  j["kkt"] = Json{{"primal", cert.kkt.primal_residual},
                  {"stationarity", cert.kkt.stationarity_residual},
                  {"eta_identity", cert.kkt.eta_identity}};
  return j;
}

}  // namespace

Json DigestMap(
    const std::vector<std::pair<std::string, std::string>>& inputs) {
  Json j = Json::object();
  for (const auto& [role, text] : inputs) j[role] = Sha256Hex(text);
  return j;
}

Json RunAnalyze(const Game& game, const Json& digests,
                const CommandOptions& options) {
  Json report = ReportSkeleton("analyze", digests);
  Json& results = report["results"];
  results["players"] = game.players();
  results["profiles"] = game.num_profiles();

  const HPolytope poly = ce_polytope(game);
  results["ce_polytope"] =
      Json{{"inequalities", poly.inequalities.size()},
           {"equalities", poly.equalities.size()},
           {"nonnegativity", poly.dim}};

  VertexEnumOptions enum_options;
  enum_options.vertex_budget = options.budget;
  bool budget_exceeded = false;
  std::vector<std::vector<Rat>> vertices;
  try {
    vertices = enumerate_extreme_points(poly, enum_options);
  } catch (const BudgetError&) {
    budget_exceeded = true;
  }
  results["vertex_budget_exceeded"] = budget_exceeded;
  if (!budget_exceeded) {
    results["vertex_count"] = vertices.size();
    Json list = Json::array();
    for (size_t v = 0; v < vertices.size() && v < 64; ++v) {
      list.push_back(Weights(
          Distribution::Exact(game.action_space(), vertices[v])));
    }
    results["vertices"] = std::move(list);
  }

  Json support = Json::array();
  for (int a : jointly_coherent_support(game)) {
    support.push_back(game.action_space()->key_of(a));
  }
  results["jointly_coherent_support"] = std::move(support);

  if (!budget_exceeded) {
    std::vector<Rat> avg(game.num_profiles(), Rat(0));
    for (const auto& v : vertices) {
      for (int a = 0; a < game.num_profiles(); ++a) avg[a] += v[a];
    }
    for (Rat& w : avg) w /= Rat(static_cast<unsigned long>(vertices.size()));
    results["qbar"] =
        Weights(Distribution::Exact(game.action_space(), std::move(avg)));
    const UniqueCeConstraint unique =
        unique_ce_linear_constraint(game, enum_options);
    if (unique.unique) {
      Json u = Json::object();
      u["ce"] = Weights(*unique.ce);
      if (unique.integer_form) {
        Json coeffs = Json::object();
        for (int a = 0; a < game.num_profiles(); ++a) {
          if (unique.integer_form->coefficients[a] != 0 ||
              unique.ce->r(a) > 0) {
            coeffs[game.action_space()->key_of(a)] =
                unique.integer_form->coefficients[a].get_str();
          }
        }
        u["integer_constraint"] =
            Json{{"coefficients", std::move(coeffs)},
                 {"rhs", RatToString(unique.integer_form->rhs)},
                 {"vacuous", unique.integer_form->vacuous}};
      }
      results["unique_ce"] = std::move(u);
    } else {
      results["unique_ce"] = nullptr;
    }
  }
  report["diagnostics"] =
      Json{{"vertex_budget", options.budget}, {"tolerance", options.tol}};
  return report;
}

Json RunMaxent(const PSDGP& dgp, const Json& digests,
               const CommandOptions& options) {
  Json report = ReportSkeleton("maxent", digests);
  const MomentConstraints constraints = build_constraints(dgp);
  MaxEntOptions mo;
  mo.tol = options.solver_tol;
  const MaxEntSolution sol = max_entropy(constraints, mo);
  const KktReport kkt = verify_kkt(sol, constraints);

  Json& results = report["results"];
  results["mode"] = sol.exact ? "exact" : "float";
  results["belief"] = Weights(sol.belief);
  results["entropy_nats"] = sol.entropy;
  Json zeros = Json::array();
  for (int m : sol.forced_zeros) zeros.push_back(dgp.space->key_of(m));
  results["forced_zeros"] = std::move(zeros);
  Json duals = Json::object();
  duals["normalization"] = sol.duals.empty() ? 0.0 : sol.duals[0];
  Json rows = Json::array();
  for (size_t k = 0; k < sol.retained_rows.size(); ++k) {
    rows.push_back(Json{{"row", sol.retained_rows[k]},
                        {"lambda", sol.duals[1 + k]}});
  }
  duals["rows"] = std::move(rows);
  results["duals"] = std::move(duals);
  results["kkt"] = Json{{"primal", kkt.primal_residual},
                        {"stationarity", kkt.stationarity_residual},
                        {"eta_identity", kkt.eta_identity}};
  report["diagnostics"] =
      Json{{"iterations", sol.iterations},
           {"tolerance", mo.tol},
           {"log_base",
            "natural (nats); rescaling feedback to another base only "
            "rescales the multipliers"}};
  return report;
}

Json RunCheck(const Game& game, const PSDGP& dgp, const StrategyProfile& sigma,
              const Distribution& target, const Json& digests,
              const CommandOptions& options) {
  Json report = ReportSkeleton("check", digests);
  const ImplementationCertificate cert =
      check_implementation(game, dgp, sigma, target, options.tol);
  report["results"] = CertificateJson(cert);
  report["diagnostics"] = Json{{"tolerance", options.tol}};
  return report;
}

ConstructOutcome RunConstruct(const Game& game, const Distribution& target,
                              const Json& digests,
                              const CommandOptions& options) {
  ImplementOptions io;
  io.enumeration.vertex_budget = options.budget;
  ConstructedMechanism mech =
      implement_jointly_coherent(game, target, options.eps, io);

  Json report = ReportSkeleton("construct", digests);
  Json& results = report["results"];
  results["kind"] = mech.kind == MechanismKind::kHypercube
                        ? "hypercube"
                        : "marginal-product";
  Json counts = Json::array();
  for (int i = 0; i < mech.dgp.space->num_axes(); ++i) {
    counts.push_back(mech.dgp.space->axis_size(i));
  }
  results["message_counts"] = std::move(counts);
  results["cells"] = mech.dgp.space->size();
  results["epsilon"] = RatToString(mech.epsilon);
  results["feedback_rows"] = mech.dgp.feedback.size();
  results["belief_support"] = mech.predicted_belief.support().size();
  results["verified"] = true;
  report["diagnostics"] = Json{{"eps_requested", RatToString(options.eps)},
                               {"vertex_budget", options.budget}};
  return {std::move(report), std::move(mech)};
}

Json RunDirect(const Game& game, const Distribution& target,
               const Json& digests, const CommandOptions& options) {
  Json report = ReportSkeleton("direct", digests);
  DirectSearchOptions so;
  so.enumeration.vertex_budget = options.budget;
  so.seed = options.seed;
  so.accept_tol = options.tol;
  const DirectSearchResult res = search_direct(game, target, so);
  Json& results = report["results"];
  switch (res.status) {
    case DirectSearchResult::Status::kFound:
      results["status"] = "found";
      break;
    case DirectSearchResult::Status::kImpossible:
      results["status"] = "impossible";
      break;
    case DirectSearchResult::Status::kNotFound:
      results["status"] = "not-found";
      break;
  }
  if (res.certificate) {
    const DirectCertificate& cert = *res.certificate;
    results["witness"] = Weights(cert.witness);
    results["level_residual"] = cert.level_residual;
    results["support_ok"] = cert.support_ok;
    results["feedback_rows"] = cert.feedback.size();
    Json reasons = Json::array();
    for (const auto& r : cert.reasons) reasons.push_back(r);
    results["reasons"] = std::move(reasons);
    if (cert.end_to_end) {
      results["end_to_end"] = CertificateJson(*cert.end_to_end);
    }
  }
  results["diagnostics"] = res.diagnostics;
  report["diagnostics"] = Json{{"seed", options.seed},
                               {"vertex_budget", options.budget},
                               {"tolerance", options.tol}};
  return report;
}

namespace {

struct ExampleCheck {
  std::string figure;
  bool pass = true;
  bool degraded = false;
  std::string detail;
};

// Shifts a bit of mass between two support cells; used by the harness
// self-test to prove a corrupted table is caught and named.
Distribution CorruptTable(const Distribution& d) {
  std::vector<Rat> w = d.rationals();
  const std::vector<int> support = d.support();
  if (support.size() < 2) throw InputError("cannot corrupt a point mass");
  const Rat delta = std::min(Rat(1, 1000), Rat(w[support.front()] / 2));
  w[support.front()] -= delta;
  w[support.back()] += delta;
  return Distribution::Exact(d.space(), std::move(w));
}

}  // namespace

ExamplesOutcome RunExamples(double tol, const std::string& corrupt) {
  ExamplesOutcome outcome;
  std::vector<ExampleCheck> checks;
  const bool degraded_run = tol > 1e-6;

  auto expected_table = [&](const char* name, Distribution table) {
    if (corrupt == name) return CorruptTable(table);
    return table;
  };
  auto push = [&](ExampleCheck check) {
    check.degraded = degraded_run;
    checks.push_back(std::move(check));
  };

  // Chicken: one disclosed zero, uniform belief, degenerate outcome beats
  // the welfare-optimal equilibrium payoff.
  {
    ExampleCheck c;
    c.figure = "chicken-belief";
    const PSDGP dgp = catalog::ChickenDisclosure();
    const MaxEntSolution sol = max_entropy(build_constraints(dgp));
    const Distribution expected =
        expected_table("chicken-belief", catalog::ChickenExpectedBelief());
    if (!sol.exact || !Distribution::SameExact(sol.belief, expected)) {
      c.pass = false;
      c.detail = "belief table mismatch";
    }
    push(c);

    ExampleCheck impl;
    impl.figure = "chicken-implementation";
    const ImplementationCertificate cert =
        check_implementation(catalog::ChickenGame(), dgp,
                             catalog::ChickenSigma(), catalog::ChickenTarget());
    if (!cert.pass || !cert.exact_epsilon || cert.epsilon_exact != 0) {
      impl.pass = false;
      impl.detail = "certificate failed or epsilon nonzero";
    }
    const std::vector<Rat> u = expected_payoffs(catalog::ChickenGame(),
                                                catalog::ChickenTarget());
    const std::vector<Rat> ce_u = expected_payoffs(catalog::ChickenGame(),
                                                   catalog::ChickenOptimalCe());
    if (!(u[0] > ce_u[0] && u[1] > ce_u[1])) {
      impl.pass = false;
      impl.detail = "outcome does not beat the optimal equilibrium payoff";
    }
    push(impl);
  }

  // Coordination: product belief from marginals, anti-diagonal outcome
  // implemented although it is not a correlated equilibrium.
  {
    ExampleCheck c;
    c.figure = "coordination-belief";
    const PSDGP dgp = catalog::CoordinationDisclosure();
    const MaxEntSolution sol = max_entropy(build_constraints(dgp));
    const Distribution expected = expected_table(
        "coordination-belief", catalog::CoordinationExpectedBelief());
    const double tv = Distribution::TotalVariation(sol.belief, expected);
    if (tv > 1e-10) {
      c.pass = false;
      c.detail = "belief differs from the product of the marginals";
    }
    push(c);

    ExampleCheck impl;
    impl.figure = "coordination-implementation";
    const ImplementationCertificate cert = check_implementation(
        catalog::CoordinationGame(), dgp, catalog::CoordinationSigma(),
        catalog::CoordinationTarget());
    if (!cert.pass || cert.epsilon > 1e-10) {
      impl.pass = false;
      impl.detail = "certificate failed";
    }
    const CeCheck ce = is_correlated_equilibrium(
        catalog::CoordinationGame(), catalog::CoordinationTarget(), 0.0);
    if (ce.is_ce || ce.worst_slack >= 0) {
      impl.pass = false;
      impl.detail = "anti-diagonal outcome should not be an equilibrium";
    }
    push(impl);
  }

  // Direct 3x3: dense feedback row reproduces the 1/12-1/2-1/20 belief.
  {
    ExampleCheck c;
    c.figure = "direct-belief";
    const PSDGP dgp = catalog::DirectDisclosure();
    const MaxEntSolution sol = max_entropy(build_constraints(dgp));
    const Distribution expected =
        expected_table("direct-belief", catalog::DirectExpectedBelief());
    const double tv = Distribution::TotalVariation(sol.belief, expected);
    if (tv > 1e-8) {
      c.pass = false;
      c.detail = "belief table off by more than 1e-8";
    }
    const CanInduceReport ind =
        can_induce(catalog::DirectExpectedBelief(), catalog::DirectTarget());
    if (!ind.ok) {
      c.pass = false;
      c.detail = "inducibility conditions failed";
    }
    push(c);
  }

  // Matching pennies, 3x3 messages, no feedback: uniform belief and the
  // degenerate outcome, plus the level-set constraint of the unique CE.
  {
    ExampleCheck c;
    c.figure = "pennies-uniform-belief";
    const PSDGP dgp = catalog::PenniesLargeDisclosure();
    const MaxEntSolution sol = max_entropy(build_constraints(dgp));
    const Distribution expected = expected_table(
        "pennies-uniform-belief",
        Distribution::Uniform(dgp.space, [&] {
          std::vector<int> all(dgp.space->size());
          for (int i = 0; i < dgp.space->size(); ++i) all[i] = i;
          return all;
        }()));
    if (!sol.exact || !Distribution::SameExact(sol.belief, expected)) {
      c.pass = false;
      c.detail = "belief is not uniform";
    }
    push(c);

    ExampleCheck impl;
    impl.figure = "pennies-implementation";
    const ImplementationCertificate cert = check_implementation(
        catalog::MatchingPennies(), dgp, catalog::PenniesLargeSigma(),
        catalog::PenniesLargeTarget());
    if (!cert.pass || !cert.exact_epsilon || cert.epsilon_exact != 0) {
      impl.pass = false;
      impl.detail = "certificate failed";
    }
    push(impl);

    ExampleCheck uc;
    uc.figure = "pennies-unique-ce";
    const UniqueCeConstraint unique =
        unique_ce_linear_constraint(catalog::MatchingPennies());
    if (!unique.unique || !unique.integer_form ||
        !Distribution::SameExact(*unique.ce, catalog::PenniesUniqueCe())) {
      uc.pass = false;
      uc.detail = "unique equilibrium not recovered";
    } else {
      const auto& f = *unique.integer_form;
      const bool coeffs_ok = f.coefficients[0] == 2 && f.coefficients[1] == 1 &&
                             f.coefficients[2] == 1 && f.coefficients[3] == 0;
      if (!coeffs_ok || f.rhs != RatFromString("2/3")) {
        uc.pass = false;
        uc.detail = "level-set constraint mismatch";
      }
    }
    push(uc);
  }

  // Cyclic game (4x4 messages): 1/12 pattern and the (1/3,1/3,1/3,0)
  // outcome with merged strategies.
  {
    ExampleCheck c;
    c.figure = "cyclic-belief";
    const PSDGP dgp = catalog::CyclicDisclosure();
    const MaxEntSolution sol = max_entropy(build_constraints(dgp));
    const Distribution expected =
        expected_table("cyclic-belief", catalog::CyclicExpectedBelief());
    if (!sol.exact || !Distribution::SameExact(sol.belief, expected)) {
      c.pass = false;
      c.detail = "belief table mismatch";
    }
    push(c);

    ExampleCheck impl;
    impl.figure = "cyclic-implementation";
    const ImplementationCertificate cert = check_implementation(
        catalog::CyclicGame(), dgp, catalog::CyclicSigma(),
        catalog::CyclicTarget());
    if (!cert.pass || !cert.exact_epsilon || cert.epsilon_exact != 0) {
      impl.pass = false;
      impl.detail = "certificate failed";
    }
    push(impl);
  }

  // Belief-table constructions: the stated message belief is the entropy
  // maximizer of its own disclosure and pushes forward onto the target.
  for (const auto& construction :
       {catalog::ConstructionA(), catalog::ConstructionB(),
        catalog::ConstructionC()}) {
    ExampleCheck c;
    c.figure = construction.name;
    const PSDGP dgp(construction.message_belief.space(),
                    construction.message_belief, construction.feedback);
    const MaxEntSolution sol = max_entropy(build_constraints(dgp));
    const Distribution expected = expected_table(
        construction.name.c_str(), construction.message_belief);
    if (!sol.exact || !Distribution::SameExact(sol.belief, expected)) {
      c.pass = false;
      c.detail = "message belief is not the entropy maximizer";
    }
    const Distribution outcome =
        pushforward(construction.message_belief, construction.sigma);
    if (!Distribution::SameExact(outcome, construction.target_belief)) {
      c.pass = false;
      c.detail = "pushforward does not match the target belief";
    }
    push(c);
  }

  Json report = Json::object();
  report["schema"] = "report/1";
  report["command"] = "examples";
  Json list = Json::array();
  outcome.all_pass = true;
  for (const auto& check : checks) {
    if (!check.pass) outcome.all_pass = false;
    if (check.degraded) outcome.degraded = true;
    list.push_back(Json{{"figure", check.figure},
                        {"pass", check.pass},
                        {"degraded", check.degraded},
                        {"detail", check.detail}});
  }
  report["results"] = std::move(list);
  report["diagnostics"] =
      Json{{"tolerance", tol},
           {"degraded", outcome.degraded},
           {"corrupt_fixture", corrupt.empty() ? Json(nullptr) : Json(corrupt)}};
  outcome.report = std::move(report);
  return outcome;
}

namespace {

void RenderValue(const Json& value, const std::string& indent,
                 std::ostringstream& os) {
  if (value.is_object()) {
    os << "\n";
    for (const auto& [k, v] : value.items()) {
      os << indent << k << ":";
      RenderValue(v, indent + "  ", os);
    }
  } else if (value.is_array()) {
    os << "\n";
    for (const auto& v : value) {
      os << indent << "-";
      if (v.is_object() || v.is_array()) {
        RenderValue(v, indent + "  ", os);
      } else {
        os << " " << v.dump() << "\n";
      }
    }
  } else {
    os << " " << (value.is_string() ? value.get<std::string>() : value.dump())
       << "\n";
  }
}

}  // namespace

std::string RenderText(const Json& report) {
  std::ostringstream os;
  RenderValue(report, "", os);
  return os.str();
}

}  // namespace coherent::cli
