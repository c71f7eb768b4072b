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

#include <algorithm>
#include <cmath>
#include <random>

#include "coherent/catalog.h"
#include "coherent/errors.h"
#include "coherent/maxent.h"
#include "oracles.h"

namespace coherent {
namespace {

SpacePtr Grid(int rows, int cols) {
  std::vector<std::string> a, b;
  for (int i = 1; i <= rows; ++i) a.push_back("m" + std::to_string(i));
  for (int j = 1; j <= cols; ++j) b.push_back("n" + std::to_string(j));
  return MakeSpace({"P1", "P2"}, {a, b});
}

TEST_CASE("forced zeros") {
  // Single disclosed zero cell in the chicken example.
  const MomentConstraints chicken =
      build_constraints(catalog::ChickenDisclosure());
  CHECK(forced_zero_support(chicken) ==
        std::vector<int>{chicken.space->parse_key("m2,n2")});

  // No feedback forces nothing.
  SpacePtr m = Grid(3, 3);
  const PSDGP silent(m, Distribution::PointMass(m, 0), {});
  CHECK(forced_zero_support(build_constraints(silent)).empty());

  // The four disclosed zeros of the cyclic example, and nothing else.
  const MomentConstraints cyc =
      build_constraints(catalog::CyclicDisclosure());
  const std::vector<int> zeros = forced_zero_support(cyc);
  REQUIRE(zeros.size() == 4);
  for (const char* key : {"m1,n2", "m2,n1", "m3,n2", "m4,n1"}) {
    CHECK(std::count(zeros.begin(), zeros.end(), cyc.space->parse_key(key)) ==
          1);
  }

  // A dense row can force zeros too (general LP path): weight on cell 0
  // must vanish because the row value there exceeds the target reachable
  // elsewhere.
  SpacePtr small = Grid(1, 2);
  std::vector<FeedbackFunction> rows{
      FeedbackFunction::Dense({Rat(1), Rat(0)})};
  const PSDGP pinned(small, Distribution::PointMass(small, 1),
                     std::move(rows));
  CHECK(forced_zero_support(build_constraints(pinned)) ==
        std::vector<int>{0});
}

TEST_CASE("uniform solutions are exact") {
  const MaxEntSolution chicken =
      max_entropy(build_constraints(catalog::ChickenDisclosure()));
  CHECK(chicken.exact);
  CHECK(Distribution::SameExact(chicken.belief,
                                catalog::ChickenExpectedBelief()));
  CHECK(chicken.entropy == doctest::Approx(std::log(3.0)).epsilon(1e-12));

  // |M| = 9, no feedback: uniform 1/9.
  const MaxEntSolution pennies =
      max_entropy(build_constraints(catalog::PenniesLargeDisclosure()));
  CHECK(pennies.exact);
  for (int m = 0; m < 9; ++m) CHECK(pennies.belief.r(m) == Rat(1, 9));

  // The 4x4 cyclic pattern: uniform 1/12 off the forced zeros.
  const MaxEntSolution cyc =
      max_entropy(build_constraints(catalog::CyclicDisclosure()));
  CHECK(cyc.exact);
  CHECK(Distribution::SameExact(cyc.belief, catalog::CyclicExpectedBelief()));
}

TEST_CASE("marginal disclosure yields the product belief") {
  const MaxEntSolution sol =
      max_entropy(build_constraints(catalog::CoordinationDisclosure()));
  CHECK_FALSE(sol.exact);
  CHECK(Distribution::TotalVariation(
            sol.belief, catalog::CoordinationExpectedBelief()) < 1e-10);
  CHECK(sol.kkt_residual <= 1e-10);
}

TEST_CASE("the dense-row example reproduces its belief table") {
  const MomentConstraints mc =
      build_constraints(catalog::DirectDisclosure());
  const MaxEntSolution sol = max_entropy(mc);
  CHECK(Distribution::TotalVariation(sol.belief,
                                     catalog::DirectExpectedBelief()) < 1e-8);
  // The exponential-family weight of the dense row is -log 2 in nats.
  REQUIRE(sol.duals.size() == 2);
  CHECK(sol.duals[1] == doctest::Approx(-std::log(2.0)).epsilon(1e-9));

  const KktReport kkt = verify_kkt(sol, mc);
  CHECK(kkt.primal_residual < 1e-10);
  CHECK(kkt.stationarity_residual < 1e-8);
  CHECK(std::abs(kkt.eta_identity) < 1e-8);
}

TEST_CASE("fully pinned plausible sets return eta exactly") {
  SpacePtr m = Grid(2, 2);
  const Distribution eta =
      Distribution::Exact(m, {Rat(1, 2), Rat(1, 4), Rat(1, 8), Rat(1, 8)});
  std::vector<FeedbackFunction> revealing;
  for (int cell = 0; cell < 4; ++cell) {
    revealing.push_back(FeedbackFunction::Indicator({cell}));
  }
  const MaxEntSolution sol =
      max_entropy(build_constraints(PSDGP(m, eta, revealing)));
  CHECK(sol.exact);
  CHECK(Distribution::SameExact(sol.belief, eta));
  CHECK(verify_kkt(sol, build_constraints(PSDGP(m, eta, revealing)))
            .primal_residual < 1e-12);
}

TEST_CASE("verify_kkt accepts the hand-built exact table with known duals") {
  // The published table solves the KKT system with multipliers (1, -ln 2):
  // log q_m + 1 = 1 + (-ln 2) f_m since q_m = 2^{-f_m}.
  const MomentConstraints mc =
      build_constraints(catalog::DirectDisclosure());
  MaxEntSolution hand;
  hand.belief = catalog::DirectExpectedBelief();
  hand.duals = {1.0, -std::log(2.0)};
  hand.retained_rows = {0};
  const KktReport kkt = verify_kkt(hand, mc);
  CHECK(kkt.primal_residual < 1e-8);
  CHECK(kkt.stationarity_residual < 1e-8);
  CHECK(std::abs(kkt.eta_identity) < 1e-8);
}

TEST_CASE("verify_kkt flags perturbed beliefs") {
  const MomentConstraints mc =
      build_constraints(catalog::DirectDisclosure());
  MaxEntSolution sol = max_entropy(mc);
  std::vector<double> w = sol.belief.floats();
  w[0] += 1e-3;
  double total = 0;
  for (double v : w) total += v;
  for (double& v : w) v /= total;
  sol.belief = Distribution::Float(mc.space, std::move(w));
  const KktReport kkt = verify_kkt(sol, mc);
  CHECK(kkt.stationarity_residual > 1e-4);
}

TEST_CASE("exact uniform solutions have zero kkt residuals") {
  SpacePtr m = Grid(3, 3);
  const MomentConstraints mc =
      build_constraints(PSDGP(m, Distribution::PointMass(m, 0), {}));
  const MaxEntSolution sol = max_entropy(mc);
  const KktReport kkt = verify_kkt(sol, mc);
  CHECK(kkt.primal_residual == 0.0);
  CHECK(kkt.stationarity_residual <= 1e-14);
}

TEST_CASE("supp(eta) is always inside supp(belief)") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    SpacePtr m = Grid(2, 3);
    const Distribution eta = testing::RandomDistribution(rng, m, 9, 0.6);
    std::vector<FeedbackFunction> rows;
    const int nrows = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int r = 0; r < nrows; ++r) {
      std::vector<Rat> v(m->size());
      for (Rat& x : v) {
        x = std::uniform_int_distribution<int>(-2, 2)(rng);
      }
      rows.push_back(FeedbackFunction::Dense(std::move(v)));
    }
    const MaxEntSolution sol =
        max_entropy(build_constraints(PSDGP(m, eta, rows)));
    for (int cell : eta.support()) {
      CHECK(sol.belief.f(cell) > 0);
    }
  }
}

TEST_CASE("informationally equivalent systems give the same belief") {
  const PSDGP coord = catalog::CoordinationDisclosure();
  const PSDGP reduced = reduce_feedback(coord);
  const MaxEntSolution a = max_entropy(build_constraints(coord));
  const MaxEntSolution b = max_entropy(build_constraints(reduced));
  CHECK(Distribution::TotalVariation(a.belief, b.belief) < 1e-9);

  // Row rescaling changes duals, never the belief.
  SpacePtr m = coord.space;
  std::vector<Rat> row(m->size(), Rat(0));
  row[0] = row[1] = 3;  // 3 * indicator of the first marginal event
  const PSDGP scaled(m, coord.eta,
                     {FeedbackFunction::Dense(row),
                      coord.feedback[1], coord.feedback[2],
                      coord.feedback[3]});
  const MaxEntSolution c = max_entropy(build_constraints(scaled));
  CHECK(Distribution::TotalVariation(a.belief, c.belief) < 1e-9);
}

TEST_CASE("support-only constraints give the uniform belief") {
  std::mt19937 rng(17);
  SpacePtr m = Grid(3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    // Random zero set, eta placed on the complement.
    std::vector<int> zeros;
    std::vector<int> live;
    for (int cell = 0; cell < m->size(); ++cell) {
      if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
        zeros.push_back(cell);
      } else {
        live.push_back(cell);
      }
    }
    if (live.empty() || zeros.empty()) continue;
    std::vector<FeedbackFunction> rows;
    for (int z : zeros) rows.push_back(FeedbackFunction::Indicator({z}));
    const MaxEntSolution sol = max_entropy(build_constraints(
        PSDGP(m, Distribution::Uniform(m, live), rows)));
    CHECK(sol.exact);
    for (int cell : live) {
      CHECK(sol.belief.r(cell) ==
            Rat(1, static_cast<unsigned long>(live.size())));
    }
  }
}

TEST_CASE("dual reconstruction matches the belief on the free support") {
  const MomentConstraints mc =
      build_constraints(catalog::CoordinationDisclosure());
  const MaxEntSolution sol = max_entropy(mc);
  for (int cell = 0; cell < mc.space->size(); ++cell) {
    const double q = sol.belief.f(cell);
    if (q <= 0) continue;
    double rhs = sol.duals[0];
    for (size_t k = 0; k < sol.retained_rows.size(); ++k) {
      rhs += sol.duals[1 + k] *
             ToDouble(mc.rows[sol.retained_rows[k]].fn.value_at(cell));
    }
    CHECK(std::abs(std::exp(rhs - 1.0) - q) < 1e-9);
  }
}

TEST_CASE("solver matches the projected-gradient oracle") {
  std::mt19937 rng(97);
  int checked = 0;
  for (int trial = 0; trial < 12; ++trial) {
    SpacePtr m = Grid(2, std::uniform_int_distribution<int>(2, 3)(rng));
    const Distribution eta = testing::RandomDistribution(rng, m, 7, 1.0);
    std::vector<FeedbackFunction> rows;
    const int nrows = std::uniform_int_distribution<int>(1, 2)(rng);
    for (int r = 0; r < nrows; ++r) {
      std::vector<Rat> v(m->size());
      for (Rat& x : v) x = std::uniform_int_distribution<int>(0, 3)(rng);
      rows.push_back(FeedbackFunction::Dense(std::move(v)));
    }
    const MomentConstraints mc =
        build_constraints(PSDGP(m, eta, rows));
    const MaxEntSolution sol = max_entropy(mc);
    const testing::PgResult oracle = testing::ProjectedGradientMaxent(mc);
    if (!oracle.converged) continue;
    ++checked;
    CHECK(std::abs(sol.entropy - oracle.entropy) < 1e-8);
    double tv = 0;
    for (int cell = 0; cell < m->size(); ++cell) {
      tv += std::abs(sol.belief.f(cell) - oracle.q[cell]);
    }
    CHECK(tv / 2 < 1e-7);
  }
  CHECK(checked >= 8);
}

TEST_CASE("hand-built infeasible moment systems are flagged") {
  SpacePtr m = Grid(1, 2);
  MomentConstraints mc;
  mc.space = m;
  // No distribution can have expectation 2 for a {0,1}-valued function.
  mc.rows.push_back({FeedbackFunction::Dense({Rat(1), Rat(0)}), Rat(2), 0});
  CHECK_THROWS_AS(forced_zero_support(mc), InternalError);
  CHECK_THROWS_AS(max_entropy(mc), InternalError);
}

TEST_CASE("non-convergence carries the best iterate") {
  const MomentConstraints mc =
      build_constraints(catalog::DirectDisclosure());
  MaxEntOptions strict;
  strict.tol = 1e-10;
  strict.max_iter = 1;
  try {
    max_entropy(mc, strict);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.residual > 1e-10);
    CHECK(e.best_point.size() == static_cast<size_t>(mc.space->size()));
  }
}

}  // namespace
}  // namespace coherent
