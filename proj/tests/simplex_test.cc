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

#include <random>

#include "coherent/errors.h"
#include "coherent/simplex.h"
#include "oracles.h"

namespace coherent {
namespace {

std::vector<Rat> Obj(std::initializer_list<int> values) {
  std::vector<Rat> out;
  for (int v : values) out.emplace_back(v);
  return out;
}

TEST_CASE("lp on the plain simplex") {
  const HPolytope simplex = HPolytope::Simplex(3);
  const LpResult max1 = solve_lp(simplex, Obj({1, 1, 1}), LpSense::kMax);
  REQUIRE(max1.status == LpStatus::kOptimal);
  CHECK(max1.value == 1);

  const LpResult skew = solve_lp(simplex, Obj({3, 1, 2}), LpSense::kMax);
  CHECK(skew.value == 3);
  CHECK(skew.point == std::vector<Rat>{Rat(1), Rat(0), Rat(0)});

  const LpResult low = solve_lp(simplex, Obj({3, 1, 2}), LpSense::kMin);
  CHECK(low.value == 1);
}

TEST_CASE("infeasible and unbounded are distinct results") {
  HPolytope empty = HPolytope::Simplex(2);
  empty.add_equality({Rat(1), Rat(1)}, Rat(2));  // contradicts the simplex
  CHECK(solve_lp(empty, Obj({1, 0}), LpSense::kMax).status ==
        LpStatus::kInfeasible);

  HPolytope cone;  // x >= 0 only
  cone.dim = 2;
  CHECK(solve_lp(cone, Obj({1, 1}), LpSense::kMax).status ==
        LpStatus::kUnbounded);
  CHECK(solve_lp(cone, Obj({1, 1}), LpSense::kMin).status ==
        LpStatus::kOptimal);
}

TEST_CASE("optimum is attained at the returned vertex") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coeff(-5, 5);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = std::uniform_int_distribution<int>(2, 5)(rng);
    HPolytope poly = HPolytope::Simplex(dim);
    const int rows = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int r = 0; r < rows; ++r) {
      std::vector<Rat> a(dim);
      for (Rat& v : a) v = coeff(rng);
      poly.add_inequality(std::move(a), Rat(coeff(rng)) / 7);
    }
    std::vector<Rat> c(dim);
    for (Rat& v : c) v = coeff(rng);
    const LpResult res = solve_lp(poly, c, LpSense::kMax);
    if (res.status != LpStatus::kOptimal) continue;
    Rat value = 0;
    for (int i = 0; i < dim; ++i) value += c[i] * res.point[i];
    CHECK(value == res.value);
    // The point is feasible.
    Rat total = 0;
    for (const Rat& v : res.point) {
      CHECK(v >= 0);
      total += v;
    }
    CHECK(total == 1);
    for (const auto& row : poly.inequalities) {
      Rat lhs = 0;
      for (int i = 0; i < dim; ++i) lhs += row.a[i] * res.point[i];
      CHECK(lhs >= row.rhs);
    }
  }
}

TEST_CASE("vertex enumeration of the simplex") {
  const auto verts = enumerate_vertices(HPolytope::Simplex(2));
  REQUIRE(verts.size() == 2);
  CHECK(verts[0] == std::vector<Rat>{Rat(0), Rat(1)});
  CHECK(verts[1] == std::vector<Rat>{Rat(1), Rat(0)});
}

TEST_CASE("vertex enumeration matches the brute-force oracle") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coeff(-4, 4);
  int nonempty = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int dim = std::uniform_int_distribution<int>(2, 5)(rng);
    HPolytope poly = HPolytope::Simplex(dim);
    const int ineqs = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int r = 0; r < ineqs; ++r) {
      std::vector<Rat> a(dim);
      for (Rat& v : a) v = coeff(rng);
      poly.add_inequality(std::move(a), Rat(coeff(rng)) / 5);
    }
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
      // An extra equality slice exercises degenerate phase-1 exits.
      std::vector<Rat> a(dim);
      for (Rat& v : a) v = coeff(rng);
      Rat rhs = 0;
      for (const Rat& v : a) rhs += v;
      poly.add_equality(std::move(a), rhs / dim);
    }
    const auto mine = enumerate_vertices(poly);
    const auto expected = testing::BruteForceVertices(poly);
    CHECK(mine == expected);
    if (!expected.empty()) ++nonempty;
  }
  CHECK(nonempty > 20);  // the generator must actually produce work
}

TEST_CASE("enumeration honors its budgets") {
  HPolytope poly = HPolytope::Simplex(12);
  VertexEnumOptions options;
  options.vertex_budget = 5;
  CHECK_THROWS_AS(enumerate_vertices(poly, options), BudgetError);

  VertexEnumOptions guard;
  guard.max_dim = 8;
  CHECK_THROWS_AS(enumerate_vertices(poly, guard), BudgetError);
}

TEST_CASE("enumeration of an empty polytope is empty") {
  HPolytope empty = HPolytope::Simplex(2);
  empty.add_equality({Rat(1), Rat(1)}, Rat(2));
  CHECK(enumerate_vertices(empty).empty());
}

TEST_CASE("enumeration rejects unbounded input") {
  HPolytope cone;
  cone.dim = 2;
  cone.add_inequality({Rat(1), Rat(0)}, Rat(0));
  CHECK_THROWS_AS(enumerate_vertices(cone), InputError);
}

TEST_CASE("redundant equality rows are tolerated") {
  HPolytope poly = HPolytope::Simplex(3);
  poly.add_equality({Rat(1), Rat(1), Rat(1)}, Rat(1));  // duplicate
  poly.add_equality({Rat(2), Rat(2), Rat(2)}, Rat(2));  // scaled duplicate
  const auto verts = enumerate_vertices(poly);
  CHECK(verts.size() == 3);
  const LpResult res = solve_lp(poly, Obj({1, 2, 3}), LpSense::kMax);
  CHECK(res.value == 3);
}

}  // namespace
}  // namespace coherent
