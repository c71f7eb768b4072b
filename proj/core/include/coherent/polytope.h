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

#ifndef COHERENT_POLYTOPE_H_
#define COHERENT_POLYTOPE_H_

#include <span>
#include <vector>

#include "coherent/rational.h"

namespace coherent {

struct LinRow {
  std::vector<Rat> a;
  Rat rhs;
};

// H-representation over a fixed ground set of dimension `dim`:
//   equalities:   a . x  = rhs
//   inequalities: a . x >= rhs
//   nonneg:       x >= 0 coordinate-wise when set (distribution polytopes).
struct HPolytope {
  int dim = 0;
  std::vector<LinRow> equalities;
  std::vector<LinRow> inequalities;
  bool nonneg = true;

  // Probability simplex: sum x = 1, x >= 0.
  static HPolytope Simplex(int dim) {
    HPolytope p;
    p.dim = dim;
    p.equalities.push_back({std::vector<Rat>(dim, Rat(1)), Rat(1)});
    return p;
  }
  void add_equality(std::vector<Rat> a, Rat rhs) {
    equalities.push_back({std::move(a), std::move(rhs)});
  }
  void add_inequality(std::vector<Rat> a, Rat rhs) {
    inequalities.push_back({std::move(a), std::move(rhs)});
  }
  // Row count including the implied nonnegativity rows.
  int total_rows() const {
    return static_cast<int>(equalities.size() + inequalities.size()) +
           (nonneg ? dim : 0);
  }
};

}  // namespace coherent

#endif  // COHERENT_POLYTOPE_H_
