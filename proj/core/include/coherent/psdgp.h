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

#ifndef COHERENT_PSDGP_H_
#define COHERENT_PSDGP_H_

#include <optional>
#include <string>
#include <vector>

#include "coherent/distribution.h"
#include "coherent/polytope.h"
#include "coherent/product_space.h"
#include "coherent/rational.h"

namespace coherent {

// Real-valued function on a message-profile space. Indicators of profile
// subsets are stored sparsely (the constructions use nothing else); general
// functions are dense rational vectors. Float-valued functions are stored as
// their exact dyadic rationals so the linear algebra over rows stays exact.
class FeedbackFunction {
 public:
  static FeedbackFunction Indicator(std::vector<int> cells);
  static FeedbackFunction Dense(std::vector<Rat> values);

  bool indicator() const { return indicator_; }
  const std::vector<int>& cells() const { return cells_; }

  Rat value_at(int m) const;
  // Dense expansion of length `size`.
  std::vector<Rat> dense(int size) const;

 private:
  bool indicator_ = false;
  std::vector<int> cells_;   // indicator support, sorted
  std::vector<Rat> values_;  // dense values
};

// Partially specified data-generating process D = (M, eta, F). Only the
// expectations E_eta[f], f in F, are disclosed.
struct PSDGP {
  SpacePtr space;
  Distribution eta;
  std::vector<FeedbackFunction> feedback;

  PSDGP(SpacePtr space, Distribution eta,
        std::vector<FeedbackFunction> feedback);
};

// Linear moment system defining the plausible set
//   Delta_D = { q in simplex(M) : sum_m q_m f(m) = E_eta[f] for all f }.
// Targets are computed exactly from eta at construction.
struct MomentConstraints {
  struct Row {
    FeedbackFunction fn;
    Rat target;
    int source = -1;  // index into the originating feedback list
  };
  SpacePtr space;
  std::vector<Row> rows;
  // Known feasible point (the true process), kept for provenance and to
  // skip per-message zero tests on its support.
  std::optional<Distribution> eta;
};

MomentConstraints build_constraints(const PSDGP& dgp);

// Keeps a maximal linearly independent subset of the augmented rows
// (values | target), in input order, reducing against the normalization row
// first. The result is informationally equivalent with at most |M| rows.
PSDGP reduce_feedback(const PSDGP& dgp);

// Same message space and identical plausible sets (equality of affine spans
// of the augmented rows together with the simplex row, checked over exact
// rationals by mutual containment).
bool informationally_equivalent(const PSDGP& d1, const PSDGP& d2);

// Exact H-representation of Delta_D.
HPolytope plausible_set_polytope(const PSDGP& dgp);

}  // namespace coherent

#endif  // COHERENT_PSDGP_H_
