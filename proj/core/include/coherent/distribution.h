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

#ifndef COHERENT_DISTRIBUTION_H_
#define COHERENT_DISTRIBUTION_H_

#include <vector>

#include "coherent/product_space.h"
#include "coherent/rational.h"

namespace coherent {

// Probability distribution over a ProductSpace, tagged exact (rational) or
// float. Exact distributions must sum to 1 exactly; float distributions
// within 1e-12. Weights are dense by profile index.
class Distribution {
 public:
  // Empty placeholder; every accessor requires a value built by a factory.
  Distribution() = default;

  static Distribution Exact(SpacePtr space, std::vector<Rat> weights);
  static Distribution Float(SpacePtr space, std::vector<double> weights);
  static Distribution PointMass(SpacePtr space, int index);
  // Exact uniform over the given profile indices.
  static Distribution Uniform(SpacePtr space, const std::vector<int>& support);

  bool exact() const { return exact_; }
  const SpacePtr& space() const { return space_; }
  int size() const { return space_->size(); }

  // Exact weight; requires exact mode.
  const Rat& r(int index) const;
  // Weight as double, both modes.
  double f(int index) const;

  const std::vector<Rat>& rationals() const;
  std::vector<double> floats() const;

  // Profiles with strictly positive weight.
  std::vector<int> support() const;
  bool in_support(int index) const;

  // Marginal probability that axis `axis` takes label position `label`.
  Rat marginal_r(int axis, int label) const;
  double marginal_f(int axis, int label) const;
  // Full marginal over one axis (exact mode).
  std::vector<Rat> axis_marginal(int axis) const;

  Distribution to_float() const;

  static bool SameExact(const Distribution& a, const Distribution& b);
  // Total variation distance: (1/2) sum |a - b|, in doubles.
  static double TotalVariation(const Distribution& a, const Distribution& b);

 private:
  SpacePtr space_;
  bool exact_ = true;
  std::vector<Rat> rw_;
  std::vector<double> fw_;
};

}  // namespace coherent

#endif  // COHERENT_DISTRIBUTION_H_
