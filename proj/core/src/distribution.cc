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

#include "coherent/distribution.h"

#include <cmath>
#include <cstdlib>

#include "coherent/errors.h"

namespace coherent {

Distribution Distribution::Exact(SpacePtr space, std::vector<Rat> weights) {
  if (static_cast<int>(weights.size()) != space->size()) {
    throw InputError("weight vector size mismatch");
  }
  Rat sum = 0;
  for (const Rat& w : weights) {
    if (w < 0) throw InputError("negative weight");
    sum += w;
  }
  if (sum != 1) {
    throw InputError("weights sum to " + RatToString(sum) + ", expected 1");
  }
  Distribution d;
  d.space_ = std::move(space);
  d.exact_ = true;
  d.rw_ = std::move(weights);
  return d;
}

Distribution Distribution::Float(SpacePtr space, std::vector<double> weights) {
  if (static_cast<int>(weights.size()) != space->size()) {
    throw InputError("weight vector size mismatch");
  }
  double sum = 0;
  for (double w : weights) {
    if (w < 0 || !std::isfinite(w)) throw InputError("invalid float weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw InputError("float weights sum to " + std::to_string(sum));
  }
  Distribution d;
  d.space_ = std::move(space);
  d.exact_ = false;
  d.fw_ = std::move(weights);
  return d;
}

Distribution Distribution::PointMass(SpacePtr space, int index) {
  std::vector<Rat> w(space->size(), Rat(0));
  w[index] = 1;
  return Exact(std::move(space), std::move(w));
}

Distribution Distribution::Uniform(SpacePtr space,
                                   const std::vector<int>& support) {
  if (support.empty()) throw InputError("uniform over empty support");
  std::vector<Rat> w(space->size(), Rat(0));
  const Rat share(1, static_cast<unsigned long>(support.size()));
  for (int i : support) w[i] = share;
  return Exact(std::move(space), std::move(w));
}

const Rat& Distribution::r(int index) const {
  if (!exact_) throw InputError("exact weight requested from float mode");
  return rw_[index];
}

double Distribution::f(int index) const {
  return exact_ ? ToDouble(rw_[index]) : fw_[index];
}

const std::vector<Rat>& Distribution::rationals() const {
  if (!exact_) throw InputError("rationals requested from float mode");
  return rw_;
}

std::vector<double> Distribution::floats() const {
  if (!exact_) return fw_;
  std::vector<double> out(rw_.size());
  for (size_t i = 0; i < rw_.size(); ++i) out[i] = ToDouble(rw_[i]);
  return out;
}

std::vector<int> Distribution::support() const {
  std::vector<int> s;
  for (int i = 0; i < size(); ++i) {
    if (in_support(i)) s.push_back(i);
  }
  return s;
}

bool Distribution::in_support(int index) const {
  return exact_ ? rw_[index] > 0 : fw_[index] > 0.0;
}

Rat Distribution::marginal_r(int axis, int label) const {
  if (!exact_) throw InputError("exact marginal requested from float mode");
  Rat m = 0;
  std::vector<int> coords;
  for (int i = 0; i < size(); ++i) {
    space_->coords_of(i, coords);
    if (coords[axis] == label) m += rw_[i];
  }
  return m;
}

double Distribution::marginal_f(int axis, int label) const {
  double m = 0;
  std::vector<int> coords;
  for (int i = 0; i < size(); ++i) {
    space_->coords_of(i, coords);
    if (coords[axis] == label) m += f(i);
  }
  return m;
}

std::vector<Rat> Distribution::axis_marginal(int axis) const {
  std::vector<Rat> m(space_->axis_size(axis), Rat(0));
  std::vector<int> coords;
  for (int i = 0; i < size(); ++i) {
    space_->coords_of(i, coords);
    m[coords[axis]] += r(i);
  }
  return m;
}

Distribution Distribution::to_float() const {
  if (!exact_) return *this;
  return Float(space_, floats());
}

bool Distribution::SameExact(const Distribution& a, const Distribution& b) {
  if (!a.exact_ || !b.exact_) {
    throw InputError("SameExact requires exact distributions");
  }
  return a.space_->same_labels(*b.space_) && a.rw_ == b.rw_;
}

double Distribution::TotalVariation(const Distribution& a,
                                    const Distribution& b) {
  if (a.size() != b.size()) throw InputError("size mismatch");
  double tv = 0;
  for (int i = 0; i < a.size(); ++i) tv += std::abs(a.f(i) - b.f(i));
  return tv / 2;
}

}  // namespace coherent
