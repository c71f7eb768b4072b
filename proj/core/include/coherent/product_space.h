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

#ifndef COHERENT_PRODUCT_SPACE_H_
#define COHERENT_PRODUCT_SPACE_H_

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coherent {

// Finite product set X = X_1 x ... x X_n with per-axis string labels.
// Both action-profile spaces and message-profile spaces are instances.
// Profiles are identified by a row-major index (last axis fastest), fixed
// at construction time.
class ProductSpace {
 public:
  ProductSpace(std::vector<std::string> axis_names,
               std::vector<std::vector<std::string>> labels);

  int num_axes() const { return static_cast<int>(labels_.size()); }
  int axis_size(int axis) const {
    return static_cast<int>(labels_[axis].size());
  }
  int size() const { return size_; }

  const std::string& axis_name(int axis) const { return axis_names_[axis]; }
  const std::vector<std::string>& axis_labels(int axis) const {
    return labels_[axis];
  }
  const std::vector<std::string>& axis_names() const { return axis_names_; }

  int index_of(std::span<const int> coords) const;
  // Writes the per-axis label positions of `index` into `out`.
  void coords_of(int index, std::vector<int>& out) const;
  std::vector<int> coords_of(int index) const;

  // Label position on an axis, -1 when absent.
  int label_index(int axis, std::string_view label) const;

  // Comma-joined profile key, e.g. "a1,b2".
  std::string key_of(int index) const;
  // Inverse of key_of; throws InputError on unknown labels.
  int parse_key(const std::string& key) const;

  bool same_labels(const ProductSpace& other) const;

 private:
  std::vector<std::string> axis_names_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<int> strides_;
  int size_ = 0;
};

using SpacePtr = std::shared_ptr<const ProductSpace>;

SpacePtr MakeSpace(std::vector<std::string> axis_names,
                   std::vector<std::vector<std::string>> labels);

}  // namespace coherent

#endif  // COHERENT_PRODUCT_SPACE_H_
