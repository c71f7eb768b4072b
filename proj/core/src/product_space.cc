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

#include "coherent/product_space.h"

#include <unordered_set>

#include "coherent/errors.h"

namespace coherent {

ProductSpace::ProductSpace(std::vector<std::string> axis_names,
                           std::vector<std::vector<std::string>> labels)
    : axis_names_(std::move(axis_names)), labels_(std::move(labels)) {
  if (axis_names_.size() != labels_.size()) {
    throw InputError("axis name/label count mismatch");
  }
  if (labels_.empty()) throw InputError("product space needs at least 1 axis");
  size_ = 1;
  for (size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) {
      throw InputError("empty label set for axis " + axis_names_[i]);
    }
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_[i]) {
      if (l.empty() || l.find(',') != std::string::npos) {
        throw InputError("invalid label '" + l + "' on axis " +
                         axis_names_[i]);
      }
      if (!seen.insert(l).second) {
        throw InputError("duplicate label '" + l + "' on axis " +
                         axis_names_[i]);
      }
    }
    if (size_ > 1 << 26) throw InputError("product space too large");
    size_ *= static_cast<int>(labels_[i].size());
  }
  strides_.assign(labels_.size(), 1);
  for (int i = static_cast<int>(labels_.size()) - 2; i >= 0; --i) {
    strides_[i] = strides_[i + 1] * static_cast<int>(labels_[i + 1].size());
  }
}

int ProductSpace::index_of(std::span<const int> coords) const {
  int idx = 0;
  for (size_t i = 0; i < strides_.size(); ++i) idx += coords[i] * strides_[i];
  return idx;
}

void ProductSpace::coords_of(int index, std::vector<int>& out) const {
  out.resize(strides_.size());
  for (size_t i = 0; i < strides_.size(); ++i) {
    out[i] = index / strides_[i];
    index %= strides_[i];
  }
}

std::vector<int> ProductSpace::coords_of(int index) const {
  std::vector<int> out;
  coords_of(index, out);
  return out;
}

int ProductSpace::label_index(int axis, std::string_view label) const {
  const auto& ls = labels_[axis];
  for (size_t i = 0; i < ls.size(); ++i) {
    if (ls[i] == label) return static_cast<int>(i);
  }
  return -1;
}

std::string ProductSpace::key_of(int index) const {
  std::vector<int> c = coords_of(index);
  std::string key;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) key.push_back(',');
    key += labels_[i][c[i]];
  }
  return key;
}

int ProductSpace::parse_key(const std::string& key) const {
  std::vector<int> coords;
  coords.reserve(labels_.size());
  size_t pos = 0;
  for (size_t axis = 0; axis < labels_.size(); ++axis) {
    const size_t next = key.find(',', pos);
    const std::string label =
        next == std::string::npos ? key.substr(pos) : key.substr(pos, next - pos);
    const int li = label_index(static_cast<int>(axis), label);
    if (li < 0) {
      throw InputError("unknown label '" + label + "' for " +
                       axis_names_[axis] + " in key '" + key + "'");
    }
    coords.push_back(li);
    if (next == std::string::npos) {
      if (axis + 1 != labels_.size()) {
        throw InputError("profile key '" + key + "' has too few components");
      }
      pos = key.size();
    } else {
      pos = next + 1;
    }
  }
  if (pos != key.size()) {
    throw InputError("profile key '" + key + "' has too many components");
  }
  return index_of(coords);
}

bool ProductSpace::same_labels(const ProductSpace& other) const {
  return axis_names_ == other.axis_names_ && labels_ == other.labels_;
}

SpacePtr MakeSpace(std::vector<std::string> axis_names,
                   std::vector<std::vector<std::string>> labels) {
  return std::make_shared<const ProductSpace>(std::move(axis_names),
                                              std::move(labels));
}

}  // namespace coherent
