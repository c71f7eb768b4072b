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

#ifndef COHERENT_LINESUM_H_
#define COHERENT_LINESUM_H_

#include <cstdint>
#include <span>
#include <vector>

namespace coherent {

// d-dimensional 0/1 array of side n in which every axis-parallel line sums
// to r. Entries are stored row-major (last index fastest).
struct BinaryLineSumArray {
  int dim = 0;
  int side = 0;
  int line_sum = 0;
  std::vector<std::uint8_t> entries;

  std::uint8_t at(std::span<const int> index) const;
  long size() const { return static_cast<long>(entries.size()); }
};

// Deterministic construction by cyclic shifts: the 1-D base vector has its
// first r entries set; dimension d+1 stacks the n shifts of the dimension-d
// array, shifting the first index by the new coordinate (1-based, mod n).
BinaryLineSumArray line_sum_array(int dim, int side, int line_sum);

// Exhaustive check of all d * n^(d-1) lines.
bool verify_line_sums(const BinaryLineSumArray& array);

}  // namespace coherent

#endif  // COHERENT_LINESUM_H_
