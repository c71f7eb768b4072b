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

#include "coherent/linesum.h"

#include <span>

#include "coherent/errors.h"

namespace coherent {

std::uint8_t BinaryLineSumArray::at(std::span<const int> index) const {
  long flat = 0;
  for (int k = 0; k < dim; ++k) flat = flat * side + index[k];
  return entries[flat];
}

BinaryLineSumArray line_sum_array(int dim, int side, int line_sum) {
  if (dim < 1) throw InputError("array dimension must be at least 1");
  if (side < 1) throw InputError("array side must be at least 1");
  if (line_sum < 0 || line_sum > side) {
    throw InputError("line sum must satisfy 0 <= r <= n");
  }
  long cells = 1;
  for (int k = 0; k < dim; ++k) {
    cells *= side;
    if (cells > (1L << 26)) throw InputError("array too large");
  }

  BinaryLineSumArray arr;
  arr.dim = dim;
  arr.side = side;
  arr.line_sum = line_sum;
  arr.entries.assign(static_cast<size_t>(cells), 0);

  // Base case: first r entries of the 1-D vector are one.
  std::vector<std::uint8_t> current(side, 0);
  for (int i = 0; i < line_sum; ++i) current[i] = 1;

  // Inductive step: stack the n cyclic shifts of the current array along a
  // new last axis. Entry (i_1, ..., i_{d-1}, s) of the next array is entry
  // ((i_1 - s) mod n, i_2, ..., i_{d-1}) of the current one.
  long block = side;  // current array cell count
  for (int d = 2; d <= dim; ++d) {
    std::vector<std::uint8_t> next(static_cast<size_t>(block) * side);
    const long tail = block / side;  // cells with the first index fixed
    for (long idx = 0; idx < block; ++idx) {
      const int i1 = static_cast<int>(idx / tail);
      const long rest = idx % tail;
      for (int s = 0; s < side; ++s) {
        const long src = static_cast<long>((i1 - s + side) % side) * tail + rest;
        next[idx * side + s] = current[src];
      }
    }
    current = std::move(next);
    block *= side;
  }
  arr.entries = std::move(current);
  return arr;
}

bool verify_line_sums(const BinaryLineSumArray& array) {
  const int d = array.dim;
  const int n = array.side;
  if (array.size() == 0) return false;
  std::vector<int> index(d, 0);
  // For each axis, iterate all n^(d-1) anchor points and sum along the axis.
  for (int axis = 0; axis < d; ++axis) {
    std::fill(index.begin(), index.end(), 0);
    while (true) {
      int sum = 0;
      for (int j = 0; j < n; ++j) {
        index[axis] = j;
        sum += array.at(index);
      }
      index[axis] = 0;
      if (sum != array.line_sum) return false;
      // Advance the anchor (skip the scanned axis).
      int k = d - 1;
      while (k >= 0) {
        if (k == axis) {
          --k;
          continue;
        }
        if (++index[k] < n) break;
        index[k] = 0;
        --k;
      }
      if (k < 0) break;
    }
  }
  return true;
}

}  // namespace coherent
