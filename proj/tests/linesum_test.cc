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

#include <numeric>
#include <random>

#include "coherent/errors.h"
#include "coherent/linesum.h"

namespace coherent {
namespace {

TEST_CASE("one-dimensional base case") {
  const BinaryLineSumArray v = line_sum_array(1, 4, 2);
  CHECK(v.entries == std::vector<std::uint8_t>{1, 1, 0, 0});
  CHECK(verify_line_sums(v));
}

TEST_CASE("two-dimensional circulant") {
  const BinaryLineSumArray c = line_sum_array(2, 3, 2);
  CHECK(verify_line_sums(c));
  // Row and column sums are 2 by direct inspection as well.
  for (int i = 0; i < 3; ++i) {
    int row = 0, col = 0;
    for (int j = 0; j < 3; ++j) {
      row += c.entries[i * 3 + j];
      col += c.entries[j * 3 + i];
    }
    CHECK(row == 2);
    CHECK(col == 2);
  }
}

TEST_CASE("full and empty arrays") {
  const BinaryLineSumArray full = line_sum_array(3, 2, 2);
  CHECK(std::accumulate(full.entries.begin(), full.entries.end(), 0) == 8);
  CHECK(verify_line_sums(full));
  const BinaryLineSumArray empty = line_sum_array(3, 4, 0);
  CHECK(std::accumulate(empty.entries.begin(), empty.entries.end(), 0) == 0);
  CHECK(verify_line_sums(empty));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(line_sum_array(0, 3, 1), InputError);
  CHECK_THROWS_AS(line_sum_array(2, 3, 4), InputError);
  CHECK_THROWS_AS(line_sum_array(2, 3, -1), InputError);
}

TEST_CASE("hand arrays with wrong sums fail verification") {
  BinaryLineSumArray bad;
  bad.dim = 2;
  bad.side = 2;
  bad.line_sum = 1;
  bad.entries = {1, 0, 1, 0};  // columns sum to 2 and 0
  CHECK_FALSE(verify_line_sums(bad));
}

TEST_CASE("construction satisfies the property for every small shape") {
  long lines_checked = 0;
  for (int d = 1; d <= 4; ++d) {
    for (int n = 1; n <= 6; ++n) {
      for (int r = 0; r <= n; ++r) {
        const BinaryLineSumArray arr = line_sum_array(d, n, r);
        CHECK(verify_line_sums(arr));
        long per_axis = 1;
        for (int k = 0; k < d - 1; ++k) per_axis *= n;
        lines_checked += static_cast<long>(d) * per_axis;
      }
    }
  }
  CHECK(lines_checked > 3360);
}

TEST_CASE("a random bit flip always breaks some line") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = std::uniform_int_distribution<int>(1, 4)(rng);
    const int n = std::uniform_int_distribution<int>(2, 5)(rng);
    const int r = std::uniform_int_distribution<int>(0, n)(rng);
    BinaryLineSumArray arr = line_sum_array(d, n, r);
    const size_t cell = std::uniform_int_distribution<size_t>(
        0, arr.entries.size() - 1)(rng);
    arr.entries[cell] ^= 1;
    CHECK_FALSE(verify_line_sums(arr));
  }
}

}  // namespace
}  // namespace coherent
