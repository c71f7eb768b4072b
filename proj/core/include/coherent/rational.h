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

#ifndef COHERENT_RATIONAL_H_
#define COHERENT_RATIONAL_H_

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace coherent {

// Exact rational scalar. All equilibrium and polytope computations run on
// this type; floating point appears only inside the entropy solver and in
// reports. The conversion boundary is one-directional: Rat -> double.
using Rat = mpq_class;
using Int = mpz_class;

// Parses "7", "-7/2", "0.25" or "1.5e-3" into an exact rational.
// Decimal strings are exact (no binary rounding).
Rat RatFromString(const std::string& s);

// "num/den", or just "num" when the denominator is 1.
std::string RatToString(const Rat& r);

double ToDouble(const Rat& r);

// Exact dyadic rational equal to the IEEE double. Finite inputs only.
Rat RatFromDouble(double x);

Int LcmOfDenominators(std::span<const Rat> values);

// Best rational approximation with |result - x| <= max_err and the smallest
// denominator among such approximants (continued-fraction convergents and
// intermediate fractions).
Rat ContinuedFractionRound(const Rat& x, const Rat& max_err);

bool IsInteger(const Rat& r);

// Canonicalized num/den construction. Raw mpq_class(num, den) leaves the
// value un-normalized, which breaks exact comparisons downstream.
inline Rat MakeRat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace coherent

#endif  // COHERENT_RATIONAL_H_
