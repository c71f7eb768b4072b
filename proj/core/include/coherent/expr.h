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

#ifndef COHERENT_EXPR_H_
#define COHERENT_EXPR_H_

#include <string>

#include "coherent/rational.h"

namespace coherent {

// Evaluates the small constant grammar used for dense feedback values in
// input files: numbers, + - * /, parentheses, log(x) and log2(x). Computed
// at 256-bit precision and returned as the exact rational of that value
// (better than 30 significant digits).
Rat EvalExpr(const std::string& text);

}  // namespace coherent

#endif  // COHERENT_EXPR_H_
