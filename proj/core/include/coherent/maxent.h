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

#ifndef COHERENT_MAXENT_H_
#define COHERENT_MAXENT_H_

#include <vector>

#include "coherent/distribution.h"
#include "coherent/psdgp.h"

namespace coherent {

struct MaxEntOptions {
  // Combined residual (moment feasibility, on the original row scale).
  double tol = 1e-10;
  int max_iter = 500;
};

// Solution of max H(q) over Delta_D. `duals[0]` is the multiplier of the
// normalization row; duals[1 + k] belongs to retained_rows[k]. On the free
// support, log q_m + 1 = duals[0] + sum_k duals[1+k] f^k_m.
struct MaxEntSolution {
  Distribution belief;
  std::vector<double> duals;
  std::vector<int> retained_rows;  // indices into MomentConstraints::rows
  std::vector<int> forced_zeros;   // messages at zero in every plausible q
  double entropy = 0.0;            // nats
  double kkt_residual = 0.0;
  int iterations = 0;
  bool exact = false;  // belief is exact (uniform-on-support or pinned)
};

// Messages forced to zero by the constraints: m is forced iff the exact
// maximum of q_m over Delta_D is zero. All-indicator systems with zero
// targets shortcut to the union of the indicator cells; otherwise one exact
// LP per message (skipping supp(eta), which is never forced).
std::vector<int> forced_zero_support(const MomentConstraints& constraints);

// Unique entropy maximizer over Delta_D. Forced zeros are eliminated
// exactly first; the remaining dual problem is solved by damped Newton with
// a gradient-ascent fallback. Returns an exact belief when the restricted
// problem is constraint-free (uniform) or pinned to a single point.
// Throws ConvergenceError (carrying the best iterate) past max_iter.
MaxEntSolution max_entropy(const MomentConstraints& constraints,
                           const MaxEntOptions& options = {});

struct KktReport {
  // max over rows (incl. normalization) of |sum_m q_m f_m - target|.
  double primal_residual = 0.0;
  // max over supp(q) of |log q_m + 1 - duals.f(m)|.
  double stationarity_residual = 0.0;
  // sum_m (q_m - eta_m) log q_m; zero at the optimum when eta is feasible.
  double eta_identity = 0.0;
};

KktReport verify_kkt(const MaxEntSolution& solution,
                     const MomentConstraints& constraints);

}  // namespace coherent

#endif  // COHERENT_MAXENT_H_
