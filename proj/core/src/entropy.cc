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

#include "coherent/entropy.h"

#include <cmath>
#include <limits>

#include "coherent/errors.h"

namespace coherent {

double shannon_entropy(const Distribution& p) {
  double h = 0;
  for (int i = 0; i < p.size(); ++i) {
    const double w = p.f(i);
    if (w > 0) h -= w * std::log(w);
  }
  return h;
}

EntropyReport entropy_report(const Distribution& mu, const Distribution& q) {
  if (mu.size() != q.size()) {
    throw InputError("distributions are over different ground sets");
  }
  EntropyReport r;
  r.entropy_mu = shannon_entropy(mu);
  r.entropy_q = shannon_entropy(q);
  double cross = 0;
  for (int i = 0; i < mu.size(); ++i) {
    const double w = mu.f(i);
    if (w == 0) continue;
    const double qi = q.f(i);
    if (qi <= 0) {
      r.support_violation = true;
      cross = std::numeric_limits<double>::infinity();
      break;
    }
    cross -= w * std::log(qi);
  }
  r.cross_entropy = cross;
  r.kl = cross - r.entropy_mu;
  r.level_residual = cross - r.entropy_q;
  return r;
}

}  // namespace coherent
