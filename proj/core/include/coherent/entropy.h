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

#ifndef COHERENT_ENTROPY_H_
#define COHERENT_ENTROPY_H_

#include "coherent/distribution.h"

namespace coherent {

// Entropic quantities in nats, with the 0 log 0 = 0 convention. When mu puts
// mass outside supp(q) the cross entropy and KL divergence are +infinity and
// the support flag is set.
struct EntropyReport {
  double entropy_mu = 0.0;       // H(mu)
  double entropy_q = 0.0;        // H(q)
  double cross_entropy = 0.0;    // H(mu, q) = -E_mu[log q]
  double kl = 0.0;               // KL(mu || q)
  double level_residual = 0.0;   // H(mu, q) - H(q)
  bool support_violation = false;
};

double shannon_entropy(const Distribution& p);

EntropyReport entropy_report(const Distribution& mu, const Distribution& q);

}  // namespace coherent

#endif  // COHERENT_ENTROPY_H_
