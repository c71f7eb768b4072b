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

#ifndef COHERENT_DIRECT_H_
#define COHERENT_DIRECT_H_

#include <optional>
#include <string>
#include <vector>

#include "coherent/ce.h"
#include "coherent/entropy.h"
#include "coherent/game.h"
#include "coherent/psdgp.h"
#include "coherent/verifier.h"

namespace coherent {

struct CanInduceReport {
  bool ok = false;
  bool support_ok = false;      // supp(eta) subset of supp(q)
  bool expectation_ok = false;  // E_eta[log q] = E_q[log q]
  bool exact = false;           // expectation condition decided exactly
  double expectation_gap = 0.0;
};

// Necessary and sufficient conditions for q to arise as the maxent
// completion from eta under some feedback structure. When both inputs are
// exact and denominators are moderate, the expectation condition is decided
// exactly via the integer identity prod_m q_m^{L (eta_m - q_m)} = 1.
CanInduceReport can_induce(const Distribution& q, const Distribution& eta,
                           double tol = 1e-9);

// Feedback realizing the inducement: one dense row log q_m + 1 on supp(q)
// (zero elsewhere) plus an indicator per zero cell. For any eta with
// can_induce(q, eta), the maxent belief of (M, eta, F) is q.
std::vector<FeedbackFunction> inducing_feedback(const Distribution& q);

// Canonical direct-implementation certificate: witness belief q in CE, the
// target on q's cross-entropy level set through q, and an end-to-end check
// with obedient strategies on M = A.
struct DirectCertificate {
  bool accepted = false;
  Distribution outcome;
  Distribution witness;
  bool support_ok = false;
  double level_residual = 0.0;
  std::vector<FeedbackFunction> feedback;
  std::optional<ImplementationCertificate> end_to_end;
  std::vector<std::string> reasons;  // failed conditions, named
};

DirectCertificate direct_certificate(const Game& game, const Distribution& mu,
                                     const Distribution& q,
                                     double tol = 1e-9);

// Affine characterization of direct implementability for unique-CE games:
// supp(mu) within supp(q*) and E_mu[log q*] = E_{q*}[log q*]. The integer
// form exists when the q* entries are powers of a common rational ratio.
struct UniqueCeConstraint {
  bool unique = false;
  std::optional<Distribution> ce;
  std::vector<double> log_coefficients;  // log q*_a on supp, 0 elsewhere
  struct IntegerForm {
    std::vector<Int> coefficients;  // per profile; reference profile gets 0
    Rat rhs;
    bool vacuous = false;  // uniform q*: every supported mu qualifies
  };
  std::optional<IntegerForm> integer_form;
};

UniqueCeConstraint unique_ce_linear_constraint(
    const Game& game, const VertexEnumOptions& options = {});

struct DirectSearchOptions {
  VertexEnumOptions enumeration;
  int samples = 256;
  unsigned seed = 0;
  double root_tol = 1e-10;
  int bisection_cap = 200;
  double accept_tol = 1e-9;
};

// Sound, incomplete search for a witness CE whose level set contains mu:
// unique-CE shortcut, enumerated vertices, sign-change bisection between
// covering vertices, then seeded random interior sampling. kImpossible is
// returned only with a proof (unique CE and a violated affine condition).
struct DirectSearchResult {
  enum class Status { kFound, kImpossible, kNotFound };
  Status status = Status::kNotFound;
  std::optional<DirectCertificate> certificate;
  std::string diagnostics;
};

DirectSearchResult search_direct(const Game& game, const Distribution& mu,
                                 const DirectSearchOptions& options = {});

}  // namespace coherent

#endif  // COHERENT_DIRECT_H_
