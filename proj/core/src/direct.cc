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

#include "coherent/direct.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include "coherent/errors.h"

namespace coherent {
namespace {

// Decides sum_m (p_m - q_m) log q_m == 0 exactly through the integer
// identity prod_m q_m^{L (p_m - q_m)} = 1, provided supp(p) is inside
// supp(q) and the involved integers stay moderate. nullopt when the exact
// route is not applicable.
std::optional<bool> ExactLogBalance(const Distribution& q,
                                    const Distribution& p) {
  if (!q.exact() || !p.exact()) return std::nullopt;
  std::vector<Rat> all;
  for (int m = 0; m < q.size(); ++m) {
    all.push_back(q.r(m));
    all.push_back(p.r(m));
  }
  const Int big_l = LcmOfDenominators(all);
  if (mpz_sizeinbase(big_l.get_mpz_t(), 2) > 40) return std::nullopt;

  Int lhs = 1, rhs = 1;
  size_t bits = 0;
  for (int m = 0; m < q.size(); ++m) {
    if (!(q.r(m) > 0)) {
      if (p.r(m) > 0) return false;  // log 0 with positive weight
      continue;
    }
    Rat er = Rat(big_l) * (p.r(m) - q.r(m));
    if (!IsInteger(er)) throw InternalError("non-integer exponent");
    Int e = er.get_num();
    if (e == 0) continue;
    const bool pos = e > 0;
    if (!pos) e = -e;
    if (!e.fits_ulong_p()) return std::nullopt;
    const unsigned long ue = e.get_ui();
    const Int num = q.r(m).get_num();
    const Int den = q.r(m).get_den();
    bits += ue * (mpz_sizeinbase(num.get_mpz_t(), 2) +
                  mpz_sizeinbase(den.get_mpz_t(), 2));
    if (bits > 4000000) return std::nullopt;
    Int pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), ue);
    mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), ue);
    if (pos) {
      lhs *= pn;
      rhs *= pd;
    } else {
      lhs *= pd;
      rhs *= pn;
    }
  }
  return lhs == rhs;
}

double LogExpectationGap(const Distribution& q, const Distribution& p) {
  // E_p[log q] - E_q[log q]; +inf when p escapes supp(q).
  double gap = 0;
  for (int m = 0; m < q.size(); ++m) {
    const double pm = p.f(m);
    const double qm = q.f(m);
    const double diff = pm - qm;
    if (diff == 0) continue;
    if (qm <= 0) {
      if (pm > 0) return std::numeric_limits<double>::infinity();
      continue;
    }
    gap += diff * std::log(qm);
  }
  return gap;
}

bool SupportInside(const Distribution& inner, const Distribution& outer) {
  for (int m = 0; m < inner.size(); ++m) {
    const bool inner_pos =
        inner.exact() ? inner.r(m) > 0 : inner.f(m) > 1e-12;
    if (!inner_pos) continue;
    const bool outer_pos = outer.exact() ? outer.r(m) > 0 : outer.f(m) > 0;
    if (!outer_pos) return false;
  }
  return true;
}

}  // namespace

CanInduceReport can_induce(const Distribution& q, const Distribution& eta,
                           double tol) {
  if (!q.space()->same_labels(*eta.space())) {
    throw InputError("belief and process are over different message spaces");
  }
  CanInduceReport r;
  r.support_ok = SupportInside(eta, q);
  const std::optional<bool> exact = ExactLogBalance(q, eta);
  if (exact.has_value()) {
    r.exact = true;
    r.expectation_ok = *exact;
    r.expectation_gap = r.expectation_ok ? 0.0 : LogExpectationGap(q, eta);
  } else {
    r.expectation_gap = LogExpectationGap(q, eta);
    r.expectation_ok = std::abs(r.expectation_gap) <= tol;
  }
  r.ok = r.support_ok && r.expectation_ok;
  return r;
}

std::vector<FeedbackFunction> inducing_feedback(const Distribution& q) {
  const int size = q.size();
  std::vector<Rat> row(size, Rat(0));
  std::vector<int> zeros;
  bool any_positive = false;
  for (int m = 0; m < size; ++m) {
    const double w = q.f(m);
    if (w > 0) {
      row[m] = RatFromDouble(std::log(w) + 1.0);
      any_positive = true;
    } else {
      zeros.push_back(m);
    }
  }
  if (!any_positive) throw InputError("belief has empty support");
  std::vector<FeedbackFunction> feedback;
  feedback.push_back(FeedbackFunction::Dense(std::move(row)));
  for (int m : zeros) {
    feedback.push_back(FeedbackFunction::Indicator({m}));
  }
  return feedback;
}

DirectCertificate direct_certificate(const Game& game, const Distribution& mu,
                                     const Distribution& q, double tol) {
  if (!mu.space()->same_labels(*game.action_space()) ||
      !q.space()->same_labels(*game.action_space())) {
    throw InputError("direct implementation runs on the action space");
  }
  DirectCertificate cert;
  cert.outcome = mu;
  cert.witness = q;

  const CeCheck ce = is_correlated_equilibrium(game, q, q.exact() ? 0.0 : tol);
  if (!ce.is_ce) {
    cert.reasons.push_back("witness is not a correlated equilibrium");
  }
  cert.support_ok = SupportInside(mu, q);
  if (!cert.support_ok) {
    cert.reasons.push_back("outcome support escapes the witness support");
  }

  const EntropyReport er = entropy_report(mu, q);
  cert.level_residual = er.level_residual;
  bool level_ok;
  const std::optional<bool> exact = ExactLogBalance(q, mu);
  if (exact.has_value() && cert.support_ok) {
    level_ok = *exact;
  } else {
    level_ok = std::isfinite(er.level_residual) &&
               std::abs(er.level_residual) <= tol;
  }
  if (!level_ok) {
    cert.reasons.push_back(
        "outcome is off the witness cross-entropy level set");
  }
  if (!cert.reasons.empty()) return cert;

  cert.feedback = inducing_feedback(q);
  PSDGP dgp(game.action_space(), mu, cert.feedback);
  const StrategyProfile obedient = StrategyProfile::Obedient(game.action_space());
  cert.end_to_end = check_implementation(game, dgp, obedient, mu,
                                         std::max(tol, 1e-8));
  if (!cert.end_to_end->pass) {
    cert.reasons.push_back("end-to-end verification failed");
    return cert;
  }
  cert.accepted = true;
  return cert;
}

namespace {

// Prime exponent vector by trial division; large leftover primes are kept
// verbatim. nullopt when a composite remainder resists factoring.
std::optional<std::map<Int, long>> FactorInt(Int n) {
  if (n <= 0) return std::nullopt;
  std::map<Int, long> f;
  for (unsigned long p = 2; p <= 1000000 && Int(p) * Int(p) <= n; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++f[Int(p)];
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    }
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return std::nullopt;
    ++f[n];
  }
  return f;
}

std::optional<std::map<Int, long>> FactorRat(const Rat& r) {
  auto num = FactorInt(r.get_num());
  auto den = FactorInt(r.get_den());
  if (!num || !den) return std::nullopt;
  for (const auto& [p, e] : *den) (*num)[p] -= e;
  return num;
}

}  // namespace

UniqueCeConstraint unique_ce_linear_constraint(
    const Game& game, const VertexEnumOptions& options) {
  UniqueCeConstraint out;
  const std::vector<std::vector<Rat>> verts =
      enumerate_vertices(ce_polytope(game), options);
  if (verts.size() != 1) return out;
  out.unique = true;
  Distribution ce = Distribution::Exact(game.action_space(), verts[0]);
  out.ce = ce;
  out.log_coefficients.assign(game.num_profiles(), 0.0);
  std::vector<int> supp = ce.support();
  for (int a : supp) out.log_coefficients[a] = std::log(ce.f(a));

  // Integer normalization. The constraint E_mu[log q*] = E_{q*}[log q*]
  // collapses to integer coefficients when the supported entries are powers
  // of one rational ratio g: with q*_a = q*_ref g^{e_a},
  //   sum_a e_a mu_a = sum_a e_a q*_a.
  const int ref = supp.back();
  std::vector<std::map<Int, long>> diffs(supp.size());
  for (size_t i = 0; i < supp.size(); ++i) {
    auto fa = FactorRat(ce.r(supp[i]) / ce.r(ref));
    if (!fa) return out;
    diffs[i] = std::move(*fa);
    std::erase_if(diffs[i], [](const auto& kv) { return kv.second == 0; });
  }
  bool all_trivial = true;
  for (const auto& d : diffs) {
    if (!d.empty()) all_trivial = false;
  }
  UniqueCeConstraint::IntegerForm form;
  form.coefficients.assign(game.num_profiles(), Int(0));
  if (all_trivial) {
    form.vacuous = true;  // uniform q*: the level-set condition is 0 = 0
    form.rhs = 0;
    out.integer_form = form;
    return out;
  }
  // Primitive direction of the first nontrivial exponent vector.
  size_t pivot = 0;
  while (diffs[pivot].empty()) ++pivot;
  std::map<Int, long> v0 = diffs[pivot];
  long g = 0;
  for (const auto& [p, e] : v0) g = std::gcd(g, std::labs(e));
  for (auto& [p, e] : v0) e /= g;
  const auto multiple_of = [&](const std::map<Int, long>& d,
                               long& factor) -> bool {
    if (d.empty()) {
      factor = 0;
      return true;
    }
    if (d.size() != v0.size()) return false;
    factor = 0;
    for (const auto& [p, e] : d) {
      auto it = v0.find(p);
      if (it == v0.end() || e % it->second != 0) return false;
      const long f = e / it->second;
      if (factor == 0) {
        factor = f;
      } else if (factor != f) {
        return false;
      }
    }
    return true;
  };
  std::vector<long> exps(supp.size(), 0);
  for (size_t i = 0; i < supp.size(); ++i) {
    if (!multiple_of(diffs[i], exps[i])) return out;
  }
  // Normalize: first nonzero coefficient positive, gcd one.
  long norm = 0;
  for (long e : exps) norm = std::gcd(norm, std::labs(e));
  long sign = 0;
  for (long e : exps) {
    if (e != 0) {
      sign = e > 0 ? 1 : -1;
      break;
    }
  }
  Rat rhs = 0;
  for (size_t i = 0; i < supp.size(); ++i) {
    const long c = exps[i] / norm * sign;
    form.coefficients[supp[i]] = Int(c);
    rhs += Rat(static_cast<long>(c)) * ce.r(supp[i]);
  }
  form.rhs = rhs;
  out.integer_form = form;
  return out;
}

namespace {

Distribution ConvexCombination(const SpacePtr& space,
                               const std::vector<Rat>& a,
                               const std::vector<Rat>& b, const Rat& t) {
  std::vector<Rat> w(a.size());
  for (size_t i = 0; i < a.size(); ++i) w[i] = (1 - t) * a[i] + t * b[i];
  return Distribution::Exact(space, std::move(w));
}

}  // namespace

DirectSearchResult search_direct(const Game& game, const Distribution& mu,
                                 const DirectSearchOptions& options) {
  if (!mu.space()->same_labels(*game.action_space())) {
    throw InputError("outcome is not over this game's action profiles");
  }
  DirectSearchResult result;
  std::ostringstream diag;

  std::vector<std::vector<Rat>> verts;
  try {
    verts = enumerate_vertices(ce_polytope(game), options.enumeration);
  } catch (const BudgetError& e) {
    diag << "vertex enumeration hit its budget (" << e.what()
         << "); search is restricted to LP-reachable witnesses. ";
  }

  // Unique-CE shortcut: the level-set condition against q* is decisive.
  if (verts.size() == 1) {
    Distribution ce = Distribution::Exact(game.action_space(), verts[0]);
    DirectCertificate cert =
        direct_certificate(game, mu, ce, options.accept_tol);
    if (cert.accepted) {
      result.status = DirectSearchResult::Status::kFound;
      result.certificate = std::move(cert);
      result.diagnostics = "unique correlated equilibrium witness";
      return result;
    }
    result.status = DirectSearchResult::Status::kImpossible;
    result.certificate = std::move(cert);
    result.diagnostics =
        "the game has a unique correlated equilibrium and the outcome "
        "violates its level-set or support condition; no witness exists";
    return result;
  }

  // Vertices whose support covers the outcome; the residual g is finite on
  // segments between them.
  std::vector<const std::vector<Rat>*> covering;
  std::vector<double> g_at;
  double best_abs = std::numeric_limits<double>::infinity();
  for (const auto& v : verts) {
    Distribution q = Distribution::Exact(game.action_space(), v);
    if (!SupportInside(mu, q)) continue;
    const std::optional<bool> exact = ExactLogBalance(q, mu);
    if (exact.has_value() && *exact) {
      DirectCertificate cert =
          direct_certificate(game, mu, q, options.accept_tol);
      if (cert.accepted) {
        result.status = DirectSearchResult::Status::kFound;
        result.certificate = std::move(cert);
        result.diagnostics = "witness found at an extreme point";
        return result;
      }
    }
    const double g = LogExpectationGap(q, mu);
    if (std::abs(g) < best_abs) best_abs = std::abs(g);
    if (std::abs(g) <= options.root_tol) {
      DirectCertificate cert =
          direct_certificate(game, mu, q, options.accept_tol);
      if (cert.accepted) {
        result.status = DirectSearchResult::Status::kFound;
        result.certificate = std::move(cert);
        result.diagnostics = "witness found at an extreme point";
        return result;
      }
    }
    covering.push_back(&v);
    g_at.push_back(g);
  }
  diag << covering.size() << " covering vertices of " << verts.size() << ". ";

  // Root of g along a segment whose endpoints disagree in sign. Supports are
  // fixed on the open segment, so g is continuous there; bisection points
  // are dyadic, keeping every probed point an exact correlated equilibrium.
  auto bisect = [&](const std::vector<Rat>& lo_pt, double g_lo,
                    const std::vector<Rat>& hi_pt)
      -> std::optional<DirectCertificate> {
    Rat lo(0), hi(1);
    for (int it = 0; it < options.bisection_cap; ++it) {
      const Rat mid = (lo + hi) / 2;
      Distribution q =
          ConvexCombination(game.action_space(), lo_pt, hi_pt, mid);
      const double g = LogExpectationGap(q, mu);
      if (std::abs(g) <= options.root_tol) {
        DirectCertificate cert =
            direct_certificate(game, mu, q, options.accept_tol);
        if (cert.accepted) return cert;
        return std::nullopt;
      }
      if ((g < 0) == (g_lo < 0)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return std::nullopt;
  };

  for (size_t i = 0; i < covering.size(); ++i) {
    for (size_t j = i + 1; j < covering.size(); ++j) {
      if (!std::isfinite(g_at[i]) || !std::isfinite(g_at[j])) continue;
      if ((g_at[i] < 0) == (g_at[j] < 0)) continue;
      auto cert = bisect(*covering[i], g_at[i], *covering[j]);
      if (cert) {
        result.status = DirectSearchResult::Status::kFound;
        result.certificate = std::move(*cert);
        result.diagnostics = "witness found by level-set bisection";
        return result;
      }
    }
  }

  // Budgeted random interior sampling over the covering vertices, pairing
  // opposite signs with the vertices for a final bisection polish.
  if (covering.size() >= 2) {
    std::mt19937 rng(options.seed);
    std::uniform_int_distribution<int> weight(1, 64);
    for (int s = 0; s < options.samples; ++s) {
      std::vector<Rat> w(covering.size());
      Rat total = 0;
      for (auto& x : w) {
        x = weight(rng);
        total += x;
      }
      std::vector<Rat> point(game.num_profiles(), Rat(0));
      for (size_t i = 0; i < covering.size(); ++i) {
        const Rat share = w[i] / total;
        for (int a = 0; a < game.num_profiles(); ++a) {
          point[a] += share * (*covering[i])[a];
        }
      }
      Distribution q = Distribution::Exact(game.action_space(), point);
      const double g = LogExpectationGap(q, mu);
      if (std::abs(g) < best_abs) best_abs = std::abs(g);
      if (std::abs(g) <= options.root_tol) {
        DirectCertificate cert =
            direct_certificate(game, mu, q, options.accept_tol);
        if (cert.accepted) {
          result.status = DirectSearchResult::Status::kFound;
          result.certificate = std::move(cert);
          result.diagnostics = "witness found by interior sampling";
          return result;
        }
      }
      for (size_t i = 0; i < covering.size(); ++i) {
        if (!std::isfinite(g_at[i])) continue;
        if ((g < 0) == (g_at[i] < 0)) continue;
        auto cert = bisect(point, g, *covering[i]);
        if (cert) {
          result.status = DirectSearchResult::Status::kFound;
          result.certificate = std::move(*cert);
          result.diagnostics = "witness found by interior sampling";
          return result;
        }
      }
    }
  }

  diag << "no witness found; smallest |E_mu[log q] - E_q[log q]| seen "
       << best_abs << ". The search is sound but incomplete: absence of a "
       << "witness among sampled equilibria is not a proof of "
       << "non-implementability.";
  result.status = DirectSearchResult::Status::kNotFound;
  result.diagnostics = diag.str();
  return result;
}

}  // namespace coherent
