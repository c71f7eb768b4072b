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

#include "coherent/maxent.h"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "coherent/errors.h"
#include "coherent/simplex.h"

namespace coherent {
namespace {

// Exact rational Gauss-Jordan solve of the square system rows * q = rhs.
// Returns false when singular.
bool SolveExact(std::vector<std::vector<Rat>> a, std::vector<Rat> rhs,
                std::vector<Rat>& out) {
  const int n = static_cast<int>(rhs.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return false;
    std::swap(a[col], a[piv]);
    std::swap(rhs[col], rhs[piv]);
    const Rat p = a[col][col];
    for (Rat& v : a[col]) v /= p;
    rhs[col] /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rat f = a[r][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  out = std::move(rhs);
  return true;
}

struct ReducedSystem {
  std::vector<int> free;          // messages off the forced zeros
  std::vector<int> retained;      // independent row indices
  // Exact rows restricted to the free support, augmented with targets.
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> targets;
  bool inconsistent = false;
};

// Restricts rows to the free support and keeps a maximal independent subset
// of the augmented rows, reducing against the normalization row first so
// constant rows drop out.
ReducedSystem ReduceRows(const MomentConstraints& constraints,
                         const std::vector<int>& forced) {
  ReducedSystem rs;
  const int size = constraints.space->size();
  std::vector<bool> is_forced(size, false);
  for (int m : forced) is_forced[m] = true;
  for (int m = 0; m < size; ++m) {
    if (!is_forced[m]) rs.free.push_back(m);
  }
  const int nf = static_cast<int>(rs.free.size());

  std::vector<std::vector<Rat>> basis;
  std::vector<int> leads;
  auto reduce = [&](std::vector<Rat>& row) {
    for (size_t i = 0; i < basis.size(); ++i) {
      const Rat f = row[leads[i]];
      if (f == 0) continue;
      for (int c = 0; c <= nf; ++c) row[c] -= f * basis[i][c];
    }
  };
  auto lead_of = [&](const std::vector<Rat>& row) {
    for (int c = 0; c <= nf; ++c) {
      if (row[c] != 0) return c;
    }
    return -1;
  };
  std::vector<Rat> ones(nf + 1, Rat(1));
  basis.push_back(std::move(ones));
  leads.push_back(0);

  for (size_t k = 0; k < constraints.rows.size(); ++k) {
    std::vector<Rat> row(nf + 1);
    for (int j = 0; j < nf; ++j) {
      row[j] = constraints.rows[k].fn.value_at(rs.free[j]);
    }
    row[nf] = constraints.rows[k].target;
    std::vector<Rat> original = row;
    reduce(row);
    const int lead = lead_of(row);
    if (lead < 0) continue;
    if (lead == nf) {
      rs.inconsistent = true;  // 0 = nonzero
      return rs;
    }
    const Rat p = row[lead];
    for (Rat& v : row) v /= p;
    basis.push_back(std::move(row));
    leads.push_back(lead);
    rs.retained.push_back(static_cast<int>(k));
    original.pop_back();
    rs.targets.push_back(constraints.rows[k].target);
    rs.rows.push_back(std::move(original));
  }
  return rs;
}

bool AllZeroTargetIndicators(const MomentConstraints& constraints) {
  for (const auto& row : constraints.rows) {
    if (!row.fn.indicator() || row.target != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<int> forced_zero_support(const MomentConstraints& constraints) {
  const int size = constraints.space->size();
  if (AllZeroTargetIndicators(constraints)) {
    // Each indicator row with target zero forces exactly its cells; the
    // uniform distribution on the complement is feasible, so nothing else
    // is forced.
    std::vector<bool> forced(size, false);
    for (const auto& row : constraints.rows) {
      for (int c : row.fn.cells()) forced[c] = true;
    }
    std::vector<int> out;
    for (int m = 0; m < size; ++m) {
      if (forced[m]) out.push_back(m);
    }
    if (static_cast<int>(out.size()) == size) {
      throw InternalError("all messages forced to zero");
    }
    return out;
  }

  HPolytope poly = HPolytope::Simplex(size);
  for (const auto& row : constraints.rows) {
    poly.add_equality(row.fn.dense(size), row.target);
  }
  std::vector<int> out;
  std::vector<Rat> objective(size, Rat(0));
  for (int m = 0; m < size; ++m) {
    if (constraints.eta && constraints.eta->in_support(m)) continue;
    objective[m] = 1;
    const LpResult res = solve_lp(poly, objective, LpSense::kMax);
    objective[m] = 0;
    if (res.status != LpStatus::kOptimal) {
      throw InternalError(
          "plausible set is empty; constraints do not come from a valid "
          "data-generating process");
    }
    if (res.value == 0) out.push_back(m);
  }
  return out;
}

MaxEntSolution max_entropy(const MomentConstraints& constraints,
                           const MaxEntOptions& options) {
  const int size = constraints.space->size();
  MaxEntSolution sol;
  sol.forced_zeros = forced_zero_support(constraints);
  ReducedSystem rs = ReduceRows(constraints, sol.forced_zeros);
  if (rs.inconsistent) {
    throw InternalError("inconsistent moment constraints");
  }
  sol.retained_rows = rs.retained;
  const int nf = static_cast<int>(rs.free.size());
  const int nr = static_cast<int>(rs.rows.size());

  // Constraint-free on the free support: uniform, exactly.
  if (nr == 0) {
    sol.belief = Distribution::Uniform(constraints.space, rs.free);
    sol.exact = true;
    sol.entropy = std::log(static_cast<double>(nf));
    sol.duals = {1.0 - std::log(static_cast<double>(nf))};
    sol.kkt_residual = 0.0;
    return sol;
  }

  // Pinned case: rows plus normalization identify a single point, which must
  // be eta restricted to the free support. Solve it exactly.
  if (nr + 1 >= nf) {
    std::vector<std::vector<Rat>> square;
    std::vector<Rat> rhs;
    // Try to pick nf independent rows out of (normalization + rows).
    std::vector<std::vector<Rat>> all;
    all.push_back(std::vector<Rat>(nf, Rat(1)));
    std::vector<Rat> all_rhs{Rat(1)};
    for (int k = 0; k < nr; ++k) {
      all.push_back(rs.rows[k]);
      all_rhs.push_back(rs.targets[k]);
    }
    // The reduced rows are independent together with the normalization row,
    // so rank == nf exactly when nr + 1 == nf.
    if (nr + 1 == nf) {
      std::vector<Rat> q;
      if (SolveExact(all, all_rhs, q)) {
        bool nonneg = true;
        for (const Rat& v : q) {
          if (v < 0) nonneg = false;
        }
        if (nonneg) {
          std::vector<Rat> full(size, Rat(0));
          for (int j = 0; j < nf; ++j) full[rs.free[j]] = q[j];
          sol.belief = Distribution::Exact(constraints.space, std::move(full));
          sol.exact = true;
          double h = 0;
          for (int j = 0; j < nf; ++j) {
            const double w = ToDouble(q[j]);
            if (w > 0) h -= w * std::log(w);
          }
          sol.entropy = h;
          // Stationarity multipliers exist because the rows span the free
          // coordinates; recover them by least squares for the report.
          Eigen::MatrixXd a(nf, nr + 1);
          Eigen::VectorXd b(nf);
          for (int j = 0; j < nf; ++j) {
            a(j, 0) = 1.0;
            for (int k = 0; k < nr; ++k) a(j, 1 + k) = ToDouble(rs.rows[k][j]);
            const double w = ToDouble(q[j]);
            b(j) = w > 0 ? std::log(w) + 1.0 : 0.0;
          }
          Eigen::VectorXd lam = a.colPivHouseholderQr().solve(b);
          sol.duals.assign(lam.data(), lam.data() + lam.size());
          sol.kkt_residual = (a * lam - b).cwiseAbs().maxCoeff();
          return sol;
        }
      }
    }
    // Over-determined but consistent systems fall through to the dual
    // solver; ReduceRows keeps them independent so this happens only when
    // nr + 1 == nf failed the sign check, which valid inputs cannot reach.
  }

  // Dual Newton on lambda for q_m = exp(sum_k lambda_k f_km) / Z.
  // Rows are shifted and scaled to unit range for conditioning; duals are
  // mapped back to the original rows afterwards.
  std::vector<std::vector<double>> f(nr, std::vector<double>(nf));
  std::vector<double> shift(nr), scale(nr), t(nr);
  for (int k = 0; k < nr; ++k) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int j = 0; j < nf; ++j) {
      const double v = ToDouble(rs.rows[k][j]);
      f[k][j] = v;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    shift[k] = lo;
    scale[k] = hi - lo > 0 ? hi - lo : 1.0;
    for (int j = 0; j < nf; ++j) f[k][j] = (f[k][j] - shift[k]) / scale[k];
    t[k] = (ToDouble(rs.targets[k]) - shift[k]) / scale[k];
  }

  Eigen::VectorXd lambda = Eigen::VectorXd::Zero(nr);
  std::vector<double> q(nf);
  double log_z = 0;
  auto eval = [&](const Eigen::VectorXd& lam, std::vector<double>& qv,
                  double& lz) {
    double wmax = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < nf; ++j) {
      double w = 0;
      for (int k = 0; k < nr; ++k) w += lam(k) * f[k][j];
      qv[j] = w;
      wmax = std::max(wmax, w);
    }
    double z = 0;
    for (int j = 0; j < nf; ++j) z += std::exp(qv[j] - wmax);
    lz = wmax + std::log(z);
    for (int j = 0; j < nf; ++j) qv[j] = std::exp(qv[j] - lz);
  };
  auto dual_value = [&](const Eigen::VectorXd& lam) {
    std::vector<double> qv(nf);
    double lz;
    eval(lam, qv, lz);
    double v = lz;
    for (int k = 0; k < nr; ++k) v -= lam(k) * t[k];
    return v;
  };
  auto grad_norm = [&](const Eigen::VectorXd& lam) {
    std::vector<double> qv(nf);
    double lz;
    eval(lam, qv, lz);
    double norm = 0;
    for (int k = 0; k < nr; ++k) {
      double e = 0;
      for (int j = 0; j < nf; ++j) e += qv[j] * f[k][j];
      norm = std::max(norm, std::abs(e - t[k]));
    }
    return norm;
  };

  int iter = 0;
  double residual = std::numeric_limits<double>::infinity();
  for (; iter < options.max_iter; ++iter) {
    eval(lambda, q, log_z);
    Eigen::VectorXd g(nr);
    for (int k = 0; k < nr; ++k) {
      double e = 0;
      for (int j = 0; j < nf; ++j) e += q[j] * f[k][j];
      g(k) = e - t[k];
    }
    residual = 0;
    for (int k = 0; k < nr; ++k) {
      residual = std::max(residual, std::abs(g(k)) * scale[k]);
    }
    if (residual <= options.tol) break;

    Eigen::MatrixXd h(nr, nr);
    for (int k = 0; k < nr; ++k) {
      for (int l = k; l < nr; ++l) {
        double c = 0;
        for (int j = 0; j < nf; ++j) c += q[j] * f[k][j] * f[l][j];
        double ek = 0, el = 0;
        for (int j = 0; j < nf; ++j) {
          ek += q[j] * f[k][j];
          el += q[j] * f[l][j];
        }
        h(k, l) = h(l, k) = c - ek * el;
      }
    }
    Eigen::VectorXd step;
    bool newton_ok = false;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(
        h + 1e-14 * Eigen::MatrixXd::Identity(nr, nr));
    if (ldlt.info() == Eigen::Success) {
      step = ldlt.solve(-g);
      newton_ok = step.allFinite() && g.dot(step) < 0;
    }
    if (!newton_ok) step = -g;  // gradient fallback on bad curvature

    // Armijo on the dual, with a gradient-decrease fallback: near the
    // optimum the dual value is flat to machine precision while the Newton
    // step still shrinks the gradient quadratically.
    const double base = dual_value(lambda);
    const double base_grad = g.cwiseAbs().maxCoeff();
    const double slope = g.dot(step);
    double alpha = 1.0;
    for (int bt = 0; bt < 60; ++bt) {
      const Eigen::VectorXd cand = lambda + alpha * step;
      if (dual_value(cand) <= base + 1e-4 * alpha * slope ||
          grad_norm(cand) <= 0.9 * base_grad) {
        break;
      }
      alpha /= 2;
    }
    lambda += alpha * step;
  }
  eval(lambda, q, log_z);
  residual = 0;
  for (int k = 0; k < nr; ++k) {
    double e = 0;
    for (int j = 0; j < nf; ++j) e += q[j] * f[k][j];
    residual = std::max(residual, std::abs(e - t[k]) * scale[k]);
  }
  if (residual > options.tol) {
    std::vector<double> best(size, 0.0);
    for (int j = 0; j < nf; ++j) best[rs.free[j]] = q[j];
    throw ConvergenceError("entropy solver did not reach tolerance " +
                               std::to_string(options.tol) + " (residual " +
                               std::to_string(residual) + ")",
                           residual, std::move(best));
  }

  std::vector<double> full(size, 0.0);
  double h_val = 0;
  for (int j = 0; j < nf; ++j) {
    full[rs.free[j]] = q[j];
    if (q[j] > 0) h_val -= q[j] * std::log(q[j]);
  }
  // Renormalize away accumulated rounding before constructing.
  double mass = 0;
  for (double w : full) mass += w;
  for (double& w : full) w /= mass;
  sol.belief = Distribution::Float(constraints.space, std::move(full));
  sol.exact = false;
  sol.entropy = h_val;
  sol.iterations = iter;
  sol.kkt_residual = residual;
  // Map duals back to the original row scale; the shifts fold into the
  // normalization multiplier.
  double log_z_orig = log_z;
  sol.duals.assign(1 + nr, 0.0);
  for (int k = 0; k < nr; ++k) {
    sol.duals[1 + k] = lambda(k) / scale[k];
    log_z_orig += lambda(k) * shift[k] / scale[k];
  }
  sol.duals[0] = 1.0 - log_z_orig;
  return sol;
}

KktReport verify_kkt(const MaxEntSolution& solution,
                     const MomentConstraints& constraints) {
  KktReport report;
  const Distribution& q = solution.belief;
  const int size = constraints.space->size();
  if (q.size() != size) throw InputError("solution/constraints size mismatch");

  if (q.exact()) {
    // Feasibility of exact beliefs is decided in exact arithmetic.
    Rat worst = 0;
    for (const auto& row : constraints.rows) {
      Rat e = 0;
      for (int m = 0; m < size; ++m) {
        if (q.r(m) != 0) e += q.r(m) * row.fn.value_at(m);
      }
      const Rat gap = abs(e - row.target);
      if (gap > worst) worst = gap;
    }
    report.primal_residual = ToDouble(worst);
  } else {
    double norm = 0;
    for (int m = 0; m < size; ++m) norm += q.f(m);
    report.primal_residual = std::abs(norm - 1.0);
    for (const auto& row : constraints.rows) {
      double e = 0;
      for (int m = 0; m < size; ++m) {
        const double w = q.f(m);
        if (w != 0) e += w * ToDouble(row.fn.value_at(m));
      }
      report.primal_residual =
          std::max(report.primal_residual, std::abs(e - ToDouble(row.target)));
    }
  }

  for (int m = 0; m < size; ++m) {
    const double w = q.f(m);
    if (w <= 0) continue;
    double rhs = solution.duals.empty() ? 0.0 : solution.duals[0];
    for (size_t k = 0; k < solution.retained_rows.size(); ++k) {
      rhs += solution.duals[1 + k] *
             ToDouble(constraints.rows[solution.retained_rows[k]].fn.value_at(m));
    }
    report.stationarity_residual =
        std::max(report.stationarity_residual, std::abs(std::log(w) + 1.0 - rhs));
  }

  if (constraints.eta) {
    double s = 0;
    for (int m = 0; m < size; ++m) {
      const double qm = q.f(m);
      const double em = constraints.eta->f(m);
      if (qm > 0) {
        s += (qm - em) * std::log(qm);
      } else if (em > 0) {
        s = std::numeric_limits<double>::infinity();
        break;
      }
    }
    report.eta_identity = s;
  }
  return report;
}

}  // namespace coherent
