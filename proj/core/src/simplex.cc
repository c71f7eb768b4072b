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

#include "coherent/simplex.h"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "coherent/errors.h"

namespace coherent {
namespace {

// Equality system in standard form after Gauss-Jordan reduction:
//   A x = b with b >= 0, x >= 0, A of full row rank.
// Variables 0..n0-1 are the polytope coordinates, the rest are slacks of
// the inequality rows.
struct StandardForm {
  int n0 = 0;
  int n_real = 0;
  std::vector<std::vector<Rat>> A;
  std::vector<Rat> b;
  bool inconsistent = false;
};

StandardForm BuildStandardForm(const HPolytope& poly) {
  if (!poly.nonneg) {
    throw InputError("solver requires a nonnegative ground set");
  }
  StandardForm sf;
  sf.n0 = poly.dim;

  // Reduce the equality rows to an independent set; inconsistency here means
  // the polytope is empty.
  std::vector<std::vector<Rat>> eq;
  for (const LinRow& row : poly.equalities) {
    if (static_cast<int>(row.a.size()) != poly.dim) {
      throw InputError("equality row dimension mismatch");
    }
    std::vector<Rat> r = row.a;
    r.push_back(row.rhs);
    eq.push_back(std::move(r));
  }
  int rank = 0;
  for (int col = 0; col < poly.dim && rank < static_cast<int>(eq.size());
       ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(eq.size()); ++r) {
      if (eq[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(eq[rank], eq[piv]);
    const Rat p = eq[rank][col];
    for (Rat& v : eq[rank]) v /= p;
    for (int r = 0; r < static_cast<int>(eq.size()); ++r) {
      if (r == rank || eq[r][col] == 0) continue;
      const Rat f = eq[r][col];
      for (int c = col; c <= poly.dim; ++c) eq[r][c] -= f * eq[rank][c];
    }
    ++rank;
  }
  for (int r = rank; r < static_cast<int>(eq.size()); ++r) {
    if (eq[r][poly.dim] != 0) {
      sf.inconsistent = true;
      return sf;
    }
  }
  eq.resize(rank);

  const int n_slack = static_cast<int>(poly.inequalities.size());
  sf.n_real = poly.dim + n_slack;
  for (auto& row : eq) {
    std::vector<Rat> a(sf.n_real, Rat(0));
    for (int c = 0; c < poly.dim; ++c) a[c] = row[c];
    Rat rhs = row[poly.dim];
    if (rhs < 0) {
      for (Rat& v : a) v = -v;
      rhs = -rhs;
    }
    sf.A.push_back(std::move(a));
    sf.b.push_back(std::move(rhs));
  }
  for (int k = 0; k < n_slack; ++k) {
    const LinRow& row = poly.inequalities[k];
    if (static_cast<int>(row.a.size()) != poly.dim) {
      throw InputError("inequality row dimension mismatch");
    }
    // a.x >= rhs  <=>  a.x - s = rhs, s >= 0.
    std::vector<Rat> a(sf.n_real, Rat(0));
    for (int c = 0; c < poly.dim; ++c) a[c] = row.a[c];
    a[poly.dim + k] = -1;
    Rat rhs = row.rhs;
    if (rhs < 0) {
      for (Rat& v : a) v = -v;
      rhs = -rhs;
    }
    sf.A.push_back(std::move(a));
    sf.b.push_back(std::move(rhs));
  }
  return sf;
}

// Dense exact tableau with explicit artificial columns. Column layout:
// 0 = rhs, 1..n_real = structural+slack variables, then one artificial per
// row. basis_[r] holds the variable id basic in row r (real ids are
// 0..n_real-1, artificial ids n_real..n_real+m-1).
class Tableau {
 public:
  explicit Tableau(const StandardForm& sf)
      : m_(static_cast<int>(sf.A.size())), n_real_(sf.n_real) {
    T_.assign(m_, std::vector<Rat>(1 + n_real_ + m_, Rat(0)));
    basis_.resize(m_);
    for (int r = 0; r < m_; ++r) {
      T_[r][0] = sf.b[r];
      for (int c = 0; c < n_real_; ++c) T_[r][1 + c] = sf.A[r][c];
      T_[r][1 + n_real_ + r] = 1;
      basis_[r] = n_real_ + r;
    }
  }

  int rows() const { return m_; }
  int num_real() const { return n_real_; }
  const std::vector<int>& basis() const { return basis_; }

  void Pivot(int row, int var) {
    const int col = 1 + var;
    const Rat p = T_[row][col];
    for (Rat& v : T_[row]) v /= p;
    for (int r = 0; r < m_; ++r) {
      if (r == row || T_[r][col] == 0) continue;
      const Rat f = T_[r][col];
      for (size_t c = 0; c < T_[r].size(); ++c) T_[r][c] -= f * T_[row][c];
    }
    if (!cost_.empty() && cost_[col] != 0) {
      const Rat f = cost_[col];
      for (size_t c = 0; c < cost_.size(); ++c) cost_[c] -= f * T_[row][c];
    }
    basis_[row] = var;
  }

  // Minimizes the sum of artificials with Bland's rule. Returns false when
  // the optimum is positive (infeasible system).
  bool Phase1() {
    cost_.assign(1 + n_real_ + m_, Rat(0));
    for (int r = 0; r < m_; ++r) {
      cost_[0] -= T_[r][0];
      for (int c = 1; c <= n_real_; ++c) cost_[c] -= T_[r][c];
    }
    RunBland();
    const bool feasible = cost_[0] == 0;
    cost_.clear();
    if (!feasible) return false;
    DriveOutArtificials();
    return true;
  }

  // Minimizes c(real vars) with Bland's rule from the current feasible
  // basis. Artificials never re-enter.
  LpStatus Phase2(const std::vector<Rat>& c) {
    cost_.assign(1 + n_real_ + m_, Rat(0));
    for (int v = 0; v < n_real_; ++v) cost_[1 + v] = c[v];
    for (int r = 0; r < m_; ++r) {
      const int bv = basis_[r];
      const Rat cb = bv < n_real_ ? c[bv] : Rat(0);
      if (cb == 0) continue;
      for (size_t col = 0; col < cost_.size(); ++col) {
        cost_[col] -= cb * T_[r][col];
      }
    }
    const bool bounded = RunBland();
    cost_.clear();
    return bounded ? LpStatus::kOptimal : LpStatus::kUnbounded;
  }

  std::vector<Rat> Solution(int n0) const {
    std::vector<Rat> x(n0, Rat(0));
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < n0) x[basis_[r]] = T_[r][0];
    }
    return x;
  }

  bool IsBasic(int var) const {
    for (int bv : basis_) {
      if (bv == var) return true;
    }
    return false;
  }

  // Leaving row for entering `var` under the lexicographic ratio test
  // anchored at reference variables `ref` (the starting basis, in row
  // order). Returns -1 when the column has no positive entry.
  int LexLeavingRow(int var, const std::vector<int>& ref) const {
    const int col = 1 + var;
    int best = -1;
    for (int r = 0; r < m_; ++r) {
      if (!(T_[r][col] > 0)) continue;
      if (best < 0) {
        best = r;
        continue;
      }
      // Compare rows r and best scaled by their pivot entries, over the
      // sequence (rhs, ref columns); both pivots are positive.
      const Rat& dr = T_[r][col];
      const Rat& db = T_[best][col];
      int cmp = CmpScaled(T_[r][0], dr, T_[best][0], db);
      for (int k = 0; cmp == 0 && k < m_; ++k) {
        const int rc = 1 + ref[k];
        cmp = CmpScaled(T_[r][rc], dr, T_[best][rc], db);
      }
      if (cmp < 0) best = r;
    }
    return best;
  }

 private:
  static int CmpScaled(const Rat& a, const Rat& da, const Rat& b,
                       const Rat& db) {
    const Rat lhs = a * db;
    const Rat rhs = b * da;
    return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
  }

  // Bland's rule on the current cost row. Returns false on unboundedness.
  bool RunBland() {
    while (true) {
      int enter = -1;
      for (int v = 0; v < n_real_; ++v) {
        if (cost_[1 + v] < 0) {
          enter = v;
          break;
        }
      }
      if (enter < 0) return true;
      const int col = 1 + enter;
      int leave = -1;
      for (int r = 0; r < m_; ++r) {
        if (!(T_[r][col] > 0)) continue;
        if (leave < 0) {
          leave = r;
          continue;
        }
        const Rat cand = T_[r][0] * T_[leave][col];
        const Rat cur = T_[leave][0] * T_[r][col];
        if (cand < cur ||
            (cand == cur && basis_[r] < basis_[leave])) {
          leave = r;
        }
      }
      if (leave < 0) return false;
      Pivot(leave, enter);
    }
  }

  // Replaces zero-level basic artificials by real variables. The reduced
  // system has full row rank, so a nonzero real entry always exists.
  void DriveOutArtificials() {
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < n_real_) continue;
      int enter = -1;
      for (int v = 0; v < n_real_; ++v) {
        if (T_[r][1 + v] != 0 && !IsBasic(v)) {
          enter = v;
          break;
        }
      }
      if (enter < 0) {
        throw InternalError("redundant row survived equality reduction");
      }
      Pivot(r, enter);
    }
  }

  int m_;
  int n_real_;
  std::vector<std::vector<Rat>> T_;
  std::vector<Rat> cost_;
  std::vector<int> basis_;
};

struct RatVecLess {
  bool operator()(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
      if (a[i] < b[i]) return true;
      if (b[i] < a[i]) return false;
    }
    return a.size() < b.size();
  }
};

}  // namespace

LpResult solve_lp(const HPolytope& poly, std::span<const Rat> objective,
                  LpSense sense) {
  if (static_cast<int>(objective.size()) != poly.dim) {
    throw InputError("objective dimension mismatch");
  }
  const StandardForm sf = BuildStandardForm(poly);
  LpResult out;
  if (sf.inconsistent) return out;
  Tableau tab(sf);
  if (!tab.Phase1()) return out;
  std::vector<Rat> c(sf.n_real, Rat(0));
  for (int i = 0; i < poly.dim; ++i) {
    c[i] = sense == LpSense::kMax ? -objective[i] : objective[i];
  }
  const LpStatus status = tab.Phase2(c);
  out.status = status;
  if (status != LpStatus::kOptimal) return out;
  out.point = tab.Solution(poly.dim);
  out.value = 0;
  for (int i = 0; i < poly.dim; ++i) out.value += objective[i] * out.point[i];
  return out;
}

std::vector<std::vector<Rat>> enumerate_vertices(
    const HPolytope& poly, const VertexEnumOptions& options) {
  if (poly.dim > options.max_dim) {
    throw BudgetError("vertex enumeration dimension guard exceeded (" +
                      std::to_string(poly.dim) + " > " +
                      std::to_string(options.max_dim) + ")");
  }
  const StandardForm sf = BuildStandardForm(poly);
  if (sf.inconsistent) return {};
  Tableau tab(sf);
  if (!tab.Phase1()) return {};

  const int n_real = tab.num_real();
  // The starting basis anchors the symbolic perturbation: a basis is
  // admissible iff its rows are lex-positive w.r.t. (rhs, start-basis
  // columns), and all such bases are connected by lex pivots.
  const std::vector<int> ref = tab.basis();

  std::set<std::vector<int>> visited;
  std::set<std::vector<Rat>, RatVecLess> vertices;
  long bases_explored = 0;

  auto basis_key = [&]() {
    std::vector<int> key = tab.basis();
    std::sort(key.begin(), key.end());
    return key;
  };
  auto record_vertex = [&]() {
    vertices.insert(tab.Solution(poly.dim));
    if (static_cast<int>(vertices.size()) > options.vertex_budget) {
      throw BudgetError("vertex budget exceeded (" +
                        std::to_string(options.vertex_budget) + ")");
    }
  };
  auto neighbor_moves = [&]() {
    std::vector<std::pair<int, int>> moves;  // (entering var, leaving row)
    for (int v = 0; v < n_real; ++v) {
      if (tab.IsBasic(v)) continue;
      const int row = tab.LexLeavingRow(v, ref);
      if (row < 0) {
        throw InputError("polytope is unbounded; vertex set is not finite");
      }
      moves.emplace_back(v, row);
    }
    return moves;
  };

  struct Frame {
    std::vector<std::pair<int, int>> moves;
    size_t next = 0;
    int undo_row = -1;
    int undo_var = -1;
  };

  visited.insert(basis_key());
  ++bases_explored;
  record_vertex();
  std::vector<Frame> stack;
  stack.push_back({neighbor_moves(), 0, -1, -1});

  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next < f.moves.size()) {
      const auto [var, row] = f.moves[f.next++];
      const int old_var = tab.basis()[row];
      tab.Pivot(row, var);
      std::vector<int> key = basis_key();
      if (visited.insert(std::move(key)).second) {
        if (++bases_explored > options.basis_budget) {
          throw BudgetError("basis budget exceeded (" +
                            std::to_string(options.basis_budget) + ")");
        }
        record_vertex();
        stack.push_back({neighbor_moves(), 0, row, old_var});
      } else {
        tab.Pivot(row, old_var);  // undo immediately
      }
    } else {
      if (f.undo_row >= 0) tab.Pivot(f.undo_row, f.undo_var);
      stack.pop_back();
    }
  }

  return {vertices.begin(), vertices.end()};
}

}  // namespace coherent
