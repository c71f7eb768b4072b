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

#include "coherent/psdgp.h"

#include <algorithm>

#include "coherent/errors.h"

namespace coherent {

FeedbackFunction FeedbackFunction::Indicator(std::vector<int> cells) {
  FeedbackFunction f;
  f.indicator_ = true;
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  f.cells_ = std::move(cells);
  return f;
}

FeedbackFunction FeedbackFunction::Dense(std::vector<Rat> values) {
  FeedbackFunction f;
  f.indicator_ = false;
  f.values_ = std::move(values);
  return f;
}

Rat FeedbackFunction::value_at(int m) const {
  if (indicator_) {
    return std::binary_search(cells_.begin(), cells_.end(), m) ? Rat(1)
                                                               : Rat(0);
  }
  if (m < 0 || m >= static_cast<int>(values_.size())) {
    throw InputError("feedback function undefined at message " +
                     std::to_string(m));
  }
  return values_[m];
}

std::vector<Rat> FeedbackFunction::dense(int size) const {
  std::vector<Rat> out(size, Rat(0));
  if (indicator_) {
    for (int c : cells_) {
      if (c < 0 || c >= size) {
        throw InputError("indicator cell outside the message space");
      }
      out[c] = 1;
    }
    return out;
  }
  if (static_cast<int>(values_.size()) != size) {
    throw InputError("dense feedback function is not total over M");
  }
  return values_;
}

PSDGP::PSDGP(SpacePtr space_in, Distribution eta_in,
             std::vector<FeedbackFunction> feedback_in)
    : space(std::move(space_in)),
      eta(std::move(eta_in)),
      feedback(std::move(feedback_in)) {
  if (!eta.space()->same_labels(*space)) {
    throw InputError("eta is not over the declared message space");
  }
  for (const FeedbackFunction& f : feedback) {
    f.dense(space->size());  // totality check
  }
}

MomentConstraints build_constraints(const PSDGP& dgp) {
  MomentConstraints mc;
  mc.space = dgp.space;
  mc.eta = dgp.eta;
  const int size = dgp.space->size();
  for (size_t k = 0; k < dgp.feedback.size(); ++k) {
    const FeedbackFunction& f = dgp.feedback[k];
    Rat target = 0;
    if (dgp.eta.exact()) {
      for (int m = 0; m < size; ++m) {
        if (dgp.eta.r(m) != 0) target += dgp.eta.r(m) * f.value_at(m);
      }
    } else {
      // Exact expectation of the dyadic weights.
      for (int m = 0; m < size; ++m) {
        const double w = dgp.eta.f(m);
        if (w != 0) target += RatFromDouble(w) * f.value_at(m);
      }
    }
    mc.rows.push_back({f, std::move(target), static_cast<int>(k)});
  }
  return mc;
}

namespace {

// Incremental exact row-echelon basis for augmented rows (values | target).
class EchelonBasis {
 public:
  explicit EchelonBasis(int width) : width_(width) {}

  // Reduces `row` in place; returns true when it is independent of the
  // current basis (and absorbs it).
  bool Insert(std::vector<Rat> row) {
    Reduce(row);
    int lead = Lead(row);
    if (lead < 0) return false;
    const Rat p = row[lead];
    for (Rat& v : row) v /= p;
    rows_.push_back(std::move(row));
    leads_.push_back(lead);
    return true;
  }

  // True when `row` lies in the span of the inserted rows.
  bool InSpan(std::vector<Rat> row) const {
    Reduce(row);
    return Lead(row) < 0;
  }

 private:
  void Reduce(std::vector<Rat>& row) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
      const Rat f = row[leads_[i]];
      if (f == 0) continue;
      for (int c = 0; c < width_; ++c) row[c] -= f * rows_[i][c];
    }
  }
  int Lead(const std::vector<Rat>& row) const {
    for (int c = 0; c < width_; ++c) {
      if (row[c] != 0) return c;
    }
    return -1;
  }

  int width_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<int> leads_;
};

std::vector<Rat> AugmentedRow(const MomentConstraints::Row& row, int size) {
  std::vector<Rat> a = row.fn.dense(size);
  a.push_back(row.target);
  return a;
}

std::vector<Rat> SimplexRow(int size) {
  std::vector<Rat> a(size + 1, Rat(1));
  return a;
}

}  // namespace

PSDGP reduce_feedback(const PSDGP& dgp) {
  const MomentConstraints mc = build_constraints(dgp);
  const int size = dgp.space->size();
  EchelonBasis basis(size + 1);
  std::vector<FeedbackFunction> kept;
  for (const auto& row : mc.rows) {
    if (basis.Insert(AugmentedRow(row, size))) {
      kept.push_back(row.fn);
    }
  }
  return PSDGP(dgp.space, dgp.eta, std::move(kept));
}

bool informationally_equivalent(const PSDGP& d1, const PSDGP& d2) {
  if (!d1.space->same_labels(*d2.space)) return false;
  const int size = d1.space->size();
  const MomentConstraints m1 = build_constraints(d1);
  const MomentConstraints m2 = build_constraints(d2);
  const auto contained = [size](const MomentConstraints& a,
                                const MomentConstraints& b) {
    EchelonBasis basis(size + 1);
    basis.Insert(SimplexRow(size));
    for (const auto& row : b.rows) basis.Insert(AugmentedRow(row, size));
    for (const auto& row : a.rows) {
      if (!basis.InSpan(AugmentedRow(row, size))) return false;
    }
    return true;
  };
  return contained(m1, m2) && contained(m2, m1);
}

HPolytope plausible_set_polytope(const PSDGP& dgp) {
  const MomentConstraints mc = build_constraints(dgp);
  HPolytope poly = HPolytope::Simplex(dgp.space->size());
  for (const auto& row : mc.rows) {
    poly.add_equality(row.fn.dense(dgp.space->size()), row.target);
  }
  return poly;
}

}  // namespace coherent
