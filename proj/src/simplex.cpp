// Copyright 2026 The anglekit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "anglekit/simplex.hpp"

#include "anglekit/error.hpp"

namespace anglekit {

namespace {

class Tableau {
 public:
  Tableau(const LinearProgram& lp) : m_(lp.A.rows()), n_(lp.A.cols()), width_(n_ + m_ + 1) {
    if (static_cast<int>(lp.b.size()) != m_ || static_cast<int>(lp.c.size()) != n_)
      throw Error(ErrorCode::DimensionMismatch, "linear program dimensions disagree");
    t_.assign(m_, RationalVector(width_));
    sign_.assign(m_, 1);
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      sign_[i] = lp.b[i] < 0 ? -1 : 1;
      for (int j = 0; j < n_; ++j) t_[i][j] = sign_[i] * lp.A(i, j);
      t_[i][n_ + i] = 1;
      t_[i][width_ - 1] = sign_[i] * lp.b[i];
      basis_[i] = n_ + i;
    }
  }

  int rows() const { return m_; }
  int structural() const { return n_; }
  bool is_artificial(int j) const { return j >= n_; }

  void set_objective(const RationalVector& cost) {
    cost_ = cost;
    reduced_.assign(width_ - 1, Rational(0));
    for (int j = 0; j < width_ - 1; ++j) {
      Rational r = cost_[j];
      for (int i = 0; i < m_; ++i)
        if (!cost_[basis_[i]].is_zero() && !t_[i][j].is_zero()) r -= cost_[basis_[i]] * t_[i][j];
      reduced_[j] = r;
    }
  }

  // Runs Bland's rule on the columns admitted by the predicate. Returns
  // false if the objective is unbounded.
  template <class Admit>
  bool optimize(Admit admit) {
    for (;;) {
      int q = -1;
      for (int j = 0; j < width_ - 1; ++j)
        if (admit(j) && reduced_[j] > 0) {
          q = j;
          break;
        }
      if (q < 0) return true;
      int p = -1;
      Rational best;
      for (int i = 0; i < m_; ++i) {
        if (t_[i][q] <= 0) continue;
        Rational ratio = t_[i][width_ - 1] / t_[i][q];
        if (p < 0 || ratio < best || (ratio == best && basis_[i] < basis_[p])) {
          p = i;
          best = ratio;
        }
      }
      if (p < 0) return false;
      pivot(p, q);
    }
  }

  void pivot(int p, int q) {
    ++pivots_;
    Rational inv = 1 / t_[p][q];
    for (auto& v : t_[p])
      if (!v.is_zero()) v *= inv;
    for (int i = 0; i < m_; ++i) {
      if (i == p || t_[i][q].is_zero()) continue;
      Rational f = t_[i][q];
      for (int j = 0; j < width_; ++j)
        if (!t_[p][j].is_zero()) t_[i][j] -= f * t_[p][j];
    }
    if (!reduced_.empty() && !reduced_[q].is_zero()) {
      Rational f = reduced_[q];
      for (int j = 0; j < width_ - 1; ++j)
        if (!t_[p][j].is_zero()) reduced_[j] -= f * t_[p][j];
    }
    basis_[p] = q;
  }

  // Pivots zero-level artificials out of the basis where a structural
  // column allows it; rows where none does are redundant and stay put.
  void expel_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (!is_artificial(basis_[i])) continue;
      for (int j = 0; j < n_; ++j)
        if (!t_[i][j].is_zero()) {
          pivot(i, j);
          break;
        }
    }
  }

  RationalVector primal() const {
    RationalVector x(n_);
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = t_[i][width_ - 1];
    return x;
  }

  Rational value() const {
    Rational v = 0;
    for (int i = 0; i < m_; ++i)
      if (!cost_[basis_[i]].is_zero()) v += cost_[basis_[i]] * t_[i][width_ - 1];
    return v;
  }

  // y = c_B B^{-1}, expressed for the original (unflipped) rows.
  RationalVector dual() const {
    RationalVector y(m_);
    for (int k = 0; k < m_; ++k) y[k] = sign_[k] * (cost_[n_ + k] - reduced_[n_ + k]);
    return y;
  }

  std::vector<int> basis() const { return basis_; }
  int pivots() const { return pivots_; }

 private:
  int m_, n_, width_;
  std::vector<RationalVector> t_;
  std::vector<int> sign_;
  std::vector<int> basis_;
  RationalVector cost_;
  RationalVector reduced_;
  int pivots_ = 0;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  Tableau tab(lp);
  const int n = tab.structural();
  const int m = tab.rows();

  RationalVector phase1(n + m);
  for (int k = 0; k < m; ++k) phase1[n + k] = -1;
  tab.set_objective(phase1);
  tab.optimize([](int) { return true; });

  LpResult result;
  if (tab.value() < 0) {
    result.status = LpStatus::Infeasible;
    result.farkas = tab.dual();
    for (auto& v : result.farkas) v = -v;
    result.basis = tab.basis();
    result.pivots = tab.pivots();
    return result;
  }

  tab.expel_artificials();
  RationalVector phase2(n + m);
  for (int j = 0; j < n; ++j) phase2[j] = lp.c[j];
  tab.set_objective(phase2);
  bool bounded = tab.optimize([&](int j) { return !tab.is_artificial(j); });
  result.status = bounded ? LpStatus::Optimal : LpStatus::Unbounded;
  result.x = tab.primal();
  result.objective = tab.value();
  if (bounded) result.dual = tab.dual();
  result.basis = tab.basis();
  result.pivots = tab.pivots();
  return result;
}

bool lp_feasible(const RationalMatrix& A, const RationalVector& b) {
  LinearProgram lp{A, b, RationalVector(A.cols())};
  return solve_lp(lp).status != LpStatus::Infeasible;
}

}  // namespace anglekit
