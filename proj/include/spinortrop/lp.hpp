// Copyright 2026 The SpinorTrop Authors.
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

#pragma once

#include <cstddef>
#include <vector>

#include "spinortrop/linalg.hpp"
#include "spinortrop/rational.hpp"

namespace spinortrop {

// Exact feasibility of { x free : a_ge x >= b_ge, a_eq x = b_eq } via a
// phase-1 simplex over the rationals. Bland's rule throughout, so the pivot
// sequence is deterministic and cycling is impossible.
//
// x is split into x+ - x-, each >= 0; every >= row gets a surplus variable
// and every row an artificial one. Feasible iff the artificials can be
// driven to total zero.
inline bool lp_feasible(const QMat& a_ge, const QVec& b_ge, const QMat& a_eq, const QVec& b_eq) {
  std::size_t dim = 0;
  if (!a_ge.empty()) dim = a_ge[0].size();
  if (!a_eq.empty()) dim = a_eq[0].size();
  std::size_t m_ge = a_ge.size();
  std::size_t m = m_ge + a_eq.size();
  if (m == 0) return true;

  std::size_t n_struct = 2 * dim + m_ge;  // x+, x-, surpluses
  std::size_t n = n_struct + m;           // + artificials
  QMat tab(m, QVec(n + 1, Rational(0)));

  for (std::size_t r = 0; r < m; ++r) {
    const QVec& row = r < m_ge ? a_ge[r] : a_eq[r - m_ge];
    Rational rhs = r < m_ge ? b_ge[r] : b_eq[r - m_ge];
    bool flip = rhs < 0;
    Rational s = flip ? Rational(-1) : Rational(1);
    for (std::size_t j = 0; j < dim; ++j) {
      tab[r][j] = s * row[j];
      tab[r][dim + j] = -s * row[j];
    }
    if (r < m_ge) tab[r][2 * dim + r] = -s;
    tab[r][n_struct + r] = 1;
    tab[r][n] = s * rhs;
  }

  // Reduced costs for min(sum of artificials), with the artificials basic.
  QVec cost(n + 1, Rational(0));
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    basis[r] = n_struct + r;
    for (std::size_t j = 0; j <= n; ++j) cost[j] -= tab[r][j];
  }
  for (std::size_t r = 0; r < m; ++r) cost[n_struct + r] = 0;

  for (;;) {
    std::size_t enter = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == n) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (tab[r][enter] <= 0) continue;
      Rational ratio = tab[r][n] / tab[r][enter];
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == m) break;  // phase-1 objective is bounded below, so this row always exists

    Rational inv = Rational(1) / tab[leave][enter];
    for (std::size_t j = 0; j <= n; ++j) tab[leave][j] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave || tab[r][enter] == 0) continue;
      Rational f = tab[r][enter];
      for (std::size_t j = 0; j <= n; ++j) tab[r][j] -= f * tab[leave][j];
    }
    if (cost[enter] != 0) {
      Rational f = cost[enter];
      for (std::size_t j = 0; j <= n; ++j) cost[j] -= f * tab[leave][j];
    }
    basis[leave] = enter;
  }

  return -cost[n] == 0;  // objective value = sum of artificials
}

}  // namespace spinortrop
