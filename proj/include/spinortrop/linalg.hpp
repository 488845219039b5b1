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
#include <optional>
#include <vector>

#include "spinortrop/rational.hpp"

namespace spinortrop {

// Dense exact linear algebra over the rationals. Matrices are row vectors;
// everything is plain Gaussian elimination with the first nonzero pivot,
// which is deterministic and division-safe over a field.
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

inline QVec qvec_scale(const QVec& v, const Rational& c) {
  QVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * c;
  return out;
}

inline QVec qvec_sub(const QVec& a, const QVec& b) {
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline QVec qvec_add(const QVec& a, const QVec& b) {
  QVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Rational qvec_dot(const QVec& a, const QVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline bool qvec_is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// Reduced row echelon form, in place. Returns the pivot column of each
// surviving row (rows beyond the rank are zeroed but kept).
inline std::vector<int> rref(QMat& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = Rational(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

inline int rank(QMat a) { return static_cast<int>(rref(a).size()); }

/// Basis of the right kernel {x : a x = 0}.
inline QMat kernel_basis(QMat a, std::size_t cols) {
  if (a.empty()) {
    QMat id(cols, QVec(cols, Rational(0)));
    for (std::size_t i = 0; i < cols; ++i) id[i][i] = 1;
    return id;
  }
  std::vector<int> pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  QMat basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVec v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of a x = b, if any.
inline std::optional<QVec> solve(QMat a, QVec b) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  std::vector<int> pivots = rref(a);
  QVec x(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == static_cast<int>(cols)) return std::nullopt;  // 0 = 1 row
    x[pivots[r]] = a[r][cols];
  }
  return x;
}

/// True iff v lies in the row span of rows.
inline bool in_row_span(const QMat& rows, const QVec& v) {
  QMat a = rows;
  int r0 = rank(a);
  a.push_back(v);
  return rank(a) == r0;
}

inline Rational det(QMat a) {
  std::size_t n = a.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    Rational inv = Rational(1) / a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

// Echelonized spanning set supporting canonical reduction modulo the span.
// Used for "modulo lineality" comparisons: reduce() of two vectors agree
// iff the vectors differ by an element of the span.
class SpanReducer {
 public:
  SpanReducer() = default;
  explicit SpanReducer(const QMat& gens) {
    QMat a = gens;
    std::vector<int> piv = rref(a);
    for (std::size_t r = 0; r < piv.size(); ++r) {
      rows_.push_back(a[r]);
      pivots_.push_back(piv[r]);
    }
  }

  int dim() const { return static_cast<int>(rows_.size()); }

  QVec reduce(QVec v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& c = v[pivots_[r]];
      if (c == 0) continue;
      v = qvec_sub(v, qvec_scale(rows_[r], c));
    }
    return v;
  }

  bool contains(const QVec& v) const { return qvec_is_zero(reduce(v)); }

 private:
  QMat rows_;
  std::vector<int> pivots_;
};

}  // namespace spinortrop
