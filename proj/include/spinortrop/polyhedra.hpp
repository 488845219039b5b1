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

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "spinortrop/delta_matroid.hpp"
#include "spinortrop/linalg.hpp"
#include "spinortrop/lp.hpp"
#include "spinortrop/subset.hpp"
#include "spinortrop/wick.hpp"

namespace spinortrop {

inline QVec indicator(int n, Subset s) {
  QVec v(n, Rational(0));
  for (int i = 0; i < n; ++i)
    if (s.contains(i)) v[i] = 1;
  return v;
}

// A cell of a subdivision, stored by its vertex label only (the bases whose
// indicator vectors lie on the defining lower face). Geometry is recomputed
// on demand.
struct Cell {
  std::vector<Subset> label;  // sorted by mask

  Cell() = default;
  explicit Cell(std::vector<Subset> l) : label(std::move(l)) {
    std::sort(label.begin(), label.end());
    label.erase(std::unique(label.begin(), label.end()), label.end());
  }

  bool contains(Subset s) const { return std::binary_search(label.begin(), label.end(), s); }

  friend bool operator==(const Cell& a, const Cell& b) { return a.label == b.label; }
  friend bool operator<(const Cell& a, const Cell& b) { return a.label < b.label; }
};

/// Dimension of the affine hull of the labelled vertices, by exact rank.
inline int cell_dimension(int n, const Cell& c) {
  if (c.label.empty()) throw std::invalid_argument("cell_dimension: empty label");
  QMat diffs;
  QVec base = indicator(n, c.label.front());
  for (std::size_t k = 1; k < c.label.size(); ++k)
    diffs.push_back(qvec_sub(indicator(n, c.label[k]), base));
  return rank(diffs);
}

struct FacetPair {
  int first = 0;
  int second = 0;
  Cell shared;
};

struct Subdivision {
  DeltaMatroid matroid;
  WeightVector weights;
  std::vector<Cell> maximal_cells;  // sorted canonical labels
  std::vector<FacetPair> facet_pairs;

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(maximal_cells.size());
    for (const FacetPair& e : facet_pairs) {
      adj[e.first].push_back(e.second);
      adj[e.second].push_back(e.first);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return adj;
  }

  std::optional<int> cell_index(const Cell& c) const {
    auto it = std::lower_bound(maximal_cells.begin(), maximal_cells.end(), c);
    if (it == maximal_cells.end() || !(*it == c)) return std::nullopt;
    return static_cast<int>(it - maximal_cells.begin());
  }
};

/// The regular subdivision of Q_M induced by the heights w: maximal cells
/// are the projections of the lower facets of the lifted polytope.
///
/// The lower hull is found by brute-force hyperplane enumeration: every
/// affinely independent (d+1)-subset of lifted points fits one affine
/// height function; it contributes a cell when no lifted point lies below
/// it and its contact set is full-dimensional. At most C(16, 7) candidates
/// arise for the ambient sizes this project handles.
inline Subdivision regular_subdivision(const DeltaMatroid& m, const WeightVector& w) {
  for (const auto& [s, v] : w.values) {
    (void)v;
    if (!m.has_basis(s))
      throw std::invalid_argument("regular_subdivision: weight key is not a basis");
  }

  const std::vector<Subset>& pts = m.bases;
  const int count = static_cast<int>(pts.size());
  std::vector<QVec> coords_full(count);
  std::vector<Rational> heights(count);
  for (int k = 0; k < count; ++k) {
    coords_full[k] = indicator(m.n, pts[k]);
    heights[k] = w.get(pts[k]);
  }

  // Affine chart: the pivot columns of the difference row space give exact
  // coordinates of dimension d on the affine hull.
  QMat diffs;
  for (int k = 1; k < count; ++k) diffs.push_back(qvec_sub(coords_full[k], coords_full[0]));
  std::vector<int> pivot_cols;
  if (!diffs.empty()) pivot_cols = rref(diffs);
  const int d = static_cast<int>(pivot_cols.size());

  std::vector<QVec> y(count, QVec(d, Rational(0)));
  for (int k = 0; k < count; ++k)
    for (int c = 0; c < d; ++c)
      y[k][c] = coords_full[k][pivot_cols[c]] - coords_full[0][pivot_cols[c]];

  std::set<std::vector<Subset>> labels;

  std::vector<int> pick(d + 1);
  auto try_candidate = [&]() {
    QMat sys(d + 1, QVec(d + 1, Rational(0)));
    QVec rhs(d + 1);
    for (int r = 0; r <= d; ++r) {
      for (int c = 0; c < d; ++c) sys[r][c] = y[pick[r]][c];
      sys[r][d] = 1;
      rhs[r] = heights[pick[r]];
    }
    if (det(sys) == 0) return;  // affinely dependent in projection
    QVec alpha = *solve(sys, rhs);
    std::vector<Subset> contact;
    for (int k = 0; k < count; ++k) {
      Rational val = alpha[d];
      for (int c = 0; c < d; ++c) val += alpha[c] * y[k][c];
      if (heights[k] < val) return;  // a lifted point lies below: not a lower face
      if (heights[k] == val) contact.push_back(pts[k]);
    }
    Cell cell(contact);
    if (cell_dimension(m.n, cell) == d) labels.insert(cell.label);
  };

  if (d == 0) {
    labels.insert(m.bases);
  } else {
    // all (d+1)-subsets of the point indices
    for (int i = 0; i <= d; ++i) pick[i] = i;
    for (;;) {
      try_candidate();
      int pos = d;
      while (pos >= 0 && pick[pos] == count - 1 - (d - pos)) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int t = pos + 1; t <= d; ++t) pick[t] = pick[t - 1] + 1;
    }
  }

  Subdivision out;
  out.matroid = m;
  out.weights = w;
  for (const auto& l : labels) out.maximal_cells.push_back(Cell(l));
  std::sort(out.maximal_cells.begin(), out.maximal_cells.end());

  // Facet adjacency: the shared label must be the literal intersection of
  // the two labels and have dimension exactly d - 1, which rules out
  // lower-dimensional contact.
  for (std::size_t i = 0; i < out.maximal_cells.size(); ++i) {
    for (std::size_t j = i + 1; j < out.maximal_cells.size(); ++j) {
      std::vector<Subset> inter;
      std::set_intersection(out.maximal_cells[i].label.begin(), out.maximal_cells[i].label.end(),
                            out.maximal_cells[j].label.begin(), out.maximal_cells[j].label.end(),
                            std::back_inserter(inter));
      if (inter.empty()) continue;
      Cell shared(inter);
      if (cell_dimension(m.n, shared) == d - 1)
        out.facet_pairs.push_back({static_cast<int>(i), static_cast<int>(j), shared});
    }
  }
  return out;
}

/// The face of the subdivision selected by u: bases minimizing
/// w_lambda + <u, e_lambda>. Generic u selects a maximal cell.
inline Cell select_cell(const Subdivision& s, const DirectionVector& u) {
  std::optional<Rational> best;
  for (Subset b : s.matroid.bases) {
    Rational v = s.weights.get(b) + u.pair(b);
    if (!best || v < *best) best = v;
  }
  std::vector<Subset> keep;
  for (Subset b : s.matroid.bases)
    if (s.weights.get(b) + u.pair(b) == *best) keep.push_back(b);
  return Cell(keep);
}

/// All vertex pairs spanning 1-dimensional faces of conv(label), by exact
/// LP feasibility: (p, q) is an edge iff some linear functional attains its
/// minimum over the label exactly on {p, q}.
inline std::vector<std::pair<Subset, Subset>> edges_of_cell(int n, const Cell& c) {
  if (c.label.empty()) throw std::invalid_argument("edges_of_cell: empty label");
  std::vector<std::pair<Subset, Subset>> out;
  for (std::size_t p = 0; p < c.label.size(); ++p) {
    QVec ep = indicator(n, c.label[p]);
    for (std::size_t q = p + 1; q < c.label.size(); ++q) {
      QVec eq = indicator(n, c.label[q]);
      QMat a_ge, a_eq;
      QVec b_ge, b_eq;
      a_eq.push_back(qvec_sub(eq, ep));
      b_eq.push_back(Rational(0));
      for (std::size_t v = 0; v < c.label.size(); ++v) {
        if (v == p || v == q) continue;
        a_ge.push_back(qvec_sub(indicator(n, c.label[v]), ep));
        b_ge.push_back(Rational(1));
      }
      if (lp_feasible(a_ge, b_ge, a_eq, b_eq)) out.emplace_back(c.label[p], c.label[q]);
    }
  }
  return out;
}

/// Matroidality through the symmetric exchange axiom: every maximal cell is
/// an even Delta-matroid.
inline bool is_matroidal(const Subdivision& s) {
  for (const Cell& c : s.maximal_cells)
    if (!is_even(s.matroid.n, c.label) || !is_delta_matroid(s.matroid.n, c.label)) return false;
  return true;
}

/// The edge-direction oracle for one cell: every edge direction is
/// e_i +- e_j with i != j, i.e. every edge joins labels with symmetric
/// difference of size exactly 2.
inline bool cell_matroidal_by_edges(int n, const Cell& c) {
  for (const auto& [a, b] : edges_of_cell(n, c))
    if (a.sym_diff(b).size() != 2) return false;
  return true;
}

/// Matroidality through the Gelfand-Serganova edge criterion. Kept as an
/// independent route from is_matroidal; the two must always agree.
inline bool is_matroidal_by_edges(const Subdivision& s) {
  for (const Cell& c : s.maximal_cells)
    if (!cell_matroidal_by_edges(s.matroid.n, c)) return false;
  return true;
}

}  // namespace spinortrop
