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
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinortrop/polyhedra.hpp"
#include "spinortrop/polynomial.hpp"
#include "spinortrop/subset.hpp"
#include "spinortrop/wick.hpp"

namespace spinortrop {

// A nonempty family A of maximal cells of a subdivision, by index.
struct CellFamily {
  const Subdivision* subdivision = nullptr;
  std::vector<int> indices;

  CellFamily(const Subdivision& s, std::vector<int> idx)
      : subdivision(&s), indices(std::move(idx)) {
    if (indices.empty()) throw std::invalid_argument("CellFamily: empty family");
    std::sort(indices.begin(), indices.end());
  }

  const Cell& cell(int i) const { return subdivision->maximal_cells[i]; }
};

inline bool subset_string_less(Subset a, Subset b) {
  return subset_to_string(a) < subset_to_string(b);
}

/// Union of the family's bases equals the bases of the ambient matroid.
inline bool basis_covering(const CellFamily& f) {
  std::set<Subset> covered;
  for (int i : f.indices)
    for (Subset b : f.cell(i).label) covered.insert(b);
  for (Subset b : f.subdivision->matroid.bases)
    if (!covered.count(b)) return false;
  return true;
}

/// All common bases of the family, sorted by their string form.
inline std::vector<Subset> common_bases(const CellFamily& f) {
  std::vector<Subset> common = f.cell(f.indices.front()).label;
  for (int i : f.indices) {
    std::vector<Subset> next;
    for (Subset b : common)
      if (f.cell(i).contains(b)) next.push_back(b);
    common = std::move(next);
  }
  std::sort(common.begin(), common.end(), subset_string_less);
  return common;
}

/// Some common basis of all cells of the family (the lexicographically
/// least one), or absent.
inline std::optional<Subset> basis_intersecting(const CellFamily& f) {
  std::vector<Subset> common = common_bases(f);
  if (common.empty()) return std::nullopt;
  return common.front();
}

/// For every basis beta covered by the family, the cells of the family
/// containing beta induce a connected subgraph of the adjacency graph.
inline bool basis_connecting(const CellFamily& f) {
  const Subdivision& s = *f.subdivision;
  std::vector<std::vector<int>> adj = s.adjacency();
  std::set<int> in_family(f.indices.begin(), f.indices.end());

  std::set<Subset> all;
  for (int i : f.indices)
    for (Subset b : f.cell(i).label) all.insert(b);

  for (Subset beta : all) {
    std::vector<int> nodes;
    for (int i : f.indices)
      if (f.cell(i).contains(beta)) nodes.push_back(i);
    if (nodes.size() <= 1) continue;
    std::set<int> node_set(nodes.begin(), nodes.end());
    std::set<int> seen = {nodes.front()};
    std::vector<int> frontier = {nodes.front()};
    while (!frontier.empty()) {
      int v = frontier.back();
      frontier.pop_back();
      for (int w : adj[v])
        if (node_set.count(w) && seen.insert(w).second) frontier.push_back(w);
    }
    if (seen.size() != node_set.size()) return false;
  }
  return true;
}

// The affine-chart presentation of a basis-intersecting family: after
// twisting every cell so the shared basis becomes [n], variables are the
// x_ij whose complementary pair is a basis somewhere in the family,
// relations are the per-cell substituted Pfaffians of non-bases, and the
// semigroup generators are the substituted Pfaffians of bases.
struct AffinePresentation {
  Subset common;
  Subset twist_set;  // [n] \ common, applied to every cell
  std::vector<int> cell_indices;
  std::vector<VarId> variables;
  std::vector<Polynomial> relations;  // deduplicated, normalized up to units
  std::map<int, std::vector<Polynomial>> relations_by_cell;
  std::vector<Polynomial> semigroup_gens;

  enum class Kind { Zero, Principal, Other };
  Kind classification = Kind::Zero;
};

inline AffinePresentation affine_presentation(const CellFamily& f, Subset common) {
  const int n = f.subdivision->matroid.n;
  for (int i : f.indices)
    if (!f.cell(i).contains(common))
      throw std::invalid_argument("affine_presentation: 'common' is not a basis of every cell");

  AffinePresentation out;
  out.common = common;
  out.twist_set = common.sym_diff(Subset::full(n));
  out.cell_indices = f.indices;

  std::vector<DeltaMatroid> twisted;
  for (int i : f.indices)
    twisted.push_back(twist(DeltaMatroid(n, f.cell(i).label), out.twist_set));

  std::set<VarId> vars;
  for (const DeltaMatroid& m : twisted)
    for (Subset b : m.bases)
      if (b.size() == n - 2) {
        auto ij = b.complement_in(n).members();
        vars.insert(var_x(ij[0], ij[1]));
      }
  out.variables.assign(vars.begin(), vars.end());

  SkewMatrix<Polynomial> x = symbolic_skew(n);
  std::set<Polynomial> relation_set, semigroup_set;
  for (std::size_t k = 0; k < twisted.size(); ++k) {
    const DeltaMatroid& m = twisted[k];
    std::vector<VarId> cell_vars;
    for (Subset b : m.bases)
      if (b.size() == n - 2) {
        auto ij = b.complement_in(n).members();
        cell_vars.push_back(var_x(ij[0], ij[1]));
      }
    std::vector<Polynomial> cell_relations;
    for (Subset lam : enumerate_E(n)) {
      Polynomial pf = pfaffian(x, lam.complement_in(n)).restrict_variables(cell_vars);
      if (m.has_basis(lam)) {
        if (!pf.is_zero()) semigroup_set.insert(pf);
      } else if (!pf.is_zero()) {
        Polynomial norm = pf.normalized_up_to_units();
        if (relation_set.insert(norm).second) out.relations.push_back(norm);
        bool dup = false;
        for (const Polynomial& p : cell_relations)
          if (p == norm) dup = true;
        if (!dup) cell_relations.push_back(norm);
      }
    }
    if (!cell_relations.empty()) out.relations_by_cell[f.indices[k]] = std::move(cell_relations);
  }
  out.semigroup_gens.assign(semigroup_set.begin(), semigroup_set.end());

  if (out.relations.empty())
    out.classification = AffinePresentation::Kind::Zero;
  else if (out.relations.size() == 1 && out.relations.front().terms().size() >= 2)
    out.classification = AffinePresentation::Kind::Principal;
  else
    out.classification = AffinePresentation::Kind::Other;
  return out;
}

// The outcome of the smoothness certification pipeline. Witness data is
// kept so every certificate can be re-checked against its defining
// predicate.
struct Certificate {
  enum class Tag { Trivial, BasisIntersecting, AllButOne, Undecided };
  Tag tag = Tag::Trivial;

  std::optional<Subset> common;            // BasisIntersecting / AllButOne witness
  int excluded = -1;                       // AllButOne: index of the removed cell
  std::pair<int, int> triangle{-1, -1};    // AllButOne: its two neighbors
  std::vector<int> family;                 // Undecided: the diagnosed family A
  bool family_connecting = false;          // Undecided: basis_connecting(A)
  std::optional<AffinePresentation> presentation;  // Undecided diagnostics
};

inline std::vector<int> all_cell_indices(const Subdivision& s) {
  std::vector<int> idx(s.maximal_cells.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  return idx;
}

/// The certification ladder, first applicable rule wins:
///   (a) a single cell is trivially smooth;
///   (b) a common basis of all maximal cells;
///   (c) one cell whose vertex has exactly two neighbors joined by an
///       edge, with the rest basis-covering and basis-intersecting;
///   (d) otherwise undecided, with presentation diagnostics attached for
///       the largest family of cells sharing a basis.
inline Certificate certify_smooth(const Subdivision& s) {
  if (!is_matroidal(s)) throw std::invalid_argument("certify_smooth: subdivision is not matroidal");
  Certificate cert;

  if (s.maximal_cells.size() == 1) {
    cert.tag = Certificate::Tag::Trivial;
    return cert;
  }

  CellFamily all(s, all_cell_indices(s));
  if (auto common = basis_intersecting(all)) {
    cert.tag = Certificate::Tag::BasisIntersecting;
    cert.common = *common;
    return cert;
  }

  std::vector<std::vector<int>> adj = s.adjacency();
  for (std::size_t q = 0; q < s.maximal_cells.size(); ++q) {
    if (adj[q].size() != 2) continue;
    int a = adj[q][0], b = adj[q][1];
    bool joined = std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
    if (!joined) continue;
    std::vector<int> rest;
    for (std::size_t i = 0; i < s.maximal_cells.size(); ++i)
      if (i != q) rest.push_back(static_cast<int>(i));
    CellFamily family(s, rest);
    if (!basis_covering(family)) continue;
    auto common = basis_intersecting(family);
    if (!common) continue;
    cert.tag = Certificate::Tag::AllButOne;
    cert.excluded = static_cast<int>(q);
    cert.triangle = {a, b};
    cert.common = *common;
    return cert;
  }

  // Undecided: diagnose the largest family of cells sharing one basis
  // (ties broken toward the lexicographically least basis).
  cert.tag = Certificate::Tag::Undecided;
  Subset best_basis;
  std::size_t best_count = 0;
  std::vector<Subset> all_bases = s.matroid.bases;
  std::sort(all_bases.begin(), all_bases.end(), subset_string_less);
  for (Subset beta : all_bases) {
    std::size_t count = 0;
    for (const Cell& c : s.maximal_cells)
      if (c.contains(beta)) ++count;
    if (count > best_count) {
      best_count = count;
      best_basis = beta;
    }
  }
  std::vector<int> members;
  for (std::size_t i = 0; i < s.maximal_cells.size(); ++i)
    if (s.maximal_cells[i].contains(best_basis)) members.push_back(static_cast<int>(i));
  CellFamily family(s, members);
  cert.family = family.indices;
  cert.family_connecting = basis_connecting(family);

  // Among the family's common bases, twist relative to a largest one; the
  // affine chart then needs no twist at all whenever [n] itself is shared.
  std::vector<Subset> common = common_bases(family);
  Subset chart = common.front();
  for (Subset c : common)
    if (c.size() > chart.size() || (c.size() == chart.size() && subset_string_less(c, chart)))
      chart = c;
  cert.common = chart;
  cert.presentation = affine_presentation(family, chart);
  return cert;
}

}  // namespace spinortrop
