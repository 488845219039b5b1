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
#include <stdexcept>
#include <string>
#include <vector>

#include "spinortrop/linalg.hpp"
#include "spinortrop/rational.hpp"
#include "spinortrop/subset.hpp"

namespace spinortrop {

// A direction vector u in Q^n, pairing with indicator vectors e_lambda.
struct DirectionVector {
  QVec u;

  Rational pair(Subset s) const {
    Rational acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (s.contains(static_cast<int>(i))) acc += u[i];
    return acc;
  }
};

// A Delta-matroid is a ground size together with a nonempty basis family.
// The family is kept sorted by mask, so equality of matroids is equality of
// the vectors.
struct DeltaMatroid {
  int n = 0;
  std::vector<Subset> bases;

  DeltaMatroid() = default;
  DeltaMatroid(int ground, std::vector<Subset> family) : n(ground), bases(std::move(family)) {
    if (bases.empty()) throw std::invalid_argument("DeltaMatroid: empty basis family");
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  }

  bool has_basis(Subset s) const { return std::binary_search(bases.begin(), bases.end(), s); }

  std::vector<std::string> basis_strings() const {
    std::vector<std::string> out;
    out.reserve(bases.size());
    for (Subset b : bases) out.push_back(subset_to_string(b));
    return out;
  }

  friend bool operator==(const DeltaMatroid& a, const DeltaMatroid& b) {
    return a.n == b.n && a.bases == b.bases;
  }
  friend bool operator<(const DeltaMatroid& a, const DeltaMatroid& b) {
    return a.bases < b.bases;
  }
};

/// Symmetric exchange axiom, checked by the exhaustive O(|B|^2 n^2) loop:
/// for all mu, nu in B and i in mu^nu there is j in mu^nu (j = i allowed)
/// with mu ^ {i,j} in B.
inline bool is_delta_matroid(int n, const std::vector<Subset>& family) {
  if (family.empty()) throw std::invalid_argument("is_delta_matroid: empty family");
  std::vector<Subset> sorted = family;
  std::sort(sorted.begin(), sorted.end());
  auto member = [&](Subset s) { return std::binary_search(sorted.begin(), sorted.end(), s); };
  (void)n;
  for (Subset mu : sorted) {
    for (Subset nu : sorted) {
      Subset d = mu.sym_diff(nu);
      bool ok_all = true;
      for (int i : d.members()) {
        bool found = false;
        for (int j : d.members()) {
          Subset swap = Subset::singleton(i).unite(Subset::singleton(j));
          if (member(mu.sym_diff(swap))) {
            found = true;
            break;
          }
        }
        if (!found) {
          ok_all = false;
          break;
        }
      }
      if (!ok_all) return false;
    }
  }
  return true;
}

/// All pairwise symmetric differences of the family are even.
inline bool is_even(int /*n*/, const std::vector<Subset>& family) {
  if (family.empty()) throw std::invalid_argument("is_even: empty family");
  // Parity of |a ^ b| = parity of |a| + |b|, so one representative suffices.
  int p0 = family.front().size() % 2;
  for (Subset s : family)
    if (s.size() % 2 != p0) return false;
  return true;
}

/// The face matroid M_u: bases minimizing <u, e_lambda> over B(M).
inline DeltaMatroid face_matroid(const DeltaMatroid& m, const DirectionVector& u) {
  if (static_cast<int>(u.u.size()) != m.n)
    throw std::invalid_argument("face_matroid: direction vector has wrong length");
  Rational best;
  bool first = true;
  for (Subset b : m.bases) {
    Rational v = u.pair(b);
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  std::vector<Subset> keep;
  for (Subset b : m.bases)
    if (u.pair(b) == best) keep.push_back(b);
  return DeltaMatroid(m.n, std::move(keep));
}

/// Twist by an even subset: every basis is replaced by its symmetric
/// difference with mu.
inline DeltaMatroid twist(const DeltaMatroid& m, Subset mu) {
  if (mu.size() % 2 != 0) throw std::invalid_argument("twist: twisting set must be even");
  std::vector<Subset> out;
  out.reserve(m.bases.size());
  for (Subset b : m.bases) out.push_back(b.sym_diff(mu));
  return DeltaMatroid(m.n, std::move(out));
}

}  // namespace spinortrop
