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
#include <array>
#include <cstdint>
#include <deque>
#include <set>
#include <stdexcept>
#include <vector>

#include "spinortrop/delta_matroid.hpp"
#include "spinortrop/subset.hpp"

namespace spinortrop {

// An element of G_n in normal form (perm, tw) with |tw| even, acting on
// subsets by lambda -> perm(lambda ^ tw). Each element of G_n has exactly
// one such form, which makes dedup and stabilizer computations exact.
struct GroupElement {
  int n = 0;
  std::array<std::uint8_t, kMaxGroundSize> perm{};
  Subset tw;

  static GroupElement identity(int n) {
    GroupElement g;
    g.n = n;
    for (int i = 0; i < n; ++i) g.perm[i] = static_cast<std::uint8_t>(i);
    return g;
  }

  /// The permutation part alone, s_tau.
  static GroupElement permutation(int n, const std::vector<int>& images) {
    if (static_cast<int>(images.size()) != n)
      throw std::invalid_argument("GroupElement: permutation has wrong length");
    GroupElement g = identity(n);
    std::uint16_t seen = 0;
    for (int i = 0; i < n; ++i) {
      g.perm[i] = static_cast<std::uint8_t>(images[i]);
      seen |= static_cast<std::uint16_t>(1u << images[i]);
    }
    if (seen != Subset::full(n).bits) throw std::invalid_argument("GroupElement: not a bijection");
    return g;
  }

  /// A product of disjoint cycles, e.g. {{0,2,1},{3,4}} for (021)(34).
  static GroupElement cycles(int n, const std::vector<std::vector<int>>& cys) {
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) images[i] = i;
    for (const auto& cy : cys)
      for (std::size_t k = 0; k < cy.size(); ++k) images[cy[k]] = cy[(k + 1) % cy.size()];
    return permutation(n, images);
  }

  /// The twist part alone, t_mu.
  static GroupElement twist_by(int n, Subset mu) {
    if (mu.size() % 2 != 0) throw std::invalid_argument("GroupElement: twist must be even");
    GroupElement g = identity(n);
    g.tw = mu;
    return g;
  }

  Subset apply(Subset s) const {
    Subset moved = s.sym_diff(tw);
    std::uint16_t out = 0;
    for (int i = 0; i < n; ++i)
      if (moved.contains(i)) out |= static_cast<std::uint16_t>(1u << perm[i]);
    return Subset(out);
  }

  int apply_element(int i) const { return perm[i]; }

  GroupElement inverse() const {
    GroupElement g;
    g.n = n;
    for (int i = 0; i < n; ++i) g.perm[perm[i]] = static_cast<std::uint8_t>(i);
    // g(lambda) = s(lambda ^ tw) inverts to s^{-1}(lambda) ^ tw = s^{-1}(lambda ^ s(tw)).
    std::uint16_t stw = 0;
    for (int i = 0; i < n; ++i)
      if (tw.contains(i)) stw |= static_cast<std::uint16_t>(1u << perm[i]);
    g.tw = Subset(stw);
    return g;
  }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    if (a.n != b.n || a.tw != b.tw) return false;
    for (int i = 0; i < a.n; ++i)
      if (a.perm[i] != b.perm[i]) return false;
    return true;
  }
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    for (int i = 0; i < a.n; ++i)
      if (a.perm[i] != b.perm[i]) return a.perm[i] < b.perm[i];
    return a.tw < b.tw;
  }
};

/// Normal form of g1 o g2: acting with the result equals acting with g2,
/// then g1. perm composes, and g1's twist is pulled through g2's
/// permutation: tw = tw2 ^ perm2^{-1}(tw1).
inline GroupElement compose(const GroupElement& g1, const GroupElement& g2) {
  if (g1.n != g2.n) throw std::invalid_argument("compose: mismatched ground sizes");
  GroupElement g;
  g.n = g1.n;
  for (int i = 0; i < g.n; ++i) g.perm[i] = g1.perm[g2.perm[i]];
  std::uint16_t pulled = 0;
  GroupElement inv2 = g2.inverse();
  for (int i = 0; i < g.n; ++i)
    if (g1.tw.contains(i)) pulled |= static_cast<std::uint16_t>(1u << inv2.perm[i]);
  g.tw = g2.tw.sym_diff(Subset(pulled));
  return g;
}

/// All n! 2^(n-1) elements in normal form.
inline std::vector<GroupElement> enumerate_group(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i;
  std::vector<GroupElement> out;
  do {
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      if (std::popcount(m) % 2 != 0) continue;
      GroupElement g = GroupElement::permutation(n, images);
      g.tw = Subset(static_cast<std::uint16_t>(m));
      out.push_back(g);
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

/// Standard generating set: all transposition permutations plus all
/// two-element twists.
inline std::vector<GroupElement> standard_generators(int n) {
  std::vector<GroupElement> gens;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      gens.push_back(GroupElement::cycles(n, {{i, j}}));
      gens.push_back(GroupElement::twist_by(n, Subset::of({i, j})));
    }
  return gens;
}

/// Closure of a generating set under composition (breadth-first).
inline std::vector<GroupElement> group_closure(int n, const std::vector<GroupElement>& gens) {
  std::set<GroupElement> seen;
  std::deque<GroupElement> queue;
  GroupElement id = GroupElement::identity(n);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    GroupElement g = queue.front();
    queue.pop_front();
    for (const GroupElement& h : gens) {
      GroupElement gh = compose(h, g);
      if (seen.insert(gh).second) queue.push_back(gh);
    }
  }
  return std::vector<GroupElement>(seen.begin(), seen.end());
}

inline DeltaMatroid act(const GroupElement& g, const DeltaMatroid& m) {
  if (g.n != m.n) throw std::invalid_argument("act: mismatched ground sizes");
  std::vector<Subset> out;
  out.reserve(m.bases.size());
  for (Subset b : m.bases) out.push_back(g.apply(b));
  return DeltaMatroid(m.n, std::move(out));
}

/// The full G_n-orbit of a matroid, deduplicated by its sorted basis family.
/// Full group enumeration is only viable at desk scale.
inline std::vector<DeltaMatroid> orbit(const DeltaMatroid& m) {
  if (m.n > 6) throw std::invalid_argument("orbit: ground size too large for full enumeration");
  std::set<std::vector<Subset>> seen;
  std::vector<DeltaMatroid> out;
  for (const GroupElement& g : enumerate_group(m.n)) {
    DeltaMatroid img = act(g, m);
    if (seen.insert(img.bases).second) out.push_back(std::move(img));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Canonical representative: the lexicographically least sorted
/// basis-string list over the orbit.
inline DeltaMatroid orbit_canonical(const DeltaMatroid& m) {
  std::vector<DeltaMatroid> orb = orbit(m);
  auto key = [](const DeltaMatroid& x) {
    std::vector<std::string> k = x.basis_strings();
    std::sort(k.begin(), k.end());
    return k;
  };
  const DeltaMatroid* best = &orb.front();
  std::vector<std::string> best_key = key(*best);
  for (const DeltaMatroid& x : orb) {
    std::vector<std::string> k = key(x);
    if (k < best_key) {
      best = &x;
      best_key = std::move(k);
    }
  }
  return *best;
}

inline bool orbit_contains(const DeltaMatroid& m, const DeltaMatroid& candidate) {
  for (const DeltaMatroid& x : orbit(m))
    if (x == candidate) return true;
  return false;
}

}  // namespace spinortrop
