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

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinortrop {

constexpr int kMaxGroundSize = 16;

// A subset of the ground set [n] = {0, ..., n-1}, n <= 16, stored as a bit
// mask. Bit i is set iff element i is a member. All set operations are exact
// integer arithmetic on the mask.
struct Subset {
  std::uint16_t bits = 0;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint16_t mask) : bits(mask) {}

  static constexpr Subset empty() { return Subset(0); }
  static constexpr Subset singleton(int i) { return Subset(static_cast<std::uint16_t>(1u << i)); }
  static constexpr Subset full(int n) {
    return Subset(static_cast<std::uint16_t>((1u << n) - 1u));
  }
  static Subset of(std::initializer_list<int> elems) {
    std::uint16_t m = 0;
    for (int e : elems) m |= static_cast<std::uint16_t>(1u << e);
    return Subset(m);
  }

  constexpr int size() const { return std::popcount(bits); }
  constexpr bool is_empty() const { return bits == 0; }
  constexpr bool contains(int i) const { return (bits >> i) & 1u; }
  constexpr bool subset_of(Subset other) const { return (bits & ~other.bits) == 0; }

  constexpr Subset sym_diff(Subset o) const { return Subset(bits ^ o.bits); }
  constexpr Subset unite(Subset o) const { return Subset(bits | o.bits); }
  constexpr Subset intersect(Subset o) const { return Subset(bits & o.bits); }
  constexpr Subset minus(Subset o) const { return Subset(bits & ~o.bits); }
  constexpr Subset complement_in(int n) const {
    return Subset(static_cast<std::uint16_t>(~bits & ((1u << n) - 1u)));
  }
  constexpr Subset with(int i) const { return Subset(static_cast<std::uint16_t>(bits | (1u << i))); }
  constexpr Subset without(int i) const {
    return Subset(static_cast<std::uint16_t>(bits & ~(1u << i)));
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 0; i < kMaxGroundSize; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  friend constexpr auto operator<=>(Subset a, Subset b) = default;
};

inline char element_digit(int i) { return i < 10 ? static_cast<char>('0' + i) : static_cast<char>('a' + i - 10); }

inline int digit_element(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  throw std::invalid_argument(std::string("subset string: bad element digit '") + c + "'");
}

// Subsets travel through all I/O as strings of sorted digits, e.g. "013";
// the empty set is "". Elements 10..15 use the digits a..f.
inline std::string subset_to_string(Subset s) {
  std::string out;
  for (int i = 0; i < kMaxGroundSize; ++i)
    if (s.contains(i)) out.push_back(element_digit(i));
  return out;
}

inline Subset parse_subset(const std::string& s) {
  std::uint16_t m = 0;
  for (char c : s) {
    int e = digit_element(c);
    if (m & (1u << e)) throw std::invalid_argument("subset string: repeated element '" + s + "'");
    m |= static_cast<std::uint16_t>(1u << e);
  }
  return Subset(m);
}

/// E(n): the subsets of [n] whose complement has even size, in canonical
/// order (ascending bit-mask value). |E(n)| = 2^(n-1).
inline std::vector<Subset> enumerate_E(int n) {
  if (n < 1 || n > kMaxGroundSize)
    throw std::invalid_argument("enumerate_E: n must be between 1 and 16");
  std::vector<Subset> out;
  out.reserve(1u << (n - 1));
  for (std::uint32_t m = 0; m < (1u << n); ++m)
    if ((n - std::popcount(m)) % 2 == 0) out.push_back(Subset(static_cast<std::uint16_t>(m)));
  return out;
}

inline bool in_E(int n, Subset s) { return (n - s.size()) % 2 == 0; }

/// Position of s in enumerate_E(n). Masks in E(n) have the parity of n-size
/// even, so exactly half of all smaller masks qualify; counting them keeps
/// the lookup table-free.
inline int index_in_E(int n, Subset s) {
  if (!in_E(n, s)) throw std::invalid_argument("index_in_E: subset not in E(n)");
  int idx = 0;
  for (std::uint32_t m = 0; m < s.bits; ++m)
    if ((n - std::popcount(m)) % 2 == 0) ++idx;
  return idx;
}

/// The sign (-1)^l attached to element i against the pair (mu, nu), where
/// l counts the j in nu with i < j plus the j' in mu with i > j'.
inline int sign_count(int i, Subset mu, Subset nu) {
  std::uint16_t above = static_cast<std::uint16_t>(~((2u << i) - 1u));  // bits > i
  std::uint16_t below = static_cast<std::uint16_t>((1u << i) - 1u);    // bits < i
  int l = std::popcount(static_cast<std::uint16_t>(nu.bits & above)) +
          std::popcount(static_cast<std::uint16_t>(mu.bits & below));
  return (l % 2 == 0) ? 1 : -1;
}

}  // namespace spinortrop
