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

#include "doctest.h"
#include "spinortrop/group.hpp"
#include "test_util.hpp"

using namespace spinortrop;
using testing::parse_matroid;

TEST_CASE("group elements compose in normal form") {
  GroupElement t01 = GroupElement::twist_by(4, parse_subset("01"));
  CHECK(compose(t01, t01) == GroupElement::identity(4));

  GroupElement s01 = GroupElement::cycles(4, {{0, 1}});
  GroupElement st = compose(s01, t01);
  for (std::uint32_t m = 0; m < 16; ++m) {
    Subset lam(static_cast<std::uint16_t>(m));
    CHECK(st.apply(lam) == s01.apply(t01.apply(lam)));
  }

  // composing with the inverse gives the identity, across a sweep
  std::vector<GroupElement> all = enumerate_group(3);
  for (const GroupElement& g : all) CHECK(compose(g, g.inverse()) == GroupElement::identity(3));
  for (const GroupElement& g : all)
    for (const GroupElement& h : all)
      for (std::uint32_t m = 0; m < 8; ++m) {
        Subset lam(static_cast<std::uint16_t>(m));
        CHECK(compose(g, h).apply(lam) == g.apply(h.apply(lam)));
      }
}

TEST_CASE("closure enumeration reproduces the group order n! 2^(n-1)") {
  long expected = 1;
  for (int n = 2; n <= 5; ++n) {
    expected = 1;
    for (int k = 2; k <= n; ++k) expected *= k;
    expected <<= (n - 1);
    CHECK(static_cast<long>(group_closure(n, standard_generators(n)).size()) == expected);
    CHECK(static_cast<long>(enumerate_group(n).size()) == expected);
  }
}

TEST_CASE("orbits") {
  DeltaMatroid full(4, enumerate_E(4));
  CHECK(orbit(full).size() == 1);

  DeltaMatroid k = parse_matroid(5, {"0", "1", "012", "013", "014", "034", "134", "01234"});
  // the two 8-basis cells of the bundled subdivisions equivalent to K
  DeltaMatroid m6_subd10 = parse_matroid(5, {"0", "1", "4", "014", "024", "124", "034", "134"});
  CHECK(orbit_contains(k, m6_subd10));
  DeltaMatroid m10_subd15 = parse_matroid(5, {"0", "1", "4", "014", "024", "124", "034", "134"});
  CHECK(orbit_contains(k, m10_subd15));
  DeltaMatroid m11_subd15 =
      parse_matroid(5, {"0", "1", "2", "3", "4", "034", "134", "234"});
  CHECK(orbit_contains(k, m11_subd15));

  // canonical representatives agree across the orbit
  DeltaMatroid c1 = orbit_canonical(k);
  DeltaMatroid c2 = orbit_canonical(m6_subd10);
  CHECK(c1 == c2);
}
