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

#include <set>

#include "doctest.h"
#include "spinortrop/polyhedra.hpp"
#include "test_util.hpp"

using namespace spinortrop;
using testing::parse_matroid;

namespace {

Cell parse_cell(const std::vector<std::string>& labels) {
  std::vector<Subset> out;
  for (const auto& s : labels) out.push_back(parse_subset(s));
  return Cell(out);
}

WeightVector weights4(std::initializer_list<const char*> ones) {
  WeightVector w(4);
  for (const char* s : ones) w.set(parse_subset(s), 1);
  return w;
}

}  // namespace

TEST_CASE("the two bundled n = 4 subdivisions") {
  DeltaMatroid full(4, enumerate_E(4));

  SUBCASE("one lifted pair of vertices gives two cells and one shared facet") {
    Subdivision s = regular_subdivision(full, weights4({"03", "12"}));
    REQUIRE(s.maximal_cells.size() == 2);
    std::set<Cell> cells(s.maximal_cells.begin(), s.maximal_cells.end());
    CHECK(cells.count(parse_cell({"", "01", "02", "03", "13", "23", "0123"})));
    CHECK(cells.count(parse_cell({"", "01", "02", "12", "13", "23", "0123"})));
    REQUIRE(s.facet_pairs.size() == 1);
    CHECK(cell_dimension(4, s.maximal_cells[0]) == 4);
    CHECK(cell_dimension(4, s.maximal_cells[1]) == 4);
    CHECK(cell_dimension(4, s.facet_pairs[0].shared) == 3);
    CHECK(is_matroidal(s));
    CHECK(is_matroidal_by_edges(s));
  }

  SUBCASE("two lifted pairs give four cells in a 4-cycle") {
    Subdivision s = regular_subdivision(full, weights4({"02", "13", "03", "12"}));
    REQUIRE(s.maximal_cells.size() == 4);
    std::set<Cell> cells(s.maximal_cells.begin(), s.maximal_cells.end());
    CHECK(cells.count(parse_cell({"", "01", "12", "13", "23", "0123"})));
    CHECK(cells.count(parse_cell({"", "01", "02", "03", "23", "0123"})));
    CHECK(cells.count(parse_cell({"", "01", "02", "12", "23", "0123"})));
    CHECK(cells.count(parse_cell({"", "01", "03", "13", "23", "0123"})));
    CHECK(s.facet_pairs.size() == 4);
    auto adj = s.adjacency();
    for (const auto& nb : adj) CHECK(nb.size() == 2);  // a plain cycle
    CHECK(is_matroidal(s));
    CHECK(is_matroidal_by_edges(s));
  }
}

TEST_CASE("trivial subdivisions") {
  for (int n : {1, 2, 3, 4}) {
    DeltaMatroid full(n, enumerate_E(n));
    Subdivision s = regular_subdivision(full, WeightVector(n));
    REQUIRE(s.maximal_cells.size() == 1);
    CHECK(s.maximal_cells[0].label == full.bases);
    CHECK(s.facet_pairs.empty());
    CHECK(is_matroidal(s));
  }
}

TEST_CASE("cells cover all bases") {
  DeltaMatroid full(4, enumerate_E(4));
  for (auto w : {weights4({"03", "12"}), weights4({"02", "13", "03", "12"}), weights4({""})}) {
    Subdivision s = regular_subdivision(full, w);
    std::set<Subset> covered;
    for (const Cell& c : s.maximal_cells)
      for (Subset b : c.label) covered.insert(b);
    CHECK(covered.size() == full.bases.size());
  }
}

TEST_CASE("select_cell evaluates the lifted face formula") {
  DeltaMatroid full(4, enumerate_E(4));
  Subdivision s = regular_subdivision(full, weights4({"03", "12"}));

  // an interior direction of each maximal cell's selecting cone
  DirectionVector u0{{Rational(-1, 2), Rational(1, 2), Rational(1, 2), Rational(-1, 2)}};
  CHECK(select_cell(s, u0) == parse_cell({"", "01", "02", "03", "13", "23", "0123"}));
  DirectionVector u1{{Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(1, 2)}};
  CHECK(select_cell(s, u1) == parse_cell({"", "01", "02", "12", "13", "23", "0123"}));

  // a non-generic direction selects a lower-dimensional face
  DirectionVector eps{{Rational(0), Rational(0), Rational(0), Rational(1, 100)}};
  CHECK(select_cell(s, eps) == parse_cell({"", "01", "02"}));

  // u = 0 against a weight with a unique minimum picks that vertex alone
  WeightVector pin(4);
  for (Subset lam : enumerate_E(4)) pin.set(lam, 1);
  pin.set(parse_subset("02"), 0);
  Subdivision sp = regular_subdivision(DeltaMatroid(4, enumerate_E(4)), pin);
  CHECK(select_cell(sp, DirectionVector{{Rational(0), Rational(0), Rational(0), Rational(0)}}) ==
        parse_cell({"02"}));

  // on the trivial subdivision the formula reduces to the face matroid
  Subdivision triv = regular_subdivision(full, WeightVector(4));
  DirectionVector u{{Rational(1), Rational(-1), Rational(2), Rational(0)}};
  CHECK(select_cell(triv, u).label == face_matroid(full, u).bases);
}

TEST_CASE("select_cell output lies inside every incident maximal cell") {
  DeltaMatroid full(4, enumerate_E(4));
  Subdivision s = regular_subdivision(full, weights4({"02", "13", "03", "12"}));
  auto rng = testing::make_rng(55);
  for (int trial = 0; trial < 30; ++trial) {
    DirectionVector u;
    for (int i = 0; i < 4; ++i) u.u.push_back(testing::random_rational(rng));
    Cell face = select_cell(s, u);
    bool inside_some = false;
    for (const Cell& c : s.maximal_cells) {
      bool inside = true;
      for (Subset b : face.label)
        if (!c.contains(b)) inside = false;
      inside_some |= inside;
    }
    CHECK(inside_some);
  }
}

TEST_CASE("cell dimensions") {
  CHECK(cell_dimension(4, parse_cell({"01"})) == 0);
  CHECK(cell_dimension(4, parse_cell({"", "01"})) == 1);
  CHECK(cell_dimension(4, Cell(enumerate_E(4))) == 4);
  CHECK_THROWS_AS(cell_dimension(4, Cell()), std::invalid_argument);
}

TEST_CASE("edges of small cells") {
  Cell segment = parse_cell({"", "01"});
  auto edges = edges_of_cell(4, segment);
  REQUIRE(edges.size() == 1);
  CHECK(edges[0].first.sym_diff(edges[0].second) == parse_subset("01"));

  // K has an edge between the vertices 0 and 1 (direction e_0 - e_1)
  Cell k = parse_cell({"0", "1", "012", "013", "014", "034", "134", "01234"});
  bool found = false;
  for (const auto& [a, b] : edges_of_cell(5, k))
    if ((a == parse_subset("0") && b == parse_subset("1")) ||
        (a == parse_subset("1") && b == parse_subset("0")))
      found = true;
  CHECK(found);
  CHECK(cell_matroidal_by_edges(5, k));
}

TEST_CASE("lifting is invariant under affine shears of the weight") {
  DeltaMatroid full(4, enumerate_E(4));
  WeightVector w = weights4({"03", "12"});
  Subdivision base = regular_subdivision(full, w);
  auto rng = testing::make_rng(66);
  for (int trial = 0; trial < 10; ++trial) {
    QVec u(4);
    for (auto& x : u) x = testing::random_rational(rng);
    WeightVector sheared = w;
    for (Subset lam : enumerate_E(4)) {
      Rational shift = 0;
      for (int i = 0; i < 4; ++i)
        if (lam.contains(i)) shift += u[i];
      sheared.add(lam, shift);
    }
    Subdivision s = regular_subdivision(full, sheared);
    CHECK(s.maximal_cells == base.maximal_cells);
  }
}

TEST_CASE("matroidality of a vertex-pulling subdivision agrees across oracles") {
  DeltaMatroid full(4, enumerate_E(4));
  WeightVector w(4);
  w.set(Subset::empty(), 1);
  Subdivision s = regular_subdivision(full, w);
  CHECK(is_matroidal(s) == is_matroidal_by_edges(s));
}
