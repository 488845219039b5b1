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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinortrop/polyhedra.hpp"
#include "spinortrop/subset.hpp"
#include "spinortrop/wick.hpp"

namespace spinortrop {

// One bundled subdivision: the reference cells and adjacency edges it must
// reproduce. Table-2 entries carry explicit weights; the n = 5 entries name
// the rays whose sum is the interior weight.
struct SubdivisionFixture {
  int n = 0;
  int index = 0;        // -1 for named table-2 entries
  std::string name;     // e.g. "r3", "r2+r3", or "10"
  std::vector<int> rays;
  WeightVector weights;
  std::vector<Cell> cells;  // in source order, not canonical order
  std::vector<std::pair<int, int>> edges;
  std::uint64_t checksum = 0;

  WeightVector weight_vector() const;
};

struct FixtureBundle {
  std::vector<SubdivisionFixture> table2;
  std::vector<SubdivisionFixture> appendix;

  const SubdivisionFixture& appendix_entry(int index) const;
};

/// Directory search order: explicit argument, then SPINORTROP_FIXTURES,
/// then the bundled directory this build was configured with.
std::string fixture_directory(const std::string& explicit_dir = "");

FixtureBundle load_fixtures(const std::string& dir = "");

std::uint64_t fixture_checksum(const SubdivisionFixture& f);

/// Serialize back to the canonical JSON text (the loader's inverse).
std::string fixture_bundle_to_json(const std::vector<SubdivisionFixture>& entries, int n);

struct SubdivisionComparison {
  bool cells_match = false;
  bool edges_match = false;
  bool matroidal = false;
  bool matroidal_by_edges = false;
  std::string detail;

  bool pass() const { return cells_match && edges_match && matroidal && matroidal_by_edges; }
};

/// Recomputes the fixture's subdivision and compares cells (as sets of
/// sets) and adjacency edges (through the label bijection); both
/// matroidality oracles run on every cell.
SubdivisionComparison compare_subdivision(const SubdivisionFixture& fixture,
                                          const Subdivision& computed);

/// The subdivision the fixture describes, recomputed from its weights.
Subdivision compute_fixture_subdivision(const SubdivisionFixture& fixture);

}  // namespace spinortrop
