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

// Maintenance utility for the bundled fixtures: recomputes every
// subdivision from its weights, diffs the cells against the stored
// transcription, rewrites the adjacency edges from the engine and locks
// each entry with a checksum. Cell lists are the source of truth and are
// never modified by this tool.

#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include "spinortrop/fixtures.hpp"

using namespace spinortrop;

namespace {

std::string cell_text(const Cell& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.label.size(); ++i) {
    if (i) out += ",";
    out += subset_to_string(c.label[i]);
  }
  return out + "}";
}

// Returns false when the stored cells disagree with the engine.
bool process(SubdivisionFixture& f, bool write_edges) {
  Subdivision s = compute_fixture_subdivision(f);

  std::set<std::vector<Subset>> expected, actual;
  for (const Cell& c : f.cells) expected.insert(c.label);
  for (const Cell& c : s.maximal_cells) actual.insert(c.label);

  if (expected != actual) {
    std::cout << "MISMATCH " << f.name << ": stored " << expected.size() << " cells, computed "
              << actual.size() << "\n";
    for (const auto& l : expected)
      if (!actual.count(l)) std::cout << "  only stored:   " << cell_text(Cell(l)) << "\n";
    for (const auto& l : actual)
      if (!expected.count(l)) std::cout << "  only computed: " << cell_text(Cell(l)) << "\n";
    return false;
  }

  if (write_edges) {
    std::vector<int> to_fixture(s.maximal_cells.size());
    for (std::size_t i = 0; i < f.cells.size(); ++i)
      to_fixture[*s.cell_index(f.cells[i])] = static_cast<int>(i);
    f.edges.clear();
    for (const FacetPair& e : s.facet_pairs) {
      int a = to_fixture[e.first], b = to_fixture[e.second];
      f.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(f.edges.begin(), f.edges.end());
    f.checksum = fixture_checksum(f);
  }
  std::cout << "ok " << f.name << ": " << s.maximal_cells.size() << " cells, "
            << s.facet_pairs.size() << " facet pairs\n";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  bool write = false;
  std::string dir;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--write")
      write = true;
    else if (arg == "--fixtures" && i + 1 < argc)
      dir = argv[++i];
    else {
      std::cerr << "usage: spinortrop-fixgen [--write] [--fixtures DIR]\n";
      return 2;
    }
  }

  FixtureBundle bundle = load_fixtures(dir);
  bool ok = true;
  for (SubdivisionFixture& f : bundle.table2) ok &= process(f, write);
  for (SubdivisionFixture& f : bundle.appendix) ok &= process(f, write);

  if (write && ok) {
    std::string base = fixture_directory(dir);
    std::ofstream(base + "/table2.json") << fixture_bundle_to_json(bundle.table2, 4);
    std::ofstream(base + "/appendix.json") << fixture_bundle_to_json(bundle.appendix, 5);
    std::cout << "fixtures rewritten with engine edges and checksums\n";
  }
  return ok ? 0 : 1;
}
