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

#include "spinortrop/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "spinortrop/fan5.hpp"

namespace spinortrop {

namespace {

using nlohmann::json;

std::string canonical_text(const SubdivisionFixture& f) {
  std::ostringstream out;
  out << f.n << "|" << f.name << "|";
  for (const Cell& c : f.cells) {
    for (std::size_t i = 0; i < c.label.size(); ++i) {
      if (i) out << ",";
      out << subset_to_string(c.label[i]);
    }
    out << ";";
  }
  out << "|";
  for (auto [a, b] : f.edges) out << a << "-" << b << ";";
  return out.str();
}

json fixture_to_json(const SubdivisionFixture& f) {
  json entry;
  if (f.index >= 0) entry["index"] = f.index;
  entry["name"] = f.name;
  if (!f.rays.empty()) entry["rays"] = f.rays;
  if (!f.weights.values.empty()) {
    json w = json::object();
    for (const auto& [s, v] : f.weights.values) w[subset_to_string(s)] = rational_to_string(v);
    entry["weights"] = w;
  }
  json cells = json::array();
  for (const Cell& c : f.cells) {
    json cell = json::array();
    for (Subset s : c.label) cell.push_back(subset_to_string(s));
    cells.push_back(cell);
  }
  entry["cells"] = cells;
  json edges = json::array();
  for (auto [a, b] : f.edges) edges.push_back(json::array({a, b}));
  entry["edges"] = edges;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(f.checksum));
  entry["checksum"] = std::string(buf);
  return entry;
}

SubdivisionFixture fixture_from_json(const json& entry, int n) {
  SubdivisionFixture f;
  f.n = n;
  f.index = entry.value("index", -1);
  f.name = entry.value("name", "");
  f.weights = WeightVector(n);
  if (entry.contains("rays")) f.rays = entry["rays"].get<std::vector<int>>();
  if (entry.contains("weights"))
    for (auto it = entry["weights"].begin(); it != entry["weights"].end(); ++it)
      f.weights.set(parse_subset(it.key()), parse_rational(it.value().get<std::string>()));
  for (const auto& cell : entry["cells"]) {
    std::vector<Subset> label;
    for (const auto& s : cell) label.push_back(parse_subset(s.get<std::string>()));
    f.cells.push_back(Cell(std::move(label)));
  }
  for (const auto& e : entry["edges"]) f.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  if (entry.contains("checksum")) {
    std::uint64_t stored = std::stoull(entry["checksum"].get<std::string>(), nullptr, 16);
    f.checksum = fixture_checksum(f);
    if (stored != f.checksum)
      throw std::runtime_error("fixture '" + f.name + "': checksum mismatch, data was edited");
  } else {
    f.checksum = fixture_checksum(f);
  }
  return f;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace

WeightVector SubdivisionFixture::weight_vector() const {
  if (!rays.empty()) return fan5::weight_from_rays(rays);
  return weights;
}

const SubdivisionFixture& FixtureBundle::appendix_entry(int index) const {
  for (const SubdivisionFixture& f : appendix)
    if (f.index == index) return f;
  throw std::invalid_argument("no appendix fixture with index " + std::to_string(index));
}

std::string fixture_directory(const std::string& explicit_dir) {
  if (!explicit_dir.empty()) return explicit_dir;
  if (const char* env = std::getenv("SPINORTROP_FIXTURES"); env && *env) return env;
  return SPINORTROP_SOURCE_FIXTURES;
}

std::uint64_t fixture_checksum(const SubdivisionFixture& f) {
  // FNV-1a, 64-bit
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical_text(f)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

FixtureBundle load_fixtures(const std::string& dir) {
  std::string base = fixture_directory(dir);
  FixtureBundle bundle;
  json t2 = load_json_file(base + "/table2.json");
  for (const auto& entry : t2["entries"]) bundle.table2.push_back(fixture_from_json(entry, 4));
  json ax = load_json_file(base + "/appendix.json");
  for (const auto& entry : ax["entries"]) bundle.appendix.push_back(fixture_from_json(entry, 5));
  return bundle;
}

std::string fixture_bundle_to_json(const std::vector<SubdivisionFixture>& entries, int n) {
  json out;
  out["n"] = n;
  json arr = json::array();
  for (const SubdivisionFixture& f : entries) arr.push_back(fixture_to_json(f));
  out["entries"] = arr;
  return out.dump(2) + "\n";
}

Subdivision compute_fixture_subdivision(const SubdivisionFixture& fixture) {
  DeltaMatroid full(fixture.n, enumerate_E(fixture.n));
  return regular_subdivision(full, fixture.weight_vector());
}

SubdivisionComparison compare_subdivision(const SubdivisionFixture& fixture,
                                          const Subdivision& computed) {
  SubdivisionComparison result;
  std::ostringstream detail;

  std::set<std::vector<Subset>> expected, actual;
  for (const Cell& c : fixture.cells) expected.insert(c.label);
  for (const Cell& c : computed.maximal_cells) actual.insert(c.label);
  result.cells_match = expected == actual;
  if (!result.cells_match) {
    for (const auto& l : expected)
      if (!actual.count(l)) detail << "missing cell {" << Cell(l).label.size() << " bases}; ";
    for (const auto& l : actual)
      if (!expected.count(l)) detail << "extra cell {" << Cell(l).label.size() << " bases}; ";
    detail << "expected " << expected.size() << " cells, computed " << actual.size() << "; ";
  }

  if (result.cells_match) {
    // map fixture cell index -> computed cell index, then compare edge sets
    std::vector<int> to_computed(fixture.cells.size());
    for (std::size_t i = 0; i < fixture.cells.size(); ++i)
      to_computed[i] = *computed.cell_index(fixture.cells[i]);
    std::set<std::pair<int, int>> expected_edges, actual_edges;
    for (auto [a, b] : fixture.edges) {
      int x = to_computed[a], y = to_computed[b];
      expected_edges.emplace(std::min(x, y), std::max(x, y));
    }
    for (const FacetPair& e : computed.facet_pairs)
      actual_edges.emplace(std::min(e.first, e.second), std::max(e.first, e.second));
    result.edges_match = expected_edges == actual_edges;
    if (!result.edges_match)
      detail << "edge sets differ (expected " << expected_edges.size() << ", computed "
             << actual_edges.size() << "); ";
  }

  result.matroidal = is_matroidal(computed);
  result.matroidal_by_edges = is_matroidal_by_edges(computed);
  if (result.matroidal != result.matroidal_by_edges)
    detail << "matroidality oracles disagree; ";
  else if (!result.matroidal)
    detail << "subdivision is not matroidal; ";

  result.detail = detail.str();
  return result;
}

}  // namespace spinortrop
