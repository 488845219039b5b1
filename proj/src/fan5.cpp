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

#include "spinortrop/fan5.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace spinortrop::fan5 {

namespace {

constexpr int kN = 5;

// The ten 3-subsets of [5] in table order.
const std::vector<std::string> kTriples = {"012", "013", "023", "123", "014",
                                           "024", "124", "034", "134", "234"};

QVec zero16() { return QVec(kAmbientDim, Rational(0)); }

int e_index(Subset lambda) { return index_in_E(kN, lambda); }

}  // namespace

QVec f_coord(Subset lambda) {
  QVec v = zero16();
  v[e_index(lambda)] = 1;
  return v;
}

const std::vector<QVec>& rays() {
  static const std::vector<QVec> table = [] {
    std::vector<QVec> r;
    r.reserve(kNumRays);
    for (int i = 0; i < kN; ++i) r.push_back(f_coord(Subset::singleton(i)));
    for (const std::string& t : kTriples) r.push_back(f_coord(parse_subset(t)));
    r.push_back(f_coord(Subset::full(kN)));
    for (const std::string& t : kTriples) {
      Subset s = parse_subset(t);
      QVec v = f_coord(s);
      for (int i : s.members()) v = qvec_add(v, f_coord(Subset::singleton(i)));
      r.push_back(v);
    }
    for (int k = 0; k < 10; ++k) r.push_back(qvec_scale(r[16 + k], Rational(-1)));
    return r;
  }();
  return table;
}

const std::vector<QVec>& lineality() {
  static const std::vector<QVec> table = [] {
    std::vector<QVec> l;
    for (int i = 0; i < kN; ++i) {
      QVec v = zero16();
      for (Subset lam : enumerate_E(kN))
        if (lam.contains(i)) v[e_index(lam)] = 1;
      l.push_back(v);
    }
    l.push_back(QVec(kAmbientDim, Rational(1)));  // l_5 = sum of all coordinates
    return l;
  }();
  return table;
}

const SpanReducer& lineality_reducer() {
  static const SpanReducer reducer(lineality());
  return reducer;
}

bool in_lineality(const QVec& v) { return lineality_reducer().contains(v); }

QVec apply_ambient(const GroupElement& g, const QVec& v) {
  QVec out = zero16();
  for (Subset lam : enumerate_E(kN)) out[e_index(g.apply(lam))] = v[e_index(lam)];
  return out;
}

namespace {

const std::map<QVec, int>& ray_residues() {
  static const std::map<QVec, int> table = [] {
    std::map<QVec, int> m;
    for (int i = 0; i < kNumRays; ++i) {
      QVec res = lineality_reducer().reduce(rays()[i]);
      if (!m.emplace(res, i).second)
        throw std::logic_error("fan5: two rays coincide modulo lineality");
    }
    return m;
  }();
  return table;
}

}  // namespace

int match_ray_mod_lineality(const QVec& v) {
  auto it = ray_residues().find(lineality_reducer().reduce(v));
  return it == ray_residues().end() ? -1 : it->second;
}

std::vector<int> ray_permutation(const GroupElement& g) {
  std::vector<int> perm(kNumRays);
  for (int i = 0; i < kNumRays; ++i) {
    int image = match_ray_mod_lineality(apply_ambient(g, rays()[i]));
    if (image < 0) throw std::logic_error("fan5: group image leaves the ray table");
    perm[i] = image;
  }
  return perm;
}

namespace {

GroupElement s_elem(const std::vector<std::vector<int>>& cycles) {
  return GroupElement::cycles(kN, cycles);
}

GroupElement st_elem(const std::vector<std::vector<int>>& cycles, const std::string& tw) {
  GroupElement g = GroupElement::cycles(kN, cycles);
  g.tw = parse_subset(tw);
  return g;
}

GroupElement t_elem(const std::string& tw) { return GroupElement::twist_by(kN, parse_subset(tw)); }

}  // namespace

const std::vector<Table1Row>& table1() {
  static const std::vector<Table1Row> table = [] {
    std::vector<Table1Row> rows;
    auto row = [&](int index, std::vector<int> rep, int dim, std::vector<GaleRecipe> recipes) {
      Table1Row r;
      r.index = index;
      r.rep_rays = std::move(rep);
      r.dim = dim;
      r.a_tau = std::move(recipes);
      r.has_certificate = !r.a_tau.empty();
      rows.push_back(std::move(r));
    };
    auto rec = [](GroupElement g, int tau, std::string text) {
      return GaleRecipe{std::move(g), tau, std::move(text)};
    };
    GroupElement id = GroupElement::identity(kN);

    row(-1, {}, 5,
        {rec(t_elem("23"), 15, "t23.tau15"), rec(st_elem({{1, 3}}, "03"), 15, "s(13)t03.tau15")});
    row(0, {26}, 6,
        {rec(s_elem({{1, 2}}), 15, "s(12).tau15"), rec(s_elem({{3, 4}}), 15, "s(34).tau15"),
         rec(s_elem({{1, 2}, {3, 4}}), 15, "s(12)(34).tau15")});
    row(1, {4}, 6,
        {rec(st_elem({{1, 4, 2}}, "14"), 15, "s(142)t14.tau15"),
         rec(st_elem({{0, 2, 4}}, "03"), 15, "s(024)t03.tau15")});
    row(2, {3, 4}, 7,
        {rec(st_elem({{0, 2, 1}}, "34"), 16, "s(021)t34.tau16"),
         rec(s_elem({{0, 2}, {3, 4}}), 16, "s(02)(34).tau16")});
    row(3, {4, 5}, 7,
        {rec(st_elem({{0, 3, 2}, {1, 4}}, "23"), 15, "s(032)(14)t23.tau15"),
         rec(s_elem({{0, 2}, {1, 3}}), 15, "s(02)(13).tau15")});
    row(4, {4, 26}, 7,
        {rec(id, 15, "tau15"), rec(s_elem({{0, 1, 2}}), 15, "s(012).tau15"),
         rec(s_elem({{1, 2}}), 15, "s(12).tau15")});
    row(5, {4, 5, 9}, 8,
        {rec(id, 16, "tau16"), rec(st_elem({{2, 4, 3}}, "23"), 17, "s(243)t23.tau17")});
    row(6, {4, 9, 26}, 8,
        {rec(id, 15, "tau15"), rec(st_elem({{0, 3}, {1, 4, 2}}, "02"), 17, "s(03)(142)t02.tau17"),
         rec(st_elem({{0, 3}, {1, 4, 2}}, "03"), 17, "s(03)(142)t03.tau17")});
    row(7, {4, 6, 26}, 8,
        {rec(s_elem({{0, 1, 2}}), 15, "s(012).tau15"), rec(s_elem({{1, 2}}), 15, "s(12).tau15")});
    row(8, {3, 4, 5}, 8, {rec(id, 16, "tau16"), rec(id, 17, "tau17")});
    row(9, {3, 4, 26}, 8,
        {rec(st_elem({{0, 4, 1, 3, 2}}, "03"), 17, "s(04132)t03.tau17"),
         rec(st_elem({{0, 3, 2}, {1, 4}}, "03"), 17, "s(032)(14)t03.tau17")});
    row(10, {4, 7, 8, 9}, 9, {rec(id, 15, "tau15"), rec(s_elem({{2, 3}}), 15, "s(23).tau15")});
    row(11, {3, 4, 6, 9}, 9, {});
    row(12, {3, 4, 5, 25}, 9, {rec(id, 17, "tau17"), rec(s_elem({{3, 4}}), 17, "s(34).tau17")});
    row(13, {3, 4, 5, 6}, 9,
        {rec(s_elem({{1, 2}}), 16, "s(12).tau16"),
         rec(s_elem({{0, 1}, {3, 4}}), 16, "s(01)(34).tau16")});
    row(14, {3, 4, 6, 26}, 9,
        {rec(st_elem({{0, 3}, {1, 4}}, "03"), 17, "s(03)(14)t03.tau17"),
         rec(st_elem({{0, 3, 1, 4}}, "03"), 17, "s(0314)t03.tau17")});
    row(15, {4, 7, 8, 9, 26}, 10, {});
    row(16, {3, 4, 5, 7, 9}, 10, {});
    row(17, {3, 4, 5, 6, 25}, 10, {});
    row(18, {3, 4, 6, 9, 26}, 10, {});
    return rows;
  }();
  return table;
}

const Table1Row& table1_row(int index) {
  for (const Table1Row& r : table1())
    if (r.index == index) return r;
  throw std::invalid_argument("table1_row: no row with index " + std::to_string(index));
}

std::vector<int> resolve_translate(const GroupElement& g, const std::vector<int>& ray_indices) {
  std::vector<int> out;
  out.reserve(ray_indices.size());
  for (int r : ray_indices) {
    int image = match_ray_mod_lineality(apply_ambient(g, rays()[r]));
    if (image < 0) throw std::domain_error("resolve_translate: image ray not in the table");
    out.push_back(image);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RankCertificate gale_rank_check(const Table1Row& row) {
  if (!row.has_certificate)
    throw std::invalid_argument("gale_rank_check: row has no certificate recipe");
  RankCertificate cert;
  cert.row_index = row.index;
  cert.dim = row.dim;
  cert.expected = kAmbientDim - (row.dim + 1);

  QMat tau_rows;
  for (int r : row.rep_rays) tau_rows.push_back(rays()[r]);

  QMat stacked;
  cert.spans_contain_tau = true;
  for (const GaleRecipe& recipe : row.a_tau) {
    std::vector<int> sigma = resolve_translate(recipe.g, table1_row(recipe.tau_index).rep_rays);
    cert.resolved_cones.push_back(sigma);
    QMat r_sigma;
    for (int r : sigma) r_sigma.push_back(rays()[r]);
    for (const QVec& l : lineality()) r_sigma.push_back(l);
    for (const QVec& t : tau_rows)
      if (!in_row_span(r_sigma, t)) cert.spans_contain_tau = false;
    for (QVec& k : kernel_basis(r_sigma, kAmbientDim)) stacked.push_back(std::move(k));
  }
  cert.rank = rank(stacked);
  cert.pass = cert.spans_contain_tau && cert.rank == cert.expected;
  return cert;
}

bool dim_consistency(const Table1Row& row) {
  QMat m;
  for (int r : row.rep_rays) m.push_back(rays()[r]);
  for (const QVec& l : lineality()) m.push_back(l);
  return rank(m) == row.dim + 1;
}

FVectorReport orbit_fvector() {
  FVectorReport report;
  std::vector<GroupElement> group = enumerate_group(kN);
  report.group_order = static_cast<long>(group.size());

  std::vector<std::vector<int>> perms;
  perms.reserve(group.size());
  for (const GroupElement& g : group) perms.push_back(ray_permutation(g));

  for (const Table1Row& row : table1()) {
    std::set<int> rep(row.rep_rays.begin(), row.rep_rays.end());
    long stab = 0;
    for (const std::vector<int>& perm : perms) {
      std::set<int> image;
      for (int r : rep) image.insert(perm[r]);
      if (image == rep) ++stab;
    }
    report.cone_counts[row.dim - 5] += report.group_order / stab;
    report.orbit_counts[row.dim - 5] += 1;
  }
  return report;
}

bool representatives_inequivalent() {
  std::vector<GroupElement> group = enumerate_group(kN);
  const auto& rows = table1();
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      if (rows[a].dim != rows[b].dim || rows[a].rep_rays.size() != rows[b].rep_rays.size())
        continue;
      std::set<int> target(rows[b].rep_rays.begin(), rows[b].rep_rays.end());
      for (const GroupElement& g : group) {
        std::vector<int> perm = ray_permutation(g);
        std::set<int> image;
        for (int r : rows[a].rep_rays) image.insert(perm[r]);
        if (image == target) return false;
      }
    }
  }
  return true;
}

GlueReport glue_check() {
  GlueReport report;
  const auto& r = rays();
  const auto& l = lineality();

  QVec w = qvec_add(qvec_add(r[3], r[4]), qvec_add(r[6], r[9]));
  QVec correction = zero16();
  correction = qvec_sub(correction, l[0]);
  correction = qvec_sub(correction, l[1]);
  correction = qvec_add(correction, l[2]);
  correction = qvec_add(correction, l[3]);
  correction = qvec_add(correction, l[4]);
  correction = qvec_sub(correction, l[5]);
  QVec rhs = qvec_sub(qvec_add(r[25], r[26]), qvec_scale(correction, Rational(1, 2)));
  report.ray_identity = (w == rhs);

  report.outside_lineality = !in_lineality(w);

  std::vector<GroupElement> gens = {s_elem({{0, 1}}), s_elem({{3, 4}}), t_elem("01"),
                                    t_elem("34"), st_elem({{0, 3}, {1, 4}}, "03")};
  std::set<int> seen = {25};
  std::vector<int> frontier = {25};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int ray : frontier) {
      for (const GroupElement& g : gens) {
        int image = match_ray_mod_lineality(apply_ambient(g, rays()[ray]));
        if (image < 0) throw std::logic_error("glue_check: stabilizer image leaves the ray table");
        if (seen.insert(image).second) next.push_back(image);
      }
    }
    frontier = std::move(next);
  }
  report.stabilizer_orbit = (seen == std::set<int>{25, 26});
  return report;
}

bool star_avoidance_check() {
  const std::vector<std::vector<std::string>> sets = {
      {"4", "023", "123", "014"},            // S_15
      {"3", "4", "012", "023", "014"},       // S_16
      {"3", "4", "012", "013"},              // S_17
  };
  for (const auto& strings : sets) {
    std::set<Subset> base;
    for (const std::string& s : strings) base.insert(parse_subset(s));
    for (std::uint32_t m = 0; m < (1u << kN); ++m) {
      if (std::popcount(m) % 2 != 0) continue;
      Subset mu(static_cast<std::uint16_t>(m));
      std::set<Subset> image;
      for (Subset s : base) image.insert(s.sym_diff(mu));
      // look for {k}, {l}, {i,j,k}, {i,j,l} inside the image
      for (int k = 0; k < kN; ++k) {
        if (!image.count(Subset::singleton(k))) continue;
        for (int el = 0; el < kN; ++el) {
          if (el == k || !image.count(Subset::singleton(el))) continue;
          for (int i = 0; i < kN; ++i) {
            if (i == k || i == el) continue;
            for (int j = i + 1; j < kN; ++j) {
              if (j == k || j == el) continue;
              Subset ij = Subset::of({i, j});
              if (image.count(ij.with(k)) && image.count(ij.with(el))) return false;
            }
          }
        }
      }
    }
  }
  return true;
}

namespace {

QVec f4_coord(Subset lambda) {
  QVec v(8, Rational(0));
  v[index_in_E(4, lambda)] = 1;
  return v;
}

}  // namespace

const std::vector<WeightVector>& n4_ray_weights() {
  static const std::vector<WeightVector> table = [] {
    auto make = [](std::initializer_list<const char*> subsets) {
      WeightVector w(4);
      for (const char* s : subsets) w.set(parse_subset(s), Rational(1));
      return w;
    };
    return std::vector<WeightVector>{make({"", "0123"}), make({"01", "23"}), make({"02", "13"}),
                                     make({"03", "12"})};
  }();
  return table;
}

bool n4_invariance_check() {
  std::vector<QVec> rays4 = {
      qvec_add(f4_coord(Subset::empty()), f4_coord(parse_subset("0123"))),
      qvec_add(f4_coord(parse_subset("01")), f4_coord(parse_subset("23"))),
      qvec_add(f4_coord(parse_subset("02")), f4_coord(parse_subset("13"))),
      qvec_add(f4_coord(parse_subset("03")), f4_coord(parse_subset("12")))};

  QMat lin4;
  for (int i = 0; i < 4; ++i) {
    QVec v(8, Rational(0));
    for (Subset lam : enumerate_E(4))
      if (lam.contains(i)) v[index_in_E(4, lam)] = 1;
    lin4.push_back(v);
  }
  lin4.push_back(QVec(8, Rational(1)));

  QVec v0 = qvec_sub(qvec_sub(qvec_add(f4_coord(parse_subset("01")), f4_coord(parse_subset("23"))),
                              f4_coord(parse_subset("02"))),
                     f4_coord(parse_subset("13")));
  QVec v1 = qvec_sub(qvec_sub(qvec_add(f4_coord(Subset::empty()), f4_coord(parse_subset("0123"))),
                              f4_coord(parse_subset("02"))),
                     f4_coord(parse_subset("13")));
  QVec v2 = qvec_sub(qvec_sub(qvec_add(f4_coord(Subset::empty()), f4_coord(parse_subset("0123"))),
                              f4_coord(parse_subset("01"))),
                     f4_coord(parse_subset("23")));

  // sigma_i pairs the i-th ray with r_3
  std::vector<QVec> normals = {v0, v1, v2};
  for (int i = 0; i < 3; ++i) {
    if (qvec_dot(normals[i], rays4[i]) != 0) return false;
    if (qvec_dot(normals[i], rays4[3]) != 0) return false;
    for (const QVec& l : lin4)
      if (qvec_dot(normals[i], l) != 0) return false;
  }

  QMat stack = {v0, v1, v2};
  return rank(stack) == 2;
}

WeightVector weight_from_rays(const std::vector<int>& ray_indices) {
  WeightVector w(kN);
  for (int r : ray_indices) {
    if (r < 0 || r >= kNumRays) throw std::invalid_argument("weight_from_rays: bad ray index");
    const QVec& v = rays()[r];
    for (Subset lam : enumerate_E(kN)) {
      const Rational& c = v[e_index(lam)];
      if (c != 0) w.add(lam, c);
    }
  }
  return w;
}

}  // namespace spinortrop::fan5
