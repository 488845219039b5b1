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

#include <array>
#include <string>
#include <vector>

#include "spinortrop/group.hpp"
#include "spinortrop/linalg.hpp"
#include "spinortrop/subset.hpp"
#include "spinortrop/wick.hpp"

namespace spinortrop::fan5 {

// The secondary-fan data for n = 5: 36 ray vectors, the 6 lineality
// generators l_0..l_5, and the 20 cone-orbit representatives with their
// rank-certificate recipes. All vectors live in the 16-dimensional ambient
// space indexed by E(5) in canonical order; l_5 is the all-ones vector,
// zero in the quotient lattice but kept as an explicit row everywhere.

inline constexpr int kAmbientDim = 16;
inline constexpr int kNumRays = 36;
inline constexpr int kLinealityDimN = 5;  // dimension of the lineality in the quotient

/// Unit coordinate vector f_lambda.
QVec f_coord(Subset lambda);

const std::vector<QVec>& rays();
const std::vector<QVec>& lineality();
const SpanReducer& lineality_reducer();

bool in_lineality(const QVec& v);

/// g acting on an ambient vector by permuting the E(5) coordinates.
QVec apply_ambient(const GroupElement& g, const QVec& v);

/// Index of the unique table ray congruent to v modulo the lineality, or
/// -1 when there is none.
int match_ray_mod_lineality(const QVec& v);

/// The permutation of the 36 rays (modulo lineality) induced by g. Throws
/// if some image leaves the ray table, which would mean the table data is
/// inconsistent.
std::vector<int> ray_permutation(const GroupElement& g);

// One entry of the representative-cone table: a ray set, the printed
// dimension (taken in the quotient lattice), and the A_tau recipe given as
// group translates of maximal representatives. Maximal rows and the glued
// row carry no certificate.
struct GaleRecipe {
  GroupElement g;
  int tau_index = 0;  // which representative the translate applies to
  std::string text;   // display form, e.g. "s(021)t34.tau16"
};

struct Table1Row {
  int index = 0;  // -1 .. 18
  std::vector<int> rep_rays;
  int dim = 0;
  bool has_certificate = false;
  std::vector<GaleRecipe> a_tau;
};

const std::vector<Table1Row>& table1();
const Table1Row& table1_row(int index);

/// The translated ray set of g . tau, re-expressed modulo lineality as
/// indices into the ray table.
std::vector<int> resolve_translate(const GroupElement& g, const std::vector<int>& ray_indices);

struct RankCertificate {
  int row_index = 0;
  int dim = 0;
  std::vector<std::vector<int>> resolved_cones;
  int rank = 0;
  int expected = 0;
  bool spans_contain_tau = false;
  bool pass = false;
};

/// The Gale-dual rank certificate for one row: for each cone in A_tau,
/// stack a kernel basis of [rays of sigma; l_0..l_5]; the certificate
/// passes when every stacked kernel annihilates tau's span and the total
/// rank is 16 - (Dim + 1).
RankCertificate gale_rank_check(const Table1Row& row);

/// dim(span(rays of tau) + span(lineality)) == Dim + 1 in the ambient
/// space.
bool dim_consistency(const Table1Row& row);

struct FVectorReport {
  std::array<long, 6> cone_counts{};   // cones per dimension 5..10
  std::array<int, 6> orbit_counts{};   // orbits per dimension 5..10
  long group_order = 0;
};

/// Orbit sizes of the 20 representatives under G_5, via stabilizer
/// enumeration over all 1920 elements, summed per dimension.
FVectorReport orbit_fvector();

/// True when no two representatives lie in the same G_5-orbit (exhaustive
/// search over the group).
bool representatives_inequivalent();

struct GlueReport {
  bool ray_identity = false;       // r3+r4+r6+r9 = r25+r26 - (1/2)(-l0-l1+l2+l3+l4-l5)
  bool outside_lineality = false;  // that vector is not in the lineality
  bool stabilizer_orbit = false;   // <s(01),s(34),t01,t34,s(03)(14)t03> . r25 = {r25, r26} mod L
  bool pass() const { return ray_identity && outside_lineality && stabilizer_orbit; }
};

GlueReport glue_check();

/// Exhaustive check over the 16 even twists that none of the sets S_15,
/// S_16, S_17 can be twisted to contain a pattern {k, l, ijk, ijl}.
bool star_avoidance_check();

/// The n = 4 counterpart of the certificate computation: the vectors
/// v_0, v_1, v_2 annihilate their cones (rays plus lineality) and span a
/// 2-dimensional space.
bool n4_invariance_check();

/// The n = 4 ray table r_0..r_3 as weight maps on E(4).
const std::vector<WeightVector>& n4_ray_weights();

/// Sum of the listed rays as a weight on E(5); the interior point used for
/// every bundled subdivision.
WeightVector weight_from_rays(const std::vector<int>& ray_indices);

}  // namespace spinortrop::fan5
