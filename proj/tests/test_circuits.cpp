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

#include <vector>

#include "doctest.h"
#include "spinortrop/wick.hpp"
#include "test_util.hpp"

using namespace spinortrop;

namespace {

Rational rat_abs(const Rational& r) { return r < 0 ? -r : r; }

/// Circuit through Pluecker minors: gamma(tau, j) in the ordinary matroid
/// of the rows of [I | X], Eq.-(10)-style. Test-side oracle for the
/// wick-support route.
JSubset plucker_circuit(const SkewMatrix<Rational>& x, JSubset tau, int j) {
  JSubset out = 1u << j;
  for (int i : j_members(x.n, tau)) {
    JSubset swapped = (tau & ~(1u << i)) | (1u << j);
    if (plucker_minor(x, swapped) != 0) out |= 1u << i;
  }
  return out;
}

std::vector<JSubset> basis_transversals(const DeltaMatroid& m) {
  std::vector<JSubset> out;
  for (Subset b : m.bases) out.push_back(transversal_of(m.n, b));
  return out;
}

}  // namespace

TEST_CASE("plucker minors: identity block and skew columns") {
  auto rng = testing::make_rng(404);
  SkewMatrix<Rational> x = testing::random_skew(rng, 5);
  JSubset id_cols = 0;
  for (int i = 0; i < 5; ++i) id_cols |= j_elem(5, i, false);
  CHECK(plucker_minor(x, id_cols) == Rational(1));
  CHECK_THROWS_AS(plucker_minor(x, id_cols | j_elem(5, 0, true)), std::invalid_argument);
}

TEST_CASE("Cayley-type determinant-pfaffian identity, |mu| even") {
  auto rng = testing::make_rng(405);
  for (int trial = 0; trial < 100; ++trial) {
    SkewMatrix<Rational> x = testing::random_skew(rng, 5);
    // lambda of odd size >= 3, i != j in lambda
    for (Subset lam : {parse_subset("012"), parse_subset("034"), parse_subset("01234")}) {
      auto mem = lam.members();
      int i = mem[trial % mem.size()];
      int j = mem[(trial + 1) % mem.size()];
      Subset mu = lam.without(i), nu = lam.without(j);
      QMat m(mu.size(), QVec(nu.size()));
      auto rows = mu.members();
      auto cols = nu.members();
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) m[r][c] = x.get(rows[r], cols[c]);
      CHECK(rat_abs(det(m)) == rat_abs(pfaffian(x, mu) * pfaffian(x, nu)));
    }
  }
}

TEST_CASE("pluecker minors factor through pfaffians on transversal swaps") {
  auto rng = testing::make_rng(406);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    SkewMatrix<Rational> x = testing::random_skew(rng, 5);
    WickVector<Rational> q = wick_vector(x);
    for (Subset mu : q.support()) {
      JSubset tau = transversal_of(5, mu);
      for (int i : j_members(5, tau)) {
        for (int j = 0; j < 10; ++j) {
          if ((tau >> j) & 1u) continue;
          JSubset cols = (tau & ~(1u << i)) | (1u << j);
          Rational lhs = rat_abs(plucker_minor(x, cols));
          JSubset quad =
              (1u << i) | (1u << j_star(5, i)) | (1u << j) | (1u << j_star(5, j));
          Rational rhs = rat_abs(q.get(mu) * q.get(j_underlying(5, tau ^ quad)));
          CHECK(lhs == rhs);
          ++checked;
        }
      }
      break;  // one transversal per sample keeps the sweep fast
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("fundamental circuit of the full matroid, computed exhaustively") {
  DeltaMatroid full(4, enumerate_E(4));
  JSubset tau = transversal_of(4, Subset::full(4));  // = [4]
  int j = j_star(4, 0);                              // element 0*
  JSubset gamma = fundamental_circuit(full, tau, j);
  JSubset expected = j_elem(4, 1, false) | j_elem(4, 2, false) | j_elem(4, 3, false) |
                     j_elem(4, 0, true);
  CHECK(gamma == expected);

  CHECK_THROWS_AS(fundamental_circuit(full, tau, 0), std::invalid_argument);
}

TEST_CASE("the wick-support circuit equals the pluecker circuit on realizations") {
  auto rng = testing::make_rng(407);
  for (int trial = 0; trial < 100; ++trial) {
    SkewMatrix<Rational> x = testing::random_skew(rng, 5);
    WickVector<Rational> q = wick_vector(x);
    DeltaMatroid m = matroid_of_wick(q);
    for (JSubset tau : basis_transversals(m)) {
      for (int j = 0; j < 10; ++j) {
        if ((tau >> j) & 1u) continue;
        CHECK(fundamental_circuit(m, tau, j) == plucker_circuit(x, tau, j));
      }
    }
  }
}

TEST_CASE("circuit forms vanish on the row space and have the stated shape") {
  auto rng = testing::make_rng(408);
  for (int trial = 0; trial < 100; ++trial) {
    SkewMatrix<Rational> x = testing::random_skew(rng, 5);
    WickVector<Rational> q = wick_vector(x);
    DeltaMatroid m = matroid_of_wick(q);
    for (JSubset tau : basis_transversals(m)) {
      QMat forms;
      for (int j = 0; j < 10; ++j) {
        if ((tau >> j) & 1u) continue;
        LinearForm form = circuit_form(q, tau, j);
        CHECK(form.support == fundamental_circuit(m, tau, j));

        // vanishing on every row of [I | X]
        for (int r = 0; r < 5; ++r) {
          Rational acc = 0;
          for (const auto& [c, coeff] : form.coeff) {
            Rational w_rc = c < 5 ? Rational(r == c ? 1 : 0) : x.get(r, c - 5);
            acc += coeff * w_rc;
          }
          CHECK(acc == 0);
        }

        // coefficient magnitudes are the stated wick coordinates
        CHECK(form.get(j) == q.get(j_underlying(5, tau)));
        for (int i : j_members(5, tau)) {
          JSubset quad =
              (1u << i) | (1u << j_star(5, i)) | (1u << j) | (1u << j_star(5, j));
          CHECK(rat_abs(form.get(i)) == rat_abs(q.get(j_underlying(5, tau ^ quad))));
        }

        QVec as_vec(10, Rational(0));
        for (const auto& [c, coeff] : form.coeff) as_vec[c] = coeff;
        forms.push_back(as_vec);
      }
      CHECK(rank(forms) == 5);  // a basis of the null space, one form per j
    }
  }
}

TEST_CASE("valued initial wick vectors") {
  // constant vectors are their own initials
  SkewMatrix<Laurent> constant(4);
  constant.set(0, 1, Laurent(1));
  constant.set(2, 3, Laurent(2));
  WickVector<Laurent> qc = wick_vector(constant);
  WeightVector wc(4);
  for (const auto& [lam, c] : qc.q) wc.set(lam, Rational(c.val()));
  WickVector<Rational> init = valued_initial(qc, QVec(4, Rational(0)), wc);
  for (const auto& [lam, c] : qc.q) CHECK(init.get(lam) == c.initial_coefficient());

  // scaling the vector by a power of t shifts the weight globally and
  // changes nothing
  WickVector<Laurent> qs(4);
  for (const auto& [lam, c] : qc.q) qs.set(lam, Laurent::t_power(3) * c);
  WeightVector ws(4);
  for (const auto& [lam, c] : qs.q) ws.set(lam, Rational(c.val()));
  WickVector<Rational> init_scaled = valued_initial(qs, QVec(4, Rational(0)), ws);
  CHECK(init_scaled.q == init.q);

  // weight disagreeing with the valuations is rejected
  WeightVector bad = ws;
  bad.add(Subset::full(4), 1);
  CHECK_THROWS_AS(valued_initial(qs, QVec(4, Rational(0)), bad), std::invalid_argument);

  // the end-to-end pipeline: x03 = x12 = t, the rest generic rationals
  auto rng = testing::make_rng(409);
  for (int trial = 0; trial < 50; ++trial) {
    SkewMatrix<Laurent> xt(4);
    xt.set(0, 1, Laurent(testing::random_nonzero_rational(rng)));
    xt.set(0, 2, Laurent(testing::random_nonzero_rational(rng)));
    xt.set(0, 3, Laurent::t_power(1));
    xt.set(1, 2, Laurent::t_power(1));
    xt.set(1, 3, Laurent(testing::random_nonzero_rational(rng)));
    xt.set(2, 3, Laurent(testing::random_nonzero_rational(rng)));
    WickVector<Laurent> qt = wick_vector(xt);
    if (qt.q.size() != 8) continue;  // skip the rare degenerate draws

    WeightVector w(4);
    for (const auto& [lam, c] : qt.q) w.set(lam, Rational(c.val()));

    QVec u = {Rational(-1, 2), Rational(1, 2), Rational(1, 2), Rational(-1, 2)};
    WickVector<Rational> in_u = valued_initial(qt, u, w);
    CHECK(check_quadrics(in_u));

    DeltaMatroid support = matroid_of_wick(in_u);
    // the support is the w-lifted face matroid at u, computed directly
    std::optional<Rational> best;
    for (const auto& [lam, c] : qt.q) {
      (void)c;
      Rational v = w.get(lam);
      for (int i = 0; i < 4; ++i)
        if (lam.contains(i)) v += u[i];
      if (!best || v < *best) best = v;
    }
    std::vector<Subset> expected;
    for (const auto& [lam, c] : qt.q) {
      (void)c;
      Rational v = w.get(lam);
      for (int i = 0; i < 4; ++i)
        if (lam.contains(i)) v += u[i];
      if (v == *best) expected.push_back(lam);
    }
    CHECK(support == DeltaMatroid(4, expected));
  }
}
