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

#include <string>
#include <vector>

#include "doctest.h"
#include "spinortrop/wick.hpp"
#include "test_util.hpp"

using namespace spinortrop;

namespace {

SkewMatrix<Rational> numeric_4x4() {
  // x01=1 x02=2 x03=3 x12=4 x13=5 x23=6
  SkewMatrix<Rational> x(4);
  x.set(0, 1, 1);
  x.set(0, 2, 2);
  x.set(0, 3, 3);
  x.set(1, 2, 4);
  x.set(1, 3, 5);
  x.set(2, 3, 6);
  return x;
}

// Normalized term list of a printed generator: factors mask-ordered inside
// each monomial, terms sorted by monomial, overall sign making the first
// term positive. The same normalization the generator builder applies, so
// equality here is exact term-by-term agreement up to overall sign and
// ordering.
std::vector<QuadricTerm> parse_printed(const std::string& text) {
  std::vector<QuadricTerm> terms;
  int sign = 1;
  std::size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  while (pos < text.size()) {
    skip_spaces();
    if (text[pos] == '+') {
      sign = 1;
      ++pos;
      skip_spaces();
    } else if (text[pos] == '-') {
      sign = -1;
      ++pos;
      skip_spaces();
    }
    auto read_factor = [&] {
      ++pos;  // 'q'
      std::string digits;
      while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos])) &&
             text[pos] != 'q')
        digits += text[pos++];
      return parse_subset(digits);
    };
    QuadricTerm t;
    t.sign = sign;
    t.a = read_factor();
    if (pos < text.size() && text[pos] == '*') ++pos;
    t.b = read_factor();
    if (t.a.bits > t.b.bits) std::swap(t.a, t.b);
    terms.push_back(t);
    sign = 1;
  }
  std::sort(terms.begin(), terms.end(), [](const QuadricTerm& s, const QuadricTerm& t) {
    return std::make_pair(s.a.bits, s.b.bits) < std::make_pair(t.a.bits, t.b.bits);
  });
  if (!terms.empty() && terms.front().sign < 0)
    for (QuadricTerm& t : terms) t.sign = -t.sign;
  return terms;
}

bool matches_printed(const Quadric& p, const std::string& text) {
  Quadric printed;
  printed.terms = parse_printed(text);
  return same_terms(p, printed);
}

}  // namespace

TEST_CASE("pfaffian base cases and the 4x4 expansion") {
  SkewMatrix<Polynomial> x = symbolic_skew(4);
  CHECK(pfaffian(x, Subset::empty()) == Polynomial(1));
  CHECK(pfaffian(x, parse_subset("013")) == Polynomial());  // odd size is 0 by convention
  CHECK(pfaffian(x, parse_subset("23")) == Polynomial::variable(var_x(2, 3)));

  Polynomial expected = Polynomial::variable(var_x(0, 1)) * Polynomial::variable(var_x(2, 3)) -
                        Polynomial::variable(var_x(0, 2)) * Polynomial::variable(var_x(1, 3)) +
                        Polynomial::variable(var_x(0, 3)) * Polynomial::variable(var_x(1, 2));
  CHECK(pfaffian(x, parse_subset("0123")) == expected);

  CHECK(pfaffian(numeric_4x4(), parse_subset("0123")) == Rational(8));  // 1*6 - 2*5 + 3*4
}

TEST_CASE("pfaffian recursion agrees with the matching-sum oracle, symbolically") {
  for (int n : {2, 3, 4, 5, 6}) {
    SkewMatrix<Polynomial> x = symbolic_skew(n);
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
      Subset lam(static_cast<std::uint16_t>(m));
      CHECK(pfaffian(x, lam) == pfaffian_matching_sum(x, lam));
    }
  }
}

TEST_CASE("det of a skew matrix is the square of its pfaffian") {
  auto rng = testing::make_rng(101);
  for (int n : {2, 4, 6}) {
    for (int trial = 0; trial < 10; ++trial) {
      SkewMatrix<Rational> x = testing::random_skew(rng, n);
      QMat dense(n, QVec(n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) dense[i][j] = x.get(i, j);
      Rational pf = pfaffian(x, Subset::full(n));
      CHECK(det(dense) == pf * pf);
    }
  }
}

TEST_CASE("wick vectors") {
  WickVector<Rational> q = wick_vector(numeric_4x4());
  CHECK(q.get(Subset::empty()) == Rational(8));
  CHECK(q.get(parse_subset("01")) == Rational(6));
  CHECK(q.get(parse_subset("0123")) == Rational(1));

  SkewMatrix<Rational> zero(4);
  WickVector<Rational> qz = wick_vector(zero);
  CHECK(qz.get(parse_subset("0123")) == Rational(1));
  CHECK(qz.q.size() == 1);
}

TEST_CASE("quadric generators reproduce the printed ideals") {
  CHECK(quadric_generators(3).empty());

  auto i4 = quadric_generators(4);
  REQUIRE(i4.size() == 1);
  CHECK(matches_printed(i4[0], "q*q0123 - q01*q23 + q02*q13 - q03*q12"));

  auto i5 = quadric_generators(5);
  REQUIRE(i5.size() == 10);
  std::vector<std::string> printed = {
      "q0*q123 - q1*q023 + q2*q013 - q3*q012",
      "q0*q124 - q1*q024 + q2*q014 - q4*q012",
      "q0*q134 - q1*q034 + q3*q014 - q4*q013",
      "q0*q234 - q2*q034 + q3*q024 - q4*q023",
      "q1*q234 - q2*q134 + q3*q124 - q4*q123",
      "q0*q01234 - q012*q034 + q013*q024 - q023*q014",
      "q1*q01234 - q012*q134 + q013*q124 - q014*q123",
      "q2*q01234 - q012*q234 + q023*q124 - q024*q123",
      "q3*q01234 - q013*q234 + q023*q134 - q034*q123",
      "q4*q01234 - q014*q234 + q024*q134 - q034*q124",
  };
  for (const std::string& text : printed) {
    int hits = 0;
    for (const Quadric& p : i5)
      if (matches_printed(p, text)) ++hits;
    CHECK(hits == 1);
  }
}

TEST_CASE("reconstructing P(0, 123) reproduces the printed generator term by term") {
  Quadric p = make_quadric(4, parse_subset("0"), parse_subset("123"));
  CHECK(matches_printed(p, "q*q0123 - q01*q23 + q02*q13 - q03*q12"));
}

TEST_CASE("initial forms of the n = 4 generator") {
  Quadric p = quadric_generators(4)[0];

  WeightVector w1(4);
  w1.set(parse_subset("03"), 1);
  w1.set(parse_subset("12"), 1);
  CHECK(matches_printed(initial_form(p, w1), "q*q0123 - q01*q23 + q02*q13"));

  WeightVector w2(4);
  for (const char* s : {"02", "12", "03", "13"}) w2.set(parse_subset(s), 1);
  CHECK(matches_printed(initial_form(p, w2), "q*q0123 - q01*q23"));

  WeightVector zero(4);
  CHECK(same_terms(initial_form(p, zero), p));
}

TEST_CASE("check_quadrics on realizations and perturbations") {
  auto rng = testing::make_rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    SkewMatrix<Rational> x = testing::random_skew(rng, 5);
    CHECK(check_quadrics(wick_vector(x)));
  }

  WickVector<Rational> point(4);
  point.set(Subset::full(4), 1);
  CHECK(check_quadrics(point));  // all generator terms contain a zero factor

  SkewMatrix<Rational> x = testing::random_generic_skew(rng, 4);
  WickVector<Rational> q = wick_vector(x);
  CHECK(check_quadrics(q));
  q.set(Subset::empty(), q.get(Subset::empty()) + 1);
  CHECK(!check_quadrics(q));

  // the Laurent route through the same generators
  SkewMatrix<Laurent> xt(4);
  xt.set(0, 1, Laurent::t_power(-1));
  xt.set(0, 2, Laurent(2));
  xt.set(0, 3, Laurent::t_power(1, Rational(3)));
  xt.set(1, 2, Laurent::t_power(1));
  xt.set(1, 3, Laurent(5));
  xt.set(2, 3, Laurent::t_power(2) + Laurent(1));
  CHECK(check_quadrics(wick_vector(xt)));
}

TEST_CASE("matroid of a wick vector") {
  auto rng = testing::make_rng(202);
  SkewMatrix<Rational> x = testing::random_generic_skew(rng, 5);
  CHECK(matroid_of_wick(wick_vector(x)).bases.size() == 16);

  SkewMatrix<Rational> zero(5);
  CHECK(matroid_of_wick(wick_vector(zero)) == DeltaMatroid(5, {Subset::full(5)}));

  SkewMatrix<Rational> one(4);
  one.set(0, 1, 1);
  DeltaMatroid m = matroid_of_wick(wick_vector(one));
  CHECK(m == DeltaMatroid(4, {parse_subset("23"), parse_subset("0123")}));

  WickVector<Rational> z(4);
  CHECK_THROWS_AS(matroid_of_wick(z), std::invalid_argument);
}
