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

#include <map>
#include <string>
#include <vector>

#include "spinortrop/rational.hpp"
#include "spinortrop/subset.hpp"

namespace spinortrop {

// Sparse multivariate polynomials over Q, just big enough for substituted
// Pfaffians of the variable matrix X. A variable is a pair i < j naming
// x_ij; a monomial maps variable ids to exponents.
using VarId = int;

inline VarId var_x(int i, int j) {
  if (i > j) std::swap(i, j);
  return i * kMaxGroundSize + j;
}

inline std::string var_name(VarId v) {
  int i = v / kMaxGroundSize, j = v % kMaxGroundSize;
  return std::string("x") + element_digit(i) + element_digit(j);
}

using Monomial = std::map<VarId, int>;

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c) {  // NOLINT: implicit ring embedding is intended
    if (c != 0) terms_[Monomial{}] = c;
  }
  Polynomial(int c) : Polynomial(Rational(c)) {}

  static Polynomial variable(VarId v, const Rational& c = Rational(1)) {
    Polynomial out;
    if (c != 0) out.terms_[Monomial{{v, 1}}] = c;
    return out;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Polynomial operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) {
      Rational& slot = terms_[m];
      slot += c;
      if (slot == 0) terms_.erase(m);
    }
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma;
        for (const auto& [v, e] : mb) m[v] += e;
        Rational& slot = out.terms_[m];
        slot += ca * cb;
        if (slot == 0) out.terms_.erase(m);
      }
    return out;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Sets every variable outside `keep` to zero.
  Polynomial restrict_variables(const std::vector<VarId>& keep) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      bool survives = true;
      for (const auto& [v, e] : m) {
        (void)e;
        bool kept = false;
        for (VarId k : keep)
          if (k == v) {
            kept = true;
            break;
          }
        if (!kept) {
          survives = false;
          break;
        }
      }
      if (survives) out.terms_[m] += c;
    }
    return out;
  }

  /// Divides out the monomial gcd of all terms and makes the leading
  /// (lexicographically least monomial) coefficient positive with content 1.
  /// Relations are compared after this normalization, which identifies
  /// polynomials differing by sign and monomial unit factors.
  Polynomial normalized_up_to_units() const {
    if (terms_.empty()) return Polynomial();
    Monomial gcd = terms_.begin()->first;
    for (const auto& [m, c] : terms_) {
      (void)c;
      Monomial next;
      for (const auto& [v, e] : gcd) {
        auto it = m.find(v);
        if (it != m.end()) next[v] = std::min(e, it->second);
      }
      gcd = std::move(next);
    }
    Polynomial out;
    for (const auto& [m, c] : terms_) {
      Monomial red = m;
      for (const auto& [v, e] : gcd) {
        red[v] -= e;
        if (red[v] == 0) red.erase(v);
      }
      out.terms_[red] = c;
    }
    Rational lead = out.terms_.begin()->second;
    for (auto& [m, c] : out.terms_) c /= lead;
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      Rational a = c;
      if (first) {
        if (a < 0) {
          out += "-";
          a = -a;
        }
      } else {
        out += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
      }
      first = false;
      bool coeff_one = (a == 1) && !m.empty();
      if (!coeff_one) out += rational_to_string(a);
      bool star = !coeff_one;
      for (const auto& [v, e] : m) {
        if (star) out += "*";
        out += var_name(v);
        if (e > 1) out += "^" + std::to_string(e);
        star = true;
      }
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
  friend bool operator<(const Polynomial& a, const Polynomial& b) { return a.terms_ < b.terms_; }

 private:
  std::map<Monomial, Rational> terms_;
};

}  // namespace spinortrop
