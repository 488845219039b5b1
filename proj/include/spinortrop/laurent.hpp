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
#include <stdexcept>

#include "spinortrop/rational.hpp"

namespace spinortrop {

// Laurent polynomials in t with rational coefficients and integer
// exponents: the desk-scale model of a valued field. Zero coefficients are
// never stored, so val() is the least stored exponent.
class Laurent {
 public:
  Laurent() = default;
  Laurent(const Rational& c) {  // NOLINT: implicit ring embedding is intended
    if (c != 0) coeff_[0] = c;
  }
  Laurent(int c) : Laurent(Rational(c)) {}

  static Laurent t_power(long e, const Rational& c = Rational(1)) {
    Laurent out;
    if (c != 0) out.coeff_[e] = c;
    return out;
  }

  bool is_zero() const { return coeff_.empty(); }

  long val() const {
    if (is_zero()) throw std::domain_error("Laurent::val: valuation of zero");
    return coeff_.begin()->first;
  }

  /// Coefficient at the valuation, i.e. the initial coefficient.
  Rational initial_coefficient() const {
    if (is_zero()) throw std::domain_error("Laurent::initial_coefficient: zero element");
    return coeff_.begin()->second;
  }

  Rational coefficient(long e) const {
    auto it = coeff_.find(e);
    return it == coeff_.end() ? Rational(0) : it->second;
  }

  const std::map<long, Rational>& terms() const { return coeff_; }

  Laurent operator-() const {
    Laurent out;
    for (const auto& [e, c] : coeff_) out.coeff_[e] = -c;
    return out;
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.coeff_) {
      Rational& slot = coeff_[e];
      slot += c;
      if (slot == 0) coeff_.erase(e);
    }
    return *this;
  }

  Laurent& operator-=(const Laurent& o) { return *this += -o; }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent out;
    for (const auto& [ea, ca] : a.coeff_)
      for (const auto& [eb, cb] : b.coeff_) {
        Rational& slot = out.coeff_[ea + eb];
        slot += ca * cb;
        if (slot == 0) out.coeff_.erase(ea + eb);
      }
    return out;
  }

  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.coeff_ == b.coeff_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

 private:
  std::map<long, Rational> coeff_;
};

}  // namespace spinortrop
