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

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace spinortrop {

// Every number in this project is an exact rational. No floating point,
// anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rational_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rational_den(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Canonical form: "p" for integers, "p/q" otherwise (q > 0, gcd(p,q) = 1).
inline std::string rational_to_string(const Rational& r) {
  Int p = rational_num(r);
  Int q = rational_den(r);
  if (q == 1) return p.str();
  return p.str() + "/" + q.str();
}

/// Accepts "p" or "p/q"; q may not be zero.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
    return Rational(p, q);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
  }
}

}  // namespace spinortrop
