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

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "spinortrop/delta_matroid.hpp"
#include "spinortrop/laurent.hpp"
#include "spinortrop/linalg.hpp"
#include "spinortrop/polynomial.hpp"
#include "spinortrop/rational.hpp"
#include "spinortrop/subset.hpp"

namespace spinortrop {

// ---------------------------------------------------------------------------
// Skew-symmetric matrices over a commutative ring
// ---------------------------------------------------------------------------

// Only the upper triangle is stored; x_ji = -x_ij and x_ii = 0 are
// structural.
template <class R>
struct SkewMatrix {
  int n = 0;
  std::vector<R> upper;  // row-major strict upper triangle

  explicit SkewMatrix(int size = 0) : n(size), upper(size * (size - 1) / 2) {}

  static int slot(int n, int i, int j) {
    // index of (i, j), i < j, in the concatenated rows of the strict
    // upper triangle
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  }

  const R& at_upper(int i, int j) const { return upper[slot(n, i, j)]; }
  void set(int i, int j, R v) {
    if (i == j) throw std::invalid_argument("SkewMatrix::set: diagonal entry");
    if (i > j) {
      std::swap(i, j);
      v = -v;
    }
    upper[slot(n, i, j)] = std::move(v);
  }

  R get(int i, int j) const {
    if (i == j) return R(0);
    if (i < j) return at_upper(i, j);
    return -at_upper(j, i);
  }
};

/// The generic matrix of variables x_ij.
inline SkewMatrix<Polynomial> symbolic_skew(int n) {
  SkewMatrix<Polynomial> x(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) x.set(i, j, Polynomial::variable(var_x(i, j)));
  return x;
}

/// Pfaffian of the principal submatrix X[lambda], by expansion along the
/// first row: Pf = sum_j (-1)^(j-1) x_{a0,aj} Pf(lambda \ {a0, aj}), with
/// Pf of the empty matrix 1 and odd-size Pfaffians 0 by convention.
template <class R>
R pfaffian(const SkewMatrix<R>& x, Subset lambda) {
  std::vector<int> elems = lambda.members();
  if (elems.size() % 2 != 0) return R(0);
  if (elems.empty()) return R(1);
  int a0 = elems[0];
  R acc(0);
  for (std::size_t j = 1; j < elems.size(); ++j) {
    Subset rest = lambda.without(a0).without(elems[j]);
    R term = x.get(a0, elems[j]) * pfaffian(x, rest);
    if (j % 2 == 1)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

/// Test oracle: the Pfaffian as the signed sum over perfect matchings, with
/// the sign given by crossing parity.
template <class R>
R pfaffian_matching_sum(const SkewMatrix<R>& x, Subset lambda) {
  std::vector<int> elems = lambda.members();
  if (elems.size() % 2 != 0) return R(0);
  R acc(0);
  std::vector<std::pair<int, int>> matching;
  auto recurse = [&](auto&& self, std::vector<int> rest) -> void {
    if (rest.empty()) {
      int crossings = 0;
      for (std::size_t p = 0; p < matching.size(); ++p)
        for (std::size_t q = p + 1; q < matching.size(); ++q) {
          auto [a, b] = matching[p];
          auto [c, d] = matching[q];
          if (c < a) {
            std::swap(a, c);
            std::swap(b, d);
          }
          if (a < c && c < b && b < d) ++crossings;
        }
      R term(1);
      for (auto [a, b] : matching) term *= x.get(a, b);
      if (crossings % 2 == 0)
        acc += term;
      else
        acc -= term;
      return;
    }
    int first = rest.front();
    for (std::size_t k = 1; k < rest.size(); ++k) {
      std::vector<int> next;
      for (std::size_t t = 1; t < rest.size(); ++t)
        if (t != k) next.push_back(rest[t]);
      matching.emplace_back(first, rest[k]);
      self(self, std::move(next));
      matching.pop_back();
    }
  };
  recurse(recurse, elems);
  return acc;
}

// ---------------------------------------------------------------------------
// Wick vectors
// ---------------------------------------------------------------------------

// The coordinate vector (q_lambda) over E(n), stored sparsely; absent keys
// are zero.
template <class R>
struct WickVector {
  int n = 0;
  std::map<Subset, R> q;

  explicit WickVector(int size = 0) : n(size) {}

  R get(Subset s) const {
    auto it = q.find(s);
    return it == q.end() ? R(0) : it->second;
  }

  void set(Subset s, R v) {
    if (v == R(0))
      q.erase(s);
    else
      q[s] = std::move(v);
  }

  bool is_zero() const { return q.empty(); }

  std::vector<Subset> support() const {
    std::vector<Subset> out;
    out.reserve(q.size());
    for (const auto& [s, v] : q) {
      (void)v;
      out.push_back(s);
    }
    return out;
  }
};

/// q_lambda = Pf(X[[n] \ lambda]) for lambda in E(n); in particular
/// q_[n] = 1.
template <class R>
WickVector<R> wick_vector(const SkewMatrix<R>& x) {
  WickVector<R> out(x.n);
  for (Subset lam : enumerate_E(x.n))
    out.set(lam, pfaffian(x, lam.complement_in(x.n)));
  return out;
}

/// The Delta-matroid of a Wick vector: bases are the support.
template <class R>
DeltaMatroid matroid_of_wick(const WickVector<R>& w) {
  if (w.is_zero()) throw std::invalid_argument("matroid_of_wick: zero vector");
  return DeltaMatroid(w.n, w.support());
}

// ---------------------------------------------------------------------------
// The quadric generators P(mu, nu)
// ---------------------------------------------------------------------------

struct QuadricTerm {
  int sign = 1;   // +1 or -1
  Subset a, b;    // the monomial q_a q_b, with a.bits <= b.bits
};

struct Quadric {
  Subset mu, nu;
  std::vector<QuadricTerm> terms;
};

inline bool same_terms(const Quadric& p, const Quadric& q) {
  if (p.terms.size() != q.terms.size()) return false;
  for (std::size_t i = 0; i < p.terms.size(); ++i) {
    const QuadricTerm &s = p.terms[i], &t = q.terms[i];
    if (s.sign != t.sign || s.a != t.a || s.b != t.b) return false;
  }
  return true;
}

/// P(mu, nu) with terms signed through sign_count. Terms are sorted by
/// monomial and the overall sign is flipped so the first term is positive;
/// this is the normalization under which generators are deduplicated.
inline Quadric make_quadric(int n, Subset mu, Subset nu) {
  (void)n;
  Quadric p;
  p.mu = mu;
  p.nu = nu;
  for (int i : nu.minus(mu).members()) {
    QuadricTerm t;
    t.sign = sign_count(i, mu, nu);
    t.a = mu.with(i);
    t.b = nu.without(i);
    if (t.a.bits > t.b.bits) std::swap(t.a, t.b);
    p.terms.push_back(t);
  }
  for (int j : mu.minus(nu).members()) {
    QuadricTerm t;
    t.sign = sign_count(j, nu, mu);
    t.a = mu.without(j);
    t.b = nu.with(j);
    if (t.a.bits > t.b.bits) std::swap(t.a, t.b);
    p.terms.push_back(t);
  }
  std::sort(p.terms.begin(), p.terms.end(), [](const QuadricTerm& s, const QuadricTerm& t) {
    return std::make_pair(s.a.bits, s.b.bits) < std::make_pair(t.a.bits, t.b.bits);
  });
  if (!p.terms.empty() && p.terms.front().sign < 0)
    for (QuadricTerm& t : p.terms) t.sign = -t.sign;
  return p;
}

/// Generators of the ideal I_n: one quadric per admissible unordered pair
/// (mu, nu) with n-|mu|, n-|nu| odd and |mu ^ nu| >= 4, deduplicated after
/// sign normalization. Empty for n < 4.
inline std::vector<Quadric> quadric_generators(int n) {
  std::vector<Quadric> out;
  if (n < 4) return out;
  int parity = (n - 1) % 2;
  for (std::uint32_t a = 0; a < (1u << n); ++a) {
    if (std::popcount(a) % 2 != parity) continue;
    for (std::uint32_t b = a + 1; b < (1u << n); ++b) {
      if (std::popcount(b) % 2 != parity) continue;
      if (std::popcount(a ^ b) < 4) continue;
      Quadric p = make_quadric(n, Subset(static_cast<std::uint16_t>(a)),
                               Subset(static_cast<std::uint16_t>(b)));
      bool dup = false;
      for (const Quadric& q : out)
        if (same_terms(p, q)) {
          dup = true;
          break;
        }
      if (!dup) out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end(), [](const Quadric& p, const Quadric& q) {
    auto key = [](const Quadric& r) {
      std::vector<std::uint32_t> k;
      for (const QuadricTerm& t : r.terms)
        k.push_back((static_cast<std::uint32_t>(t.a.bits) << 16) | t.b.bits);
      return k;
    };
    return key(p) < key(q);
  });
  return out;
}

inline const std::vector<Quadric>& cached_quadric_generators(int n) {
  static std::map<int, std::vector<Quadric>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, quadric_generators(n)).first;
  return it->second;
}

template <class R>
R evaluate_quadric(const Quadric& p, const WickVector<R>& w) {
  R acc(0);
  for (const QuadricTerm& t : p.terms) {
    R prod = w.get(t.a) * w.get(t.b);
    if (t.sign > 0)
      acc += prod;
    else
      acc -= prod;
  }
  return acc;
}

/// True iff every generator of I_n vanishes on the vector.
template <class R>
bool check_quadrics(const WickVector<R>& w) {
  for (const Quadric& p : cached_quadric_generators(w.n))
    if (!(evaluate_quadric(p, w) == R(0))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Initial forms
// ---------------------------------------------------------------------------

// An exact-rational weight on subsets. Entries default to zero when looked
// up, which models weights supported on E(n).
struct WeightVector {
  int n = 0;
  std::map<Subset, Rational> values;

  explicit WeightVector(int size = 0) : n(size) {}

  Rational get(Subset s) const {
    auto it = values.find(s);
    return it == values.end() ? Rational(0) : it->second;
  }

  void set(Subset s, Rational v) { values[s] = std::move(v); }
  void add(Subset s, const Rational& v) { values[s] += v; }
};

/// Keeps exactly the terms of P of minimal weight w_a + w_b; order and
/// signs are untouched.
inline Quadric initial_form(const Quadric& p, const WeightVector& w) {
  Quadric out;
  out.mu = p.mu;
  out.nu = p.nu;
  std::optional<Rational> best;
  for (const QuadricTerm& t : p.terms) {
    Rational v = w.get(t.a) + w.get(t.b);
    if (!best || v < *best) best = v;
  }
  for (const QuadricTerm& t : p.terms)
    if (w.get(t.a) + w.get(t.b) == *best) out.terms.push_back(t);
  return out;
}

/// P(mu, nu) restricted to a basis family: only terms with both factors in
/// the family survive (the restriction defining the strata ideals).
inline Quadric restrict_quadric(const Quadric& p, const DeltaMatroid& m) {
  Quadric out;
  out.mu = p.mu;
  out.nu = p.nu;
  for (const QuadricTerm& t : p.terms)
    if (m.has_basis(t.a) && m.has_basis(t.b)) out.terms.push_back(t);
  return out;
}

// ---------------------------------------------------------------------------
// The doubled index set J = [n] | [n]*, Pluecker minors and circuits
// ---------------------------------------------------------------------------

// A subset of J as a bit mask over 2n bits; bit i is the element i of [n],
// bit n+i is i*.
using JSubset = std::uint32_t;

inline JSubset j_elem(int n, int i, bool starred) { return 1u << (starred ? n + i : i); }
inline bool j_is_starred(int n, int c) { return c >= n; }
inline int j_base(int n, int c) { return c >= n ? c - n : c; }
inline int j_star(int n, int c) { return c >= n ? c - n : c + n; }

inline bool is_admissible(int n, JSubset s) {
  return (s & (s >> n)) == 0;
}

inline bool is_transversal(int n, JSubset s) {
  return is_admissible(n, s) && std::popcount(s) == n;
}

inline Subset j_underlying(int n, JSubset s) {
  return Subset(static_cast<std::uint16_t>(s & ((1u << n) - 1u)));
}

/// The transversal mu | {i* : i not in mu} determined by an underlying set.
inline JSubset transversal_of(int n, Subset mu) {
  JSubset s = mu.bits;
  for (int i = 0; i < n; ++i)
    if (!mu.contains(i)) s |= j_elem(n, i, true);
  return s;
}

inline std::vector<int> j_members(int n, JSubset s) {
  std::vector<int> out;
  for (int c = 0; c < 2 * n; ++c)
    if ((s >> c) & 1u) out.push_back(c);
  return out;
}

inline std::string j_elem_to_string(int n, int c) {
  std::string out(1, element_digit(j_base(n, c)));
  if (j_is_starred(n, c)) out += '*';
  return out;
}

/// Columns of W = [I | X] indexed by J; column i is e_i, column i* is the
/// i-th column of X.
inline QMat w_matrix_columns(const SkewMatrix<Rational>& x, const std::vector<int>& cols) {
  int n = x.n;
  QMat m(n, QVec(cols.size(), Rational(0)));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    int col = cols[c];
    if (!j_is_starred(n, col)) {
      m[col][c] = 1;
    } else {
      int j = j_base(n, col);
      for (int r = 0; r < n; ++r) m[r][c] = x.get(r, j);
    }
  }
  return m;
}

/// Determinant of the n x n submatrix of [I | X] on the columns tau.
inline Rational plucker_minor(const SkewMatrix<Rational>& x, JSubset tau) {
  if (std::popcount(tau) != x.n)
    throw std::invalid_argument("plucker_minor: column set must have size n");
  return det(w_matrix_columns(x, j_members(x.n, tau)));
}

/// The fundamental circuit of (tau, j) in the symmetric matroid of M:
/// {i in tau : tau ^ {i,i*,j,j*} is again a basis transversal} | {j}.
inline JSubset fundamental_circuit(const DeltaMatroid& m, JSubset tau, int j) {
  int n = m.n;
  if (!is_transversal(n, tau) || !m.has_basis(j_underlying(n, tau)))
    throw std::invalid_argument("fundamental_circuit: tau is not a basis transversal");
  if ((tau >> j) & 1u) throw std::invalid_argument("fundamental_circuit: j lies in tau");
  JSubset out = 1u << j;
  for (int i : j_members(n, tau)) {
    // {i, i*, j, j*} as a set: it has two elements when j = i*
    JSubset quad = (1u << i) | (1u << j_star(n, i)) | (1u << j) | (1u << j_star(n, j));
    JSubset swapped = tau ^ quad;
    if (is_transversal(n, swapped) && m.has_basis(j_underlying(n, swapped))) out |= 1u << i;
  }
  return out;
}

// A linear form in the variables y_c, c in J, supported on an admissible
// set.
struct LinearForm {
  int n = 0;
  JSubset support = 0;
  std::map<int, Rational> coeff;  // J element -> coefficient, nonzero only

  Rational get(int c) const {
    auto it = coeff.find(c);
    return it == coeff.end() ? Rational(0) : it->second;
  }
};

/// The circuit form m_gamma for (tau, j): the unique (up to scale) linear
/// form supported on the fundamental circuit that vanishes on the row space
/// of [I | X], scaled so the y_j coefficient equals q_{tau & [n]}. The
/// remaining coefficients then equal +-q_{(tau ^ ii*jj*) & [n]}; the signs
/// are produced by the kernel solve rather than a symbolic sign function.
inline LinearForm circuit_form(const WickVector<Rational>& w, JSubset tau, int j) {
  int n = w.n;
  Rational top = w.get(Subset::full(n));
  if (top == 0)
    throw std::invalid_argument("circuit_form: [n] must be in the support of the Wick vector");
  SkewMatrix<Rational> x(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      x.set(a, b, w.get(Subset::full(n).without(a).without(b)) / top);

  JSubset gamma = fundamental_circuit(matroid_of_wick(w), tau, j);
  std::vector<int> cols = j_members(n, gamma);
  QMat restricted = w_matrix_columns(x, cols);
  QMat kernel = kernel_basis(restricted, cols.size());
  if (kernel.size() != 1)
    throw std::domain_error("circuit_form: circuit support does not carry a unique form");

  // scale so that the y_j coefficient is exactly q_{tau & [n]}
  std::size_t j_pos = 0;
  while (cols[j_pos] != j) ++j_pos;
  if (kernel[0][j_pos] == 0)
    throw std::domain_error("circuit_form: form degenerates on y_j");
  Rational scale = w.get(j_underlying(n, tau)) / kernel[0][j_pos];

  LinearForm out;
  out.n = n;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    Rational v = kernel[0][c] * scale;
    if (v != 0) {
      out.coeff[cols[c]] = v;
      out.support |= 1u << cols[c];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Initial Wick vectors over the Laurent model
// ---------------------------------------------------------------------------

/// The w-initial Wick vector of a Laurent-valued vector at direction u:
/// initial coefficients on the bases of M_u^w, zero elsewhere. Requires
/// w to agree with the valuations of qt on its support.
inline WickVector<Rational> valued_initial(const WickVector<Laurent>& qt, const QVec& u,
                                           const WeightVector& w) {
  if (qt.is_zero()) throw std::invalid_argument("valued_initial: zero vector");
  if (static_cast<int>(u.size()) != qt.n)
    throw std::invalid_argument("valued_initial: direction vector has wrong length");
  std::optional<Rational> best;
  for (const auto& [lam, c] : qt.q) {
    if (w.get(lam) != Rational(c.val()))
      throw std::invalid_argument("valued_initial: weight disagrees with the valuation");
    Rational v = w.get(lam);
    for (int i = 0; i < qt.n; ++i)
      if (lam.contains(i)) v += u[i];
    if (!best || v < *best) best = v;
  }
  WickVector<Rational> out(qt.n);
  for (const auto& [lam, c] : qt.q) {
    Rational v = w.get(lam);
    for (int i = 0; i < qt.n; ++i)
      if (lam.contains(i)) v += u[i];
    if (v == *best) out.set(lam, c.initial_coefficient());
  }
  return out;
}

}  // namespace spinortrop
