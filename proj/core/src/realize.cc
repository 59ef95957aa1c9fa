// Copyright 2026 The qbounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#include <algorithm>
#include <numeric>
#include <string>

#include "qbounds/arith.h"
#include "qbounds/error.h"
#include "qbounds/group_spec.h"

namespace qbounds {
namespace {

using Matrix = std::vector<std::vector<std::uint64_t>>;

// Polynomials over F_p, little-endian coefficients, no trailing zeros
// (the zero polynomial is empty).
using Poly = std::vector<std::uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, std::uint64_t p) {
  trim(a);
  const std::uint64_t lead_inv = pow_mod(f.back(), p - 2, p);
  while (a.size() >= f.size()) {
    const std::uint64_t factor = mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - f.size();
    for (std::size_t i = 0; i < f.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - mul_mod(factor, f[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mul_mod(a[i], b[j], p)) % p;
  return poly_mod(std::move(out), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t exp, const Poly& f, std::uint64_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (exp > 0) {
    if (exp & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    exp >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: f of degree D is irreducible iff gcd(x^(p^i) - x, f) = 1 for
// 1 <= i <= D/2.
bool irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t degree = f.size() - 1;
  Poly power{0, 1};
  for (std::size_t i = 1; i <= degree / 2; ++i) {
    power = poly_powmod(power, p, f, p);
    Poly diff = power;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (poly_gcd(f, diff, p).size() != 1) return false;
  }
  return true;
}

// GF(p^D) as F_p[x]/(f). Elements are Poly values reduced mod f.
struct ExtensionField {
  std::uint64_t p;
  Poly modulus;
  std::uint64_t size;  // p^D

  static ExtensionField make(std::uint64_t p, unsigned degree) {
    const std::uint64_t size = checked_pow(p, degree);
    if (size > (std::uint64_t{1} << 24)) {
      throw InvalidArgument("realize: splitting field GF(" + std::to_string(p) + "^" +
                            std::to_string(degree) + ") is too large");
    }
    // Least monic irreducible, lower coefficients read as a base-p number.
    const std::uint64_t lower_count = size;
    for (std::uint64_t code = 0; code < lower_count; ++code) {
      Poly f(degree + 1, 0);
      std::uint64_t c = code;
      for (unsigned i = 0; i < degree; ++i) {
        f[i] = c % p;
        c /= p;
      }
      f[degree] = 1;
      if (degree == 1 || irreducible(f, p)) return ExtensionField{p, f, size};
    }
    throw InvalidArgument("realize: no irreducible polynomial found");
  }

  Poly element(std::uint64_t code) const {
    Poly e;
    while (code > 0) {
      e.push_back(code % p);
      code /= p;
    }
    return e;
  }

  Poly mul(const Poly& a, const Poly& b) const { return poly_mulmod(a, b, modulus, p); }
  Poly pow(const Poly& a, std::uint64_t e) const { return poly_powmod(a, e, modulus, p); }

  Poly element_of_order(std::uint64_t order) const {
    const std::uint64_t units = size - 1;
    const auto primes = prime_factors(units);
    for (std::uint64_t code = 1; code < size; ++code) {
      const Poly g = element(code);
      bool generator = true;
      for (std::uint64_t q : primes) {
        if (pow(g, units / q) == Poly{1}) {
          generator = false;
          break;
        }
      }
      if (generator) return pow(g, units / order);
    }
    throw InvalidArgument("realize: multiplicative group has no generator");
  }
};

Matrix identity_matrix(std::size_t k) {
  Matrix a(k, std::vector<std::uint64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) a[i][i] = 1;
  return a;
}

// Block-diagonal rational canonical form with eigenvalues zeta^{a_i}.
// Blocks are companion matrices of minimal polynomials, one per Galois
// orbit, orbits ordered by their least residue.
Matrix action_from_exponents(std::uint64_t p, std::uint64_t m,
                             const std::vector<std::uint64_t>& exponents) {
  const std::size_t k = exponents.size();
  std::uint64_t g = m;
  for (std::uint64_t a : exponents) g = std::gcd(g, a);
  const std::uint64_t m_eff = m / g;
  if (m_eff == 1) return identity_matrix(k);
  const auto degree = static_cast<unsigned>(multiplicative_order(p % m_eff, m_eff));
  const ExtensionField field = ExtensionField::make(p, degree);
  const Poly zeta = field.element_of_order(m_eff);

  std::vector<std::uint64_t> remaining = exponents;
  std::sort(remaining.begin(), remaining.end());
  Matrix out(k, std::vector<std::uint64_t>(k, 0));
  std::size_t offset = 0;
  while (!remaining.empty()) {
    const std::uint64_t r = remaining.front();
    std::vector<std::uint64_t> orbit{r};
    for (std::uint64_t x = mul_mod(r, p, m); x != r; x = mul_mod(x, p, m)) orbit.push_back(x);
    for (std::uint64_t x : orbit) {
      remaining.erase(std::find(remaining.begin(), remaining.end(), x));
    }
    // Minimal polynomial prod (X - theta^(p^i)) with coefficients in GF(p^D).
    const Poly theta = field.pow(zeta, r / g);
    auto axpy = [p](const Poly& x, const Poly& y, std::uint64_t sign_y) {
      Poly s = x;
      s.resize(std::max(s.size(), y.size()), 0);
      for (std::size_t t = 0; t < y.size(); ++t) s[t] = (s[t] + mul_mod(sign_y, y[t], p)) % p;
      trim(s);
      return s;
    };
    std::vector<Poly> minpoly{Poly{1}};
    Poly conj = theta;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      std::vector<Poly> next(minpoly.size() + 1);
      for (std::size_t j = 0; j < minpoly.size(); ++j) {
        next[j + 1] = axpy(next[j + 1], minpoly[j], 1);
        next[j] = axpy(next[j], field.mul(conj, minpoly[j]), p - 1);
      }
      minpoly = std::move(next);
      conj = field.pow(conj, p);
    }
    const std::size_t d = orbit.size();
    for (std::size_t j = 0; j < d; ++j) {
      if (minpoly[j].size() > 1) throw InvalidArgument("realize: minimal polynomial not over F_p");
      const std::uint64_t c = minpoly[j].empty() ? 0 : minpoly[j][0];
      // Companion matrix of X^d + c_{d-1} X^{d-1} + ... + c_0.
      out[offset + j][offset + d - 1] = (p - c) % p;
      if (j + 1 < d) out[offset + j + 1][offset + j] = 1;
    }
    offset += d;
  }
  return out;
}

Matrix frobenius_action(int k) {
  const std::uint32_t f = frobenius_polynomial(k);
  const auto n = static_cast<std::size_t>(k);
  Matrix a(n, std::vector<std::uint64_t>(n, 0));
  // Column j is u * u^j in the basis 1, u, ..., u^{k-1}.
  for (std::size_t j = 0; j + 1 < n; ++j) a[j + 1][j] = 1;
  for (std::size_t i = 0; i < n; ++i) a[i][n - 1] = (f >> i) & 1;
  return a;
}

std::uint32_t checked_order(const GroupSpec& spec, std::uint64_t max_order) {
  const std::uint64_t n = spec.order();
  if (n > max_order) {
    throw InvalidArgument("realize: |G| = " + std::to_string(n) + " exceeds max_order " +
                          std::to_string(max_order));
  }
  if (n > 65536) throw InvalidArgument("realize: |G| = " + std::to_string(n) + " too large");
  return static_cast<std::uint32_t>(n);
}

// Vectors of F_p^k indexed lexicographically, first coordinate most
// significant.
std::vector<std::uint64_t> decode(std::uint64_t index, std::uint64_t p, std::size_t k) {
  std::vector<std::uint64_t> v(k);
  for (std::size_t i = k; i-- > 0;) {
    v[i] = index % p;
    index /= p;
  }
  return v;
}

std::uint64_t encode(const std::vector<std::uint64_t>& v, std::uint64_t p) {
  std::uint64_t index = 0;
  for (std::uint64_t x : v) index = index * p + x;
  return index;
}

ConcreteGroup semidirect_table(std::uint64_t p, std::uint64_t m, const Matrix& action,
                               std::uint32_t order) {
  const std::size_t k = action.size();
  const std::uint64_t vectors = order / m;
  // act[c][v] = index of action^c v.
  std::vector<std::vector<std::uint64_t>> act(m, std::vector<std::uint64_t>(vectors));
  for (std::uint64_t v = 0; v < vectors; ++v) {
    auto x = decode(v, p, k);
    for (std::uint64_t c = 0; c < m; ++c) {
      act[c][v] = encode(x, p);
      std::vector<std::uint64_t> y(k, 0);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) y[i] = (y[i] + mul_mod(action[i][j], x[j], p)) % p;
      x = std::move(y);
    }
  }
  std::vector<std::vector<std::uint64_t>> add(vectors, std::vector<std::uint64_t>(vectors));
  for (std::uint64_t a = 0; a < vectors; ++a) {
    const auto x = decode(a, p, k);
    for (std::uint64_t b = 0; b < vectors; ++b) {
      auto y = decode(b, p, k);
      for (std::size_t i = 0; i < k; ++i) y[i] = (y[i] + x[i]) % p;
      add[a][b] = encode(y, p);
    }
  }
  const std::size_t n = order;
  std::vector<std::uint32_t> table(n * n);
  for (std::uint64_t g = 0; g < n; ++g) {
    const std::uint64_t v = g / m, c = g % m;
    for (std::uint64_t h = 0; h < n; ++h) {
      const std::uint64_t w = h / m, d = h % m;
      table[g * n + h] = static_cast<std::uint32_t>(add[v][act[c][w]] * m + (c + d) % m);
    }
  }
  return ConcreteGroup(order, std::move(table));
}

}  // namespace

std::uint32_t frobenius_polynomial(int k) {
  // Primitive polynomials, so that u generates GF(2^k)^x.
  static constexpr std::uint32_t kTable[] = {
      0x3,   0x7,   0xB,    0x13,   0x25,   0x43,   0x83,   0x11D,
      0x211, 0x409, 0x805, 0x1053, 0x201B, 0x4443, 0x8003, 0x1100B,
  };
  if (k < 1 || k > 16) {
    throw InvalidArgument("no built-in irreducible polynomial for J(" + std::to_string(k) +
                          "); supported range is 1..16");
  }
  return kTable[k - 1];
}

Matrix semidirect_action_matrix(const GroupSpec& spec) {
  if (const auto* f = std::get_if<family::Frobenius>(&spec.family())) return frobenius_action(f->k);
  const auto data = spec.semidirect_data();
  if (!data) throw InvalidArgument("semidirect_action_matrix: not a semidirect family");
  return action_from_exponents(data->p, data->n1.modulus(), data->n1.expanded());
}

ConcreteGroup realize(const GroupSpec& spec, std::uint64_t max_order) {
  const std::uint32_t n = checked_order(spec, max_order);
  const auto& fam = spec.family();
  if (std::holds_alternative<family::Trivial>(fam)) return ConcreteGroup(1, {0});
  if (std::holds_alternative<family::Cyclic>(fam)) {
    std::vector<std::uint32_t> table(static_cast<std::size_t>(n) * n);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
    return ConcreteGroup(n, std::move(table));
  }
  if (const auto* e = std::get_if<family::ElementaryAbelian>(&fam)) {
    return semidirect_table(e->p, 1, identity_matrix(static_cast<std::size_t>(e->k)), n);
  }
  if (const auto* pr = std::get_if<family::Product>(&fam)) {
    return ConcreteGroup::direct_product(realize(*pr->left, max_order),
                                         realize(*pr->right, max_order));
  }
  if (const auto* q = std::get_if<family::Quaternion>(&fam)) {
    // a^i b^j has index j * 2h + i with a of order 2h, b^2 = a^h, b a = a^-1 b.
    const std::uint32_t h2 = static_cast<std::uint32_t>(q->order / 2);
    const std::uint32_t h = h2 / 2;
    std::vector<std::uint32_t> table(static_cast<std::size_t>(n) * n);
    for (std::uint32_t x = 0; x < n; ++x) {
      const std::uint32_t i = x % h2, j = x / h2;
      for (std::uint32_t y = 0; y < n; ++y) {
        const std::uint32_t k = y % h2, l = y / h2;
        std::uint32_t power = j == 0 ? (i + k) % h2 : (i + h2 - k) % h2;
        std::uint32_t b = j ^ l;
        if (j == 1 && l == 1) power = (power + h) % h2;
        table[x * n + y] = b * h2 + power;
      }
    }
    return ConcreteGroup(n, std::move(table));
  }
  if (const auto* t = std::get_if<family::Table>(&fam)) return *t->group;
  if (const auto* f = std::get_if<family::Frobenius>(&fam)) {
    return semidirect_table(2, (std::uint64_t{1} << f->k) - 1, frobenius_action(f->k), n);
  }
  const auto data = spec.semidirect_data();
  return semidirect_table(data->p, data->n1.modulus(), semidirect_action_matrix(spec), n);
}

}  // namespace qbounds
