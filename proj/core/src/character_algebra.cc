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
#include "qbounds/character_algebra.h"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qbounds/arith.h"
#include "qbounds/error.h"

namespace qbounds {
namespace {

void require_same_modulus(const CharMultiset& a, const CharMultiset& b) {
  if (a.modulus() != b.modulus()) {
    throw InvalidArgument("character modulus mismatch: " + std::to_string(a.modulus()) +
                          " vs " + std::to_string(b.modulus()));
  }
}

void require_coprime(std::uint64_t p, std::uint64_t m) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (std::gcd(p, m) != 1) {
    throw InvalidArgument("characteristic " + std::to_string(p) +
                          " divides the order " + std::to_string(m) + " of C");
  }
  if (m > kMaxCharacterModulus) {
    throw InvalidArgument("modulus " + std::to_string(m) + " exceeds 2^20");
  }
}

std::uint64_t negate(std::uint64_t r, std::uint64_t m) { return (m - r % m) % m; }

// Multiplicity of residue r in a dense table; tables are indexed by residue.
using Dense = std::vector<std::int64_t>;

CharMultiset from_dense(std::uint64_t m, const Dense& d) {
  CharMultiset out(m);
  for (std::uint64_t r = 0; r < m; ++r) {
    if (d[r] != 0) out.add(r, d[r]);
  }
  return out;
}

}  // namespace

CharMultiset::CharMultiset(std::uint64_t modulus) : modulus_(modulus) {
  if (modulus == 0) throw InvalidArgument("character modulus must be >= 1");
}

CharMultiset::CharMultiset(std::uint64_t modulus, std::span<const std::uint64_t> residues)
    : CharMultiset(modulus) {
  for (std::uint64_t r : residues) add(r);
}

CharMultiset::CharMultiset(std::uint64_t modulus, std::initializer_list<std::uint64_t> residues)
    : CharMultiset(modulus, std::span<const std::uint64_t>(residues.begin(), residues.size())) {}

std::int64_t CharMultiset::count(std::uint64_t residue) const {
  auto it = entries_.find(residue);
  return it == entries_.end() ? 0 : it->second;
}

void CharMultiset::add(std::uint64_t residue, std::int64_t multiplicity) {
  if (residue >= modulus_) {
    throw InvalidArgument("residue " + std::to_string(residue) + " outside [0, " +
                          std::to_string(modulus_) + ")");
  }
  if (multiplicity < 0) throw InvalidArgument("negative multiplicity");
  if (multiplicity == 0) return;
  entries_[residue] = checked_add(entries_[residue], multiplicity);
  dim_ = checked_add(dim_, multiplicity);
}

std::vector<std::uint64_t> CharMultiset::expanded() const {
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(dim_));
  for (const auto& [r, c] : entries_) out.insert(out.end(), static_cast<std::size_t>(c), r);
  return out;
}

CharMultiset CharMultiset::scaled(std::uint64_t unit) const {
  CharMultiset out(modulus_);
  for (const auto& [r, c] : entries_) out.add(mul_mod(r, unit, modulus_), c);
  return out;
}

std::string CharMultiset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::uint64_t r : expanded()) {
    if (!first) os << ',';
    os << r;
    first = false;
  }
  os << "} mod " << modulus_;
  return os.str();
}

CharMultiset direct_sum(const CharMultiset& a, const CharMultiset& b) {
  require_same_modulus(a, b);
  CharMultiset out = a;
  for (const auto& [r, c] : b.entries()) out.add(r, c);
  return out;
}

CharMultiset tensor(const CharMultiset& a, const CharMultiset& b) {
  require_same_modulus(a, b);
  const std::uint64_t m = a.modulus();
  CharMultiset out(m);
  for (const auto& [s, cs] : a.entries()) {
    for (const auto& [t, ct] : b.entries()) out.add((s + t) % m, checked_mul(cs, ct));
  }
  return out;
}

CharMultiset twist(const CharMultiset& a, std::uint64_t beta) {
  const std::uint64_t m = a.modulus();
  CharMultiset out(m);
  for (const auto& [r, c] : a.entries()) out.add((r + beta % m) % m, c);
  return out;
}

CharMultiset lambda2(const CharMultiset& a) {
  const std::uint64_t m = a.modulus();
  CharMultiset out(m);
  const auto& e = a.entries();
  for (auto it = e.begin(); it != e.end(); ++it) {
    const auto& [r, c] = *it;
    // Pairs inside one isotypic block, then across blocks.
    if (c >= 2) out.add((2 * r) % m, c * (c - 1) / 2);
    for (auto jt = std::next(it); jt != e.end(); ++jt) {
      out.add((r + jt->first) % m, checked_mul(c, jt->second));
    }
  }
  return out;
}

CharMultiset bockstein_image(const CharMultiset& a, std::uint64_t p) {
  if (p != 2) return a;
  const std::uint64_t m = a.modulus();
  CharMultiset out(m);
  for (const auto& [r, c] : a.entries()) out.add((2 * r) % m, c);
  return out;
}

std::int64_t invariants_dim(const CharMultiset& a) { return a.count(0); }

std::int64_t euler_local(const CharMultiset& n1, std::uint64_t p, std::uint64_t beta) {
  const std::uint64_t m = n1.modulus();
  require_coprime(p, m);
  const CharMultiset trivial(m, {0});
  const std::int64_t fixed = invariants_dim(twist(trivial, beta));
  const std::int64_t wedge = invariants_dim(twist(lambda2(n1), beta));
  if (p != 2) return wedge + fixed;
  const std::int64_t squares = invariants_dim(twist(bockstein_image(n1, 2), beta));
  const std::int64_t linear = invariants_dim(twist(n1, beta));
  return squares + wedge - linear + fixed;
}

std::int64_t mu2_semidirect(const CharMultiset& n1, std::uint64_t p) {
  const std::uint64_t m = n1.modulus();
  require_coprime(p, m);
  if (n1.dim() < 1) throw InvalidArgument("mu2_semidirect needs dim N >= 1");
  // Same formula as euler_local, with the beta-independent pieces hoisted.
  const CharMultiset wedge = lambda2(n1);
  const CharMultiset squares = bockstein_image(n1, 2);
  std::int64_t best = 1;
  for (std::uint64_t beta = 0; beta < m; ++beta) {
    const std::uint64_t hit = negate(beta, m);
    std::int64_t value = wedge.count(hit) + (beta == 0 ? 1 : 0);
    if (p == 2) value += squares.count(hit) - n1.count(hit);
    best = std::max(best, value);
  }
  return best;
}

std::int64_t e2_semidirect(const CharMultiset& n1, std::uint64_t p) {
  require_coprime(p, n1.modulus());
  std::int64_t value = invariants_dim(lambda2(n1)) + 2;
  if (p == 2) {
    value += invariants_dim(bockstein_image(n1, 2)) - 2 * invariants_dim(n1);
  } else {
    value -= invariants_dim(n1);
  }
  return std::max<std::int64_t>(value, 2);
}

std::vector<CharMultiset> graded_characters(const CharMultiset& n1, std::uint64_t p,
                                            int max_degree) {
  const std::uint64_t m = n1.modulus();
  require_coprime(p, m);
  if (max_degree < 0) throw InvalidArgument("degree must be >= 0");
  const auto top = static_cast<std::size_t>(max_degree);
  // Guard the largest graded piece against overflow before the DP.
  const std::int64_t k = n1.dim();
  for (int d = 0; d <= max_degree; ++d) {
    if (p == 2) {
      (void)binomial(k + d - 1, d);
    } else {
      (void)binomial(k + d / 2, d / 2);
    }
  }

  std::vector<Dense> table(top + 1, Dense(m, 0));
  table[0][0] = 1;
  auto add_polynomial = [&](std::uint64_t a, std::size_t weight) {
    // Multiply by 1 / (1 - z^a t^weight), increasing degree order.
    for (std::size_t d = weight; d <= top; ++d) {
      const Dense& lower = table[d - weight];
      Dense& cur = table[d];
      for (std::uint64_t r = 0; r < m; ++r) {
        if (lower[r] != 0) cur[(r + a) % m] += lower[r];
      }
    }
  };
  auto add_exterior = [&](std::uint64_t a) {
    // Multiply by (1 + z^a t), decreasing degree order.
    for (std::size_t d = top; d >= 1; --d) {
      const Dense& lower = table[d - 1];
      Dense& cur = table[d];
      for (std::uint64_t r = 0; r < m; ++r) {
        if (lower[r] != 0) cur[(r + a) % m] += lower[r];
      }
    }
  };
  for (std::uint64_t a : n1.expanded()) {
    if (p == 2) {
      add_polynomial(a, 1);
    } else {
      add_exterior(a);
      add_polynomial(a, 2);
    }
  }

  std::vector<CharMultiset> out;
  out.reserve(top + 1);
  for (const Dense& d : table) out.push_back(from_dense(m, d));
  return out;
}

CharMultiset graded_character(const CharMultiset& n1, std::uint64_t p, int degree) {
  return graded_characters(n1, p, degree).back();
}

std::int64_t mun_semidirect(const CharMultiset& n1, std::uint64_t p, int n) {
  const std::uint64_t m = n1.modulus();
  if (n < 0) throw InvalidArgument("degree must be >= 0");
  const auto pieces = graded_characters(n1, p, n);
  // alternating[r] = sum_t (-1)^(n-t) * mult of r in degree t; the twist by
  // beta picks out r = -beta.
  Dense alternating(m, 0);
  for (int t = 0; t <= n; ++t) {
    const std::int64_t sign = ((n - t) % 2 == 0) ? 1 : -1;
    for (const auto& [r, c] : pieces[static_cast<std::size_t>(t)].entries()) {
      alternating[r] += sign * c;
    }
  }
  std::int64_t best = alternating[0];
  for (std::uint64_t beta = 1; beta < m; ++beta) {
    best = std::max(best, alternating[negate(beta, m)]);
  }
  const bool trivial_group = n1.dim() == 0 && m == 1;
  if (trivial_group) return best;
  if (n % 2 == 0) {
    // Primes q | m contribute at most 1, attained by the trivial character.
    best = std::max<std::int64_t>(best, 1);
  } else {
    best = std::max<std::int64_t>(best, 0);
  }
  return best;
}

CharMultiset frobenius_exponents(int k) {
  if (k < 1 || k > 20) throw InvalidArgument("frobenius_exponents needs 1 <= k <= 20");
  const std::uint64_t m = (std::uint64_t{1} << k) - 1;
  CharMultiset out(m);
  for (int i = 0; i < k; ++i) out.add((std::uint64_t{1} << i) % m);
  return out;
}

}  // namespace qbounds
