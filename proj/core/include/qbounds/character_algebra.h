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
#ifndef QBOUNDS_CHARACTER_ALGEBRA_H_
#define QBOUNDS_CHARACTER_ALGEBRA_H_

// Characters of a cyclic group C of order m over an algebraically closed
// field of characteristic p not dividing m. A one-dimensional character is
// identified with its exponent r in [0, m): the generator of C acts by
// zeta^r for a fixed primitive m-th root of unity zeta. A semisimple
// K[C]-module is then a multiset of exponents, and every quantity needed
// for twisted cohomology of E_k x| C is a count of exponents.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace qbounds {

// Largest modulus accepted by the exhaustive twist enumeration.
inline constexpr std::uint64_t kMaxCharacterModulus = std::uint64_t{1} << 20;

class CharMultiset {
 public:
  explicit CharMultiset(std::uint64_t modulus);
  CharMultiset(std::uint64_t modulus, std::span<const std::uint64_t> residues);
  CharMultiset(std::uint64_t modulus, std::initializer_list<std::uint64_t> residues);

  std::uint64_t modulus() const { return modulus_; }

  // Total multiplicity, i.e. the dimension of the module.
  std::int64_t dim() const { return dim_; }

  std::int64_t count(std::uint64_t residue) const;
  void add(std::uint64_t residue, std::int64_t multiplicity = 1);

  // Residue -> multiplicity; zero multiplicities are never stored.
  const std::map<std::uint64_t, std::int64_t>& entries() const { return entries_; }

  // Residues with repetition, ascending.
  std::vector<std::uint64_t> expanded() const;

  // Every exponent multiplied by `unit` (relabels the generator of C).
  CharMultiset scaled(std::uint64_t unit) const;

  // "{1,2} mod 3"
  std::string to_string() const;

  friend bool operator==(const CharMultiset&, const CharMultiset&) = default;

 private:
  std::uint64_t modulus_;
  std::int64_t dim_ = 0;
  std::map<std::uint64_t, std::int64_t> entries_;
};

// Direct sum of modules (multiset union).
CharMultiset direct_sum(const CharMultiset& a, const CharMultiset& b);

// Character of a tensor product: exponents add.
CharMultiset tensor(const CharMultiset& a, const CharMultiset& b);

// Tensor with the one-dimensional character L(beta).
CharMultiset twist(const CharMultiset& a, std::uint64_t beta);

// Pairwise sums a_i + a_j over unordered pairs i < j of the expanded multiset.
CharMultiset lambda2(const CharMultiset& a);

// Character of the Bockstein image of H^1 inside H^2 of an elementary abelian
// p-group: a itself for odd p, doubled exponents for p = 2. For p = 2 this is
// the span of the squares, not the full symmetric square.
CharMultiset bockstein_image(const CharMultiset& a, std::uint64_t p);

// Dimension of the C-fixed subspace: multiplicity of the trivial character.
std::int64_t invariants_dim(const CharMultiset& a);

// h^2 - h^1 + h^0 of E_k x| C with coefficients in L(beta), where `n1` is the
// character of H^1(E_k; K_p).
std::int64_t euler_local(const CharMultiset& n1, std::uint64_t p, std::uint64_t beta);

// mu_2 of E_k x| C: the largest euler_local over all beta, with Swan's floor 1.
std::int64_t mu2_semidirect(const CharMultiset& n1, std::uint64_t p);

// e_2 of E_k x| C: the mod-p expression in invariant dimensions, maxed with the
// rational baseline 2 (the mod-q contribution 1 for q | m never wins).
std::int64_t e2_semidirect(const CharMultiset& n1, std::uint64_t p);

// Character of H^degree(E_k; K_p) as a C-module: the degree piece of
// Sym(N) for p = 2, of Lambda(N) (x) Sym(beta N) with beta N in degree 2
// for odd p.
CharMultiset graded_character(const CharMultiset& n1, std::uint64_t p, int degree);

// Characters for every degree 0..max_degree in one pass.
std::vector<CharMultiset> graded_characters(const CharMultiset& n1, std::uint64_t p,
                                            int max_degree);

// mu_n of E_k x| C evaluated on all one-dimensional simples, with the
// contribution of primes dividing m and Swan's floors. For the trivial
// group (k = 0, m = 1) no floor is applied.
std::int64_t mun_semidirect(const CharMultiset& n1, std::uint64_t p, int n);

// Eigenvalue exponents of multiplication by a generator of GF(2^k)^x on
// GF(2^k): {2^0, ..., 2^(k-1)} modulo 2^k - 1.
CharMultiset frobenius_exponents(int k);

}  // namespace qbounds

#endif  // QBOUNDS_CHARACTER_ALGEBRA_H_
