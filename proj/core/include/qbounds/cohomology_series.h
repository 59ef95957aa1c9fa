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
#ifndef QBOUNDS_COHOMOLOGY_SERIES_H_
#define QBOUNDS_COHOMOLOGY_SERIES_H_

// Closed-form Poincare series of H^*(G; F) with trivial coefficients,
// truncated at an explicit degree N.

#include <cstdint>
#include <string>
#include <vector>

#include "qbounds/character_algebra.h"
#include "qbounds/group_spec.h"

namespace qbounds {

// Coefficient field: the rationals or F_p.
struct Field {
  std::uint64_t p = 0;  // 0 means Q

  static Field rational() { return Field{0}; }
  static Field mod(std::uint64_t prime);

  bool is_rational() const { return p == 0; }
  std::string to_string() const;  // "Q" or "F_p"

  friend bool operator==(const Field&, const Field&) = default;
};

struct DimSeries {
  Field field;
  std::vector<std::int64_t> dims;  // dims[i] = dim H^i, i = 0..N

  int truncation() const { return static_cast<int>(dims.size()) - 1; }
  std::int64_t operator[](int degree) const { return dims.at(static_cast<std::size_t>(degree)); }

  friend bool operator==(const DimSeries&, const DimSeries&) = default;
};

// Throws InvalidArgument unless dims[0] == 1 and every entry is >= 0.
void check_series(const DimSeries& s);

DimSeries series_cyclic(std::uint64_t m, Field field, int truncation);

// (Z/p)^k: binomial C(k+n-1, n) over F_2; exterior (x) polynomial algebra
// for odd p; trivial away from p.
DimSeries series_elementary_abelian(std::uint64_t p, int k, Field field, int truncation);

// Kunneth convolution over a common field, truncated at the shorter input.
DimSeries series_product(const DimSeries& a, const DimSeries& b);

// H^*(E_k x| C; F_p) = H^*(E_k; F_p)^C, counted from the characters of the
// graded pieces. `n1` is the character of H^1(E_k; K_p).
DimSeries series_semidirect_invariants(const CharMultiset& n1, std::uint64_t p, int truncation);

// Generalized quaternion / dicyclic group of order 4n: period-4 patterns
// (1,2,2,1,...) at 2 when n is even, all ones at 2 when n is odd,
// (1,0,0,1,...) at odd p | n.
DimSeries series_quaternion(std::uint64_t order, Field field, int truncation);

// Dispatch on the family. Table specs are not handled here (they need the
// cochain oracle) and raise Unsupported.
DimSeries series_for_spec(const GroupSpec& spec, Field field, int truncation);

}  // namespace qbounds

#endif  // QBOUNDS_COHOMOLOGY_SERIES_H_
