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
#ifndef QBOUNDS_SWAN_INVARIANTS_H_
#define QBOUNDS_SWAN_INVARIANTS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qbounds/cochain_oracle.h"
#include "qbounds/cohomology_series.h"
#include "qbounds/group_spec.h"

namespace qbounds {

// Whether (G, n) is an exceptional pair, i.e. mu'_n < mu_n.
enum class Exceptional { kNo, kDeclared, kUnknown };

std::string to_string(Exceptional e);

// A Swan invariant known exactly or only between two bounds. An empty end
// is unknown.
struct MuValue {
  std::optional<std::int64_t> lower;
  std::optional<std::int64_t> upper;

  static MuValue exactly(std::int64_t v) { return MuValue{v, v}; }
  static MuValue unknown() { return MuValue{}; }

  bool is_exact() const { return lower && upper && *lower == *upper; }
  std::string to_string() const;  // "3", "[0,2]", "[0,?]", "?"

  friend bool operator==(const MuValue&, const MuValue&) = default;
};

struct MuResult {
  MuValue mu;
  MuValue mu_prime;
  Exceptional exceptional = Exceptional::kNo;
  std::vector<std::string> notes;
};

struct SwanDegree {
  int n = 0;
  std::int64_t e_n = 0;
  MuValue mu;
  MuValue mu_prime;
  Exceptional exceptional = Exceptional::kNo;
  std::vector<std::string> notes;

  friend bool operator==(const SwanDegree&, const SwanDegree&) = default;
};

struct SwanReport {
  std::string group;
  std::vector<SwanDegree> degrees;  // n = 1..n_max in order

  const SwanDegree& at(int n) const;

  friend bool operator==(const SwanReport&, const SwanReport&) = default;
};

// e_n = max over the given fields of h^n - 2 (h^{n-1} - h^{n-2} + ... ).
// The list must contain the rational series; every series must reach n.
std::int64_t compute_en(std::span<const DimSeries> series, int n);

// Rational series plus one F_p series for each prime p dividing |G|.
// Table groups go through the cochain oracle.
std::vector<DimSeries> series_list(const GroupSpec& spec, int truncation,
                                   const OracleOptions& options = default_oracle_options());

// Swan's formula for a p-group, where the trivial module is the only
// simple one: sum_{i<=n} (-1)^{n-i} h^i, floored at 1 (n even) / 0 (n odd).
std::int64_t mun_pgroup(const DimSeries& series, int n);

// mu_n and mu'_n by the path that fits the family: metadata for n = 1,
// p-group series, one-dimensional characters for semidirect families,
// periodicity for groups known only through a declared period.
MuResult compute_mun(const GroupSpec& spec, int n,
                     const OracleOptions& options = default_oracle_options());

// Swan's formula evaluated on an explicit list of modules (all simple
// modules, at all primes dividing |G|, must be supplied by the caller):
// max over M of ceil((sum_{i<=n} (-1)^{n-i} h^i(G; M)) / dim M), with the
// floors for nontrivial G.
std::int64_t mun_from_modules(const ConcreteGroup& group, std::span<const FpModule> modules,
                              int n, const OracleOptions& options = default_oracle_options());

// e_n and mu_n for n = 1..n_max. Failures to determine mu (missing metadata,
// unsupported family) are recorded as unknown values with a note.
SwanReport compute_swan_report(const GroupSpec& spec, int n_max,
                               const OracleOptions& options = default_oracle_options());

}  // namespace qbounds

#endif  // QBOUNDS_SWAN_INVARIANTS_H_
