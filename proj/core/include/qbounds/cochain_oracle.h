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
#ifndef QBOUNDS_COCHAIN_ORACLE_H_
#define QBOUNDS_COCHAIN_ORACLE_H_

// Brute-force group cohomology H^n(G; M) from inhomogeneous bar cochains
// and exact rank computations over F_p. Slow and independent of every
// closed form in the library; used to validate them.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qbounds/concrete_group.h"
#include "qbounds/rank.h"
#include "qbounds/group_spec.h"

namespace qbounds {

// Finite-dimensional F_p[G]-module given by one matrix per group element.
class FpModule {
 public:
  using Matrix = std::vector<std::vector<std::uint64_t>>;

  // Validates identity, invertibility and, for |G| <= 64, the homomorphism
  // property. Throws InvalidArgument.
  FpModule(const ConcreteGroup& group, std::uint64_t p, std::vector<Matrix> action);

  static FpModule trivial(const ConcreteGroup& group, std::uint64_t p, std::size_t dim = 1);

  // One-dimensional module: g acts by scalars[g].
  static FpModule one_dimensional(const ConcreteGroup& group, std::uint64_t p,
                                  const std::vector<std::uint64_t>& scalars);

  std::uint64_t p() const { return p_; }
  std::size_t dim() const { return dim_; }
  const Matrix& action(std::uint32_t g) const { return action_[g]; }

  // Same module over G relabeled by perm (see ConcreteGroup::relabeled).
  FpModule relabeled(const ConcreteGroup& relabeled_group,
                     const std::vector<std::uint32_t>& perm) const;

 private:
  std::uint64_t p_;
  std::size_t dim_;
  std::vector<Matrix> action_;
};

struct OracleOptions {
  std::size_t memory_budget;
  // Normalized cochains (vanishing when any argument is the identity) give
  // the same cohomology with smaller matrices.
  bool normalized = true;
};

// 2 GiB, or the byte count in QBOUNDS_MEMORY_BUDGET (suffixes K, M, G).
std::size_t default_memory_budget();
OracleOptions default_oracle_options();

// Parses "1048576", "512M", "2G" ...; throws InvalidArgument.
std::size_t parse_memory_size(const std::string& text);

// Memory the oracle reserves for the pivots of d^n : C^n -> C^{n+1} when
// dim C^n = cochain_dim; checked against the budget before any work. The
// eliminator also stops with BudgetExceeded if fill-in exceeds the budget.
std::size_t oracle_memory_bytes(std::size_t cochain_dim, int n, std::size_t module_dim);

struct RankResult {
  int n = 0;
  std::int64_t dim_cochains[3] = {0, 0, 0};  // degrees n-1, n, n+1
  std::int64_t rank_d_nm1 = 0;                // rank of d^{n-1}: C^{n-1} -> C^n
  std::int64_t rank_d_n = 0;                  // rank of d^n: C^n -> C^{n+1}
  std::int64_t h_n = 0;
};

RankResult cochain_cohomology_dim(const ConcreteGroup& group, const FpModule& module, int n,
                                  const OracleOptions& options = default_oracle_options());

// h^0..h^n_max, sharing the rank of each coboundary between degrees.
std::vector<std::int64_t> cochain_cohomology_dims(
    const ConcreteGroup& group, const FpModule& module, int n_max,
    const OracleOptions& options = default_oracle_options());

// d^n : C^n -> C^{n+1} as an explicit matrix, one row per coordinate of
// C^{n+1}. Meant for small cases (tests, benchmarks); the rank routines above
// stream rows instead of storing them.
SparseMatrix coboundary_matrix(const ConcreteGroup& group, const FpModule& module, int n,
                               bool normalized = true);

struct SeriesCheck {
  int n;
  std::int64_t closed_form;
  std::int64_t oracle;
  bool match;
};

// Closed-form series_for_spec against the oracle with trivial F_p
// coefficients, degrees 0..n_max. Groups must have order <= 64.
std::vector<SeriesCheck> verify_series(const GroupSpec& spec, std::uint64_t p, int n_max,
                                       const OracleOptions& options = default_oracle_options());

}  // namespace qbounds

#endif  // QBOUNDS_COCHAIN_ORACLE_H_
