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
#ifndef QBOUNDS_Q_BOUNDS_H_
#define QBOUNDS_Q_BOUNDS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qbounds/group_spec.h"
#include "qbounds/swan_invariants.h"

namespace qbounds {

enum class Verdict { kImpossible, kRealizable, kOpen };

std::string to_string(Verdict v);

// Values recorded for a named group that are not derived by this library.
struct Annotation {
  std::string group;
  std::optional<std::int64_t> q_value;  // exact q_{2n}
  std::optional<std::int64_t> mu2;
  std::string note;

  friend bool operator==(const Annotation&, const Annotation&) = default;
};

struct QBoundReport {
  std::string group;
  int n = 0;
  std::int64_t e_n = 0;
  MuValue mu_prime_n;
  MuValue mu_prime_nm1;
  std::int64_t lower = 0;
  std::optional<std::int64_t> upper;
  std::optional<std::int64_t> exact;
  Verdict verdict = Verdict::kOpen;
  std::string reason;
  std::vector<std::string> citations;
  std::optional<Annotation> annotation;

  friend bool operator==(const QBoundReport&, const QBoundReport&) = default;
};

// Data for one subgroup H <= G: the index and H's own invariants.
struct SubgroupBound {
  std::int64_t index;
  std::int64_t e_n;
  std::int64_t mu_prime_diff;  // mu'_n(H) - mu'_{n-1}(H)
};

// (max(e_n, mu'_n - mu'_{n-1}), 2 mu'_n)
std::pair<std::int64_t, std::int64_t> swan_interval(std::int64_t e_n, std::int64_t mu_prime_n,
                                                       std::int64_t mu_prime_nm1, int n);

// 2 if period | n+2, 0 if period | n+1, else empty. Throws on odd or
// nonpositive periods.
std::optional<std::int64_t> periodic_exact(int period, int n);

// Raises lower to ceil(max(e_n(H), mu'-difference of H) / [G:H]) for each H.
std::int64_t subgroup_refine(std::int64_t lower, std::span<const SubgroupBound> subgroups, int n);

// For a nontrivial finite fundamental group: chi > 0 exactly when n is even.
bool euler_sign_check(int n, std::int64_t chi);

// Lookup by group name ("A4", "A5", "S4", "D8", ...) or by spec.
std::optional<Annotation> annotation_for_name(const std::string& name, int n);
std::optional<Annotation> annotation_for(const GroupSpec& spec, int n);

// Interval, exact value and rational-homology-2n-sphere verdict for q_{2n}.
// The report must contain degrees n-1 and n (n >= 2). Values the report
// could not determine are recomputed so that the original error surfaces.
QBoundReport q_bounds(const GroupSpec& spec, const SwanReport& report, int n,
                      std::span<const SubgroupBound> subgroups = {});

QBoundReport qs4_verdict(const GroupSpec& spec, const SwanReport& report);

}  // namespace qbounds

#endif  // QBOUNDS_Q_BOUNDS_H_
