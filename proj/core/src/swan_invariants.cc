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
#include "qbounds/swan_invariants.h"

#include <algorithm>
#include <sstream>
#include <variant>

#include "qbounds/arith.h"
#include "qbounds/character_algebra.h"
#include "qbounds/error.h"

namespace qbounds {
namespace {

std::int64_t swan_floor(int n) { return n % 2 == 0 ? 1 : 0; }

// sum_{i<=n} (-1)^{n-i} h^i
std::int64_t alternating_sum(const std::vector<std::int64_t>& h, int n) {
  std::int64_t total = 0;
  for (int i = 0; i <= n; ++i) {
    const std::int64_t term = h.at(static_cast<std::size_t>(i));
    total = ((n - i) % 2 == 0) ? checked_add(total, term) : checked_add(total, -term);
  }
  return total;
}

DimSeries field_series(const GroupSpec& spec, Field field, int truncation,
                       const OracleOptions& options) {
  if (const auto* t = std::get_if<family::Table>(&spec.family())) {
    if (field.is_rational()) {
      DimSeries s{field, std::vector<std::int64_t>(static_cast<std::size_t>(truncation) + 1, 0)};
      s.dims[0] = 1;
      return s;
    }
    const ConcreteGroup& g = *t->group;
    return DimSeries{field, cochain_cohomology_dims(g, FpModule::trivial(g, field.p), truncation,
                                                    options)};
  }
  return series_for_spec(spec, field, truncation);
}

bool is_semidirect_family(const GroupSpec& spec) {
  const auto& f = spec.family();
  return std::holds_alternative<family::SemidirectIsotypic>(f) ||
         std::holds_alternative<family::Semidirect>(f) ||
         std::holds_alternative<family::Frobenius>(f);
}

MuResult mu_from_metadata_degree_one(const GroupSpec& spec) {
  MuResult r;
  const std::optional<int> d = spec.generators();
  if (!d) throw MissingMetadata("d", "mu_1 is read from the minimal number of generators");
  const std::int64_t top = *d - 1;
  const std::optional<bool> solvable = spec.solvable();
  if (solvable && *solvable) {
    r.mu = MuValue::exactly(top);
    r.notes.push_back("mu_1 = d - 1 for solvable groups");
  } else {
    const std::int64_t bottom = spec.order() == 1 ? top : std::min<std::int64_t>(0, top);
    r.mu = MuValue{bottom, top};
    r.notes.push_back(solvable ? "nonsolvable group: only mu_1 <= d - 1 is known"
                               : "solvability not declared: only mu_1 <= d - 1 is used");
  }
  r.mu_prime = r.mu;
  return r;
}

}  // namespace

std::string to_string(Exceptional e) {
  switch (e) {
    case Exceptional::kNo:
      return "no";
    case Exceptional::kDeclared:
      return "declared";
    case Exceptional::kUnknown:
      return "unknown";
  }
  return "?";
}

std::string MuValue::to_string() const {
  if (is_exact()) return std::to_string(*lower);
  if (!lower && !upper) return "?";
  std::ostringstream out;
  out << '[' << (lower ? std::to_string(*lower) : "?") << ','
      << (upper ? std::to_string(*upper) : "?") << ']';
  return out.str();
}

const SwanDegree& SwanReport::at(int n) const {
  for (const SwanDegree& d : degrees) {
    if (d.n == n) return d;
  }
  throw InvalidArgument("degree " + std::to_string(n) + " is not in the Swan report");
}

std::int64_t compute_en(std::span<const DimSeries> series, int n) {
  if (n < 1) throw InvalidArgument("e_n needs n >= 1");
  bool have_rational = false;
  std::int64_t best = 0;
  bool first = true;
  for (const DimSeries& s : series) {
    if (s.truncation() < n) {
      throw InvalidArgument("series over " + s.field.to_string() + " is truncated at degree " +
                            std::to_string(s.truncation()) + ", need " + std::to_string(n));
    }
    have_rational = have_rational || s.field.is_rational();
    // h^{n-1} - h^{n-2} + ... = alternating sum ending at n-1
    const std::int64_t value = checked_add(s[n], -checked_mul(2, alternating_sum(s.dims, n - 1)));
    best = first ? value : std::max(best, value);
    first = false;
  }
  if (!have_rational) throw InvalidArgument("e_n needs the rational series");
  return best;
}

std::vector<DimSeries> series_list(const GroupSpec& spec, int truncation,
                                   const OracleOptions& options) {
  std::vector<DimSeries> out;
  out.push_back(field_series(spec, Field::rational(), truncation, options));
  for (std::uint64_t p : prime_factors(spec.order())) {
    out.push_back(field_series(spec, Field::mod(p), truncation, options));
  }
  return out;
}

std::int64_t mun_pgroup(const DimSeries& series, int n) {
  if (series.field.is_rational()) throw InvalidArgument("mun_pgroup needs a mod-p series");
  if (n < 0) throw InvalidArgument("mun_pgroup needs n >= 0");
  if (series.truncation() < n) {
    throw InvalidArgument("series truncated at degree " + std::to_string(series.truncation()) +
                          ", need " + std::to_string(n));
  }
  return std::max(alternating_sum(series.dims, n), swan_floor(n));
}

MuResult compute_mun(const GroupSpec& spec, int n, const OracleOptions& options) {
  if (n < 1) throw InvalidArgument("mu_n needs n >= 1");
  if (n == 1) return mu_from_metadata_degree_one(spec);

  const std::optional<int> period = spec.period();
  const bool below_period = period && (n + 1) % *period == 0;

  MuResult r;
  std::optional<std::int64_t> mu;
  const std::uint64_t order = spec.order();
  const std::optional<std::uint64_t> prime = spec.pgroup_prime();

  const bool never_exceptional =
      std::holds_alternative<family::Cyclic>(spec.family()) || prime.has_value();
  if (order == 1) {
    mu = n % 2 == 0 ? 1 : -1;
    r.notes.push_back("trivial group: mu_n = (-1)^n");
  } else if (std::holds_alternative<family::Cyclic>(spec.family())) {
    mu = swan_floor(n);
    r.notes.push_back("cyclic group: periodic free resolution of period 2");
  } else if (prime) {
    mu = mun_pgroup(field_series(spec, Field::mod(*prime), n, options), n);
    r.notes.push_back("p-group: alternating sum of mod-" + std::to_string(*prime) +
                      " cohomology");
  } else if (is_semidirect_family(spec)) {
    const auto data = *spec.semidirect_data();
    mu = mun_semidirect(data.n1, data.p, n);
    r.notes.push_back("one-dimensional characters of the cyclic complement");
  } else if (period && ((n + 2) % *period == 0)) {
    mu = 1;
    r.notes.push_back("period divides n+2");
  } else if (below_period) {
    // Only mu' = 0 is forced; mu itself depends on exceptionality.
    r.mu_prime = MuValue::exactly(0);
    r.notes.push_back("period divides n+1");
    const std::optional<bool> exc = spec.exceptional();
    if (exc && *exc) {
      r.mu = MuValue::exactly(1);
      r.exceptional = Exceptional::kDeclared;
    } else if (exc) {
      r.mu = MuValue::exactly(0);
    } else {
      r.mu = MuValue{0, 1};
      r.exceptional = Exceptional::kUnknown;
    }
    return r;
  } else if (std::holds_alternative<family::Table>(spec.family())) {
    throw Unsupported("table group of order " + std::to_string(order) +
                      " is not a p-group; mu_n needs an explicit list of simple modules");
  } else {
    throw Unsupported("no mu_n path for " + spec.to_string() + " in degree " +
                      std::to_string(n));
  }

  r.mu = MuValue::exactly(*mu);
  r.mu_prime = r.mu;
  if (below_period && n >= 3) {
    const std::optional<bool> exc = spec.exceptional();
    if (never_exceptional) {
      if (exc && *exc) {
        throw InvalidArgument("cyclic groups and p-groups have no exceptional degrees: " +
                              spec.to_string());
      }
    } else if (exc && *exc) {
      r.mu = MuValue::exactly(1);
      r.mu_prime = MuValue::exactly(0);
      r.exceptional = Exceptional::kDeclared;
      r.notes.push_back("declared exceptional: mu_n = 1, mu'_n = 0");
    } else if (!exc) {
      r.exceptional = Exceptional::kUnknown;
      r.notes.push_back("period divides n+1 and exceptionality is not declared");
    }
  }
  return r;
}

std::int64_t mun_from_modules(const ConcreteGroup& group, std::span<const FpModule> modules,
                              int n, const OracleOptions& options) {
  if (n < 0) throw InvalidArgument("mu_n needs n >= 0");
  if (modules.empty()) throw InvalidArgument("mun_from_modules needs at least one module");
  std::optional<std::int64_t> best;
  for (const FpModule& m : modules) {
    const auto h = cochain_cohomology_dims(group, m, n, options);
    const std::int64_t value =
        ceil_div(alternating_sum(h, n), static_cast<std::int64_t>(m.dim()));
    best = best ? std::max(*best, value) : value;
  }
  if (group.order() > 1) best = std::max(*best, swan_floor(n));
  return *best;
}

SwanReport compute_swan_report(const GroupSpec& spec, int n_max, const OracleOptions& options) {
  if (n_max < 1) throw InvalidArgument("Swan report needs n_max >= 1");
  SwanReport report;
  report.group = spec.to_string();
  // Closed forms are cheap, so keep a margin; the oracle only goes as far as needed.
  const bool table = std::holds_alternative<family::Table>(spec.family());
  const std::vector<DimSeries> series =
      series_list(spec, table ? n_max : 2 * n_max + 1, options);
  for (int n = 1; n <= n_max; ++n) {
    SwanDegree deg;
    deg.n = n;
    deg.e_n = compute_en(series, n);
    try {
      MuResult mu = compute_mun(spec, n, options);
      deg.mu = mu.mu;
      deg.mu_prime = mu.mu_prime;
      deg.exceptional = mu.exceptional;
      deg.notes = std::move(mu.notes);
    } catch (const MissingMetadata& e) {
      deg.notes.push_back(e.what());
    } catch (const Unsupported& e) {
      deg.notes.push_back(e.what());
    }
    report.degrees.push_back(std::move(deg));
  }
  return report;
}

}  // namespace qbounds
