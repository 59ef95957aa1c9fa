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
#include "qbounds/q_bounds.h"

#include <algorithm>
#include <cctype>
#include <variant>

#include "qbounds/arith.h"
#include "qbounds/error.h"

namespace qbounds {
namespace {

bool is_abelian(const GroupSpec& spec) {
  const auto& f = spec.family();
  if (std::holds_alternative<family::Trivial>(f) || std::holds_alternative<family::Cyclic>(f) ||
      std::holds_alternative<family::ElementaryAbelian>(f)) {
    return true;
  }
  if (const auto* pr = std::get_if<family::Product>(&f)) {
    return is_abelian(*pr->left) && is_abelian(*pr->right);
  }
  if (const auto* t = std::get_if<family::Table>(&f)) return t->group->is_abelian();
  return false;
}

// Exponents of the complement character when every one is doubled to a
// nonzero residue (the q^2 action has no fixed vector).
bool doubled_exponents_nonzero(const CharMultiset& n1) {
  for (const auto& [r, mult] : n1.entries()) {
    if (mult > 0 && (2 * r) % n1.modulus() == 0) return false;
  }
  return true;
}

// A dihedral group D<order> with 4 | order contains a Klein four-group.
bool is_noncyclic_dihedral_name(const std::string& name) {
  if (name.size() < 2 || name[0] != 'D') return false;
  if (!std::all_of(name.begin() + 1, name.end(), [](unsigned char c) { return std::isdigit(c); })) {
    return false;
  }
  if (name.size() > 10) return false;
  const long order = std::stol(name.substr(1));
  return order >= 4 && order % 4 == 0;
}

MuValue mu_prime_or_rethrow(const GroupSpec& spec, const SwanReport& report, int n) {
  const SwanDegree& deg = report.at(n);
  if (deg.mu_prime.lower || deg.mu_prime.upper) return deg.mu_prime;
  // Surfaces the MissingMetadata / Unsupported error behind the gap.
  return compute_mun(spec, n).mu_prime;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kImpossible:
      return "impossible";
    case Verdict::kRealizable:
      return "realizable";
    case Verdict::kOpen:
      return "open";
  }
  return "?";
}

std::pair<std::int64_t, std::int64_t> swan_interval(std::int64_t e_n, std::int64_t mu_prime_n,
                                                       std::int64_t mu_prime_nm1, int n) {
  if (n < 1) throw InvalidArgument("q_{2n} needs n >= 1");
  const std::int64_t lower = std::max(e_n, checked_add(mu_prime_n, -mu_prime_nm1));
  return {lower, checked_mul(2, mu_prime_n)};
}

std::optional<std::int64_t> periodic_exact(int period, int n) {
  if (period <= 0 || period % 2 != 0) {
    throw InvalidArgument("cohomological period must be positive and even, got " +
                          std::to_string(period));
  }
  if ((n + 2) % period == 0) return 2;
  if ((n + 1) % period == 0) return 0;
  return std::nullopt;
}

std::int64_t subgroup_refine(std::int64_t lower, std::span<const SubgroupBound> subgroups,
                             int n) {
  if (n < 1) throw InvalidArgument("q_{2n} needs n >= 1");
  for (const SubgroupBound& h : subgroups) {
    if (h.index <= 0) {
      throw InvalidArgument("subgroup index must be positive, got " + std::to_string(h.index));
    }
    lower = std::max(lower, ceil_div(std::max(h.e_n, h.mu_prime_diff), h.index));
  }
  return lower;
}

bool euler_sign_check(int n, std::int64_t chi) { return (chi > 0) == (n % 2 == 0); }

std::optional<Annotation> annotation_for_name(const std::string& name, int n) {
  if (n != 2) return std::nullopt;
  if (name == "A4" || name == "A5") {
    return Annotation{name, 4, 2,
                      "q_4 = 4 from a Tate cohomology argument (not computed here); "
                      "mu_2 = 2 as a non-periodic subgroup of SO(3)"};
  }
  if (name == "S4" || is_noncyclic_dihedral_name(name)) {
    return Annotation{name, std::nullopt, 2, "mu_2 = 2 as a non-periodic subgroup of SO(3)"};
  }
  return std::nullopt;
}

std::optional<Annotation> annotation_for(const GroupSpec& spec, int n) {
  const std::optional<std::string> name = spec.known_name();
  if (!name) return std::nullopt;
  return annotation_for_name(*name, n);
}

QBoundReport q_bounds(const GroupSpec& spec, const SwanReport& report, int n,
                      std::span<const SubgroupBound> subgroups) {
  if (n < 2) throw InvalidArgument("bounds need n >= 2");
  QBoundReport out;
  out.group = spec.to_string();
  out.n = n;
  out.e_n = report.at(n).e_n;
  out.mu_prime_n = mu_prime_or_rethrow(spec, report, n);
  out.mu_prime_nm1 = mu_prime_or_rethrow(spec, report, n - 1);
  if (!out.mu_prime_nm1.upper) {
    throw MissingMetadata("d", "no upper bound for mu'_" + std::to_string(n - 1));
  }

  const bool trivial = spec.order() == 1;
  std::vector<std::string>& cites = out.citations;

  out.lower = out.e_n;
  if (out.mu_prime_n.lower) {
    out.lower = std::max(out.lower, checked_add(*out.mu_prime_n.lower, -*out.mu_prime_nm1.upper));
  }
  cites.push_back("swan-lower-bound");
  if (out.mu_prime_n.upper) {
    out.upper = checked_mul(2, *out.mu_prime_n.upper);
    cites.push_back("two-mu-upper-bound");
  }
  if (!subgroups.empty()) {
    const std::int64_t refined = subgroup_refine(out.lower, subgroups, n);
    if (refined > out.lower) {
      out.lower = refined;
      cites.push_back("subgroup-refinement");
    }
  }
  if (n % 2 == 1 && !trivial && out.lower < 0) {
    out.lower = 0;
    cites.push_back("euler-sign");
  }
  if (out.upper && out.lower > *out.upper) {
    throw Error("inconsistent bounds for " + out.group + ": lower " + std::to_string(out.lower) +
                " exceeds upper " + std::to_string(*out.upper));
  }

  if (const std::optional<int> period = spec.period()) {
    out.exact = periodic_exact(*period, n);
    if (out.exact) {
      if (*out.exact < out.lower || (out.upper && *out.exact > *out.upper)) {
        throw Error("declared period " + std::to_string(*period) +
                    " contradicts the computed interval for " + out.group);
      }
      cites.push_back("periodic-exact");
    }
  }

  const std::int64_t target = n % 2 == 0 ? 2 : -2;
  const std::string sphere = "rational homology " + std::to_string(2 * n) + "-sphere";
  if (out.lower > target) {
    out.verdict = Verdict::kImpossible;
    out.reason = "q_" + std::to_string(2 * n) + " >= " + std::to_string(out.lower) + " > " +
                 std::to_string(target) + ": not the fundamental group of a " + sphere;
  } else if ((out.exact && *out.exact == target) || (out.upper && *out.upper == target)) {
    out.verdict = Verdict::kRealizable;
    out.reason = "q_" + std::to_string(2 * n) + " = " + std::to_string(target) +
                 ": fundamental group of a " + sphere;
  } else {
    out.verdict = Verdict::kOpen;
    out.reason = "q_" + std::to_string(2 * n) + " in [" + std::to_string(out.lower) + "," +
                 (out.upper ? std::to_string(*out.upper) : "?") + "]";
  }

  if (n == 2) {
    if (out.verdict == Verdict::kImpossible) {
      const std::optional<int> d = spec.generators();
      if (is_abelian(spec) && d && *d > 3) cites.push_back("abelian-rank-obstruction");
      if (const auto data = spec.semidirect_data()) {
        const std::int64_t k = data->n1.dim();
        const bool twisted = std::holds_alternative<family::SemidirectIsotypic>(spec.family()) ||
                             std::holds_alternative<family::Semidirect>(spec.family());
        if (twisted && doubled_exponents_nonzero(data->n1) && k > 4) {
          cites.push_back("isotypic-twisted-obstruction");
        }
        const auto* iso = std::get_if<family::SemidirectIsotypic>(&spec.family());
        if (iso && (2 * iso->a) % iso->m == 0 && iso->m > 1 && k > 1) {
          cites.push_back("quadratic-character-obstruction");
        }
      }
    } else if (out.verdict == Verdict::kRealizable && out.upper && *out.upper == target) {
      cites.push_back("mu2-one-realization");
    }
  }
  out.annotation = annotation_for(spec, n);
  return out;
}

QBoundReport qs4_verdict(const GroupSpec& spec, const SwanReport& report) {
  return q_bounds(spec, report, 2);
}

}  // namespace qbounds
