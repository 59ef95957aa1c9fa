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
// The reproduce command: each row recomputes one reference value through the
// library and compares it with the value derived by hand.

#include <functional>
#include <sstream>

#include "qbounds/arith.h"
#include "qbounds/character_algebra.h"
#include "qbounds/error.h"
#include "qbounds/group_spec.h"
#include "qbounds/q_bounds.h"
#include "qbounds/swan_invariants.h"
#include "qbounds_cli/commands.h"

namespace qbounds::cli {
namespace {

using Poly = std::function<std::int64_t(std::int64_t)>;

class Rows {
 public:
  void add(const std::string& section, const std::string& label, const std::string& expected,
           const std::function<std::string()>& actual) {
    std::string got;
    try {
      got = actual();
    } catch (const std::exception& e) {
      got = std::string("error: ") + e.what();
    }
    rows_.push_back(ReproRow{section, label, expected, got, got == expected});
  }
  void add(const std::string& section, const std::string& label, std::int64_t expected,
           const std::function<std::int64_t()>& actual) {
    add(section, label, std::to_string(expected), [&] { return std::to_string(actual()); });
  }
  std::vector<ReproRow> take() { return std::move(rows_); }

 private:
  std::vector<ReproRow> rows_;
};

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

std::string interval(const QBoundReport& b) {
  return "[" + std::to_string(b.lower) + "," + (b.upper ? std::to_string(*b.upper) : "?") + "]";
}

CharMultiset isotypic(int k, std::uint64_t a, std::uint64_t m) {
  CharMultiset n(m);
  n.add(a, k);
  return n;
}

QBoundReport bounds_for(const std::string& text, int n) {
  const GroupSpec spec = parse_spec(text);
  return q_bounds(spec, compute_swan_report(spec, n), n);
}

std::int64_t mu_exact(const std::string& text, int n) {
  const MuResult r = compute_mun(parse_spec(text), n);
  if (!r.mu.is_exact()) throw Error("mu_" + std::to_string(n) + " is not exact");
  return *r.mu.lower;
}

// Unfloored alternating sum for E(p,k), which the closed-form polynomials use.
std::int64_t raw_mu(std::uint64_t p, int k, int n) {
  const DimSeries s = series_elementary_abelian(p, k, Field::mod(p), n);
  std::int64_t total = 0;
  for (int i = 0; i <= n; ++i) total += ((n - i) % 2 == 0 ? 1 : -1) * s[i];
  return total;
}

void groupspec_rows(Rows& rows) {
  const ConcreteGroup a4 = realize(parse_spec("J(2)"), 64);
  rows.add("groupspec", "realize(J(2)) has order 12", 12, [&] { return a4.order(); });
  rows.add("groupspec", "realize(J(2)) is nonabelian", "true",
           [&] { return a4.is_abelian() ? "false" : "true"; });
  rows.add("groupspec", "element orders of realize(J(2))", "1,2,2,2,3,3,3,3,3,3,3,3", [&] {
    std::vector<std::int64_t> census;
    for (auto o : a4.order_census()) census.push_back(o);
    return join(census);
  });
  rows.add("groupspec", "frobenius_exponents(2)", "{1,2} mod 3",
           [] { return frobenius_exponents(2).to_string(); });
  rows.add("groupspec", "frobenius_exponents(3)", "{1,2,4} mod 7",
           [] { return frobenius_exponents(3).to_string(); });
}

void character_rows(Rows& rows) {
  const CharMultiset j2 = frobenius_exponents(2);
  rows.add("character_algebra", "lambda2({1,2} mod 3)", "{0} mod 3",
           [&] { return lambda2(j2).to_string(); });
  rows.add("character_algebra", "bockstein_image({1,2} mod 3, 2)", "{1,2} mod 3",
           [&] { return bockstein_image(j2, 2).to_string(); });
  rows.add("character_algebra", "bockstein_image({1,2,4} mod 7, 5) is the identity", "{1,2,4} mod 7",
           [] { return bockstein_image(frobenius_exponents(3), 5).to_string(); });
  for (int k = 2; k <= 6; ++k) {
    const std::string ks = std::to_string(k);
    rows.add("character_algebra", "euler_local, isotypic a=1 mod 4, p=5, beta=m-2a, k=" + ks,
             k * (k - 1) / 2, [&] { return euler_local(isotypic(k, 1, 4), 5, 2); });
    rows.add("character_algebra", "euler_local, isotypic a=1 mod 2, p=5, beta=0, k=" + ks,
             k * (k - 1) / 2 + 1, [&] { return euler_local(isotypic(k, 1, 2), 5, 0); });
    rows.add("character_algebra", "mu2_semidirect, isotypic 2a != 0, k=" + ks, k * (k - 1) / 2,
             [&] { return mu2_semidirect(isotypic(k, 1, 4), 5); });
    rows.add("character_algebra", "e2_semidirect, isotypic 2a != 0, k=" + ks, 2,
             [&] { return e2_semidirect(isotypic(k, 1, 4), 5); });
    rows.add("character_algebra", "e2_semidirect, isotypic 2a = 0, k=" + ks, k * (k - 1) / 2 + 2,
             [&] { return e2_semidirect(isotypic(k, 1, 2), 5); });
  }
  rows.add("character_algebra", "mu2_semidirect(J_2)", 2, [&] { return mu2_semidirect(j2, 2); });
  rows.add("character_algebra", "e2_semidirect(J_2)", 3, [&] { return e2_semidirect(j2, 2); });
  for (int k = 3; k <= 10; ++k) {
    rows.add("character_algebra", "mu2_semidirect(J_" + std::to_string(k) + ")", 1,
             [&] { return mu2_semidirect(frobenius_exponents(k), 2); });
  }
  rows.add("character_algebra", "mun_semidirect(J_2, 4)", 1,
           [&] { return mun_semidirect(j2, 2, 4); });
  {
    const CharMultiset n = isotypic(3, 1, 4);
    rows.add("character_algebra", "graded_character degree 2, p odd = bockstein + lambda2",
             direct_sum(bockstein_image(n, 5), lambda2(n)).to_string(),
             [&] { return graded_character(n, 5, 2).to_string(); });
  }
  for (int k = 3; k <= 10; ++k) {
    const CharMultiset n = frobenius_exponents(k);
    const std::uint64_t big = (std::uint64_t{1} << k) - 1;
    std::vector<std::int64_t> expected;
    for (std::uint64_t r = 1; r < big; ++r) {
      bool hit = false;
      for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
          hit = hit || r == big - (std::uint64_t{1} << i) - (std::uint64_t{1} << j);
        }
      }
      if (hit) expected.push_back(static_cast<std::int64_t>(r));
    }
    rows.add("character_algebra",
             "J_" + std::to_string(k) + ": nonzero euler_local at r = N - 2^i - 2^j, value 1",
             join(expected), [&] {
               std::vector<std::int64_t> got;
               for (std::uint64_t r = 1; r < big; ++r) {
                 const std::int64_t v = euler_local(n, 2, r);
                 if (v == 1) got.push_back(static_cast<std::int64_t>(r));
                 if (v != 0 && v != 1) throw Error("value " + std::to_string(v) + " at " +
                                                   std::to_string(r));
               }
               return join(got);
             });
  }
}

void swan_rows(Rows& rows) {
  const Poly q4_lo = [](std::int64_t k) { return (k * k - 3 * k + 4) / 2; };
  const Poly q4_hi = [](std::int64_t k) { return k * k - k + 2; };
  const Poly q6_lo = [](std::int64_t k) { return (k * k * k - 3 * k * k + 8 * k - 12) / 6; };
  const Poly q6_hi = [](std::int64_t k) { return (k * k * k + 5 * k - 6) / 3; };
  const Poly q8_lo = [](std::int64_t k) {
    return (k * k * k * k - 2 * k * k * k + 11 * k * k - 34 * k + 48) / 24;
  };
  const Poly q8_hi = [](std::int64_t k) {
    return (k * k * k * k + 2 * k * k * k + 11 * k * k - 14 * k + 24) / 12;
  };
  struct Line {
    const char* label;
    int n;
    bool upper;
    Poly poly;
  };
  const Line lines[] = {{"q_4 lower polynomial (k^2-3k+4)/2", 2, false, q4_lo},
                        {"q_4 upper polynomial k^2-k+2", 2, true, q4_hi},
                        {"q_6 lower polynomial (k^3-3k^2+8k-12)/6", 3, false, q6_lo},
                        {"q_6 upper polynomial (k^3+5k-6)/3", 3, true, q6_hi},
                        {"q_8 lower polynomial (k^4-2k^3+11k^2-34k+48)/24", 4, false, q8_lo},
                        {"q_8 upper polynomial (k^4+2k^3+11k^2-14k+24)/12", 4, true, q8_hi}};
  for (std::uint64_t p : {3u, 5u}) {
    for (const Line& line : lines) {
      std::vector<std::int64_t> expected;
      for (int k = 1; k <= 8; ++k) expected.push_back(line.poly(k));
      rows.add("swan_invariants",
               std::string(line.label) + ", E(" + std::to_string(p) + ",k), k=1..8",
               join(expected), [&] {
                 std::vector<std::int64_t> got;
                 for (int k = 1; k <= 8; ++k) {
                   got.push_back(line.upper ? 2 * raw_mu(p, k, line.n)
                                            : raw_mu(p, k, line.n) - raw_mu(p, k, line.n - 1));
                 }
                 return join(got);
               });
    }
    std::vector<std::int64_t> e2_expected, mu2_expected;
    for (int k = 1; k <= 8; ++k) {
      e2_expected.push_back(std::max<std::int64_t>(2, q4_lo(k)));
      mu2_expected.push_back((k * k - k + 2) / 2);
    }
    const std::string ps = std::to_string(p);
    rows.add("swan_invariants", "e_2(E(" + ps + ",k)) = max(2, (k^2-3k+4)/2), k=1..8",
             join(e2_expected), [&] {
               std::vector<std::int64_t> got;
               for (int k = 1; k <= 8; ++k) {
                 const GroupSpec spec(family::ElementaryAbelian{p, k});
                 got.push_back(compute_en(series_list(spec, 2), 2));
               }
               return join(got);
             });
    rows.add("swan_invariants", "mu_2(E(" + ps + ",k)) = (k^2-k+2)/2, k=1..8", join(mu2_expected),
             [&] {
               std::vector<std::int64_t> got;
               for (int k = 1; k <= 8; ++k) {
                 got.push_back(mu_exact("E(" + ps + "," + std::to_string(k) + ")", 2));
               }
               return join(got);
             });
  }
  rows.add("swan_invariants", "e_2(A_4)", 3,
           [] { return compute_en(series_list(parse_spec("J(2)"), 2), 2); });
  rows.add("swan_invariants", "mu_2(J_2)", 2, [] { return mu_exact("J(2)", 2); });
  rows.add("swan_invariants", "mu_4(A_4)", 1, [] { return mu_exact("J(2)", 4); });
  for (int k = 3; k <= 10; ++k) {
    rows.add("swan_invariants", "mu_2(J_" + std::to_string(k) + ")", 1,
             [&] { return mu_exact("J(" + std::to_string(k) + ")", 2); });
  }
  for (int k = 2; k <= 6; ++k) {
    rows.add("swan_invariants", "mu_1(U_" + std::to_string(k) + ") = k (solvable, d = k+1)", k,
             [&] { return mu_exact("U(5," + std::to_string(k) + ",1,4)", 1); });
  }
}

void bounds_rows(Rows& rows) {
  rows.add("q_bounds", "E_3, n=2 interval", "[2,8]", [] { return interval(bounds_for("E(3,3)", 2)); });
  rows.add("q_bounds", "E_3, n=4: q_8 >= 3, not a rational homology 8-sphere group", "3,impossible",
           [] {
             const QBoundReport b = bounds_for("E(3,3)", 4);
             return std::to_string(b.lower) + "," + to_string(b.verdict);
           });
  rows.add("q_bounds", "A_4, n=2 interval", "[3,4]", [] { return interval(bounds_for("J(2)", 2)); });
  for (int k = 2; k <= 6; ++k) {
    const std::string ks = std::to_string(k);
    rows.add("q_bounds", "U_" + ks + " with 2a != 0: [max(2, k(k-3)/2), k(k-1)]",
             "[" + std::to_string(std::max(2, k * (k - 3) / 2)) + "," + std::to_string(k * (k - 1)) +
                 "]",
             [&] { return interval(bounds_for("U(5," + ks + ",1,4)", 2)); });
    rows.add("q_bounds", "U_" + ks + " with 2a = 0: lower = k(k-1)/2 + 2", k * (k - 1) / 2 + 2,
             [&] { return bounds_for("U(5," + ks + ",1,2)", 2).lower; });
  }
  struct Exact {
    const char* spec;
    int n;
    std::int64_t value;
  };
  const Exact exact[] = {{"C(2)", 2, 2}, {"C(2)", 3, 0}, {"C(5)", 2, 2},  {"C(6)", 3, 0},
                         {"Q(8)", 2, 2}, {"Q(8)", 3, 0}, {"U(7,1,1,3)", 4, 2},
                         {"U(7,1,1,3)", 5, 0}};
  for (const Exact& e : exact) {
    rows.add("q_bounds",
             std::string("periodic exact value: ") + e.spec + ", n=" + std::to_string(e.n),
             e.value, [&] {
               const QBoundReport b = bounds_for(e.spec, e.n);
               if (!b.exact) throw Error("no exact value");
               return *b.exact;
             });
  }
  struct Case {
    std::string spec;
    Verdict verdict;
  };
  const std::vector<Case> cases = {
      {"E(2,4)", Verdict::kImpossible},     {"E(3,4)", Verdict::kImpossible},
      {"E(5,4)", Verdict::kImpossible},     {"U(5,5,1,4)", Verdict::kImpossible},
      {"U(5,2,1,2)", Verdict::kImpossible}, {"U(5,4,1,2)", Verdict::kImpossible},
      {"U(5,2,1,4)", Verdict::kRealizable}, {"J(3)", Verdict::kRealizable},
      {"J(4)", Verdict::kRealizable},       {"J(6)", Verdict::kRealizable}};
  for (const Case& c : cases) {
    rows.add("q_bounds", "rational homology 4-sphere verdict for " + c.spec, to_string(c.verdict),
             [&] {
               const GroupSpec spec = parse_spec(c.spec);
               return to_string(qs4_verdict(spec, compute_swan_report(spec, 2)).verdict);
             });
  }
  rows.add("q_bounds", "euler_sign_check(3, 2)", "false",
           [] { return euler_sign_check(3, 2) ? "true" : "false"; });
  rows.add("q_bounds", "euler_sign_check(3, 0)", "true",
           [] { return euler_sign_check(3, 0) ? "true" : "false"; });
  for (const char* name : {"A4", "A5"}) {
    rows.add("q_bounds", std::string("annotation q_4(") + name + ")", 4, [&] {
      const auto a = annotation_for_name(name, 2);
      if (!a || !a->q_value) throw Error("no annotation");
      return *a->q_value;
    });
  }
}

void cli_rows(Rows& rows) {
  const OracleOptions options = default_oracle_options();
  rows.add("cli", "bounds E(3,3) --n 4", "3,impossible", [&] {
    const QBoundReport& b = cmd_bounds("E(3,3)", 4, options).bounds.at(0);
    return std::to_string(b.lower) + "," + to_string(b.verdict);
  });
  rows.add("cli", "bounds J(4) --n 2", "realizable",
           [&] { return to_string(cmd_bounds("J(4)", 2, options).bounds.at(0).verdict); });
  rows.add("cli", "bounds E(5,4) --n 2", "impossible",
           [&] { return to_string(cmd_bounds("E(5,4)", 2, options).bounds.at(0).verdict); });
}

}  // namespace

Report cmd_reproduce() {
  Rows rows;
  groupspec_rows(rows);
  character_rows(rows);
  swan_rows(rows);
  bounds_rows(rows);
  cli_rows(rows);
  Report r;
  r.command = "reproduce";
  r.reproduce = rows.take();
  return r;
}

}  // namespace qbounds::cli
