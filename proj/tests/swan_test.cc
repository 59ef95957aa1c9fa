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
#include <gtest/gtest.h>

#include <vector>

#include "qbounds/arith.h"
#include "qbounds/cohomology_series.h"
#include "qbounds/error.h"
#include "qbounds/group_spec.h"
#include "qbounds/swan_invariants.h"
#include "test_support.h"

namespace qbounds {
namespace {

std::int64_t floor_of(int n) { return n % 2 == 0 ? 1 : 0; }

std::int64_t alternating(const DimSeries& s, int n) {
  std::int64_t total = 0;
  for (int i = 0; i <= n; ++i) total += ((n - i) % 2 == 0 ? 1 : -1) * s[i];
  return total;
}

TEST(ComputeEn, ElementaryAbelian) {
  const auto series = series_list(parse_spec("E(2,2)"), 5);
  ASSERT_EQ(series.size(), 2u);
  EXPECT_TRUE(series[0].field.is_rational());
  // Q: 0 - 2(0 - 1) = 2 beats F_2: 3 - 2(2 - 1) = 1.
  EXPECT_EQ(compute_en(series, 2), 2);
  // Q: -2, F_2: 2 - 2 = 0.
  EXPECT_EQ(compute_en(series, 1), 0);
  // F_2: 4 - 2(3 - 2 + 1) = 0 beats Q: 0 - 2(0 - 0 + 1) = -2.
  EXPECT_EQ(compute_en(series, 3), 0);
}

TEST(ComputeEn, Errors) {
  const DimSeries f2 = series_elementary_abelian(2, 2, Field::mod(2), 4);
  const DimSeries q = series_elementary_abelian(2, 2, Field::rational(), 4);
  const std::vector<DimSeries> only_mod{f2};
  EXPECT_THROW(compute_en(only_mod, 2), InvalidArgument);
  const std::vector<DimSeries> both{q, f2};
  EXPECT_THROW(compute_en(both, 5), InvalidArgument);
  EXPECT_THROW(compute_en(both, 0), InvalidArgument);
}

TEST(SeriesList, FieldsFollowPrimeFactors) {
  const auto s = series_list(parse_spec("C(30)"), 3);
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s[1].field.p, 2u);
  EXPECT_EQ(s[2].field.p, 3u);
  EXPECT_EQ(s[3].field.p, 5u);
  EXPECT_EQ(series_list(parse_spec("1"), 3).size(), 1u);
}

TEST(SeriesList, TableUsesOracle) {
  const std::string path = std::string(QBOUNDS_TEST_DATA_DIR) + "/s3.txt";
  const auto s = series_list(parse_spec("Table(" + path + ")"), 3);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].dims, (std::vector<std::int64_t>{1, 0, 0, 0}));
  EXPECT_EQ(s[1].dims, (std::vector<std::int64_t>{1, 1, 1, 1}));
  EXPECT_EQ(s[2].dims, (std::vector<std::int64_t>{1, 0, 0, 1}));
}

TEST(MunPgroup, IsFlooredAlternatingSum) {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    for (int k = 1; k <= 5; ++k) {
      const DimSeries s = series_elementary_abelian(p, k, Field::mod(p), 8);
      for (int n = 0; n <= 8; ++n) {
        const std::int64_t raw = alternating(s, n);
        EXPECT_EQ(mun_pgroup(s, n), std::max(raw, floor_of(n)));
        if (n >= 1) {
          const MuResult r =
              compute_mun(parse_spec("E(" + std::to_string(p) + "," + std::to_string(k) + ")"), n);
          if (n >= 2) EXPECT_EQ(r.mu, MuValue::exactly(mun_pgroup(s, n)));
        }
      }
    }
  }
  EXPECT_THROW(mun_pgroup(series_cyclic(4, Field::rational(), 3), 2), InvalidArgument);
  EXPECT_THROW(mun_pgroup(series_cyclic(4, Field::mod(2), 3), 4), InvalidArgument);
}

TEST(MunPgroup, EnTelescopesForPGroups) {
  for (const char* text : {"E(2,2)", "E(2,4)", "E(3,3)", "E(5,2)", "C(8)", "C(27)", "Q(8)",
                           "Q(16)", "Prod(C(2),C(4))", "Prod(E(3,2),C(9))"}) {
    const GroupSpec spec = parse_spec(text);
    const auto series = series_list(spec, 9);
    ASSERT_EQ(series.size(), 2u);
    const DimSeries& modp = series[1];
    for (int n = 1; n <= 8; ++n) {
      const std::int64_t rational = n % 2 == 0 ? 2 : -2;
      const std::int64_t raw = alternating(modp, n);
      const std::int64_t raw_prev = alternating(modp, n - 1);
      EXPECT_EQ(compute_en(series, n), std::max(raw - raw_prev, rational)) << text << " n=" << n;
      // With the floors inactive the same holds for the clamped values.
      if (mun_pgroup(modp, n) == raw && mun_pgroup(modp, n - 1) == raw_prev) {
        EXPECT_EQ(compute_en(series, n),
                  std::max(mun_pgroup(modp, n) - mun_pgroup(modp, n - 1), rational));
      }
    }
  }
}

TEST(MunPgroup, SmallKMeetsFloor) {
  // E(p,1) is cyclic: both paths give the floor.
  for (int n = 2; n <= 7; ++n) {
    EXPECT_EQ(compute_mun(parse_spec("E(3,1)"), n).mu, compute_mun(parse_spec("C(3)"), n).mu);
    EXPECT_EQ(compute_mun(parse_spec("C(3)"), n).mu, MuValue::exactly(floor_of(n)));
  }
}

TEST(ComputeMun, DegreeOneFromMetadata) {
  EXPECT_EQ(compute_mun(parse_spec("C(6)"), 1).mu, MuValue::exactly(0));
  EXPECT_EQ(compute_mun(parse_spec("E(2,3)"), 1).mu, MuValue::exactly(2));
  EXPECT_EQ(compute_mun(parse_spec("J(3)"), 1).mu, MuValue::exactly(1));
  const std::string a5 = "Table(" + std::string(QBOUNDS_TEST_DATA_DIR) + "/a5.txt)";
  const MuResult nonsolvable = compute_mun(parse_spec(a5 + "[d=2,solvable=false]"), 1);
  EXPECT_EQ(nonsolvable.mu, (MuValue{0, 1}));
  EXPECT_FALSE(nonsolvable.notes.empty());
  EXPECT_EQ(compute_mun(parse_spec(a5 + "[d=2]"), 1).mu, (MuValue{0, 1}));
  EXPECT_THROW(compute_mun(parse_spec(a5), 1), MissingMetadata);
  EXPECT_THROW(compute_mun(parse_spec("C(6)"), 0), InvalidArgument);
}

TEST(ComputeMun, TrivialGroup) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(compute_mun(parse_spec("1"), n).mu, MuValue::exactly(n % 2 == 0 ? 1 : -1));
  }
}

TEST(ComputeMun, PeriodPaths) {
  // Q(12) = C3 x| C4 has period 4 and no closed form beyond the period.
  const MuResult two = compute_mun(parse_spec("Q(12)"), 2);
  EXPECT_EQ(two.mu, MuValue::exactly(1));
  EXPECT_EQ(two.exceptional, Exceptional::kNo);

  const MuResult undeclared = compute_mun(parse_spec("Q(12)"), 3);
  EXPECT_EQ(undeclared.mu, (MuValue{0, 1}));
  EXPECT_EQ(undeclared.mu_prime, MuValue::exactly(0));
  EXPECT_EQ(undeclared.exceptional, Exceptional::kUnknown);

  const MuResult declared = compute_mun(parse_spec("Q(12)[exceptional]"), 3);
  EXPECT_EQ(declared.mu, MuValue::exactly(1));
  EXPECT_EQ(declared.mu_prime, MuValue::exactly(0));
  EXPECT_EQ(declared.exceptional, Exceptional::kDeclared);

  const MuResult denied = compute_mun(parse_spec("Q(12)[exceptional=false]"), 3);
  EXPECT_EQ(denied.mu, MuValue::exactly(0));
  EXPECT_EQ(denied.mu_prime, MuValue::exactly(0));
  EXPECT_EQ(denied.exceptional, Exceptional::kNo);

  EXPECT_EQ(compute_mun(parse_spec("Q(12)"), 6).mu, MuValue::exactly(1));
  EXPECT_THROW(compute_mun(parse_spec("Q(12)"), 4), Unsupported);
}

TEST(ComputeMun, ExactPathWithDeclaredException) {
  // C7 x| C3 has period 6; degree 5 sits just below it.
  const MuResult unknown = compute_mun(parse_spec("U(7,1,1,3)"), 5);
  EXPECT_EQ(unknown.exceptional, Exceptional::kUnknown);
  EXPECT_EQ(unknown.mu, unknown.mu_prime);
  const MuResult declared = compute_mun(parse_spec("U(7,1,1,3)[exceptional]"), 5);
  EXPECT_EQ(declared.mu, MuValue::exactly(1));
  EXPECT_EQ(declared.mu_prime, MuValue::exactly(0));
  EXPECT_EQ(declared.exceptional, Exceptional::kDeclared);
  // The flag only matters just below a multiple of the period.
  EXPECT_EQ(compute_mun(parse_spec("U(7,1,1,3)[exceptional]"), 4).exceptional, Exceptional::kNo);
}

TEST(ComputeMun, CyclicAndPGroupsAreNeverExceptional) {
  for (const char* spec : {"C(6)", "Q(8)", "Q(16)", "C(2)"}) {
    for (int n = 3; n <= 7; n += 2) {
      const MuResult r = compute_mun(parse_spec(spec), n);
      EXPECT_EQ(r.exceptional, Exceptional::kNo) << spec << " n=" << n;
      EXPECT_EQ(r.mu, r.mu_prime);
    }
  }
  EXPECT_THROW(compute_mun(parse_spec("Q(8)[exceptional]"), 3), InvalidArgument);
}

TEST(ComputeMun, TableNonPGroupIsUnsupported) {
  const std::string s3 = "Table(" + std::string(QBOUNDS_TEST_DATA_DIR) + "/s3.txt)";
  EXPECT_THROW(compute_mun(parse_spec(s3), 2), Unsupported);
  const std::string q8 = "Table(" + std::string(QBOUNDS_TEST_DATA_DIR) + "/q8.txt)";
  for (int n = 2; n <= 3; ++n) {
    EXPECT_EQ(compute_mun(parse_spec(q8), n).mu, compute_mun(parse_spec("Q(8)"), n).mu);
  }
}

TEST(MunFromModules, SymmetricGroupMatchesCharacters) {
  const ConcreteGroup s3 = realize(parse_spec("U(3,1,1,2)"), 64);
  // Element x = 2v + c; x = 1 is the involution (0, 1).
  const auto h = qbounds::testing::subgroup(s3, {1});
  ASSERT_EQ(h.size(), 2u);
  std::vector<std::uint64_t> sign(s3.order());
  for (std::uint32_t x = 0; x < s3.order(); ++x) sign[x] = x % 2 == 1 ? 2 : 1;
  const std::vector<FpModule> simple{
      FpModule::trivial(s3, 2), qbounds::testing::augmentation_module(s3, h, 2),
      FpModule::trivial(s3, 3), FpModule::one_dimensional(s3, 3, sign)};
  for (int n = 2; n <= 4; ++n) {
    EXPECT_EQ(MuValue::exactly(mun_from_modules(s3, simple, n)),
              compute_mun(parse_spec("U(3,1,1,2)"), n).mu)
        << "n=" << n;
  }
  EXPECT_THROW(mun_from_modules(s3, std::vector<FpModule>{}, 2), InvalidArgument);
}

TEST(MunFromModules, PGroupNeedsOnlyTrivialModule) {
  for (const char* spec : {"E(2,2)", "Q(8)", "C(9)", "E(3,2)"}) {
    const GroupSpec g = parse_spec(spec);
    const ConcreteGroup c = realize(g, 64);
    const std::vector<FpModule> trivial{FpModule::trivial(c, *g.pgroup_prime())};
    for (int n = 2; n <= 3; ++n) {
      EXPECT_EQ(MuValue::exactly(mun_from_modules(c, trivial, n)), compute_mun(g, n).mu) << spec;
    }
  }
}

TEST(SwanReportTest, LayoutAndNotes) {
  const SwanReport r = compute_swan_report(parse_spec("Q(12)"), 4);
  ASSERT_EQ(r.degrees.size(), 4u);
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(r.at(n).n, n);
  EXPECT_THROW(r.at(5), InvalidArgument);
  EXPECT_EQ(r.at(4).mu, MuValue::unknown());
  EXPECT_FALSE(r.at(4).notes.empty());
  EXPECT_EQ(r.at(3).exceptional, Exceptional::kUnknown);
  EXPECT_THROW(compute_swan_report(parse_spec("C(2)"), 0), InvalidArgument);

  const SwanReport j2 = compute_swan_report(parse_spec("J(2)"), 4);
  EXPECT_EQ(j2.at(2).e_n, 3);
  EXPECT_EQ(j2.at(2).mu, MuValue::exactly(2));
  EXPECT_EQ(j2.at(4).mu, MuValue::exactly(1));
}

TEST(SwanReportTest, Invariants) {
  for (const char* spec : {"C(5)", "E(2,3)", "E(3,3)", "J(3)", "U(5,3,1,4)", "U(5,2,1,2)",
                           "Usd(7,3;1,2)", "Prod(C(2),C(4))", "Q(16)", "U(7,1,1,3)[exceptional]"}) {
    const SwanReport r = compute_swan_report(parse_spec(spec), 5);
    for (const SwanDegree& d : r.degrees) {
      if (d.n == 1 || !d.mu.lower) continue;
      EXPECT_GE(*d.mu.lower, floor_of(d.n)) << spec;
      EXPECT_LE(*d.mu_prime.upper, *d.mu.upper) << spec;
      if (d.exceptional == Exceptional::kDeclared) {
        EXPECT_EQ(d.n % 2, 1);
        EXPECT_GE(d.n, 3);
        EXPECT_EQ(d.mu, MuValue::exactly(1));
        EXPECT_EQ(d.mu_prime, MuValue::exactly(0));
      }
    }
  }
}

TEST(MuValueTest, Formatting) {
  EXPECT_EQ(MuValue::exactly(3).to_string(), "3");
  EXPECT_EQ((MuValue{0, 2}).to_string(), "[0,2]");
  EXPECT_EQ(MuValue::unknown().to_string(), "?");
  EXPECT_EQ(to_string(Exceptional::kDeclared), "declared");
}

}  // namespace
}  // namespace qbounds
