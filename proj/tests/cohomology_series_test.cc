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

#include <random>

#include "qbounds/arith.h"
#include "qbounds/cochain_oracle.h"
#include "qbounds/cohomology_series.h"
#include "qbounds/error.h"
#include "qbounds/group_spec.h"

namespace qbounds {
namespace {

using Dims = std::vector<std::int64_t>;

DimSeries power(const DimSeries& s, int k) {
  DimSeries out{s.field, Dims(s.dims.size(), 0)};
  out.dims[0] = 1;
  for (int i = 0; i < k; ++i) out = series_product(out, s);
  return out;
}

TEST(SeriesCyclic, Examples) {
  EXPECT_EQ(series_cyclic(2, Field::mod(2), 4).dims, (Dims{1, 1, 1, 1, 1}));
  EXPECT_EQ(series_cyclic(3, Field::mod(2), 3).dims, (Dims{1, 0, 0, 0}));
  EXPECT_EQ(series_cyclic(6, Field::rational(), 2).dims, (Dims{1, 0, 0}));
  EXPECT_EQ(series_cyclic(1, Field::mod(5), 2).dims, (Dims{1, 0, 0}));
  EXPECT_EQ(series_cyclic(12, Field::mod(3), 3).dims, (Dims{1, 1, 1, 1}));
}

TEST(SeriesElementaryAbelian, Examples) {
  EXPECT_EQ(series_elementary_abelian(3, 2, Field::mod(3), 3).dims, (Dims{1, 2, 3, 4}));
  EXPECT_EQ(series_elementary_abelian(2, 3, Field::mod(2), 2).dims, (Dims{1, 3, 6}));
  EXPECT_EQ(series_elementary_abelian(5, 0, Field::mod(5), 2).dims, (Dims{1, 0, 0}));
  EXPECT_EQ(series_elementary_abelian(5, 3, Field::mod(2), 2).dims, (Dims{1, 0, 0}));
  EXPECT_EQ(series_elementary_abelian(5, 3, Field::rational(), 2).dims, (Dims{1, 0, 0}));
}

TEST(SeriesProduct, Examples) {
  const DimSeries ones{Field::mod(2), {1, 1, 1}};
  EXPECT_EQ(series_product(ones, ones).dims, (Dims{1, 2, 3}));
  const DimSeries unit{Field::mod(2), {1, 0, 0, 0}};
  const DimSeries s{Field::mod(2), {1, 4, 2, 7}};
  EXPECT_EQ(series_product(s, unit), s);
  EXPECT_EQ(series_product(s, ones).truncation(), 2);
  EXPECT_THROW(series_product(ones, DimSeries{Field::mod(3), {1, 1, 1}}), Error);
}

TEST(SeriesProduct, ElementaryAbelianIsPowerOfCyclic) {
  for (std::uint64_t p : {2u, 3u}) {
    for (int k = 0; k <= 4; ++k) {
      EXPECT_EQ(power(series_cyclic(p, Field::mod(p), 6), k),
                series_elementary_abelian(p, k, Field::mod(p), 6))
          << "p=" << p << " k=" << k;
    }
  }
}

TEST(SeriesProduct, AssociativeAndCommutative) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    auto random_series = [&] {
      DimSeries s{Field::mod(3), Dims(1 + rng() % 8)};
      s.dims[0] = 1;
      for (std::size_t i = 1; i < s.dims.size(); ++i) s.dims[i] = rng() % 10;
      return s;
    };
    const DimSeries a = random_series(), b = random_series(), c = random_series();
    EXPECT_EQ(series_product(a, series_product(b, c)), series_product(series_product(a, b), c));
    EXPECT_EQ(series_product(a, b), series_product(b, a));
  }
}

// Coefficients of (1+t)^k / (1-t^2)^k by direct polynomial arithmetic.
TEST(SeriesElementaryAbelian, OddPrimeGeneratingFunction) {
  const int n_max = 10;
  for (int k = 0; k <= 6; ++k) {
    Dims num(n_max + 1, 0);
    num[0] = 1;
    for (int i = 0; i < k; ++i) {
      for (int d = n_max; d >= 1; --d) num[d] += num[d - 1];
    }
    // Divide by (1 - t^2) k times: c[d] += c[d-2].
    for (int i = 0; i < k; ++i) {
      for (int d = 2; d <= n_max; ++d) num[d] += num[d - 2];
    }
    for (std::uint64_t p : {3u, 5u, 7u}) {
      EXPECT_EQ(series_elementary_abelian(p, k, Field::mod(p), n_max).dims, num) << k;
    }
  }
}

TEST(SeriesSemidirect, Examples) {
  EXPECT_EQ(series_semidirect_invariants(CharMultiset(3, {1, 2}), 2, 2).dims, (Dims{1, 0, 1}));
  const DimSeries iso = series_semidirect_invariants(CharMultiset(4, {1, 1, 1}), 5, 3);
  EXPECT_EQ(iso[1], 0);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    EXPECT_EQ(series_semidirect_invariants(CharMultiset(1, {0, 0, 0}), p, 6),
              series_elementary_abelian(p, 3, Field::mod(p), 6));
  }
  EXPECT_THROW(series_semidirect_invariants(CharMultiset(3, {1}), 3, 2), Error);
}

TEST(SeriesQuaternion, Examples) {
  EXPECT_EQ(series_quaternion(8, Field::mod(2), 8).dims, (Dims{1, 2, 2, 1, 1, 2, 2, 1, 1}));
  EXPECT_EQ(series_quaternion(12, Field::mod(3), 8).dims, (Dims{1, 0, 0, 1, 1, 0, 0, 1, 1}));
  EXPECT_EQ(series_quaternion(12, Field::mod(2), 3).dims, (Dims{1, 1, 1, 1}));
  EXPECT_EQ(series_quaternion(12, Field::mod(5), 3).dims, (Dims{1, 0, 0, 0}));
}

TEST(CheckSeries, RejectsInvalid) {
  EXPECT_THROW(check_series(DimSeries{Field::mod(2), {2, 1}}), Error);
  EXPECT_THROW(check_series(DimSeries{Field::mod(2), {1, -1}}), Error);
  EXPECT_THROW(check_series(DimSeries{Field::mod(2), {}}), Error);
  EXPECT_NO_THROW(check_series(DimSeries{Field::mod(2), {1, 3}}));
}

TEST(SeriesForSpec, Dispatch) {
  EXPECT_EQ(series_for_spec(parse_spec("Prod(C(2),C(4))"), Field::mod(2), 3).dims,
            (Dims{1, 2, 3, 4}));
  EXPECT_EQ(series_for_spec(parse_spec("J(3)"), Field::mod(7), 2).dims, (Dims{1, 1, 1}));
  EXPECT_EQ(series_for_spec(parse_spec("J(3)"), Field::rational(), 2).dims, (Dims{1, 0, 0}));
  EXPECT_EQ(series_for_spec(parse_spec("1"), Field::mod(2), 2).dims, (Dims{1, 0, 0}));
  EXPECT_THROW(series_for_spec(parse_spec("Table(" QBOUNDS_TEST_DATA_DIR "/s3.txt)"),
                               Field::mod(2), 2),
               Unsupported);
}

// Closed forms against bar cochains for every realizable family member of
// order <= 24, degrees <= 3, at every prime dividing the order.
class OracleSweep : public ::testing::TestWithParam<const char*> {};

TEST_P(OracleSweep, ClosedFormMatchesCochains) {
  const GroupSpec spec = parse_spec(GetParam());
  ASSERT_LE(spec.order(), 24u);
  for (std::uint64_t p : prime_factors(spec.order())) {
    for (const SeriesCheck& c : verify_series(spec, p, 3)) {
      EXPECT_TRUE(c.match) << GetParam() << " p=" << p << " n=" << c.n << ": closed form "
                           << c.closed_form << ", oracle " << c.oracle;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(
    SmallGroups, OracleSweep,
    ::testing::Values("C(2)", "C(3)", "C(4)", "C(5)", "C(6)", "C(7)", "C(8)", "C(9)", "C(10)",
                      "C(11)", "C(12)", "C(13)", "C(14)", "C(15)", "C(16)", "C(18)", "C(20)",
                      "C(24)", "E(2,2)", "E(2,3)", "E(2,4)", "E(3,2)", "Q(8)", "Q(12)", "Q(16)",
                      "Q(20)", "Q(24)", "U(3,1,1,2)", "U(5,1,1,2)", "U(7,1,1,2)", "U(11,1,1,2)",
                      "U(5,1,1,4)", "U(7,1,1,3)", "U(3,2,1,2)", "Usd(3,2;0,1)", "J(2)",
                      "Prod(C(2),C(4))", "Prod(C(3),C(6))", "Prod(C(2),Q(8))",
                      "Prod(C(2),J(2))", "Prod(C(2),U(3,1,1,2))"),
    [](const ::testing::TestParamInfo<const char*>& info) {
      std::string name;
      for (const char* c = info.param; *c; ++c) {
        name += std::isalnum(static_cast<unsigned char>(*c)) ? *c : '_';
      }
      return name;
    });

}  // namespace
}  // namespace qbounds
