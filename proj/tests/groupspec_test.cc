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

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "qbounds/arith.h"
#include "qbounds/error.h"
#include "qbounds/group_spec.h"

namespace qbounds {
namespace {

const std::string kData = QBOUNDS_TEST_DATA_DIR;

TEST(ParseSpec, MapsGrammarToFamilies) {
  const GroupSpec e = parse_spec("E(3,2)");
  const auto* ea = std::get_if<family::ElementaryAbelian>(&e.family());
  ASSERT_NE(ea, nullptr);
  EXPECT_EQ(ea->p, 3u);
  EXPECT_EQ(ea->k, 2);

  const GroupSpec j = parse_spec("J(4)");
  ASSERT_TRUE(std::holds_alternative<family::Frobenius>(j.family()));
  EXPECT_EQ(std::get<family::Frobenius>(j.family()).k, 4);

  EXPECT_TRUE(std::holds_alternative<family::Trivial>(parse_spec("1").family()));
  EXPECT_TRUE(std::holds_alternative<family::Product>(parse_spec("Prod(C(2), E(2,2))").family()));
  EXPECT_TRUE(std::holds_alternative<family::Semidirect>(parse_spec("Usd(2,7;1,2,4)").family()));
}

TEST(ParseSpec, RejectsMalformedText) {
  EXPECT_THROW(parse_spec("U(5,3;2,4)"), ParseError);
  EXPECT_THROW(parse_spec("E(3,"), ParseError);
  EXPECT_THROW(parse_spec("F(2)"), ParseError);
  EXPECT_THROW(parse_spec("C(4) trailing"), ParseError);
  EXPECT_THROW(parse_spec("C(4)[colour=red]"), ParseError);
  try {
    parse_spec("E(3,x)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(ParseSpec, RejectsInvariantViolations) {
  EXPECT_THROW(parse_spec("E(4,2)"), Error);            // p not prime
  EXPECT_THROW(parse_spec("Usd(3,6;1)"), Error);        // gcd(p, m) != 1
  EXPECT_THROW(parse_spec("Usd(7,3;3)"), Error);        // exponent outside [0, m)
  EXPECT_THROW(parse_spec("U(7,2,3,6)"), Error);        // zeta^3 has order 2, not 6
  EXPECT_THROW(parse_spec("U(7,2,0,3)"), Error);        // trivial action with m = 3
  EXPECT_THROW(parse_spec("J(0)"), Error);
  EXPECT_THROW(parse_spec("Q(10)"), Error);
  EXPECT_THROW(parse_spec("C(4)[period=3]"), Error);    // odd period
  EXPECT_THROW(parse_spec("C(4)[period=4]"), Error);    // contradicts the cyclic period
  EXPECT_THROW(parse_spec("E(2,3)[d=2]"), Error);       // contradicts d(E_3) = 3
  EXPECT_THROW(parse_spec("Usd(2,3;1)"), Error);        // {1} is not closed under x -> 2x
}

TEST(ParseSpec, RoundTripsThroughToString) {
  for (const char* text :
       {"1", "C(12)", "E(5,3)", "Prod(E(2,2),Q(8))", "U(5,3,1,4)", "Usd(7,3;0,1,1)", "J(7)",
        "Q(24)", "C(6)[d=1,name=C6]", "Usd(13,3;0,1,2)[d=2,period=6,solvable,exceptional=false]",
        "Q(12)[exceptional]"}) {
    const GroupSpec spec = parse_spec(text);
    EXPECT_EQ(parse_spec(spec.to_string()), spec) << text;
  }
  EXPECT_EQ(parse_spec(" Prod( C(2) , C(3) ) ").to_string(), "Prod(C(2),C(3))");
}

TEST(GroupSpec, StructuralMetadata) {
  const GroupSpec u = parse_spec("U(5,3,1,4)");
  EXPECT_EQ(u.order(), 125u * 4u);
  EXPECT_EQ(u.generators(), 4);
  EXPECT_EQ(u.solvable(), true);
  EXPECT_EQ(parse_spec("U(7,1,1,3)").period(), 6);
  EXPECT_EQ(parse_spec("Q(8)").period(), 4);
  EXPECT_EQ(parse_spec("C(9)").period(), 2);
  EXPECT_FALSE(parse_spec("E(2,2)").period().has_value());
  EXPECT_FALSE(parse_spec("Usd(2,7;1,2,4)").generators().has_value());
  EXPECT_EQ(parse_spec("J(2)").known_name(), "A4");
  EXPECT_EQ(parse_spec("J(10)").order(), 1024u * 1023u);
  EXPECT_EQ(parse_spec("Prod(E(3,2),C(9))").pgroup_prime(), 3u);
  EXPECT_FALSE(parse_spec("C(6)").pgroup_prime().has_value());
}

TEST(FrobeniusExponents, PowersOfTwo) {
  EXPECT_EQ(frobenius_exponents(2), CharMultiset(3, {1, 2}));
  EXPECT_EQ(frobenius_exponents(3), CharMultiset(7, {1, 2, 4}));
  EXPECT_EQ(frobenius_exponents(1), CharMultiset(1, {0}));
}

// x has order 2^k - 1 modulo the table polynomial.
TEST(FrobeniusPolynomial, TableEntriesArePrimitive) {
  for (int k = 1; k <= 16; ++k) {
    const std::uint32_t f = frobenius_polynomial(k);
    ASSERT_EQ(f >> k, 1u) << "degree of entry " << k;
    const std::uint32_t one = 1;
    std::uint32_t x = 1;
    std::uint64_t steps = 0;
    do {
      x <<= 1;
      if (x >> k) x ^= f;
      ++steps;
    } while (x != one && steps <= (1u << k));
    EXPECT_EQ(steps, (std::uint64_t{1} << k) - 1) << "k=" << k;
  }
  EXPECT_THROW(frobenius_polynomial(17), Error);
}

TEST(Realize, CyclicFour) {
  const ConcreteGroup g = realize(parse_spec("C(4)"), 64);
  EXPECT_EQ(g.order(), 4u);
  EXPECT_TRUE(g.is_abelian());
  EXPECT_EQ(g.order_census(), (std::vector<std::uint32_t>{1, 2, 4, 4}));
}

TEST(Realize, FrobeniusTwoIsA4) {
  const ConcreteGroup g = realize(parse_spec("J(2)"), 64);
  EXPECT_EQ(g.order(), 12u);
  EXPECT_FALSE(g.is_abelian());
  for (std::uint32_t x = 0; x < g.order(); ++x) EXPECT_LE(g.element_order(x), 3u);
  const ConcreteGroup a4 = read_table_file(kData + "/a4.txt");
  EXPECT_EQ(g.order_census(), a4.order_census());
  EXPECT_EQ(g.center_size(), a4.center_size());
}

TEST(Realize, ElementaryAbelianCensus) {
  const ConcreteGroup g = realize(parse_spec("E(2,3)"), 64);
  EXPECT_EQ(g.order(), 8u);
  EXPECT_TRUE(g.is_abelian());
  EXPECT_EQ(g.order_census(), (std::vector<std::uint32_t>{1, 2, 2, 2, 2, 2, 2, 2}));
}

TEST(Realize, QuaternionMatchesIndependentTable) {
  const ConcreteGroup g = realize(parse_spec("Q(8)"), 64);
  const ConcreteGroup q8 = read_table_file(kData + "/q8.txt");
  EXPECT_EQ(g.order_census(), q8.order_census());
  EXPECT_EQ(g.center_size(), 2u);
  EXPECT_FALSE(g.is_abelian());
}

TEST(Realize, S3FromIsotypicSemidirect) {
  const ConcreteGroup g = realize(parse_spec("U(3,1,1,2)"), 64);
  const ConcreteGroup s3 = read_table_file(kData + "/s3.txt");
  EXPECT_EQ(g.order_census(), s3.order_census());
  EXPECT_EQ(g.center_size(), 1u);
}

TEST(Realize, OrdersMatchFamilyFormulas) {
  for (const char* text : {"U(5,1,1,4)", "U(7,1,2,3)", "Usd(3,2;0,1)", "Usd(2,3;1,2)", "J(3)",
                           "J(4)", "E(3,3)", "Q(16)", "Q(12)", "Prod(C(3),Q(8))"}) {
    const GroupSpec spec = parse_spec(text);
    EXPECT_EQ(realize(spec, 4096).order(), spec.order()) << text;
  }
  EXPECT_THROW(realize(parse_spec("E(2,7)"), 64), Error);
}

// The C-action on E_k has no nonzero fixed vector.
TEST(Realize, FrobeniusActionIsFixedPointFree) {
  for (int k = 2; k <= 10; ++k) {
    const auto a = semidirect_action_matrix(parse_spec("J(" + std::to_string(k) + ")"));
    for (std::uint32_t v = 1; v < (1u << k); ++v) {
      std::uint32_t image = 0;
      for (int i = 0; i < k; ++i) {
        std::uint64_t bit = 0;
        for (int j = 0; j < k; ++j) bit ^= a[i][j] & ((v >> j) & 1u);
        image |= static_cast<std::uint32_t>(bit) << i;
      }
      ASSERT_NE(image, v) << "k=" << k;
    }
  }
}

TEST(Realize, ProductMatchesDirectProductUpToRelabeling) {
  const std::pair<const char*, const char*> pairs[] = {
      {"C(2)", "C(4)"}, {"E(2,2)", "C(3)"}, {"Q(8)", "C(2)"}, {"J(2)", "C(3)"}, {"C(5)", "U(3,1,1,2)"}};
  std::mt19937 rng(7);
  for (const auto& [l, r] : pairs) {
    const GroupSpec prod = parse_spec(std::string("Prod(") + l + "," + r + ")");
    const ConcreteGroup g = realize(prod, 64);
    const ConcreteGroup direct = ConcreteGroup::direct_product(realize(parse_spec(l), 64),
                                                               realize(parse_spec(r), 64));
    std::vector<std::uint32_t> perm(direct.order());
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    const ConcreteGroup shuffled = direct.relabeled(perm);
    EXPECT_EQ(g.order_census(), shuffled.order_census());
    EXPECT_EQ(g.center_size(), shuffled.center_size());
    EXPECT_EQ(g.is_abelian(), shuffled.is_abelian());
  }
}

TEST(ConcreteGroup, RejectsBadTables) {
  EXPECT_THROW(ConcreteGroup(2, {0, 1, 1, 1}), Error);   // row not a permutation
  EXPECT_THROW(ConcreteGroup(2, {1, 0, 0, 1}), Error);   // 0 is not the identity
  // A Latin square with identity 0 that is not associative.
  EXPECT_THROW(ConcreteGroup(5, {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3,
                                 3, 2, 4, 0, 1, 4, 3, 1, 2, 0}),
               Error);
  std::istringstream truncated("3\n0 1 2\n1 2 0\n");
  EXPECT_THROW(read_table(truncated), Error);
}

TEST(ConcreteGroup, TableSpecLoadsFile) {
  const GroupSpec spec = parse_spec("Table(" + kData + "/s3.txt)");
  EXPECT_EQ(spec.order(), 6u);
  EXPECT_EQ(spec.pgroup_prime(), std::nullopt);
  EXPECT_THROW(parse_spec("Table(/nonexistent/file.txt)"), Error);
}

}  // namespace
}  // namespace qbounds
