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
#ifndef QBOUNDS_ARITH_H_
#define QBOUNDS_ARITH_H_

#include <cstdint>
#include <vector>

namespace qbounds {

bool is_prime(std::uint64_t n);

// Distinct prime divisors in increasing order. prime_factors(1) is empty.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// True when n = p^e for some prime p and e >= 1; stores p.
bool is_prime_power(std::uint64_t n, std::uint64_t* prime = nullptr);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Multiplicative order of a modulo m; requires gcd(a, m) = 1 and m >= 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

// An element of exact order m in F_p^x. Requires m | p - 1. Deterministic:
// g^((p-1)/m) for the least generator g of F_p^x.
std::uint64_t root_of_unity(std::uint64_t m, std::uint64_t p);

// Binomial coefficient; throws InvalidArgument on 64-bit overflow.
std::int64_t binomial(std::int64_t n, std::int64_t k);

// Ceiling of a / b for b > 0, correct for negative a.
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

// Checked arithmetic; throw InvalidArgument on overflow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

}  // namespace qbounds

#endif  // QBOUNDS_ARITH_H_
