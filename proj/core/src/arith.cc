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
#include "qbounds/arith.h"

#include <numeric>
#include <string>

#include "qbounds/error.h"

namespace qbounds {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime_power(std::uint64_t n, std::uint64_t* prime) {
  const auto factors = prime_factors(n);
  if (factors.size() != 1) return false;
  if (prime != nullptr) *prime = factors.front();
  return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m == 0 || std::gcd(a, m) != 1) {
    throw InvalidArgument("multiplicative_order: " + std::to_string(a) +
                          " is not a unit modulo " + std::to_string(m));
  }
  if (m == 1) return 1;
  // The order divides the group exponent; start from phi(m) and strip primes.
  std::uint64_t phi = m;
  for (std::uint64_t q : prime_factors(m)) phi = phi / q * (q - 1);
  std::uint64_t order = phi;
  for (std::uint64_t q : prime_factors(phi)) {
    while (order % q == 0 && pow_mod(a, order / q, m) == 1) order /= q;
  }
  return order;
}

std::uint64_t root_of_unity(std::uint64_t m, std::uint64_t p) {
  if (!is_prime(p) || m == 0 || (p - 1) % m != 0) {
    throw InvalidArgument("no element of order " + std::to_string(m) +
                          " in F_" + std::to_string(p) + "^x");
  }
  if (p == 2) return 1;
  for (std::uint64_t g = 2; g < p; ++g) {
    if (multiplicative_order(g, p) == p - 1) return pow_mod(g, (p - 1) / m, p);
  }
  return 1;  // unreachable: F_p^x is cyclic
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - k + i) / i;
    if (acc > static_cast<unsigned __int128>(INT64_MAX)) {
      throw InvalidArgument("binomial(" + std::to_string(n) + ", " +
                            std::to_string(k) + ") overflows");
    }
  }
  return static_cast<std::int64_t>(acc);
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if (a % b != 0 && ((a > 0) == (b > 0))) ++q;
  return q;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw InvalidArgument("integer overflow in addition");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw InvalidArgument("integer overflow in multiplication");
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(out, base, &out)) {
      throw InvalidArgument("integer overflow in power");
    }
  }
  return out;
}

}  // namespace qbounds
