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
#include "qbounds/cohomology_series.h"

#include <algorithm>

#include "qbounds/arith.h"
#include "qbounds/error.h"

namespace qbounds {
namespace {

void require_truncation(int truncation) {
  if (truncation < 0) throw InvalidArgument("truncation degree must be >= 0");
}

DimSeries point(Field field, int truncation) {
  require_truncation(truncation);
  DimSeries s{field, std::vector<std::int64_t>(static_cast<std::size_t>(truncation) + 1, 0)};
  s.dims[0] = 1;
  return s;
}

bool divides(std::uint64_t p, std::uint64_t n) { return p != 0 && n % p == 0; }

}  // namespace

Field Field::mod(std::uint64_t prime) {
  if (!is_prime(prime)) throw InvalidArgument(std::to_string(prime) + " is not prime");
  return Field{prime};
}

std::string Field::to_string() const { return is_rational() ? "Q" : "F_" + std::to_string(p); }

void check_series(const DimSeries& s) {
  if (s.dims.empty() || s.dims[0] != 1) throw InvalidArgument("series must start with dims[0] = 1");
  for (std::int64_t d : s.dims) {
    if (d < 0) throw InvalidArgument("series entries must be nonnegative");
  }
}

DimSeries series_cyclic(std::uint64_t m, Field field, int truncation) {
  if (m < 1) throw InvalidArgument("cyclic order must be >= 1");
  DimSeries s = point(field, truncation);
  if (!field.is_rational() && divides(field.p, m)) std::fill(s.dims.begin(), s.dims.end(), 1);
  return s;
}

DimSeries series_elementary_abelian(std::uint64_t p, int k, Field field, int truncation) {
  if (k < 0) throw InvalidArgument("rank must be >= 0");
  DimSeries s = point(field, truncation);
  if (k == 0 || field.is_rational() || field.p != p) return s;
  for (int n = 0; n <= truncation; ++n) {
    std::int64_t value = 0;
    if (p == 2) {
      value = binomial(k + n - 1, n);
    } else {
      for (int j = 0; 2 * j <= n; ++j) {
        value = checked_add(value, checked_mul(binomial(k, n - 2 * j), binomial(k + j - 1, j)));
      }
    }
    s.dims[static_cast<std::size_t>(n)] = value;
  }
  return s;
}

DimSeries series_product(const DimSeries& a, const DimSeries& b) {
  if (!(a.field == b.field)) {
    throw InvalidArgument("series_product: field mismatch " + a.field.to_string() + " vs " +
                          b.field.to_string());
  }
  const int top = std::min(a.truncation(), b.truncation());
  DimSeries out{a.field, std::vector<std::int64_t>(static_cast<std::size_t>(top) + 1, 0)};
  for (int n = 0; n <= top; ++n) {
    std::int64_t value = 0;
    for (int i = 0; i <= n; ++i) value = checked_add(value, checked_mul(a[i], b[n - i]));
    out.dims[static_cast<std::size_t>(n)] = value;
  }
  return out;
}

DimSeries series_semidirect_invariants(const CharMultiset& n1, std::uint64_t p, int truncation) {
  require_truncation(truncation);
  const auto pieces = graded_characters(n1, p, truncation);
  DimSeries s{Field::mod(p), {}};
  for (const auto& piece : pieces) s.dims.push_back(invariants_dim(piece));
  return s;
}

DimSeries series_quaternion(std::uint64_t order, Field field, int truncation) {
  if (order < 8 || order % 4 != 0) throw InvalidArgument("quaternion order must be 4n with n >= 2");
  DimSeries s = point(field, truncation);
  if (field.is_rational() || !divides(field.p, order)) return s;
  const std::uint64_t n = order / 4;
  for (int i = 0; i <= truncation; ++i) {
    const int r = i % 4;
    std::int64_t value;
    if (field.p == 2) {
      value = (n % 2 == 0) ? ((r == 1 || r == 2) ? 2 : 1) : 1;
    } else {
      value = (r == 0 || r == 3) ? 1 : 0;
    }
    s.dims[static_cast<std::size_t>(i)] = value;
  }
  return s;
}

DimSeries series_for_spec(const GroupSpec& spec, Field field, int truncation) {
  require_truncation(truncation);
  const auto& fam = spec.family();
  if (std::holds_alternative<family::Trivial>(fam)) return point(field, truncation);
  if (const auto* c = std::get_if<family::Cyclic>(&fam)) return series_cyclic(c->m, field, truncation);
  if (const auto* e = std::get_if<family::ElementaryAbelian>(&fam)) {
    return series_elementary_abelian(e->p, e->k, field, truncation);
  }
  if (const auto* pr = std::get_if<family::Product>(&fam)) {
    return series_product(series_for_spec(*pr->left, field, truncation),
                          series_for_spec(*pr->right, field, truncation));
  }
  if (const auto* q = std::get_if<family::Quaternion>(&fam)) {
    return series_quaternion(q->order, field, truncation);
  }
  if (std::holds_alternative<family::Table>(fam)) {
    throw Unsupported("no closed-form series for Table groups; use the cochain oracle");
  }
  const auto data = spec.semidirect_data();
  const std::uint64_t m = data->n1.modulus();
  if (field.is_rational()) return point(field, truncation);
  if (field.p == data->p) return series_semidirect_invariants(data->n1, data->p, truncation);
  // Away from p the normal p-subgroup is invisible: H^*(U; F_q) = H^*(C; F_q).
  return series_cyclic(m, field, truncation);
}

}  // namespace qbounds
