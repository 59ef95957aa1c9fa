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
#include "qbounds/concrete_group.h"

#include <algorithm>
#include <fstream>
#include <string>

#include "qbounds/error.h"

namespace qbounds {

ConcreteGroup::ConcreteGroup(std::uint32_t order, std::vector<std::uint32_t> table)
    : order_(order), table_(std::move(table)) {
  if (order_ == 0) throw InvalidArgument("group order must be positive");
  const std::size_t n = order_;
  if (table_.size() != n * n) {
    throw InvalidArgument("multiplication table has " + std::to_string(table_.size()) +
                          " entries, expected " + std::to_string(n * n));
  }
  for (std::uint32_t v : table_) {
    if (v >= order_) throw InvalidArgument("table entry " + std::to_string(v) + " out of range");
  }
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      auto& s = seen[table_[a * n + b]];
      if (s) throw InvalidArgument("row " + std::to_string(a) + " is not a permutation");
      s = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      auto& s = seen[table_[b * n + a]];
      if (s) throw InvalidArgument("column " + std::to_string(a) + " is not a permutation");
      s = 1;
    }
    if (table_[a] != a || table_[a * n] != a) {
      throw InvalidArgument("element 0 is not the identity");
    }
  }
  if (order_ <= 128) {
    for (std::uint32_t a = 0; a < order_; ++a)
      for (std::uint32_t b = 0; b < order_; ++b)
        for (std::uint32_t c = 0; c < order_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
            throw InvalidArgument("table is not associative at (" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + ")");
          }
  }
  inverse_.assign(n, 0);
  for (std::uint32_t a = 0; a < order_; ++a)
    for (std::uint32_t b = 0; b < order_; ++b)
      if (mul(a, b) == 0) inverse_[a] = b;
}

std::uint32_t ConcreteGroup::element_order(std::uint32_t g) const {
  std::uint32_t k = 1;
  for (std::uint32_t x = g; x != 0; x = mul(x, g)) ++k;
  return k;
}

bool ConcreteGroup::is_abelian() const { return center_size() == order_; }

std::uint32_t ConcreteGroup::center_size() const {
  std::uint32_t count = 0;
  for (std::uint32_t a = 0; a < order_; ++a) {
    bool central = true;
    for (std::uint32_t b = 0; b < order_ && central; ++b) central = mul(a, b) == mul(b, a);
    count += central ? 1 : 0;
  }
  return count;
}

std::vector<std::uint32_t> ConcreteGroup::order_census() const {
  std::vector<std::uint32_t> out(order_);
  for (std::uint32_t g = 0; g < order_; ++g) out[g] = element_order(g);
  std::sort(out.begin(), out.end());
  return out;
}

ConcreteGroup ConcreteGroup::relabeled(const std::vector<std::uint32_t>& perm) const {
  if (perm.size() != order_ || perm[0] != 0) {
    throw InvalidArgument("relabeling must be a permutation fixing 0");
  }
  const std::size_t n = order_;
  std::vector<std::uint32_t> out(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out[perm[a] * n + perm[b]] = perm[table_[a * n + b]];
  return ConcreteGroup(order_, std::move(out));
}

ConcreteGroup ConcreteGroup::direct_product(const ConcreteGroup& left, const ConcreteGroup& right) {
  const std::uint64_t n64 = std::uint64_t{left.order()} * right.order();
  if (n64 > 65536) throw InvalidArgument("direct product too large to tabulate");
  const auto n = static_cast<std::uint32_t>(n64);
  const std::uint32_t r = right.order();
  std::vector<std::uint32_t> table(static_cast<std::size_t>(n) * n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      table[static_cast<std::size_t>(x) * n + y] =
          left.mul(x / r, y / r) * r + right.mul(x % r, y % r);
  return ConcreteGroup(n, std::move(table));
}

ConcreteGroup read_table(std::istream& in) {
  long long order = 0;
  if (!(in >> order) || order <= 0 || order > 65536) {
    throw InvalidArgument("table file: first line must be a positive order");
  }
  const auto n = static_cast<std::size_t>(order);
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    long long v = -1;
    if (!(in >> v) || v < 0 || v >= order) {
      throw InvalidArgument("table file: bad or missing entry " + std::to_string(i));
    }
    table[i] = static_cast<std::uint32_t>(v);
  }
  std::string extra;
  if (in >> extra) throw InvalidArgument("table file: trailing data '" + extra + "'");
  return ConcreteGroup(static_cast<std::uint32_t>(n), std::move(table));
}

ConcreteGroup read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open table file '" + path + "'");
  return read_table(in);
}

}  // namespace qbounds
