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
#ifndef QBOUNDS_CONCRETE_GROUP_H_
#define QBOUNDS_CONCRETE_GROUP_H_

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

namespace qbounds {

// A finite group given by its full multiplication table. Element 0 is the
// identity. Instances are immutable and validated on construction.
class ConcreteGroup {
 public:
  // Validates identity, Latin-square rows/columns and, for order <= 128,
  // associativity. Throws InvalidArgument on failure.
  ConcreteGroup(std::uint32_t order, std::vector<std::uint32_t> table);

  std::uint32_t order() const { return order_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
  const std::vector<std::uint32_t>& table() const { return table_; }

  std::uint32_t element_order(std::uint32_t g) const;
  bool is_abelian() const;
  std::uint32_t center_size() const;

  // Sorted multiset of element orders, an isomorphism invariant.
  std::vector<std::uint32_t> order_census() const;

  // Same group with element i renamed to perm[i]; perm[0] must be 0.
  ConcreteGroup relabeled(const std::vector<std::uint32_t>& perm) const;

  // Direct product; (a, b) has index a * |right| + b.
  static ConcreteGroup direct_product(const ConcreteGroup& left, const ConcreteGroup& right);

 private:
  std::uint32_t order_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
};

// Table file: line 1 is the order n, then n lines of n space-separated
// 0-based indices.
ConcreteGroup read_table(std::istream& in);
ConcreteGroup read_table_file(const std::string& path);

}  // namespace qbounds

#endif  // QBOUNDS_CONCRETE_GROUP_H_
