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
#include "qbounds/rank.h"

#include <algorithm>
#include <string>

#include "qbounds/arith.h"
#include "qbounds/error.h"

namespace qbounds {

ModPBasis::ModPBasis(std::size_t cols, std::uint32_t p)
    : cols_(cols), p_(p), pivot_row_(cols, -1) {
  if (!is_prime(p)) throw InvalidArgument("ModPBasis: " + std::to_string(p) + " is not prime");
}

bool ModPBasis::insert(std::vector<std::uint32_t>& row) {
  const std::uint64_t p = p_;
  for (std::size_t c = 0; c < cols_; ++c) {
    const std::uint32_t lead = row[c];
    if (lead == 0) continue;
    const std::int32_t piv = pivot_row_[c];
    if (piv < 0) {
      const std::uint64_t inv = pow_mod(lead, p - 2, p);
      for (std::size_t j = c; j < cols_; ++j) {
        row[j] = static_cast<std::uint32_t>(row[j] * inv % p);
      }
      pivot_row_[c] = static_cast<std::int32_t>(rows_.size());
      rows_.push_back(row);
      return true;
    }
    // Basis rows are zero before their pivot and have a leading 1.
    const std::uint64_t factor = p - lead;
    const std::uint32_t* basis = rows_[static_cast<std::size_t>(piv)].data();
    std::uint32_t* dst = row.data();
    for (std::size_t j = c; j < cols_; ++j) {
      if (basis[j] != 0) dst[j] = static_cast<std::uint32_t>((dst[j] + factor * basis[j]) % p);
    }
  }
  return false;
}

BitBasis::BitBasis(std::size_t cols) : cols_(cols), words_((cols + 63) / 64), pivot_row_(cols, -1) {}

bool BitBasis::insert(std::vector<std::uint64_t>& row) {
  for (std::size_t w = 0; w < words_; ++w) {
    while (row[w] != 0) {
      const std::size_t c = w * 64 + static_cast<std::size_t>(__builtin_ctzll(row[w]));
      const std::int32_t piv = pivot_row_[c];
      if (piv < 0) {
        pivot_row_[c] = static_cast<std::int32_t>(rows_.size());
        rows_.push_back(row);
        return true;
      }
      const std::uint64_t* basis = rows_[static_cast<std::size_t>(piv)].data();
      std::uint64_t* dst = row.data();
      for (std::size_t v = w; v < words_; ++v) dst[v] ^= basis[v];
    }
  }
  return false;
}

std::size_t rank_memory_bytes(std::size_t rows, std::size_t cols, std::uint64_t p) {
  const std::size_t basis_rows = std::min(rows, cols);
  const std::size_t row_bytes = p == 2 ? ((cols + 63) / 64) * 8 : cols * 4;
  return basis_rows * row_bytes + cols * sizeof(std::int32_t) + row_bytes;
}

std::size_t rank_mod_p(const SparseMatrix& matrix, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument("rank_mod_p: " + std::to_string(p) + " is not prime");
  if (p > UINT32_MAX) throw InvalidArgument("rank_mod_p: prime too large");
  if (p == 2) {
    BitBasis basis(matrix.cols);
    std::vector<std::uint64_t> row(basis.words());
    for (const auto& entries : matrix.entries) {
      std::fill(row.begin(), row.end(), 0);
      for (const auto& [c, v] : entries) {
        if (v & 1) row[c / 64] ^= std::uint64_t{1} << (c % 64);
      }
      basis.insert(row);
      if (basis.rank() == matrix.cols) break;
    }
    return basis.rank();
  }
  ModPBasis basis(matrix.cols, static_cast<std::uint32_t>(p));
  std::vector<std::uint32_t> row(matrix.cols);
  for (const auto& entries : matrix.entries) {
    std::fill(row.begin(), row.end(), 0);
    for (const auto& [c, v] : entries) row[c] = static_cast<std::uint32_t>((row[c] + v) % p);
    basis.insert(row);
    if (basis.rank() == matrix.cols) break;
  }
  return basis.rank();
}

SparseBasis::SparseBasis(std::size_t cols, std::uint32_t p)
    : cols_(cols), p_(p), pivots_(cols) {
  if (p < 2) throw InvalidArgument("SparseBasis: bad prime");
}

bool SparseBasis::insert(std::vector<Entry> row) {
  // Sort descending and merge repeated columns.
  std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.first > b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < row.size();) {
    const std::uint32_t c = row[i].first;
    if (c >= cols_) throw InvalidArgument("SparseBasis: column out of range");
    std::uint64_t v = 0;
    for (; i < row.size() && row[i].first == c; ++i) v += row[i].second;
    v %= p_;
    if (v != 0) row[out++] = Entry{c, static_cast<std::uint32_t>(v)};
  }
  row.resize(out);

  while (!row.empty()) {
    const auto [lead, lead_value] = row.front();
    std::vector<Entry>& pivot = pivots_[lead];
    if (pivot.empty()) {
      const std::uint64_t inv = pow_mod(lead_value, p_ - 2, p_);
      for (Entry& e : row) e.second = static_cast<std::uint32_t>(mul_mod(e.second, inv, p_));
      stored_ += row.size();
      pivot = std::move(row);
      ++rank_;
      return true;
    }
    // row -= lead_value * pivot; the pivot's leading entry is 1.
    const std::uint64_t factor = p_ - lead_value;
    scratch_.clear();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row[i].first > pivot[j].first)) {
        scratch_.push_back(row[i++]);
      } else if (i == row.size() || pivot[j].first > row[i].first) {
        scratch_.push_back(
            Entry{pivot[j].first, static_cast<std::uint32_t>(mul_mod(pivot[j].second, factor, p_))});
        ++j;
      } else {
        const std::uint64_t v = (row[i].second + mul_mod(pivot[j].second, factor, p_)) % p_;
        if (v != 0) scratch_.push_back(Entry{row[i].first, static_cast<std::uint32_t>(v)});
        ++i;
        ++j;
      }
    }
    row.swap(scratch_);
  }
  return false;
}

std::size_t sparse_rank_mod_p(const SparseMatrix& matrix, std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument("sparse_rank_mod_p: " + std::to_string(p) + " is not prime");
  if (p > UINT32_MAX) throw InvalidArgument("sparse_rank_mod_p: prime too large");
  SparseBasis basis(matrix.cols, static_cast<std::uint32_t>(p));
  std::vector<SparseBasis::Entry> row;
  for (const auto& entries : matrix.entries) {
    row.clear();
    for (const auto& [c, v] : entries) {
      row.emplace_back(static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(v % p));
    }
    basis.insert(row);
    if (basis.rank() == matrix.cols) break;
  }
  return basis.rank();
}

}  // namespace qbounds
