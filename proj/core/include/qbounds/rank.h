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
#ifndef QBOUNDS_RANK_H_
#define QBOUNDS_RANK_H_

// Exact rank over F_p by streaming Gaussian elimination. Rows are fed one
// at a time and reduced against an echelon basis; only the basis is kept,
// so memory is O(rank * cols) regardless of the row count. Pivots are
// chosen as the first nonzero column of each incoming row, which makes
// the result reproducible bit-for-bit.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace qbounds {

// Row basis over F_p for odd p (or p = 2 without packing).
class ModPBasis {
 public:
  ModPBasis(std::size_t cols, std::uint32_t p);

  // Reduces `row` in place (entries in [0, p), length cols). Returns true
  // and stores the row if it was independent of the basis.
  bool insert(std::vector<std::uint32_t>& row);

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t cols_;
  std::uint32_t p_;
  std::vector<std::int32_t> pivot_row_;  // per column, -1 if none
  std::vector<std::vector<std::uint32_t>> rows_;
};

// Row basis over F_2 with rows packed 64 columns per word.
class BitBasis {
 public:
  explicit BitBasis(std::size_t cols);

  std::size_t words() const { return words_; }

  // `row` has words() words; bit c of word c / 64 is column c.
  bool insert(std::vector<std::uint64_t>& row);

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t cols_;
  std::size_t words_;
  std::vector<std::int32_t> pivot_row_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

// Echelon basis of sparse rows. The pivot of a row is its highest nonzero
// column; on coboundary matrices this keeps fill-in close to the original
// row length, where a lowest-column pivot lets reduced rows grow long.
class SparseBasis {
 public:
  using Entry = std::pair<std::uint32_t, std::uint32_t>;  // (column, value)

  SparseBasis(std::size_t cols, std::uint32_t p);

  // `row` may list columns in any order and repeat them; values are summed
  // mod p. Returns true if the row was independent of the basis.
  bool insert(std::vector<Entry> row);

  std::size_t rank() const { return rank_; }
  std::size_t cols() const { return cols_; }
  // Entries held by the stored pivot rows.
  std::size_t stored_entries() const { return stored_; }

 private:
  std::size_t cols_;
  std::uint32_t p_;
  std::size_t rank_ = 0;
  std::size_t stored_ = 0;
  std::vector<std::vector<Entry>> pivots_;  // by pivot column; rows sorted descending
  std::vector<Entry> scratch_;
};

struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  // entries[r] lists (column, value) pairs of row r; values already reduced.
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> entries;
};

// Bytes of basis storage the elimination may need for a rows x cols matrix.
std::size_t rank_memory_bytes(std::size_t rows, std::size_t cols, std::uint64_t p);

// Rank over F_p; p = 2 takes the packed path.
// Dense elimination (packed bits for p = 2), lowest-column pivots.
std::size_t rank_mod_p(const SparseMatrix& matrix, std::uint64_t p);

// Same rank through SparseBasis.
std::size_t sparse_rank_mod_p(const SparseMatrix& matrix, std::uint64_t p);

}  // namespace qbounds

#endif  // QBOUNDS_RANK_H_
