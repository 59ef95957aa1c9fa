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
#include "qbounds/cochain_oracle.h"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include "qbounds/arith.h"
#include "qbounds/cohomology_series.h"
#include "qbounds/error.h"
#include "qbounds/rank.h"

namespace qbounds {
namespace {

using Matrix = FpModule::Matrix;

std::size_t sparse_basis_bytes(std::size_t cols, std::size_t entries) {
  return cols * sizeof(std::vector<SparseBasis::Entry>) + entries * sizeof(SparseBasis::Entry);
}

Matrix multiply(const Matrix& a, const Matrix& b, std::uint64_t p) {
  const std::size_t n = a.size();
  Matrix out(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] = (out[i][j] + mul_mod(a[i][k], b[k][j], p)) % p;
    }
  return out;
}

bool is_identity(const Matrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i][j] != (i == j ? 1u : 0u)) return false;
  return true;
}

// Streaming coboundary d^n : C^n -> C^{n+1} of the (optionally normalized)
// inhomogeneous bar complex.
class Coboundary {
 public:
  Coboundary(const ConcreteGroup& group, const FpModule& module, bool normalized)
      : group_(group),
        module_(module),
        normalized_(normalized),
        letters_(normalized ? group.order() - 1 : group.order()) {}

  std::uint64_t letters() const { return letters_; }

  // dim C^n, or nullopt on overflow.
  std::optional<std::size_t> cochain_dim(int n) const {
    std::size_t out = module_.dim();
    for (int i = 0; i < n; ++i) {
      if (__builtin_mul_overflow(out, static_cast<std::size_t>(letters_), &out)) return std::nullopt;
    }
    return out;
  }

  // Calls emit(column, coefficient) for every term of row (tuple, r) of d^n;
  // `tuple` holds n+1 group elements.
  template <class Emit>
  void row_terms(int n, const std::vector<std::uint32_t>& tuple, std::size_t r, Emit&& emit) const {
    const std::uint64_t p = module_.p();
    const std::size_t dim = module_.dim();
    const std::uint64_t minus_one = p - 1;
    auto column = [&](std::size_t skip_lo, std::size_t count, std::int64_t merged_at,
                      std::uint32_t merged) -> std::size_t {
      // Index of the n-tuple built from `tuple`: positions [skip_lo, skip_lo +
      // count) with the pair at merged_at replaced by `merged`.
      std::size_t idx = 0;
      for (std::size_t i = skip_lo; i < skip_lo + count + (merged_at >= 0 ? 1 : 0); ++i) {
        std::uint32_t g;
        if (merged_at >= 0 && static_cast<std::int64_t>(i) == merged_at) {
          g = merged;
        } else if (merged_at >= 0 && static_cast<std::int64_t>(i) == merged_at + 1) {
          continue;
        } else {
          g = tuple[i];
        }
        idx = idx * letters_ + letter(g);
      }
      return idx;
    };
    const auto nn = static_cast<std::size_t>(n);
    // g_1 . f(g_2, ..., g_{n+1})
    {
      const std::size_t base = column(1, nn, -1, 0) * dim;
      const Matrix& rho = module_.action(tuple[0]);
      for (std::size_t s = 0; s < dim; ++s) {
        if (rho[r][s] != 0) emit(base + s, rho[r][s]);
      }
    }
    // (-1)^i f(..., g_i g_{i+1}, ...)
    for (std::size_t i = 0; i < nn; ++i) {
      const std::uint32_t prod = group_.mul(tuple[i], tuple[i + 1]);
      if (normalized_ && prod == 0) continue;
      const std::size_t col = column(0, nn, static_cast<std::int64_t>(i), prod) * dim + r;
      emit(col, (i % 2 == 0) ? minus_one : 1);
    }
    // (-1)^{n+1} f(g_1, ..., g_n)
    emit(column(0, nn, -1, 0) * dim + r, (nn % 2 == 0) ? minus_one : 1);
  }

  SparseMatrix matrix(int n) const {
    const auto rows = cochain_dim(n + 1);
    const auto cols = cochain_dim(n);
    if (!rows || !cols) throw InvalidArgument("cochain space too large");
    SparseMatrix out;
    out.rows = *rows;
    out.cols = *cols;
    out.entries.resize(out.rows);
    const std::uint64_t p = module_.p();
    const std::size_t dim = module_.dim();
    std::vector<std::uint32_t> tuple(static_cast<std::size_t>(n) + 1, first_letter());
    std::size_t row_index = 0;
    for (std::size_t t = 0; t < out.rows / dim; ++t, advance(tuple)) {
      for (std::size_t r = 0; r < dim; ++r, ++row_index) {
        std::map<std::size_t, std::uint64_t> acc;
        row_terms(n, tuple, r, [&](std::size_t c, std::uint64_t v) { acc[c] = (acc[c] + v) % p; });
        for (const auto& [c, v] : acc) {
          if (v != 0) out.entries[row_index].emplace_back(c, v);
        }
      }
    }
    return out;
  }

  // Rank of d^n, stopping once `bound` is reached. Throws BudgetExceeded
  // when the stored pivot rows outgrow `budget` bytes.
  std::int64_t rank(int n, std::size_t rows, std::size_t cols, std::size_t bound,
                    std::size_t budget) const {
    if (rows == 0 || cols == 0 || bound == 0) return 0;
    const std::size_t dim = module_.dim();
    SparseBasis basis(cols, static_cast<std::uint32_t>(module_.p()));
    std::vector<std::uint32_t> tuple(static_cast<std::size_t>(n) + 1, first_letter());
    std::vector<SparseBasis::Entry> row;
    const std::size_t tuples = rows / dim;
    for (std::size_t t = 0; t < tuples; ++t, advance(tuple)) {
      for (std::size_t r = 0; r < dim; ++r) {
        row.clear();
        row_terms(n, tuple, r, [&](std::size_t c, std::uint64_t v) {
          row.emplace_back(static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(v));
        });
        if (basis.insert(row)) {
          const std::size_t used = sparse_basis_bytes(cols, basis.stored_entries());
          if (used > budget) throw BudgetExceeded(used, budget);
          if (basis.rank() >= bound) return static_cast<std::int64_t>(basis.rank());
        }
      }
    }
    return static_cast<std::int64_t>(basis.rank());
  }

 private:
  std::uint32_t first_letter() const { return normalized_ ? 1 : 0; }
  std::size_t letter(std::uint32_t g) const { return normalized_ ? g - 1 : g; }

  // Odometer over S^{n+1}, last position fastest (matches column order).
  void advance(std::vector<std::uint32_t>& tuple) const {
    for (std::size_t i = tuple.size(); i-- > 0;) {
      if (++tuple[i] < group_.order()) return;
      tuple[i] = first_letter();
    }
  }

  const ConcreteGroup& group_;
  const FpModule& module_;
  bool normalized_;
  std::uint64_t letters_;
};

}  // namespace

std::size_t oracle_memory_bytes(std::size_t cochain_dim, int n, std::size_t module_dim) {
  // A full pivot set of rows no longer than the unreduced ones.
  const std::size_t row_len = (static_cast<std::size_t>(n) + 2) * module_dim;
  return sparse_basis_bytes(cochain_dim, cochain_dim * row_len);
}

SparseMatrix coboundary_matrix(const ConcreteGroup& group, const FpModule& module, int n,
                               bool normalized) {
  if (n < 0) throw InvalidArgument("degree must be >= 0");
  return Coboundary(group, module, normalized).matrix(n);
}

namespace {

struct ComplexRanks {
  std::vector<std::int64_t> dims;   // dim C^0..C^{n_max}
  std::vector<std::int64_t> ranks;  // rank d^0..d^{n_max}
};

ComplexRanks compute_ranks(const ConcreteGroup& group, const FpModule& module, int n_max,
                           const OracleOptions& options) {
  if (n_max < 0) throw InvalidArgument("degree must be >= 0");
  const Coboundary d(group, module, options.normalized);
  // Budget check for every coboundary before doing any work.
  for (int j = 0; j <= n_max; ++j) {
    const auto rows = d.cochain_dim(j + 1);
    const auto cols = d.cochain_dim(j);
    if (!rows || !cols) throw BudgetExceeded(std::numeric_limits<std::size_t>::max(), options.memory_budget);
    const std::size_t need = oracle_memory_bytes(*cols, j, module.dim());
    if (need > options.memory_budget) throw BudgetExceeded(need, options.memory_budget);
  }
  ComplexRanks out;
  std::int64_t previous = 0;
  for (int j = 0; j <= n_max; ++j) {
    const std::size_t rows = *d.cochain_dim(j + 1);
    const std::size_t cols = *d.cochain_dim(j);
    // im d^{j-1} lies in ker d^j, so rank d^j <= dim C^j - rank d^{j-1}.
    const std::size_t bound = cols - static_cast<std::size_t>(previous);
    previous = d.rank(j, rows, cols, bound, options.memory_budget);
    out.dims.push_back(static_cast<std::int64_t>(cols));
    out.ranks.push_back(previous);
  }
  return out;
}

}  // namespace

FpModule::FpModule(const ConcreteGroup& group, std::uint64_t p, std::vector<Matrix> action)
    : p_(p), action_(std::move(action)) {
  if (!is_prime(p)) throw InvalidArgument("FpModule: " + std::to_string(p) + " is not prime");
  if (p > UINT32_MAX) throw InvalidArgument("FpModule: prime too large");
  if (action_.size() != group.order()) {
    throw InvalidArgument("FpModule: need one matrix per group element");
  }
  dim_ = action_[0].size();
  if (dim_ == 0) throw InvalidArgument("FpModule: dimension must be positive");
  for (const Matrix& a : action_) {
    if (a.size() != dim_) throw InvalidArgument("FpModule: inconsistent matrix sizes");
    for (const auto& row : a) {
      if (row.size() != dim_) throw InvalidArgument("FpModule: matrices must be square");
      for (std::uint64_t v : row) {
        if (v >= p) throw InvalidArgument("FpModule: entries must be reduced mod p");
      }
    }
  }
  if (!is_identity(action_[0])) throw InvalidArgument("FpModule: identity must act trivially");
  const std::uint32_t n = group.order();
  if (n <= 64) {
    for (std::uint32_t g = 0; g < n; ++g)
      for (std::uint32_t h = 0; h < n; ++h)
        if (multiply(action_[g], action_[h], p) != action_[group.mul(g, h)]) {
          throw InvalidArgument("FpModule: action is not a homomorphism at (" +
                                std::to_string(g) + "," + std::to_string(h) + ")");
        }
  } else {
    for (std::uint32_t g = 0; g < n; ++g)
      if (!is_identity(multiply(action_[g], action_[group.inverse(g)], p))) {
        throw InvalidArgument("FpModule: matrix of element " + std::to_string(g) +
                              " is not inverse to that of its inverse");
      }
  }
}

FpModule FpModule::trivial(const ConcreteGroup& group, std::uint64_t p, std::size_t dim) {
  Matrix id(dim, std::vector<std::uint64_t>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) id[i][i] = 1;
  return FpModule(group, p, std::vector<Matrix>(group.order(), id));
}

FpModule FpModule::one_dimensional(const ConcreteGroup& group, std::uint64_t p,
                                   const std::vector<std::uint64_t>& scalars) {
  std::vector<Matrix> action;
  action.reserve(scalars.size());
  for (std::uint64_t s : scalars) action.push_back(Matrix{{s % p}});
  return FpModule(group, p, std::move(action));
}

FpModule FpModule::relabeled(const ConcreteGroup& relabeled_group,
                             const std::vector<std::uint32_t>& perm) const {
  std::vector<Matrix> action(action_.size());
  for (std::size_t g = 0; g < action_.size(); ++g) action[perm[g]] = action_[g];
  return FpModule(relabeled_group, p_, std::move(action));
}

std::size_t parse_memory_size(const std::string& text) {
  std::size_t i = 0;
  unsigned long long value = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    const unsigned digit = static_cast<unsigned>(text[i] - '0');
    if (value > (std::numeric_limits<unsigned long long>::max() - digit) / 10) {
      throw InvalidArgument("memory size too large: '" + text + "'");
    }
    value = value * 10 + digit;
    ++i;
  }
  if (i == 0) throw InvalidArgument("bad memory size '" + text + "'");
  unsigned long long scale = 1;
  if (i < text.size()) {
    switch (std::toupper(static_cast<unsigned char>(text[i]))) {
      case 'K': scale = 1ull << 10; break;
      case 'M': scale = 1ull << 20; break;
      case 'G': scale = 1ull << 30; break;
      default: throw InvalidArgument("bad memory size suffix in '" + text + "'");
    }
    ++i;
    if (i < text.size() && std::toupper(static_cast<unsigned char>(text[i])) == 'B') ++i;
    if (i != text.size()) throw InvalidArgument("bad memory size '" + text + "'");
  }
  unsigned long long out;
  if (__builtin_mul_overflow(value, scale, &out)) {
    throw InvalidArgument("memory size too large: '" + text + "'");
  }
  return static_cast<std::size_t>(out);
}

std::size_t default_memory_budget() {
  if (const char* env = std::getenv("QBOUNDS_MEMORY_BUDGET"); env != nullptr && *env != '\0') {
    return parse_memory_size(env);
  }
  return std::size_t{2} << 30;
}

OracleOptions default_oracle_options() { return OracleOptions{default_memory_budget(), true}; }

RankResult cochain_cohomology_dim(const ConcreteGroup& group, const FpModule& module, int n,
                                  const OracleOptions& options) {
  const ComplexRanks cr = compute_ranks(group, module, n, options);
  const auto un = static_cast<std::size_t>(n);
  RankResult out;
  out.n = n;
  out.dim_cochains[0] = n > 0 ? cr.dims[un - 1] : 0;
  out.dim_cochains[1] = cr.dims[un];
  const Coboundary d(group, module, options.normalized);
  out.dim_cochains[2] = static_cast<std::int64_t>(*d.cochain_dim(n + 1));
  out.rank_d_nm1 = n > 0 ? cr.ranks[un - 1] : 0;
  out.rank_d_n = cr.ranks[un];
  out.h_n = out.dim_cochains[1] - out.rank_d_n - out.rank_d_nm1;
  return out;
}

std::vector<std::int64_t> cochain_cohomology_dims(const ConcreteGroup& group,
                                                  const FpModule& module, int n_max,
                                                  const OracleOptions& options) {
  const ComplexRanks cr = compute_ranks(group, module, n_max, options);
  std::vector<std::int64_t> out;
  for (std::size_t j = 0; j < cr.dims.size(); ++j) {
    out.push_back(cr.dims[j] - cr.ranks[j] - (j > 0 ? cr.ranks[j - 1] : 0));
  }
  return out;
}

std::vector<SeriesCheck> verify_series(const GroupSpec& spec, std::uint64_t p, int n_max,
                                       const OracleOptions& options) {
  const ConcreteGroup group = realize(spec, 64);
  const DimSeries closed = series_for_spec(spec, Field::mod(p), n_max);
  const auto oracle = cochain_cohomology_dims(group, FpModule::trivial(group, p), n_max, options);
  std::vector<SeriesCheck> out;
  for (int n = 0; n <= n_max; ++n) {
    const std::int64_t c = closed[n];
    const std::int64_t o = oracle[static_cast<std::size_t>(n)];
    out.push_back(SeriesCheck{n, c, o, c == o});
  }
  return out;
}

}  // namespace qbounds
