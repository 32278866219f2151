#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gbtc {

struct Triplet {
  std::size_t row = 0;
  std::size_t col = 0;
  long value = 0;
};

/// Integer matrix stored by rows; each row sorted by column, no zeros.
class SparseIntMatrix {
 public:
  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  /// Adds `value` to entry (row, col).
  void add(std::size_t row, std::size_t col, long value);
  long at(std::size_t row, std::size_t col) const;
  const std::vector<std::pair<std::size_t, long>>& row(std::size_t r) const { return data_.at(r); }

  std::vector<Triplet> triplets() const;

  /// (*this) * other; throws std::invalid_argument on a shape mismatch.
  SparseIntMatrix multiply(const SparseIntMatrix& other) const;
  bool is_zero() const { return nonzeros() == 0; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<std::pair<std::size_t, long>>> data_;
};

/// Rank over the rationals by fraction-free sparse row reduction. Runs in
/// 64-bit integers and restarts with arbitrary precision if an entry would
/// overflow. Graph incidence matrices (one +1 and one -1 per row) are ranked
/// by union-find.
std::size_t rational_rank(const SparseIntMatrix& m);

/// Rank over the rationals by dense Bareiss elimination in arbitrary
/// precision. Slow; intended as an independent check on small matrices.
std::size_t rational_rank_dense(const SparseIntMatrix& m);

}  // namespace gbtc
