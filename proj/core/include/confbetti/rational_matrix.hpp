// Sparse exact-rational matrices.
#pragma once

#include "confbetti/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace confbetti {

struct MatrixEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  Rational value;
};

/// Column-oriented sparse matrix; stored entries are nonzero, in range, and
/// sorted by (col, row) with no duplicates.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  /// Adds value to entry (row, col). Throws std::out_of_range for bad indices.
  void add(std::size_t row, std::size_t col, const Rational& value);

  Rational at(std::size_t row, std::size_t col) const;

  /// Sparse column: (row, value) pairs sorted by row.
  const std::vector<std::pair<std::size_t, Rational>>& column(std::size_t col) const { return columns_[col]; }

  std::vector<MatrixEntry> entries() const;
  bool is_zero() const { return nonzeros() == 0; }

  RationalMatrix transpose() const;

  /// this * rhs. Throws std::invalid_argument on a shape mismatch.
  RationalMatrix multiply(const RationalMatrix& rhs) const;

  /// Plain-text triplets "row col value", one per line, after a
  /// "rows cols" header line.
  void write_triplets(std::ostream& out) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> columns_;
};

}  // namespace confbetti
