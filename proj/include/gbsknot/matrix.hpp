#pragma once

#include "gbsknot/integer.hpp"

#include <cstddef>
#include <vector>

namespace gbsknot {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Integer> row(std::size_t r) const;
  void append_row(const std::vector<Integer>& row);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct SmithForm {
  /// Nonzero invariant factors d_1 | d_2 | ... | d_r, all positive.
  std::vector<Integer> divisors;
  /// Free rank of the cokernel: columns - r.
  std::size_t free_rank = 0;
};

/// Diagonalises by unimodular row and column operations, always pivoting
/// on the entry of smallest absolute value in the remaining block.
SmithForm smith_normal_form(IntMatrix m);

/// Row-style Hermite normal form of the row lattice: upper echelon,
/// positive pivots, entries above a pivot reduced into [0, pivot). Zero
/// rows are dropped, so equal lattices give equal results.
IntMatrix hermite_normal_form(IntMatrix m);

}  // namespace gbsknot
