#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mcalc {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

std::string to_decimal(const Integer& value);
std::string to_string(std::span<const Integer> vector);

/// gcd of all entries; zero for the zero (or empty) vector.
Integer content(std::span<const Integer> vector);
bool is_zero(std::span<const Integer> vector);

/// Dense row-major matrix over arbitrary-precision integers.
///
/// Zero-sized dimensions are legal: a 2x0 matrix presents Z^2 with no
/// relations and a 0x0 matrix is the identity of the zero lattice.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const Integer> entries);
  /// Matrix whose columns are the given vectors; every vector must have `rows` entries.
  static IntMatrix from_columns(std::size_t rows, std::span<const IntVector> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;

  IntMatrix transpose() const;
  /// Columns [first, first + count).
  IntMatrix column_block(std::size_t first, std::size_t count) const;
  /// Horizontal concatenation [this | other]; row counts must agree.
  IntMatrix concat_columns(const IntMatrix& other) const;

  bool is_symmetric() const;
  bool is_zero() const;
  bool is_identity() const;
  Integer max_abs_entry() const;

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVector operator*(std::span<const Integer> vector) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;

  // Elementary operations; the building blocks of every reduction in linalg.
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  /// Nested-list form, e.g. [[1,0],[0,1]].
  std::string to_string() const;

  friend bool operator==(const IntMatrix& lhs, const IntMatrix& rhs);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

}  // namespace mcalc
