#pragma once

#include <cstdint>
#include <vector>

#include "hyperlift/field.hpp"

namespace hyperlift {

/// Dense matrix over F_2, rows packed 64 entries per machine word.
class Gf2Matrix {
 public:
  Gf2Matrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int modulus() const { return 2; }

  FieldElement get(std::size_t i, std::size_t j) const {
    return static_cast<FieldElement>(w_[i * wpr_ + j / 64] >> (j % 64) & 1u);
  }
  void set(std::size_t i, std::size_t j, FieldElement v);

  void swap_rows(std::size_t a, std::size_t b);
  void xor_rows(std::size_t dst, std::size_t src);

  // Elimination hooks shared with ModMatrix.
  void make_pivot_unit(std::size_t, std::size_t) {}
  void clear_entry(std::size_t i, std::size_t pivot_row, std::size_t col) {
    if (get(i, col)) xor_rows(i, pivot_row);
  }

 private:
  std::size_t rows_, cols_, wpr_;
  std::vector<std::uint64_t> w_;
};

/// Dense matrix over a prime field F_q, one byte per entry.
class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols, int q);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int modulus() const { return field_.order(); }

  FieldElement get(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, FieldElement v);

  void swap_rows(std::size_t a, std::size_t b);
  void scale_row(std::size_t i, FieldElement c);
  /// row dst += c * row src
  void add_scaled_row(std::size_t dst, std::size_t src, FieldElement c);

  void make_pivot_unit(std::size_t row, std::size_t col);
  void clear_entry(std::size_t i, std::size_t pivot_row, std::size_t col);

 private:
  std::size_t rows_, cols_;
  PrimeField field_;
  std::vector<FieldElement> a_;
};

/// Result of in-place reduction to reduced row echelon form.
struct RrefSummary {
  std::size_t rank = 0;
  std::vector<int> pivot_cols;     ///< pivot column of row i, for i < rank
  std::vector<int> col_pivot_row;  ///< per column: owning pivot row, -1 if free
};

/// Deterministic RREF: pivots are the first nonzero entry in column order.
RrefSummary row_reduce(Gf2Matrix& m);
RrefSummary row_reduce(ModMatrix& m);

}  // namespace hyperlift
