#include "hyperlift/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperlift {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(rows * wpr_, 0) {}

void Gf2Matrix::set(std::size_t i, std::size_t j, FieldElement v) {
  const std::uint64_t mask = 1ull << (j % 64);
  if (v % 2)
    w_[i * wpr_ + j / 64] |= mask;
  else
    w_[i * wpr_ + j / 64] &= ~mask;
}

void Gf2Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(w_.begin() + static_cast<std::ptrdiff_t>(a * wpr_),
                   w_.begin() + static_cast<std::ptrdiff_t>((a + 1) * wpr_),
                   w_.begin() + static_cast<std::ptrdiff_t>(b * wpr_));
}

void Gf2Matrix::xor_rows(std::size_t dst, std::size_t src) {
  std::uint64_t* d = w_.data() + dst * wpr_;
  const std::uint64_t* s = w_.data() + src * wpr_;
  for (std::size_t k = 0; k < wpr_; ++k) d[k] ^= s[k];
}

ModMatrix::ModMatrix(std::size_t rows, std::size_t cols, int q)
    : rows_(rows), cols_(cols), field_(q), a_(rows * cols, 0) {}

void ModMatrix::set(std::size_t i, std::size_t j, FieldElement v) {
  if (v >= field_.order()) throw std::invalid_argument("entry out of field range");
  a_[i * cols_ + j] = v;
}

void ModMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(a_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                   a_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                   a_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
}

void ModMatrix::scale_row(std::size_t i, FieldElement c) {
  FieldElement* row = a_.data() + i * cols_;
  for (std::size_t j = 0; j < cols_; ++j) row[j] = field_.mul(row[j], c);
}

void ModMatrix::add_scaled_row(std::size_t dst, std::size_t src, FieldElement c) {
  if (c % field_.order() == 0) return;
  FieldElement* d = a_.data() + dst * cols_;
  const FieldElement* s = a_.data() + src * cols_;
  const int q = field_.order();
  for (std::size_t j = 0; j < cols_; ++j)
    d[j] = static_cast<FieldElement>((d[j] + c * s[j]) % q);
}

void ModMatrix::make_pivot_unit(std::size_t row, std::size_t col) {
  const FieldElement c = get(row, col);
  if (c != 1) scale_row(row, field_.inv(c));
}

void ModMatrix::clear_entry(std::size_t i, std::size_t pivot_row, std::size_t col) {
  const FieldElement c = get(i, col);
  if (c) add_scaled_row(i, pivot_row, field_.neg(c));
}

namespace {

template <class Matrix>
RrefSummary reduce_any(Matrix& m) {
  RrefSummary out;
  out.col_pivot_row.assign(m.cols(), -1);
  for (std::size_t col = 0; col < m.cols() && out.rank < m.rows(); ++col) {
    std::size_t piv = out.rank;
    while (piv < m.rows() && m.get(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(out.rank, piv);
    m.make_pivot_unit(out.rank, col);
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != out.rank) m.clear_entry(i, out.rank, col);
    out.col_pivot_row[col] = static_cast<int>(out.rank);
    out.pivot_cols.push_back(static_cast<int>(col));
    ++out.rank;
  }
  return out;
}

}  // namespace

RrefSummary row_reduce(Gf2Matrix& m) { return reduce_any(m); }
RrefSummary row_reduce(ModMatrix& m) { return reduce_any(m); }

}  // namespace hyperlift
