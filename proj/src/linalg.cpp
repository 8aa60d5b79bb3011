#include "selfdual/linalg.hpp"

#include <utility>

#include "selfdual/errors.hpp"

namespace selfdual {

Matrix::Matrix(FieldPtr f, std::size_t r, std::size_t c)
    : field(std::move(f)), rows(r), cols(c), a(r * c, 0) {
  if (!field) fail(Errc::invalid_input, "matrix requires a field");
}

Matrix matmul(const Matrix& x, const Matrix& y) {
  if (!x.field->same_field(*y.field)) fail(Errc::field_mismatch, "matrices over different fields");
  if (x.cols != y.rows) fail(Errc::shape_mismatch, "inner dimensions differ");
  Matrix out(x.field, x.rows, y.cols);
  const Field& f = *x.field;
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t k = 0; k < x.cols; ++k) {
      std::uint64_t v = x.get(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) {
        std::uint64_t w = y.get(k, j);
        if (w == 0) continue;
        out.set(i, j, f.add(out.get(i, j), f.mul(v, w)));
      }
    }
  }
  return out;
}

Matrix transpose(const Matrix& x) {
  Matrix out(x.field, x.cols, x.rows);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) out.set(j, i, x.get(i, j));
  return out;
}

bool all_zero(const Matrix& x) {
  for (auto v : x.a)
    if (v != 0) return false;
  return true;
}

std::size_t rref_in_place(Matrix& x) {
  const Field& f = *x.field;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < x.cols && rank < x.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < x.rows && x.get(pivot, col) == 0) ++pivot;
    if (pivot == x.rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < x.cols; ++j) {
        std::uint64_t t = x.get(rank, j);
        x.set(rank, j, x.get(pivot, j));
        x.set(pivot, j, t);
      }
    std::uint64_t inv = f.inv(x.get(rank, col));
    for (std::size_t j = col; j < x.cols; ++j) x.set(rank, j, f.mul(x.get(rank, j), inv));
    for (std::size_t i = 0; i < x.rows; ++i) {
      if (i == rank) continue;
      std::uint64_t c = x.get(i, col);
      if (c == 0) continue;
      for (std::size_t j = col; j < x.cols; ++j)
        x.set(i, j, f.sub(x.get(i, j), f.mul(c, x.get(rank, j))));
    }
    ++rank;
  }
  return rank;
}

Matrix nullspace(const Matrix& x) {
  Matrix r = x;
  std::size_t rank = rref_in_place(r);
  // pivot columns in row order
  std::vector<std::size_t> pivot_col(rank);
  std::vector<char> is_pivot(x.cols, 0);
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t c = 0;
    while (c < x.cols && r.get(i, c) == 0) ++c;
    pivot_col[i] = c;
    is_pivot[c] = 1;
  }
  Matrix out(x.field, x.cols - rank, x.cols);
  const Field& f = *x.field;
  std::size_t row = 0;
  for (std::size_t free = 0; free < x.cols; ++free) {
    if (is_pivot[free]) continue;
    out.set(row, free, 1);
    for (std::size_t i = 0; i < rank; ++i)
      out.set(row, pivot_col[i], f.neg(r.get(i, free)));
    ++row;
  }
  return out;
}

bool same_row_space(const Matrix& x, const Matrix& y) {
  if (!x.field->same_field(*y.field)) fail(Errc::field_mismatch, "matrices over different fields");
  if (x.cols != y.cols) fail(Errc::shape_mismatch, "row spaces live in different ambient spaces");
  Matrix rx = x, ry = y;
  std::size_t kx = rref_in_place(rx), ky = rref_in_place(ry);
  if (kx != ky) return false;
  for (std::size_t i = 0; i < kx; ++i)
    for (std::size_t j = 0; j < x.cols; ++j)
      if (rx.get(i, j) != ry.get(i, j)) return false;
  return true;
}

}  // namespace selfdual
