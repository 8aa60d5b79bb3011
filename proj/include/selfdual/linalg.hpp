#pragma once

#include <cstdint>
#include <vector>

#include "selfdual/gf.hpp"

namespace selfdual {

// Dense row-major matrix of element codes over a fixed field.
struct Matrix {
  FieldPtr field;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> a;  // rows * cols codes

  Matrix(FieldPtr f, std::size_t r, std::size_t c);
  std::uint64_t get(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
  void set(std::size_t r, std::size_t c, std::uint64_t v) { a[r * cols + c] = v; }
};

Matrix matmul(const Matrix& x, const Matrix& y);
Matrix transpose(const Matrix& x);
bool all_zero(const Matrix& x);

// In-place reduced row echelon form; returns the rank.
std::size_t rref_in_place(Matrix& x);

// Basis of the right null space {v : x * v^T = 0}, one vector per row;
// (cols - rank) rows, deterministic (free columns ascending).
Matrix nullspace(const Matrix& x);

// True iff the two matrices span the same row space (same field, same cols).
bool same_row_space(const Matrix& x, const Matrix& y);

}  // namespace selfdual
