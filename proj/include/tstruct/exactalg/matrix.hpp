// Dense matrices over a Ring. Column-vector convention: an m x n matrix maps R^n -> R^m.
#pragma once

#include <cstddef>
#include <vector>

#include "tstruct/exactalg/ring.hpp"

namespace tstruct::exactalg {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Elem& fill);

  static Matrix zero(const Ring& R, std::size_t rows, std::size_t cols);
  static Matrix identity(const Ring& R, std::size_t n);
  /// Diagonal matrix with the given entries (rows x cols, entries on (i, i)).
  static Matrix diagonal(const Ring& R, std::size_t rows, std::size_t cols, const std::vector<Elem>& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

bool is_zero(const Ring& R, const Matrix& A);
Matrix multiply(const Ring& R, const Matrix& A, const Matrix& B);
Matrix add(const Ring& R, const Matrix& A, const Matrix& B);
Matrix negate(const Ring& R, const Matrix& A);
Matrix scale(const Ring& R, const Elem& s, const Matrix& A);
Matrix transpose(const Matrix& A);
Matrix kronecker(const Ring& R, const Matrix& A, const Matrix& B);

/// Copies `block` into `target` with its top-left corner at (row, col).
void place(Matrix& target, const Matrix& block, std::size_t row, std::size_t col);
Matrix submatrix(const Matrix& A, std::size_t row, std::size_t col, std::size_t rows, std::size_t cols);
Matrix select_columns(const Matrix& A, const std::vector<std::size_t>& cols);
Matrix select_rows(const Matrix& A, const std::vector<std::size_t>& rows);
Matrix hstack(const Ring& R, const std::vector<Matrix>& blocks, std::size_t rows);
Matrix block_diagonal(const Ring& R, const std::vector<Matrix>& blocks);

/// Applies the ring homomorphism `map` entrywise.
template <typename F>
Matrix map_entries(const Matrix& A, F&& map) {
  Matrix out = A;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) out.at(i, j) = map(A.at(i, j));
  }
  return out;
}

/// Determinant by fraction-free Bareiss elimination over the base ring.
Elem determinant(const Ring& R, const Matrix& A);

}  // namespace tstruct::exactalg
