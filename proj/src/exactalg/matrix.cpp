#include "tstruct/exactalg/matrix.hpp"

namespace tstruct::exactalg {

Matrix::Matrix(std::size_t rows, std::size_t cols, const Elem& fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::zero(const Ring& R, std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols, R.zero());
}

Matrix Matrix::identity(const Ring& R, std::size_t n) {
  Matrix m = zero(R, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = R.one();
  return m;
}

Matrix Matrix::diagonal(const Ring& R, std::size_t rows, std::size_t cols, const std::vector<Elem>& diag) {
  Matrix m = zero(R, rows, cols);
  for (std::size_t i = 0; i < diag.size() && i < rows && i < cols; ++i) m.at(i, i) = diag[i];
  return m;
}

bool is_zero(const Ring& R, const Matrix& A) {
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) {
      if (!R.is_zero(A.at(i, j))) return false;
    }
  }
  return true;
}

Matrix multiply(const Ring& R, const Matrix& A, const Matrix& B) {
  if (A.cols() != B.rows()) throw InputError("matrix product shape mismatch");
  Matrix C = Matrix::zero(R, A.rows(), B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t k = 0; k < A.cols(); ++k) {
      const Elem& a = A.at(i, k);
      if (R.is_zero(a)) continue;
      for (std::size_t j = 0; j < B.cols(); ++j) {
        if (R.is_zero(B.at(k, j))) continue;
        C.at(i, j) = R.add(C.at(i, j), R.mul(a, B.at(k, j)));
      }
    }
  }
  return C;
}

Matrix add(const Ring& R, const Matrix& A, const Matrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) throw InputError("matrix sum shape mismatch");
  Matrix C = A;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) C.at(i, j) = R.add(A.at(i, j), B.at(i, j));
  }
  return C;
}

Matrix negate(const Ring& R, const Matrix& A) {
  return map_entries(A, [&](const Elem& x) { return R.neg(x); });
}

Matrix scale(const Ring& R, const Elem& s, const Matrix& A) {
  return map_entries(A, [&](const Elem& x) { return R.mul(s, x); });
}

Matrix transpose(const Matrix& A) {
  Matrix T(A.cols(), A.rows(), Elem{});
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) T.at(j, i) = A.at(i, j);
  }
  return T;
}

Matrix kronecker(const Ring& R, const Matrix& A, const Matrix& B) {
  Matrix K = Matrix::zero(R, A.rows() * B.rows(), A.cols() * B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) {
      const Elem& a = A.at(i, j);
      if (R.is_zero(a)) continue;
      for (std::size_t k = 0; k < B.rows(); ++k) {
        for (std::size_t l = 0; l < B.cols(); ++l) {
          if (R.is_zero(B.at(k, l))) continue;
          K.at(i * B.rows() + k, j * B.cols() + l) = R.mul(a, B.at(k, l));
        }
      }
    }
  }
  return K;
}

void place(Matrix& target, const Matrix& block, std::size_t row, std::size_t col) {
  if (row + block.rows() > target.rows() || col + block.cols() > target.cols()) {
    throw InputError("block placement out of range");
  }
  for (std::size_t i = 0; i < block.rows(); ++i) {
    for (std::size_t j = 0; j < block.cols(); ++j) target.at(row + i, col + j) = block.at(i, j);
  }
}

Matrix submatrix(const Matrix& A, std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) {
  Matrix S(rows, cols, Elem{});
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) S.at(i, j) = A.at(row + i, col + j);
  }
  return S;
}

Matrix select_columns(const Matrix& A, const std::vector<std::size_t>& cols) {
  Matrix S(A.rows(), cols.size(), Elem{});
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) S.at(i, j) = A.at(i, cols[j]);
  }
  return S;
}

Matrix select_rows(const Matrix& A, const std::vector<std::size_t>& rows) {
  Matrix S(rows.size(), A.cols(), Elem{});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) S.at(i, j) = A.at(rows[i], j);
  }
  return S;
}

Matrix hstack(const Ring& R, const std::vector<Matrix>& blocks, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw InputError("hstack row mismatch");
    cols += b.cols();
  }
  Matrix out = Matrix::zero(R, rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    place(out, b, 0, offset);
    offset += b.cols();
  }
  return out;
}

Matrix block_diagonal(const Ring& R, const std::vector<Matrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix out = Matrix::zero(R, rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    place(out, b, r, c);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

Elem determinant(const Ring& R, const Matrix& A_in) {
  if (A_in.rows() != A_in.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = A_in.rows();
  if (n == 0) return R.one();
  Matrix A = A_in;
  Elem prev = R.one();
  bool negative = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (R.is_zero(A.at(k, k))) {
      std::size_t swap = k + 1;
      while (swap < n && R.is_zero(A.at(swap, k))) ++swap;
      if (swap == n) return R.zero();
      for (std::size_t j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(swap, j));
      negative = !negative;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Elem v = R.sub(R.mul(A.at(i, j), A.at(k, k)), R.mul(A.at(i, k), A.at(k, j)));
        A.at(i, j) = R.exact_div(v, prev);
      }
    }
    prev = A.at(k, k);
  }
  Elem det = A.at(n - 1, n - 1);
  return negative ? R.neg(det) : det;
}

}  // namespace tstruct::exactalg
