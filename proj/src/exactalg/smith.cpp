#include "tstruct/exactalg/smith.hpp"

#include <algorithm>

namespace tstruct::exactalg {

namespace {

// Elementary operations applied to the working matrix and both transform pairs.
class Reducer {
 public:
  Reducer(const Ring& R, const Matrix& M)
      : R_(R),
        A(M),
        U(Matrix::identity(R, M.rows())),
        Uinv(Matrix::identity(R, M.rows())),
        V(Matrix::identity(R, M.cols())),
        Vinv(Matrix::identity(R, M.cols())) {}

  // row i += q * row j
  void row_addmul(std::size_t i, std::size_t j, const Elem& q) {
    for (std::size_t c = 0; c < A.cols(); ++c) A.at(i, c) = R_.add(A.at(i, c), R_.mul(q, A.at(j, c)));
    for (std::size_t c = 0; c < U.cols(); ++c) U.at(i, c) = R_.add(U.at(i, c), R_.mul(q, U.at(j, c)));
    for (std::size_t r = 0; r < Uinv.rows(); ++r) {
      Uinv.at(r, j) = R_.sub(Uinv.at(r, j), R_.mul(q, Uinv.at(r, i)));
    }
  }

  // col j += q * col i
  void col_addmul(std::size_t j, std::size_t i, const Elem& q) {
    for (std::size_t r = 0; r < A.rows(); ++r) A.at(r, j) = R_.add(A.at(r, j), R_.mul(q, A.at(r, i)));
    for (std::size_t r = 0; r < V.rows(); ++r) V.at(r, j) = R_.add(V.at(r, j), R_.mul(q, V.at(r, i)));
    for (std::size_t c = 0; c < Vinv.cols(); ++c) {
      Vinv.at(i, c) = R_.sub(Vinv.at(i, c), R_.mul(q, Vinv.at(j, c)));
    }
  }

  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < A.cols(); ++c) std::swap(A.at(i, c), A.at(j, c));
    for (std::size_t c = 0; c < U.cols(); ++c) std::swap(U.at(i, c), U.at(j, c));
    for (std::size_t r = 0; r < Uinv.rows(); ++r) std::swap(Uinv.at(r, i), Uinv.at(r, j));
  }

  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < A.rows(); ++r) std::swap(A.at(r, i), A.at(r, j));
    for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V.at(r, i), V.at(r, j));
    for (std::size_t c = 0; c < Vinv.cols(); ++c) std::swap(Vinv.at(i, c), Vinv.at(j, c));
  }

  void row_scale(std::size_t i, const Elem& u) {
    const Elem uinv = R_.inverse(u);
    for (std::size_t c = 0; c < A.cols(); ++c) A.at(i, c) = R_.mul(u, A.at(i, c));
    for (std::size_t c = 0; c < U.cols(); ++c) U.at(i, c) = R_.mul(u, U.at(i, c));
    for (std::size_t r = 0; r < Uinv.rows(); ++r) Uinv.at(r, i) = R_.mul(Uinv.at(r, i), uinv);
  }

  const Ring& R_;
  Matrix A, U, Uinv, V, Vinv;
};

}  // namespace

SmithForm smith_normal_form(const Ring& R, const Matrix& M) {
  Reducer red(R, M);
  Matrix& A = red.A;
  const std::size_t m = A.rows(), n = A.cols();
  std::size_t t = 0;

  while (t < std::min(m, n)) {
    // Smallest-norm nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (R.is_zero(A.at(i, j))) continue;
        if (!found || R.compare_norm(A.at(i, j), A.at(pi, pj)) < 0) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    }
    if (!found) break;
    red.row_swap(t, pi);
    red.col_swap(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (R.is_zero(A.at(i, t))) continue;
        Elem q = R.divmod(A.at(i, t), A.at(t, t)).first;
        red.row_addmul(i, t, R.neg(q));
        if (!R.is_zero(A.at(i, t))) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (R.is_zero(A.at(t, j))) continue;
        Elem q = R.divmod(A.at(t, j), A.at(t, t)).first;
        red.col_addmul(j, t, R.neg(q));
        if (!R.is_zero(A.at(t, j))) clean = false;
      }
      if (!clean) {
        // A remainder survived: it has smaller norm than the pivot, swap it in.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (!R.is_zero(A.at(i, t)) && R.compare_norm(A.at(i, t), A.at(bi, bj)) < 0) {
            bi = i;
            bj = t;
          }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!R.is_zero(A.at(t, j)) && R.compare_norm(A.at(t, j), A.at(bi, bj)) < 0) {
            bi = t;
            bj = j;
          }
        }
        red.row_swap(t, bi);
        red.col_swap(t, bj);
        continue;
      }
      // Row and column are clear; enforce divisibility of the trailing block.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!R.divides(A.at(t, t), A.at(i, j))) {
            red.row_addmul(t, i, R.one());
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    ++t;
  }

  SmithForm out;
  out.rank = t;
  for (std::size_t k = 0; k < t; ++k) {
    const Elem u = R.unit_part(A.at(k, k));
    if (!R.is_one(u)) red.row_scale(k, R.inverse(u));
    out.divisors.push_back(A.at(k, k));
  }
  out.row_transform = std::move(red.U);
  out.col_transform = std::move(red.V);
  out.row_inverse = std::move(red.Uinv);
  out.col_inverse = std::move(red.Vinv);
  return out;
}

}  // namespace tstruct::exactalg
