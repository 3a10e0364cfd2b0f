#include "tstruct/complex/cohomology.hpp"

#include "tstruct/complex/operations.hpp"
#include "tstruct/exactalg/smith.hpp"

namespace tstruct::complex {

using namespace exactalg;

namespace {

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(i);
  return out;
}

SmithForm snf(const Ring& R, const Matrix& M) {
  if (M.empty()) {
    SmithForm s;
    s.rank = 0;
    s.row_transform = s.row_inverse = Matrix::identity(R, M.rows());
    s.col_transform = s.col_inverse = Matrix::identity(R, M.cols());
    return s;
  }
  return smith_normal_form(R, M);
}

}  // namespace

Matrix Decomposition::vector(int n, std::size_t column) const {
  return select_columns(basis.at(n), {column});
}

Decomposition decompose(const PerfectComplex& C) {
  const Ring& R = C.ring();
  Decomposition out{C, {}, {}, {}};
  if (C.empty()) return out;
  const int lo = C.lo(), hi = C.hi();

  // SNF of each differential splits C^n = S_n (+) K_n with K_n = ker d^n.
  std::map<int, SmithForm> dsnf;
  std::map<int, std::size_t> r;  // rank of d^n
  for (int n = lo - 1; n <= hi; ++n) {
    dsnf[n] = snf(R, C.diff(n));
    r[n] = dsnf[n].rank;
  }
  // X_n expresses d^{n-1}(S_{n-1}) in the basis of K_n; its SNF pairs them.
  std::map<int, SmithForm> xsnf;
  for (int n = lo; n <= hi + 1; ++n) {
    const std::size_t k = C.rank(n) - (n <= hi ? r[n] : 0);
    Matrix X = Matrix::zero(R, k, r[n - 1]);
    if (n <= hi && r[n - 1] > 0 && k > 0) {
      Matrix S_prev = select_columns(dsnf[n - 1].col_transform, range(0, r[n - 1]));
      Matrix img = multiply(R, dsnf[n].col_inverse, multiply(R, C.diff(n - 1), S_prev));
      X = submatrix(img, r[n], 0, k, r[n - 1]);
    }
    xsnf[n] = snf(R, X);
    if (xsnf[n].rank != r[n - 1]) throw std::logic_error("decompose: boundary map lost rank");
  }

  for (int n = lo; n <= hi; ++n) {
    const std::size_t rank = C.rank(n), rn = r[n], k = rank - rn;
    const Matrix& V = dsnf[n].col_transform;
    const Matrix& Vinv = dsnf[n].col_inverse;
    Matrix K = select_columns(V, range(rn, rank));
    Matrix S = select_columns(V, range(0, rn));
    Matrix B = hstack(R, {multiply(R, K, xsnf[n].row_inverse), multiply(R, S, xsnf[n + 1].col_transform)}, rank);
    Matrix Binv = Matrix::zero(R, rank, rank);
    place(Binv, multiply(R, xsnf[n].row_transform, select_rows(Vinv, range(rn, rank))), 0, 0);
    place(Binv, multiply(R, xsnf[n + 1].col_inverse, select_rows(Vinv, range(0, rn))), k, 0);
    out.basis[n] = std::move(B);
    out.basis_inverse[n] = std::move(Binv);

    const std::size_t kprev = C.rank(n - 1) - r[n - 1];
    for (std::size_t j = 0; j < k; ++j) {
      Piece p;
      p.degree = n;
      p.top = j;
      if (j < r[n - 1]) {
        p.divisor = xsnf[n].divisors[j];
        p.kind = R.is_unit(p.divisor) ? Piece::Kind::Contractible : Piece::Kind::Torsion;
        p.bottom = kprev + j;
      } else {
        p.kind = Piece::Kind::Free;
        p.divisor = R.zero();
      }
      out.pieces.push_back(std::move(p));
    }
  }
  return out;
}

FgModule cohomology(const PerfectComplex& C, int i) {
  const Ring& R = C.ring();
  const std::size_t n = C.rank(i);
  if (n == 0) return FgModule{R, 0, {}};
  SmithForm s = snf(R, C.diff(i));
  const std::size_t k = n - s.rank;
  Matrix img = multiply(R, s.col_inverse, C.diff(i - 1));
  return module_normal_form(R, submatrix(img, s.rank, 0, k, img.cols()));
}

std::map<int, FgModule> cohomology_all(const PerfectComplex& C) {
  std::map<int, FgModule> out;
  for (const auto& p : decompose(C).pieces) {
    if (p.kind == Piece::Kind::Contractible) continue;
    auto it = out.try_emplace(p.degree, FgModule{C.ring(), 0, {}}).first;
    if (p.kind == Piece::Kind::Free) {
      ++it->second.free_rank;
    } else {
      it->second.torsion.push_back(p.divisor);
    }
  }
  return out;
}

bool is_acyclic(const PerfectComplex& C) {
  for (const auto& p : decompose(C).pieces) {
    if (p.kind != Piece::Kind::Contractible) return false;
  }
  return true;
}

bool is_coboundary(const PerfectComplex& C, int n, const Matrix& v) {
  const Ring& R = C.ring();
  SmithForm s = snf(R, C.diff(n - 1));
  const Matrix w = multiply(R, s.row_transform, v);
  for (std::size_t i = 0; i < w.rows(); ++i) {
    const Elem& x = w.at(i, 0);
    if (i < s.rank ? !R.divides(s.divisors[i], x) : !R.is_zero(x)) return false;
  }
  return true;
}

SpecSubset supph_geq(const PerfectComplex& C, int i) {
  SpecSubset out = SpecSubset::empty(C.ring());
  for (const auto& [n, H] : cohomology_all(C)) {
    if (n >= i) out = spc_union(out, support(H));
  }
  return out;
}

SplitModel split_model(const PerfectComplex& C) {
  const Ring& R = C.ring();
  Decomposition dec = decompose(C);
  std::vector<Piece> kept;
  for (const auto& p : dec.pieces) {
    if (p.kind != Piece::Kind::Contractible) kept.push_back(p);
  }
  if (kept.empty()) {
    PerfectComplex zero(R);
    return SplitModel{zero, ChainMap(zero, C), ChainMap(C, zero), {}};
  }
  int lo = kept.front().degree, hi = lo;
  for (const auto& p : kept) {
    lo = std::min(lo, p.kind == Piece::Kind::Torsion ? p.degree - 1 : p.degree);
    hi = std::max(hi, p.degree);
  }
  // columns of the adapted basis of C^n that survive, in model order
  std::map<int, std::vector<std::size_t>> cols;
  std::map<int, std::vector<std::size_t>> tops;  // model positions of torsion tops
  std::map<int, std::vector<Elem>> divisors;
  for (int n = lo; n <= hi; ++n) {
    for (const auto& p : kept) {
      if (p.degree == n && p.kind == Piece::Kind::Torsion) {
        tops[n].push_back(cols[n].size());
        divisors[n].push_back(p.divisor);
        cols[n].push_back(p.top);
      }
    }
    for (const auto& p : kept) {
      if (p.degree == n && p.kind == Piece::Kind::Free) cols[n].push_back(p.top);
    }
    for (const auto& p : kept) {
      if (p.degree == n + 1 && p.kind == Piece::Kind::Torsion) cols[n].push_back(p.bottom);
    }
  }
  std::vector<std::size_t> ranks;
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    ranks.push_back(cols[n].size());
    if (n == hi) break;
    Matrix d = Matrix::zero(R, cols[n + 1].size(), cols[n].size());
    const std::size_t first_bottom = cols[n].size() - tops[n + 1].size();
    for (std::size_t t = 0; t < tops[n + 1].size(); ++t) {
      d.at(tops[n + 1][t], first_bottom + t) = divisors[n + 1][t];
    }
    diffs.push_back(std::move(d));
  }
  PerfectComplex model(R, lo, std::move(ranks), std::move(diffs));
  ChainMap witness(model, C);
  ChainMap projection(C, model);
  for (int n = lo; n <= hi; ++n) {
    if (cols[n].empty()) continue;
    witness.set_component(n, select_columns(dec.basis.at(n), cols[n]));
    projection.set_component(n, select_rows(dec.basis_inverse.at(n), cols[n]));
  }
  return SplitModel{std::move(model), std::move(witness), std::move(projection), std::move(kept)};
}

bool is_quasi_iso(const ChainMap& f) { return is_acyclic(cone(f).third); }

}  // namespace tstruct::complex
