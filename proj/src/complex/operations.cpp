#include "tstruct/complex/operations.hpp"

#include <algorithm>

namespace tstruct::complex {

using namespace exactalg;

namespace {

void require_same_ring(const Ring& a, const Ring& b, const char* what) {
  if (!(a == b)) throw RingMismatch(std::string(what) + ": complexes over " + a.describe() + " and " + b.describe());
}

Matrix sign(const Ring& R, int k, const Matrix& m) { return (k % 2 == 0) ? m : negate(R, m); }

// Assembles a complex from per-degree ranks and a differential callback over [lo, hi].
template <typename Diff>
PerfectComplex assemble(const Ring& R, int lo, int hi, const std::vector<std::size_t>& ranks, Diff&& diff) {
  if (hi < lo) return PerfectComplex(R);
  std::vector<Matrix> diffs;
  for (int n = lo; n < hi; ++n) diffs.push_back(diff(n));
  return PerfectComplex(R, lo, ranks, std::move(diffs)).trimmed();
}

}  // namespace

PerfectComplex shift(const PerfectComplex& C, int k) {
  if (C.empty()) return C;
  std::vector<std::size_t> ranks;
  std::vector<Matrix> diffs;
  for (int n = C.lo(); n <= C.hi(); ++n) {
    ranks.push_back(C.rank(n));
    if (n < C.hi()) diffs.push_back(sign(C.ring(), k, C.diff(n)));
  }
  return PerfectComplex(C.ring(), C.lo() - k, std::move(ranks), std::move(diffs));
}

ChainMap shift(const ChainMap& f, int k) {
  ChainMap out(shift(f.source(), k), shift(f.target(), k));
  const int lo = std::min(out.source().lo(), out.target().lo());
  const int hi = std::max(out.source().hi(), out.target().hi());
  for (int n = lo; n <= hi; ++n) out.set_component(n, f.component(n + k));
  return out;
}

Triangle cone(const ChainMap& f) {
  const PerfectComplex& A = f.source();
  const PerfectComplex& B = f.target();
  const Ring& R = f.ring();
  int lo = std::min(A.empty() ? B.lo() : A.lo() - 1, B.empty() ? A.lo() - 1 : B.lo());
  int hi = std::max(A.empty() ? B.hi() : A.hi() - 1, B.empty() ? A.hi() - 1 : B.hi());
  PerfectComplex C(R);
  if (!(A.empty() && B.empty())) {
    std::vector<std::size_t> ranks;
    for (int n = lo; n <= hi; ++n) ranks.push_back(A.rank(n + 1) + B.rank(n));
    std::vector<Matrix> diffs;
    for (int n = lo; n < hi; ++n) {
      const std::size_t a0 = A.rank(n + 1), b0 = B.rank(n), a1 = A.rank(n + 2), b1 = B.rank(n + 1);
      Matrix d = Matrix::zero(R, a1 + b1, a0 + b0);
      place(d, negate(R, A.diff(n + 1)), 0, 0);
      place(d, f.component(n + 1), a1, 0);
      place(d, B.diff(n), a1, a0);
      diffs.push_back(std::move(d));
    }
    C = PerfectComplex(R, lo, std::move(ranks), std::move(diffs));
  } else {
    lo = 0;
    hi = -1;
  }
  ChainMap g(B, C);
  ChainMap h(C, shift(A, 1));
  for (int n = lo; n <= hi; ++n) {
    const std::size_t a = A.rank(n + 1), b = B.rank(n);
    Matrix gin = Matrix::zero(R, a + b, b);
    place(gin, Matrix::identity(R, b), a, 0);
    g.set_component(n, gin);
    Matrix hp = Matrix::zero(R, a, a + b);
    place(hp, Matrix::identity(R, a), 0, 0);
    h.set_component(n, hp);
  }
  return Triangle{A, B, C, f, g, h};
}

PerfectComplex direct_sum(const PerfectComplex& A, const PerfectComplex& B) {
  require_same_ring(A.ring(), B.ring(), "direct_sum");
  if (A.empty()) return B;
  if (B.empty()) return A;
  const Ring& R = A.ring();
  const int lo = std::min(A.lo(), B.lo()), hi = std::max(A.hi(), B.hi());
  std::vector<std::size_t> ranks;
  for (int n = lo; n <= hi; ++n) ranks.push_back(A.rank(n) + B.rank(n));
  return assemble(R, lo, hi, ranks, [&](int n) { return block_diagonal(R, {A.diff(n), B.diff(n)}); });
}

PerfectComplex direct_sum(const Ring& R, const std::vector<PerfectComplex>& parts) {
  PerfectComplex out(R);
  for (const auto& p : parts) out = direct_sum(out, p);
  return out;
}

ChainMap direct_sum(const ChainMap& f, const ChainMap& g) {
  const Ring& R = f.ring();
  ChainMap out(direct_sum(f.source(), g.source()), direct_sum(f.target(), g.target()));
  const int lo = std::min(out.source().lo(), out.target().lo());
  const int hi = std::max(out.source().hi(), out.target().hi());
  for (int n = lo; n <= hi; ++n) out.set_component(n, block_diagonal(R, {f.component(n), g.component(n)}));
  return out;
}

ChainMap codiagonal(const std::vector<ChainMap>& maps) {
  if (maps.empty()) throw InputError("codiagonal of an empty family");
  const Ring& R = maps.front().ring();
  const PerfectComplex& B = maps.front().target();
  PerfectComplex src(R);
  for (const auto& m : maps) src = direct_sum(src, m.source());
  ChainMap out(src, B);
  const int lo = std::min(src.lo(), B.lo()), hi = std::max(src.hi(), B.hi());
  for (int n = lo; n <= hi; ++n) {
    std::vector<Matrix> blocks;
    for (const auto& m : maps) blocks.push_back(m.component(n));
    out.set_component(n, hstack(R, blocks, B.rank(n)));
  }
  return out;
}

PerfectComplex tensor_total(const PerfectComplex& A, const PerfectComplex& B) {
  require_same_ring(A.ring(), B.ring(), "tensor_total");
  const Ring& R = A.ring();
  if (A.empty() || B.empty()) return PerfectComplex(R);
  const int lo = A.lo() + B.lo(), hi = A.hi() + B.hi();
  // offset of the (p, n - p) block inside degree n
  auto offset = [&](int n, int p) {
    std::size_t off = 0;
    for (int q = A.lo(); q < p; ++q) off += A.rank(q) * B.rank(n - q);
    return off;
  };
  std::vector<std::size_t> ranks;
  for (int n = lo; n <= hi; ++n) ranks.push_back(offset(n, A.hi() + 1));
  return assemble(R, lo, hi, ranks, [&](int n) {
    Matrix d = Matrix::zero(R, ranks[static_cast<std::size_t>(n + 1 - lo)], ranks[static_cast<std::size_t>(n - lo)]);
    for (int p = A.lo(); p <= A.hi(); ++p) {
      const int q = n - p;
      if (A.rank(p) == 0 || B.rank(q) == 0) continue;
      const std::size_t col = offset(n, p);
      if (A.rank(p + 1) > 0) {
        place(d, kronecker(R, A.diff(p), Matrix::identity(R, B.rank(q))), offset(n + 1, p + 1), col);
      }
      if (B.rank(q + 1) > 0) {
        place(d, sign(R, p, kronecker(R, Matrix::identity(R, A.rank(p)), B.diff(q))), offset(n + 1, p), col);
      }
    }
    return d;
  });
}

std::size_t hom_block_offset(const PerfectComplex& A, const PerfectComplex& B, int n, int k) {
  std::size_t off = 0;
  for (int j = A.lo(); j < k; ++j) off += A.rank(j) * B.rank(j + n);
  return off;
}

PerfectComplex hom_complex(const PerfectComplex& A, const PerfectComplex& B) {
  require_same_ring(A.ring(), B.ring(), "hom_complex");
  const Ring& R = A.ring();
  if (A.empty() || B.empty()) return PerfectComplex(R);
  const int lo = B.lo() - A.hi(), hi = B.hi() - A.lo();
  std::vector<std::size_t> ranks;
  for (int n = lo; n <= hi; ++n) ranks.push_back(hom_block_offset(A, B, n, A.hi() + 1));
  return assemble(R, lo, hi, ranks, [&](int n) {
    Matrix d = Matrix::zero(R, ranks[static_cast<std::size_t>(n + 1 - lo)], ranks[static_cast<std::size_t>(n - lo)]);
    for (int k = A.lo(); k <= A.hi(); ++k) {
      // target block Hom(A^k, B^{k+n+1})
      const std::size_t rows = A.rank(k) * B.rank(k + n + 1);
      if (rows == 0) continue;
      const std::size_t row = hom_block_offset(A, B, n + 1, k);
      // from phi_k : A^k -> B^{k+n}, d_B phi_k
      if (A.rank(k) * B.rank(k + n) > 0) {
        place(d, kronecker(R, B.diff(k + n), Matrix::identity(R, A.rank(k))), row, hom_block_offset(A, B, n, k));
      }
      // from phi_{k+1} : A^{k+1} -> B^{k+1+n}, -(-1)^n phi_{k+1} d_A
      if (A.rank(k + 1) * B.rank(k + 1 + n) > 0) {
        Matrix blk = kronecker(R, Matrix::identity(R, B.rank(k + n + 1)), transpose(A.diff(k)));
        place(d, sign(R, n + 1, blk), row, hom_block_offset(A, B, n, k + 1));
      }
    }
    return d;
  });
}

ChainMap hom_cocycle_to_map(const PerfectComplex& g, const PerfectComplex& N, int n, const Matrix& vec) {
  const Ring& R = g.ring();
  ChainMap out(shift(g, n), N);
  for (int k = g.lo(); k <= g.hi(); ++k) {
    const int m = k - n;
    const std::size_t rows = N.rank(m), cols = g.rank(k);
    if (rows * cols == 0) continue;
    const std::size_t off = hom_block_offset(g, N, -n, k);
    Matrix c = Matrix::zero(R, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) c.at(i, j) = vec.at(off + i * cols + j, 0);
    out.set_component(m, std::move(c));
  }
  return out;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  const Ring& R = f.ring();
  ChainMap out(f.source(), g.target());
  const int lo = std::min({f.source().lo(), g.target().lo()}), hi = std::max(f.source().hi(), g.target().hi());
  for (int n = lo; n <= hi; ++n) {
    if (f.source().rank(n) == 0 || g.target().rank(n) == 0) continue;
    out.set_component(n, multiply(R, g.component(n), f.component(n)));
  }
  return out;
}

ChainMap add(const ChainMap& f, const ChainMap& g) {
  const Ring& R = f.ring();
  ChainMap out(f.source(), f.target());
  for (int n = std::min(f.source().lo(), f.target().lo()); n <= std::max(f.source().hi(), f.target().hi()); ++n) {
    if (f.source().rank(n) == 0 || f.target().rank(n) == 0) continue;
    out.set_component(n, exactalg::add(R, f.component(n), g.component(n)));
  }
  return out;
}

ChainMap negate(const ChainMap& f) {
  const Ring& R = f.ring();
  ChainMap out(f.source(), f.target());
  for (int n = std::min(f.source().lo(), f.target().lo()); n <= std::max(f.source().hi(), f.target().hi()); ++n) {
    if (f.source().rank(n) == 0 || f.target().rank(n) == 0) continue;
    out.set_component(n, exactalg::negate(R, f.component(n)));
  }
  return out;
}

ChainMap retarget(const ChainMap& f, const PerfectComplex& source, const PerfectComplex& target) {
  ChainMap out(source, target);
  for (int n = std::min(source.lo(), target.lo()); n <= std::max(source.hi(), target.hi()); ++n) {
    if (source.rank(n) == 0 || target.rank(n) == 0) continue;
    out.set_component(n, f.component(n));
  }
  return out;
}

}  // namespace tstruct::complex
