#include "tstruct/complex/random.hpp"

#include "tstruct/complex/operations.hpp"
#include "tstruct/exactalg/poly_fp.hpp"
#include "tstruct/exactalg/smith.hpp"

namespace tstruct::complex {

using namespace exactalg;

namespace {

long uniform(Rng& rng, long a, long b) { return std::uniform_int_distribution<long>(a, b)(rng); }

bool poly_index_within(const Poly& f, std::uint32_t p, long bound) {
  if (f.c.size() > 40) return false;
  mpz_class idx = 0, pw = 1;
  for (auto c : f.c) {
    idx += pw * c;
    pw *= p;
  }
  return idx <= bound;
}

bool base_within(const Ring& R, const BaseValue& v, long bound) {
  if (R.kind() == BaseKind::Integers) return abs(std::get<mpz_class>(v)) <= bound;
  return poly_index_within(std::get<Poly>(v), R.characteristic(), bound);
}

struct Elementary {
  Matrix g, ginv;
};

// Product of a few elementary row operations together with its inverse.
Elementary random_unimodular(const Ring& R, Rng& rng, std::size_t n, int ops, long bound) {
  Elementary e{Matrix::identity(R, n), Matrix::identity(R, n)};
  if (n < 2) return e;
  for (int k = 0; k < ops; ++k) {
    const std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    if (uniform(rng, 0, 4) == 0) {
      for (std::size_t c = 0; c < n; ++c) std::swap(e.g.at(i, c), e.g.at(j, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(e.ginv.at(r, i), e.ginv.at(r, j));
      continue;
    }
    const Elem q = random_element(R, rng, bound);
    // row i += q row j on g; column j -= q column i on ginv
    for (std::size_t c = 0; c < n; ++c) e.g.at(i, c) = R.add(e.g.at(i, c), R.mul(q, e.g.at(j, c)));
    for (std::size_t r = 0; r < n; ++r) e.ginv.at(r, j) = R.sub(e.ginv.at(r, j), R.mul(q, e.ginv.at(r, i)));
  }
  return e;
}

}  // namespace

Elem random_element(const Ring& R, Rng& rng, long bound) {
  BaseValue v;
  if (R.kind() == BaseKind::Integers) {
    v = mpz_class(uniform(rng, -bound, bound));
  } else {
    v = fp::from_index(static_cast<std::uint64_t>(uniform(rng, 0, bound)), R.characteristic());
  }
  Elem e = R.from_base(v);
  if (R.is_localized() && uniform(rng, 0, 3) == 0) e = R.mul(e, R.inverse(R.from_base(R.inverted())));
  return e;
}

Elem random_nonzero(const Ring& R, Rng& rng, long bound) {
  for (;;) {
    Elem e = random_element(R, rng, bound);
    if (!R.is_zero(e)) return e;
  }
}

Elem random_divisor(const Ring& R, Rng& rng, long bound, const std::vector<Elem>& pool) {
  if (!pool.empty()) {
    for (int attempt = 0; attempt < 32; ++attempt) {
      Elem d = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(pool.size()) - 1))];
      if (uniform(rng, 0, 2) == 0) {
        d = R.mul(d, pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(pool.size()) - 1))]);
      }
      if (!R.is_unit(d) && (attempt > 16 || entry_within(R, d, bound))) return d;
    }
    return pool.front();
  }
  for (;;) {
    Elem e = random_nonzero(R, rng, std::max(bound, 4L));
    if (!R.is_unit(e)) return e;
  }
}

bool entry_within(const Ring& R, const Elem& e, long bound) { return base_within(R, e.num, bound); }

PerfectComplex random_complex(const Ring& R, Rng& rng, const ComplexBounds& b) {
  if (b.max_rank == 0) return PerfectComplex(R);
  const int lo = static_cast<int>(uniform(rng, b.lo_min, b.lo_max));
  const int hi = lo + static_cast<int>(uniform(rng, 0, b.amplitude));
  const std::size_t len = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::size_t> cap(len, b.max_rank);
  std::vector<std::size_t> ranks(len, 0);
  // pieces as (top degree index, divisor); free pieces carry a zero divisor
  struct Cell {
    std::size_t top;
    bool free;
    Elem divisor;
  };
  std::vector<Cell> cells;
  const long count = uniform(rng, static_cast<long>(len), static_cast<long>(len) * 3 + 1);
  for (long k = 0; k < count; ++k) {
    const std::size_t t = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(len) - 1));
    const int kind = static_cast<int>(uniform(rng, 0, 3));
    const bool free_ok = !b.free_allowed || b.free_allowed(lo + static_cast<int>(t));
    if (kind == 0 || t == 0) {
      if (!free_ok || cap[t] == 0) continue;
      --cap[t];
      cells.push_back({t, true, R.zero()});
    } else {
      if (cap[t] == 0 || cap[t - 1] == 0) continue;
      --cap[t];
      --cap[t - 1];
      Elem d = kind == 3 ? R.unit_part(random_nonzero(R, rng, 2)) : random_divisor(R, rng, b.entry_bound, b.divisor_pool);
      if (kind == 3 && R.is_zero(d)) d = R.one();
      cells.push_back({t, false, d});
    }
  }
  // positions inside each degree
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> links(len);  // (bottom pos, top pos, via cell)
  std::vector<std::vector<Elem>> link_div(len);
  for (const auto& c : cells) {
    const std::size_t top = ranks[c.top]++;
    if (c.free) continue;
    const std::size_t bottom = ranks[c.top - 1]++;
    links[c.top].push_back({bottom, top});
    link_div[c.top].push_back(c.divisor);
  }
  std::vector<Matrix> diffs;
  for (std::size_t k = 0; k + 1 < len; ++k) {
    Matrix d = Matrix::zero(R, ranks[k + 1], ranks[k]);
    for (std::size_t l = 0; l < links[k + 1].size(); ++l) d.at(links[k + 1][l].second, links[k + 1][l].first) = link_div[k + 1][l];
    diffs.push_back(std::move(d));
  }
  const long mult_bound = R.kind() == BaseKind::Integers ? 2 : static_cast<long>(R.characteristic()) * 2 - 1;
  for (int ops = b.mixing; ops >= 0; --ops) {
    for (int attempt = 0; attempt < 4; ++attempt) {
      std::vector<Elementary> g;
      for (std::size_t k = 0; k < len; ++k) g.push_back(random_unimodular(R, rng, ranks[k], ops, mult_bound));
      std::vector<Matrix> mixed;
      bool ok = true;
      for (std::size_t k = 0; k + 1 < len && ok; ++k) {
        Matrix m = multiply(R, g[k + 1].g, multiply(R, diffs[k], g[k].ginv));
        for (std::size_t i = 0; i < m.rows() && ok; ++i)
          for (std::size_t j = 0; j < m.cols() && ok; ++j) ok = entry_within(R, m.at(i, j), b.entry_bound);
        mixed.push_back(std::move(m));
      }
      if (ok) return PerfectComplex(R, lo, ranks, std::move(mixed)).trimmed();
    }
  }
  return PerfectComplex(R, lo, ranks, std::move(diffs)).trimmed();
}

ChainMap random_chain_map(const PerfectComplex& A, const PerfectComplex& B, Rng& rng) {
  const Ring& R = A.ring();
  if (A.empty() || B.empty()) return ChainMap(A, B);
  const std::size_t dim = hom_block_offset(A, B, 0, A.hi() + 1);
  if (dim == 0) return ChainMap(A, B);
  const PerfectComplex H = hom_complex(A, B);
  SmithForm s = smith_normal_form(R, H.diff(0));
  Matrix vec = Matrix::zero(R, dim, 1);
  for (std::size_t j = s.rank; j < dim; ++j) {
    const Elem c = R.from_int(uniform(rng, -1, 2));
    for (std::size_t i = 0; i < dim; ++i) vec.at(i, 0) = R.add(vec.at(i, 0), R.mul(c, s.col_transform.at(i, j)));
  }
  return hom_cocycle_to_map(A, B, 0, vec);
}

}  // namespace tstruct::complex
