// Independent brute-force oracles used by the test suites. Nothing here calls
// the Smith normal form code; everything is minors, rationals and enumeration.
#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include <gmpxx.h>

namespace tstruct::oracle {

using IntMatrix = std::vector<std::vector<mpz_class>>;

inline mpz_class rational_det_int(IntMatrix m) {
  // Gaussian elimination over Q; exact.
  const std::size_t n = m.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
  mpq_class det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      mpq_class f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return mpz_class(det.get_num() / det.get_den());
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// gcd of all k x k minors (0 when every minor vanishes).
inline mpz_class determinantal_divisor(const IntMatrix& m, std::size_t k) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  mpz_class g = 0;
  if (k == 0) return 1;
  for_each_subset(rows, k, [&](const std::vector<std::size_t>& r) {
    for_each_subset(cols, k, [&](const std::vector<std::size_t>& c) {
      IntMatrix sub(k, std::vector<mpz_class>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
      mpz_class d = rational_det_int(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    });
  });
  return g;
}

/// Rank over Q.
inline std::size_t rational_rank(const IntMatrix& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Invariant factors of an integer matrix via determinantal divisors,
/// d_k / d_{k-1}, for k up to the rank. Includes unit factors.
inline std::vector<mpz_class> invariant_factors(const IntMatrix& m) {
  const std::size_t r = rational_rank(m);
  std::vector<mpz_class> out;
  mpz_class prev = 1;
  for (std::size_t k = 1; k <= r; ++k) {
    mpz_class d = determinantal_divisor(m, k);
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

/// Cokernel of an integer matrix as (free rank, nonunit invariant factors).
struct IntGroup {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;
  friend bool operator==(const IntGroup&, const IntGroup&) = default;
};

inline IntGroup cokernel_by_minors(const IntMatrix& m, std::size_t rows) {
  IntGroup g;
  const std::size_t r = m.empty() ? 0 : rational_rank(m);
  g.free_rank = rows - r;
  if (!m.empty()) {
    for (auto& f : invariant_factors(m)) {
      if (abs(f) != 1) g.torsion.push_back(abs(f));
    }
  }
  return g;
}

}  // namespace tstruct::oracle
