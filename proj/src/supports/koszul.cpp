#include "tstruct/supports/koszul.hpp"

#include <algorithm>

#include "tstruct/complex/operations.hpp"

namespace tstruct::supports {

using exactalg::Matrix;

namespace {

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return out;
  for (;;) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return out;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

PerfectComplex koszul(const Ring& R, const std::vector<Elem>& a) {
  const std::size_t n = a.size();
  if (n == 0) return PerfectComplex::unit(R, 0);
  std::vector<std::vector<std::vector<std::size_t>>> subsets(n + 1);
  for (std::size_t k = 0; k <= n; ++k) subsets[k] = subsets_of_size(n, k);
  std::vector<std::size_t> ranks;
  std::vector<Matrix> diffs;
  for (std::size_t k = n + 1; k-- > 0;) ranks.push_back(subsets[k].size());
  // d: degree -k -> -(k-1)
  for (std::size_t k = n; k >= 1; --k) {
    Matrix d = Matrix::zero(R, subsets[k - 1].size(), subsets[k].size());
    for (std::size_t c = 0; c < subsets[k].size(); ++c) {
      const auto& S = subsets[k][c];
      for (std::size_t pos = 0; pos < S.size(); ++pos) {
        std::vector<std::size_t> T = S;
        T.erase(T.begin() + static_cast<long>(pos));
        const auto row = static_cast<std::size_t>(std::lower_bound(subsets[k - 1].begin(), subsets[k - 1].end(), T) -
                                                  subsets[k - 1].begin());
        d.at(row, c) = pos % 2 == 0 ? a[S[pos]] : R.neg(a[S[pos]]);
      }
    }
    diffs.push_back(std::move(d));
  }
  return PerfectComplex(R, -static_cast<int>(n), std::move(ranks), std::move(diffs));
}

std::string GeneratorEntry::label() const {
  const Ring& R = complex.ring();
  const std::string base = element ? "K(" + R.to_string(*element) + ")" : R.describe();
  return base + "[" + std::to_string(-level) + "]";
}

bool window_covers(const Filtration& phi, Window window) {
  const auto last = phi.last_nonempty();
  if (!last) return true;
  const auto first = phi.first_change();
  const int need_lo = first ? std::min(*first - 1, *last) : *last;
  return window.lo <= need_lo && window.hi >= *last;
}

GeneratorSet koszul_generators(const Filtration& phi, Window window) {
  const Ring& R = phi.ring();
  GeneratorSet out{R, {}, {}};
  if (window.hi < window.lo) throw InputError("empty window");
  if (!window_covers(phi, window)) {
    out.warnings.push_back("window [" + std::to_string(window.lo) + ", " + std::to_string(window.hi) +
                           "] does not cover the nontrivial range of " + phi.to_string());
  }
  for (int i = window.lo; i <= window.hi; ++i) {
    const SpecSubset Z = phi.at(i);
    if (Z.is_empty()) continue;
    if (Z.is_all()) {
      out.entries.push_back({PerfectComplex::unit(R, i), i, Z, std::nullopt});
      continue;
    }
    const auto& pts = Z.points();
    for (std::size_t k = 1; k <= pts.size(); ++k) {
      for (const auto& S : subsets_of_size(pts.size(), k)) {
        Elem prod = R.one();
        for (auto j : S) prod = R.mul(prod, pts[j].generator);
        out.entries.push_back({complex::shift(koszul(R, {prod}), -i), i, Z, prod});
      }
    }
  }
  return out;
}

}  // namespace tstruct::supports
