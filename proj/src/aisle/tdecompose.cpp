#include "tstruct/aisle/tdecompose.hpp"

#include <limits>
#include <map>
#include <optional>

#include "tstruct/complex/cohomology.hpp"
#include "tstruct/complex/operations.hpp"

namespace tstruct::aisle {

using complex::Piece;
using complex::SplitModel;

namespace {

std::vector<std::size_t> range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(i);
  return out;
}

// Summand of a split model spanned by the pieces whose cohomology degree
// exceeds m, with the projection onto it.
std::pair<PerfectComplex, ChainMap> upper_summand(const SplitModel& S, const ChainMap& to_model, int m) {
  const Ring& R = S.model.ring();
  const PerfectComplex& M = S.model;
  std::map<int, std::vector<std::size_t>> keep;
  if (!M.empty()) {
    // walk the model basis in the order split_model lays it out
    for (int n = M.lo(); n <= M.hi(); ++n) {
      std::size_t pos = 0;
      for (const auto& p : S.pieces)
        if (p.degree == n && p.kind == Piece::Kind::Torsion) {
          if (p.degree > m) keep[n].push_back(pos);
          ++pos;
        }
      for (const auto& p : S.pieces)
        if (p.degree == n && p.kind == Piece::Kind::Free) {
          if (p.degree > m) keep[n].push_back(pos);
          ++pos;
        }
      for (const auto& p : S.pieces)
        if (p.degree == n + 1 && p.kind == Piece::Kind::Torsion) {
          if (p.degree > m) keep[n].push_back(pos);
          ++pos;
        }
    }
  }
  PerfectComplex N(R);
  int lo = 0, hi = -1;
  for (const auto& [n, idx] : keep) {
    if (idx.empty()) continue;
    if (hi < lo) lo = hi = n;
    lo = std::min(lo, n);
    hi = std::max(hi, n);
  }
  if (hi >= lo) {
    std::vector<std::size_t> ranks;
    std::vector<Matrix> diffs;
    for (int n = lo; n <= hi; ++n) {
      ranks.push_back(keep[n].size());
      if (n < hi) diffs.push_back(select_columns(select_rows(M.diff(n), keep[n + 1]), keep[n]));
    }
    N = PerfectComplex(R, lo, std::move(ranks), std::move(diffs));
  }
  ChainMap a(to_model.source(), N);
  for (int n = lo; n <= hi; ++n) {
    if (keep[n].empty() || to_model.source().rank(n) == 0) continue;
    a.set_component(n, select_rows(to_model.component(n), keep[n]));
  }
  return {N, a};
}

}  // namespace

Fiber fiber(const ChainMap& a) {
  Triangle t = complex::cone(a);
  PerfectComplex F = complex::shift(t.third, -1);
  ChainMap p = complex::retarget(complex::shift(t.h, -1), F, a.source());
  return {std::move(F), std::move(p)};
}

DecompositionReport t_decompose(const PerfectComplex& A, const Filtration& phi, int cap) {
  if (!(A.ring() == phi.ring())) {
    throw RingMismatch("complex over " + A.ring().describe() + ", filtration over " + phi.ring().describe());
  }
  if (auto v = supports::validate_filtration(phi); !v) throw InputError("invalid filtration: " + v.message);
  const Ring& R = A.ring();
  DecompositionReport report;
  report.classical = phi.is_classical();

  SplitModel S = complex::split_model(A);
  PerfectComplex N = S.model;
  ChainMap a = S.projection;

  if (report.classical) {
    // soft truncation at the last level where phi is everything
    const auto last = phi.last_nonempty();
    const int m = last ? *last : std::numeric_limits<int>::min();
    auto [Nt, at] = upper_summand(S, S.projection, m);
    N = std::move(Nt);
    a = std::move(at);
  } else {
    bool settled = false;
    while (!settled) {
      // One class per round. A class that is nonzero on cohomology shortens
      // N; the others only matter once none of those are left.
      const GeneratorSet G = supports::koszul_generators(phi, adequate_window(N, phi));
      std::optional<ChainMap> cell, fallback;
      for (const auto& entry : G.entries) {
        for (auto& cls : nonzero_classes(entry.complex, N)) {
          const int top = entry.complex.hi() - cls.shift;
          for (auto& m : cls.maps) {
            if (!complex::is_coboundary(N, top, m.component(top))) {
              cell = std::move(m);
              break;
            }
            if (!fallback) fallback = m;
          }
          if (cell) break;
        }
        if (cell) break;
      }
      if (!cell) cell = std::move(fallback);
      if (!cell) {
        settled = true;
        break;
      }
      if (report.iterations >= cap) break;
      ++report.iterations;
      Triangle attach = complex::cone(*cell);
      SplitModel simplified = complex::split_model(attach.third);
      a = complex::compose(simplified.projection, complex::compose(attach.g, a));
      N = simplified.model;
    }
    report.cap_exceeded = !settled;
  }

  Fiber F = fiber(a);
  SplitModel Ls = complex::split_model(F.fiber);
  const PerfectComplex& L = Ls.model;
  ChainMap f = complex::compose(F.to_source, Ls.witness);
  // N -> cone(a) = fiber[1] -> L[1]
  ChainMap h = complex::compose(complex::shift(Ls.projection, 1), complex::cone(a).g);
  report.triangle = Triangle{L, A, N, f, a, h};

  report.aisle_check = supports::in_aisle(L, phi);
  report.coaisle_check = in_coaisle(N, phi);

  // q = [pi_N w, -a] : cone(f) -> N
  Triangle cf = complex::cone(f);
  ChainMap q(cf.third, N);
  for (int n = std::min(cf.third.lo(), N.lo()); n <= std::max(cf.third.hi(), N.hi()); ++n) {
    if (N.rank(n) == 0 || cf.third.rank(n) == 0) continue;
    const std::size_t skip = A.rank(n + 1);
    Matrix left = select_rows(Ls.witness.component(n + 1), range(skip, skip + N.rank(n)));
    q.set_component(n, hstack(R, {left, exactalg::negate(R, a.component(n))}, N.rank(n)));
  }
  const bool maps_ok = complex::validate(f) && complex::validate(a) && complex::validate(h) && complex::validate(q);
  report.cone_identity = maps_ok && complex::is_quasi_iso(q);
  report.hom_vanishes = complex::cohomology(complex::hom_complex(L, N), 0).is_zero();

  report.verified = !report.cap_exceeded && report.aisle_check.member && report.coaisle_check.orthogonal &&
                    report.cone_identity && report.hom_vanishes;
  if (report.cap_exceeded) {
    report.failure = "iteration cap " + std::to_string(cap) + " exceeded";
  } else if (!report.aisle_check.member) {
    report.failure = "L escapes the aisle at " + report.aisle_check.violation->to_string(R);
  } else if (!report.coaisle_check.orthogonal) {
    report.failure = "N is not in the coaisle: " + report.coaisle_check.to_string();
  } else if (!report.cone_identity) {
    report.failure = maps_ok ? "cone(L -> A) is not quasi-isomorphic to N" : "triangle maps are not chain maps";
  } else if (!report.hom_vanishes) {
    report.failure = "Hom(L, N) is nonzero";
  }
  return report;
}

}  // namespace tstruct::aisle
