#include "tstruct/zariski/zariski.hpp"

#include "tstruct/complex/cohomology.hpp"
#include "tstruct/complex/operations.hpp"
#include "tstruct/exactalg/factor.hpp"
#include "tstruct/supports/koszul.hpp"

namespace tstruct::zariski {

using exactalg::BaseValue;

namespace {

BaseValue base_power(const Ring& R, const BaseValue& b, unsigned e) {
  BaseValue out = R.base_one();
  for (unsigned k = 0; k < e; ++k) out = R.base_mul(out, b);
  return out;
}

}  // namespace

OpenImmersion::OpenImmersion(Ring ambient, Elem f) : ambient_(std::move(ambient)), f_(std::move(f)) {
  if (ambient_.is_zero(f_)) throw InputError("D(0) is empty; f must be nonzero");
  localized_ = ambient_.localized_at(f_);
  auto [c, rem] = ambient_.base_divmod(localized_.inverted(), ambient_.inverted());
  if (!ambient_.base_is_zero(rem)) throw std::logic_error("localization lost the ambient inverted element");
  clearing_ = ambient_.from_base(c);
}

Elem OpenImmersion::to_localized(const Elem& a) const {
  return localized_.fraction(a.num, base_power(ambient_, ambient_.inverted(), a.exp));
}

Elem OpenImmersion::to_ambient(const Elem& x) const {
  if (x.exp == 0) return ambient_.from_base(x.num);
  auto [q, rem] = ambient_.base_divmod(x.num, base_power(ambient_, clearing_.num, x.exp));
  if (!ambient_.base_is_zero(rem)) {
    throw InputError(localized_.to_string(x) + " is not an element of " + ambient_.describe());
  }
  return ambient_.fraction(q, base_power(ambient_, ambient_.inverted(), x.exp));
}

Matrix restrict(const Matrix& M, const OpenImmersion& j) {
  return exactalg::map_entries(M, [&](const Elem& a) { return j.to_localized(a); });
}

PerfectComplex restrict(const PerfectComplex& E, const OpenImmersion& j) {
  if (!(E.ring() == j.ambient())) {
    throw RingMismatch("restrict expects a complex over " + j.ambient().describe() + ", got " + E.ring().describe());
  }
  if (E.empty()) return PerfectComplex(j.localized());
  std::vector<std::size_t> ranks;
  std::vector<Matrix> diffs;
  for (int n = E.lo(); n <= E.hi(); ++n) {
    ranks.push_back(E.rank(n));
    if (n < E.hi()) diffs.push_back(restrict(E.diff(n), j));
  }
  return PerfectComplex(j.localized(), E.lo(), std::move(ranks), std::move(diffs));
}

ChainMap restrict(const ChainMap& f, const OpenImmersion& j) {
  const PerfectComplex& A = f.source();
  const PerfectComplex& B = f.target();
  ChainMap out(restrict(A, j), restrict(B, j));
  if (A.empty() || B.empty()) return out;
  for (int n = std::max(A.lo(), B.lo()); n <= std::min(A.hi(), B.hi()); ++n) {
    out.set_component(n, restrict(f.component(n), j));
  }
  return out;
}

Extension extend_perfect(const PerfectComplex& F, const OpenImmersion& j) {
  const Ring& L = j.localized();
  const Ring& R = j.ambient();
  if (!(F.ring() == L)) {
    throw RingMismatch("extend_perfect expects a complex over " + L.describe() + ", got " + F.ring().describe());
  }
  Extension out{PerfectComplex(R), ChainMap(PerfectComplex(L), F), "zero complex"};
  if (F.empty()) return out;
  // k_hi = 0 and k_n = k_{n+1} + (largest denominator exponent of d^n)
  std::map<int, unsigned> k;
  k[F.hi()] = 0;
  for (int n = F.hi() - 1; n >= F.lo(); --n) {
    const Matrix d = F.diff(n);
    unsigned e = 0;
    for (std::size_t r = 0; r < d.rows(); ++r) {
      for (std::size_t c = 0; c < d.cols(); ++c) e = std::max(e, d.at(r, c).exp);
    }
    k[n] = k[n + 1] + e;
  }
  const Elem c = j.to_localized(j.clearing());
  std::vector<std::size_t> ranks;
  std::vector<Matrix> diffs;
  for (int n = F.lo(); n <= F.hi(); ++n) {
    ranks.push_back(F.rank(n));
    if (n == F.hi()) break;
    const Matrix scaled = exactalg::scale(L, L.pow(c, k[n] - k[n + 1]), F.diff(n));
    diffs.push_back(exactalg::map_entries(scaled, [&](const Elem& x) { return j.to_ambient(x); }));
  }
  out.complex = PerfectComplex(R, F.lo(), std::move(ranks), std::move(diffs));
  out.comparison = ChainMap(restrict(out.complex, j), F);
  bool rescaled = false;
  for (int n = F.lo(); n <= F.hi(); ++n) {
    out.comparison.set_component(n, exactalg::scale(L, L.pow(c, k[n]), Matrix::identity(L, F.rank(n))));
    rescaled = rescaled || k[n] > 0;
  }
  out.note = std::string(rescaled ? "denominators cleared by rescaling bases; " : "already denominator-free; ") +
             "the extension is of F itself, not only of F (+) F[1]";
  return out;
}

PerfectComplex extend_with_support(const PerfectComplex& F, const SpecSubset& Z, int N, const OpenImmersion& j) {
  const Ring& R = j.ambient();
  if (!(F.ring() == j.localized())) {
    throw RingMismatch("extend_with_support expects a complex over " + j.localized().describe() + ", got " +
                       F.ring().describe());
  }
  if (!(Z.ring() == R)) throw RingMismatch("support set must live over " + R.describe());
  if (Z.is_all()) throw InputError("Z = all has no support constraint; use extend_perfect");
  std::vector<PerfectComplex> parts;
  for (const auto& p : complex::split_model(F).pieces) {
    if (p.kind == complex::Piece::Kind::Free) {
      throw InputError("free cohomology in degree " + std::to_string(p.degree) + " has full support");
    }
    if (p.degree > N) {
      throw InputError("cohomology in degree " + std::to_string(p.degree) + " exceeds N = " + std::to_string(N));
    }
    const Elem d = R.normalize(j.to_ambient(j.localized().normalize(p.divisor)));
    for (const auto& q : exactalg::prime_support(R, d)) {
      if (!Z.contains_point(q)) {
        throw InputError("support point (" + R.to_string(q.generator) + ") in degree " + std::to_string(p.degree) +
                         " lies outside Z");
      }
    }
    Matrix m = Matrix::zero(R, 1, 1);
    m.at(0, 0) = d;
    parts.emplace_back(R, p.degree - 1, std::vector<std::size_t>{1, 1}, std::vector<Matrix>{m});
  }
  return complex::direct_sum(R, parts);
}

RestrictionReport restriction_orthogonality_check(const PerfectComplex& F, const SpecSubset& Z, int N,
                                                  const OpenImmersion& j, std::size_t budget) {
  const Ring& R = j.ambient();
  if (Z.is_all()) throw InputError("restriction check needs a finite Z");
  RestrictionReport report;
  const PerfectComplex FU = restrict(F, j);
  const auto& pts = Z.points();
  std::vector<unsigned long> subsets;
  for (std::size_t size = 1; size <= pts.size(); ++size) {
    for (unsigned long mask = 1; mask < (1ul << pts.size()); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountl(mask)) == size) subsets.push_back(mask);
    }
  }
  for (unsigned long mask : subsets) {
    if (report.probes.size() >= budget) break;
    Elem a = R.one();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (mask & (1ul << i)) a = R.mul(a, pts[i].generator);
    }
    const PerfectComplex P = complex::shift(supports::koszul(R, {a}), -N);
    ProbeCheck c;
    c.label = "K(" + R.to_string(a) + ")[" + std::to_string(-N) + "]";
    c.ambient = aisle::orthogonal_all_shifts(P, F);
    c.restricted = aisle::orthogonal_all_shifts(restrict(P, j), FU);
    report.ambient_orthogonal = report.ambient_orthogonal && c.ambient.orthogonal;
    report.restricted_orthogonal = report.restricted_orthogonal && c.restricted.orthogonal;
    report.probes.push_back(std::move(c));
  }
  report.holds = !report.ambient_orthogonal || report.restricted_orthogonal;
  report.status = !report.ambient_orthogonal ? "non-orthogonal upstream" : report.holds ? "orthogonal" : "violated";
  return report;
}

}  // namespace tstruct::zariski
