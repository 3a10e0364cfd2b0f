#include "tstruct/supports/membership.hpp"

#include <algorithm>

#include "tstruct/complex/cohomology.hpp"

namespace tstruct::supports {

using exactalg::spc_contains;
using exactalg::spc_union;

std::string AisleViolation::to_string(const Ring& R) const {
  return "(" + std::to_string(degree) + ", " + (point ? "(" + R.to_string(point->generator) + ")" : "generic") + ")";
}

AisleResult in_aisle(const PerfectComplex& E, const Filtration& phi) {
  if (!(E.ring() == phi.ring())) {
    throw RingMismatch("complex over " + E.ring().describe() + ", filtration over " + phi.ring().describe());
  }
  for (const auto& [i, H] : complex::cohomology_all(E)) {
    const SpecSubset allowed = phi.at(i);
    const SpecSubset supp = support(H);
    if (spc_contains(allowed, supp)) continue;
    AisleViolation v{i, std::nullopt};
    if (!supp.is_all()) {
      for (const auto& p : supp.points()) {
        if (!allowed.contains_point(p)) {
          v.point = p;
          break;
        }
      }
    }
    return AisleResult{false, v};
  }
  return AisleResult{};
}

Filtration graded_support(const Ring& R, const std::vector<PerfectComplex>& family) {
  // per member, the support of each cohomology degree
  std::vector<std::pair<int, SpecSubset>> degree_supports;
  for (const auto& S : family) {
    if (!(S.ring() == R)) throw RingMismatch("graded_support: member over " + S.ring().describe());
    for (const auto& [i, H] : complex::cohomology_all(S)) degree_supports.emplace_back(i, support(H));
  }
  if (degree_supports.empty()) return Filtration(R);
  int lo = degree_supports.front().first, hi = lo;
  for (const auto& [i, s] : degree_supports) {
    lo = std::min(lo, i);
    hi = std::max(hi, i);
  }
  auto value = [&](int i) {
    SpecSubset v = SpecSubset::empty(R);
    for (const auto& [j, s] : degree_supports)
      if (j >= i) v = spc_union(v, s);
    return v;
  };
  std::vector<std::pair<int, SpecSubset>> steps;
  for (int i = lo + 1; i <= hi + 1; ++i) steps.emplace_back(i, value(i));
  return Filtration(R, value(lo), std::move(steps)).canonical();
}

}  // namespace tstruct::supports
