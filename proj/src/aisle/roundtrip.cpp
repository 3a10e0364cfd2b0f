#include "tstruct/aisle/roundtrip.hpp"

#include <algorithm>

#include "tstruct/complex/cohomology.hpp"

namespace tstruct::aisle {

using exactalg::spc_contains;

DominanceReport support_dominance_check(const PerfectComplex& A, const PerfectComplex& B) {
  if (!(A.ring() == B.ring())) {
    throw RingMismatch("dominance between complexes over " + A.ring().describe() + " and " + B.ring().describe());
  }
  DominanceReport r;
  r.dominated = true;
  if (!A.empty()) {
    // Supph^{>=i}(A) is constant below lo(A) and empty above hi(A)
    for (int i = A.lo(); i <= A.hi(); ++i) {
      if (!spc_contains(complex::supph_geq(B, i), complex::supph_geq(A, i))) {
        r.dominated = false;
        r.escape_degree = i;
        break;
      }
    }
  }
  if (r.dominated) r.consequence_holds = supports::in_aisle(A, supports::graded_support(A.ring(), {B})).member;
  return r;
}

PhiPsiReport roundtrip_phi_psi(const Filtration& phi, Window window) {
  if (auto v = supports::validate_filtration(phi); !v) throw InputError("invalid filtration: " + v.message);
  if (!supports::window_covers(phi, window)) {
    throw InputError("window [" + std::to_string(window.lo) + ", " + std::to_string(window.hi) +
                     "] does not cover the nontrivial range of " + phi.to_string());
  }
  const Ring& R = phi.ring();
  PhiPsiReport report;
  const GeneratorSet G = supports::koszul_generators(phi, window);
  std::vector<PerfectComplex> family;
  for (const auto& e : G.entries) {
    family.push_back(e.complex);
    report.generators.push_back(e.label());
  }
  report.recovered = supports::graded_support(R, family);
  for (int i = window.lo; i <= window.hi; ++i) {
    RoundtripRow row{i, phi.at(i), report.recovered.at(i)};
    if (!(row.expected == row.recovered)) report.equal = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

PsiPhiReport roundtrip_psi_phi(const Ring& R, const std::vector<PerfectComplex>& G,
                               const std::vector<PerfectComplex>& probes) {
  PsiPhiReport report;
  report.phi = supports::graded_support(R, G);
  for (const auto& A : probes) {
    ProbeOutcome out;
    out.acyclic = complex::is_acyclic(A);
    out.dominated = true;
    if (!A.empty()) {
      for (int i = A.lo(); i <= A.hi() && out.dominated; ++i) {
        out.dominated = spc_contains(report.phi.at(i), complex::supph_geq(A, i));
      }
    }
    const supports::AisleResult aisle = supports::in_aisle(A, report.phi);
    out.in_aisle = aisle.member;
    out.in_coaisle = in_coaisle(A, report.phi).orthogonal;
    if (out.dominated && !out.in_aisle) {
      out.violation = true;
      out.note = "dominated probe escapes the aisle at " + aisle.violation->to_string(R);
    } else if (out.in_aisle && out.in_coaisle && !out.acyclic) {
      out.violation = true;
      out.note = "nonzero probe lies in both the aisle and the coaisle";
    } else if (!out.dominated) {
      out.note = "not dominated";
    }
    if (out.violation) report.consistent = false;
    report.probes.push_back(std::move(out));
  }
  return report;
}

}  // namespace tstruct::aisle
