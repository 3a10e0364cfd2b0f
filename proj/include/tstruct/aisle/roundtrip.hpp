// The two round trips between filtrations and aisles, and support dominance.
#pragma once

#include <string>
#include <vector>

#include "tstruct/aisle/orthogonality.hpp"
#include "tstruct/supports/membership.hpp"

namespace tstruct::aisle {

using exactalg::SpecSubset;

struct DominanceReport {
  bool dominated = false;
  /// First degree where Supph^{>=i}(A) escapes Supph^{>=i}(B).
  std::optional<int> escape_degree;
  /// When dominated: in_aisle(A, graded_support({B})) held.
  bool consequence_holds = true;
};

/// Supph^{>=i}(A) contained in Supph^{>=i}(B) for all i.
DominanceReport support_dominance_check(const PerfectComplex& A, const PerfectComplex& B);

struct RoundtripRow {
  int degree = 0;
  SpecSubset expected;
  SpecSubset recovered;
};

struct PhiPsiReport {
  bool equal = true;
  std::vector<RoundtripRow> rows;
  std::vector<std::string> generators;
  Filtration recovered;
};

/// graded_support(koszul_generators(phi, window)) compared with phi on the window.
/// Throws InputError when the window does not cover phi's nontrivial range.
PhiPsiReport roundtrip_phi_psi(const Filtration& phi, Window window);

struct ProbeOutcome {
  bool dominated = false;
  bool in_aisle = false;
  bool in_coaisle = false;
  bool acyclic = false;
  /// Dominated but outside the aisle, or a nonzero object in both halves.
  bool violation = false;
  std::string note;
};

struct PsiPhiReport {
  Filtration phi;
  std::vector<ProbeOutcome> probes;
  bool consistent = true;
};

/// phi = graded_support(G); every dominated probe must lie in U_phi and no
/// nonzero probe may lie in both U_phi and its right orthogonal.
PsiPhiReport roundtrip_psi_phi(const Ring& R, const std::vector<PerfectComplex>& G,
                               const std::vector<PerfectComplex>& probes);

}  // namespace tstruct::aisle
