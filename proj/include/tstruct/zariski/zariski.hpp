// Restriction to a basic open D(f) and extension back to the whole spectrum.
#pragma once

#include <string>
#include <vector>

#include "tstruct/aisle/orthogonality.hpp"
#include "tstruct/complex/perfect_complex.hpp"
#include "tstruct/exactalg/module.hpp"

namespace tstruct::zariski {

using complex::ChainMap;
using complex::PerfectComplex;
using exactalg::Elem;
using exactalg::Matrix;
using exactalg::Ring;
using exactalg::SpecSubset;

/// j : D(f) -> Spec(ambient).
class OpenImmersion {
 public:
  /// Throws InputError when f is zero.
  OpenImmersion(Ring ambient, Elem f);

  const Ring& ambient() const { return ambient_; }
  const Elem& f() const { return f_; }
  const Ring& localized() const { return localized_; }

  Elem to_localized(const Elem& a) const;
  /// Preimage of x; throws InputError when x has a denominator outside the ambient ring.
  Elem to_ambient(const Elem& x) const;
  /// An element of the ambient ring whose powers clear every denominator
  /// of the localized ring (the newly inverted part of f).
  const Elem& clearing() const { return clearing_; }

 private:
  Ring ambient_;
  Elem f_;
  Ring localized_;
  Elem clearing_;
};

Matrix restrict(const Matrix& M, const OpenImmersion& j);
PerfectComplex restrict(const PerfectComplex& E, const OpenImmersion& j);
ChainMap restrict(const ChainMap& f, const OpenImmersion& j);

struct Extension {
  /// Over the ambient ring.
  PerfectComplex complex;
  /// Isomorphism restrict(complex) -> F.
  ChainMap comparison;
  std::string note;
};

/// Clears denominators by rescaling the basis of F^n by clearing()^{k_n}.
Extension extend_perfect(const PerfectComplex& F, const OpenImmersion& j);

/// Lifts every cyclic torsion summand R[1/f]/(d) of H^*(F) to R/(d). Z is a
/// finite subset of the ambient spectrum. Throws InputError on a free part,
/// Z = All, support outside Z or cohomology above N.
PerfectComplex extend_with_support(const PerfectComplex& F, const SpecSubset& Z, int N, const OpenImmersion& j);

struct ProbeCheck {
  std::string label;
  aisle::OrthoCertificate ambient;
  aisle::OrthoCertificate restricted;
};

struct RestrictionReport {
  std::vector<ProbeCheck> probes;
  bool ambient_orthogonal = true;
  bool restricted_orthogonal = true;
  /// ambient orthogonality implies restricted orthogonality
  bool holds = true;
  /// "orthogonal", "non-orthogonal upstream" or "violated"
  std::string status;
};

/// Probes K(prod S)[-N] for nonempty S in Z, at most `budget` of them, against
/// F and against restrict(F) (every shift n >= 0 is covered by the Hom check).
RestrictionReport restriction_orthogonality_check(const PerfectComplex& F, const SpecSubset& Z, int N,
                                                  const OpenImmersion& j, std::size_t budget = 64);

}  // namespace tstruct::zariski
