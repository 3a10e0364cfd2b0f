// Verified t-decomposition triangles L -> A -> N -> L[1].
#pragma once

#include <string>

#include "tstruct/aisle/orthogonality.hpp"
#include "tstruct/supports/membership.hpp"

namespace tstruct::aisle {

using complex::Triangle;
using supports::AisleResult;

struct DecompositionReport {
  /// first = L, second = A, third = N.
  Triangle triangle;
  AisleResult aisle_check;
  OrthoCertificate coaisle_check;
  /// cone(L -> A) -> N is a quasi-isomorphism.
  bool cone_identity = false;
  /// H^0(Hom(L, N)) = 0.
  bool hom_vanishes = false;
  int iterations = 0;
  bool cap_exceeded = false;
  /// Soft truncation was used.
  bool classical = false;
  /// Every check above passed and the cap was not hit.
  bool verified = false;
  std::string failure;
};

/// Attaches shifted Koszul generators to A until the quotient lies in the
/// coaisle, at most `cap` rounds, then recovers L as the fiber and checks
/// every postcondition. Filtrations with values in {All, empty} go through
/// soft truncation instead.
DecompositionReport t_decompose(const PerfectComplex& A, const Filtration& phi, int cap = 64);

/// Fiber of a: A -> N with its projection to A; the triangle's first map.
struct Fiber {
  PerfectComplex fiber;
  ChainMap to_source;
};
Fiber fiber(const ChainMap& a);

}  // namespace tstruct::aisle
