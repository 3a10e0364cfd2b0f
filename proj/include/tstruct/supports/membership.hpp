// Aisle membership of a complex and the graded support of a family.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tstruct/complex/perfect_complex.hpp"
#include "tstruct/supports/filtration.hpp"

namespace tstruct::supports {

using complex::PerfectComplex;
using exactalg::PrimePoint;

/// First degree where Supp H^i(E) escapes phi(i); `point` empty means the generic point.
struct AisleViolation {
  int degree = 0;
  std::optional<PrimePoint> point;

  std::string to_string(const Ring& R) const;
};

struct AisleResult {
  bool member = true;
  std::optional<AisleViolation> violation;

  explicit operator bool() const { return member; }
};

/// Supp H^i(E) contained in phi(i) for every i.
AisleResult in_aisle(const PerfectComplex& E, const Filtration& phi);

/// i -> union over the family of Supph^{>=i}; the zero filtration for an empty family.
Filtration graded_support(const Ring& R, const std::vector<PerfectComplex>& family);

}  // namespace tstruct::supports
