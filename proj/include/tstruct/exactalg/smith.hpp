// Smith normal form over a Euclidean (possibly localized) ring.
#pragma once

#include <vector>

#include "tstruct/exactalg/matrix.hpp"

namespace tstruct::exactalg {

/// row_transform * M * col_transform = diag(divisors, 0...) with
/// divisors[0] | divisors[1] | ... all normalized. The inverse transforms are
/// tracked alongside so callers can change coordinates in both directions.
struct SmithForm {
  std::vector<Elem> divisors;
  std::size_t rank = 0;
  Matrix row_transform;
  Matrix col_transform;
  Matrix row_inverse;
  Matrix col_inverse;
};

SmithForm smith_normal_form(const Ring& R, const Matrix& M);

}  // namespace tstruct::exactalg
