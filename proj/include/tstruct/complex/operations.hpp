// Shifts, cones, sums, total tensor and Hom complexes, plus chain-map algebra.
//
// Sign conventions:
//   C[k]^n = C^{n+k} with differential (-1)^k d_C.
//   cone(f: A -> B)^n = A^{n+1} (+) B^n, d = [[-d_A, 0], [f, d_B]].
//   (A (x) B)^n = (+)_{p+q=n} A^p (x) B^q ordered by p, d = d_A (x) 1 + (-1)^p 1 (x) d_B.
//   Hom(A, B)^n = prod_k Hom(A^k, B^{k+n}) ordered by k, each block a row-major
//   vectorized matrix, d(phi) = d_B phi - (-1)^n phi d_A.
#pragma once

#include <vector>

#include "tstruct/complex/perfect_complex.hpp"

namespace tstruct::complex {

PerfectComplex shift(const PerfectComplex& C, int k);
/// f[k], componentwise f^{n+k}.
ChainMap shift(const ChainMap& f, int k);

/// Returns (source, target, cone) with g the inclusion of the target and h
/// the projection onto source[1].
Triangle cone(const ChainMap& f);

PerfectComplex direct_sum(const PerfectComplex& A, const PerfectComplex& B);
PerfectComplex direct_sum(const Ring& R, const std::vector<PerfectComplex>& parts);
/// Block-diagonal f (+) g.
ChainMap direct_sum(const ChainMap& f, const ChainMap& g);
/// [f_1 ... f_k] : (+) A_i -> B.
ChainMap codiagonal(const std::vector<ChainMap>& maps);

PerfectComplex tensor_total(const PerfectComplex& A, const PerfectComplex& B);
PerfectComplex hom_complex(const PerfectComplex& A, const PerfectComplex& B);

/// Position of Hom(A^k, B^{k+n}) inside Hom(A, B)^n.
std::size_t hom_block_offset(const PerfectComplex& A, const PerfectComplex& B, int n, int k);
/// The degree -n cocycle `vec` of Hom(g, N), read as a chain map g[n] -> N.
ChainMap hom_cocycle_to_map(const PerfectComplex& g, const PerfectComplex& N, int n, const Matrix& vec);

/// g . f
ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap add(const ChainMap& f, const ChainMap& g);
ChainMap negate(const ChainMap& f);
/// Same components, reinterpreted between complexes with identical ranks.
ChainMap retarget(const ChainMap& f, const PerfectComplex& source, const PerfectComplex& target);

}  // namespace tstruct::complex
