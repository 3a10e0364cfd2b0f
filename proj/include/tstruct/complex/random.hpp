// Seeded generators for elements, complexes and chain maps.
#pragma once

#include <functional>
#include <random>

#include "tstruct/complex/perfect_complex.hpp"

namespace tstruct::complex {

using Rng = std::mt19937_64;

struct ComplexBounds {
  std::size_t max_rank = 3;
  /// hi - lo of the generated complex stays at or below this.
  int amplitude = 4;
  int lo_min = -3;
  int lo_max = 1;
  /// Integers: |entry|; polynomials: the coefficient index of fp::from_index.
  long entry_bound = 20;
  /// Torsion divisors are products of one or two of these (random nonunits when empty).
  std::vector<Elem> divisor_pool;
  /// Degrees allowed to carry free cohomology; everything when unset.
  std::function<bool(int)> free_allowed;
  /// Elementary basis changes applied per degree.
  int mixing = 3;
};

Elem random_element(const Ring& R, Rng& rng, long bound);
Elem random_nonzero(const Ring& R, Rng& rng, long bound);
/// Nonzero nonunit, from the pool when one is given.
Elem random_divisor(const Ring& R, Rng& rng, long bound, const std::vector<Elem>& pool = {});
/// Within the entry bound, for integer and polynomial rings (localized: the numerator).
bool entry_within(const Ring& R, const Elem& e, long bound);

/// A direct sum of random elementary pieces, mixed by unimodular changes of
/// basis. Entries are kept within bounds.entry_bound when possible.
PerfectComplex random_complex(const Ring& R, Rng& rng, const ComplexBounds& bounds);

/// Random small combination of a basis of degree 0 cocycles of Hom(A, B).
ChainMap random_chain_map(const PerfectComplex& A, const PerfectComplex& B, Rng& rng);

}  // namespace tstruct::complex
