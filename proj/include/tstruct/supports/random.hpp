// Seeded random filtrations.
#pragma once

#include "tstruct/complex/random.hpp"
#include "tstruct/supports/filtration.hpp"

namespace tstruct::supports {

struct FiltrationBounds {
  int lo = -5;
  int hi = 5;
  /// Distinct primes drawn from the pool.
  std::size_t max_primes = 4;
  /// Probability weight (out of 4) of an All head.
  int all_weight = 1;
};

/// Small primes of the ring (integers: 2, 3, 5, ...; F_p[x]: monic irreducibles of low degree),
/// skipping those inverted in R.
std::vector<exactalg::PrimePoint> small_primes(const Ring& R, std::size_t count);

/// Valid filtration with every change inside [bounds.lo, bounds.hi].
Filtration random_filtration(const Ring& R, complex::Rng& rng, const FiltrationBounds& bounds);

}  // namespace tstruct::supports
