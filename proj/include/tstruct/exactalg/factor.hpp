// Prime factorization over Z and F_p[x], and closed points of the spectrum.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "tstruct/exactalg/ring.hpp"

namespace tstruct::exactalg {

/// Closed point (p) of Spec R: generator is a normalized prime of the base ring
/// that does not divide the inverted element. Stored with exp 0.
struct PrimePoint {
  Elem generator;
  friend bool operator==(const PrimePoint&, const PrimePoint&) = default;
};

struct PrimePower {
  PrimePoint prime;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// |n| as a sorted list of (prime, exponent); n must be nonzero.
std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n);

/// Monic irreducible factorization over F_p, sorted by (degree, coefficients).
/// Squarefree decomposition, distinct-degree splitting, then Cantor-Zassenhaus.
std::vector<std::pair<Poly, unsigned>> factor_poly(const Poly& f, std::uint32_t p);

/// Factorization in the ring R. Primes dividing the inverted element are units
/// and do not appear; the product of the returned powers is an associate of a.
std::vector<PrimePower> factor(const Ring& R, const Elem& a);

/// Distinct prime points dividing a (a != 0), sorted canonically.
std::vector<PrimePoint> prime_support(const Ring& R, const Elem& a);

/// True when a is a prime element of R (nonzero nonunit, irreducible).
bool is_prime(const Ring& R, const Elem& a);

/// Validates and normalizes a prime generator; throws InputError when `a` is
/// not prime in R.
PrimePoint make_prime_point(const Ring& R, const Elem& a);

}  // namespace tstruct::exactalg
