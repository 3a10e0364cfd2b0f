// Dense univariate polynomial arithmetic over F_p (p < 2^16).
#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "tstruct/exactalg/ring.hpp"

namespace tstruct::exactalg::fp {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

Poly constant(std::uint64_t v, std::uint32_t p);
Poly monomial(std::uint32_t coeff, int degree, std::uint32_t p);
void trim(Poly& a);

Poly add(const Poly& a, const Poly& b, std::uint32_t p);
Poly sub(const Poly& a, const Poly& b, std::uint32_t p);
Poly neg(const Poly& a, std::uint32_t p);
Poly scale(const Poly& a, std::uint32_t s, std::uint32_t p);
Poly mul(const Poly& a, const Poly& b, std::uint32_t p);
/// Long division; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint32_t p);
Poly rem(const Poly& a, const Poly& b, std::uint32_t p);
Poly gcd(Poly a, Poly b, std::uint32_t p);
Poly monic(const Poly& a, std::uint32_t p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p);
Poly powmod(Poly base, const mpz_class& e, const Poly& m, std::uint32_t p);
Poly derivative(const Poly& a, std::uint32_t p);

/// Degree first, then coefficients from the top.
int compare(const Poly& a, const Poly& b);

std::string to_string(const Poly& a);
/// Parses sums of terms like "3x^2", "-x", "4", "2*x^3". Coefficients reduce mod p.
Poly parse(const std::string& text, std::uint32_t p);

/// Integer encoding used by random generators: bit/digit expansion in base p.
Poly from_index(std::uint64_t index, std::uint32_t p);

}  // namespace tstruct::exactalg::fp
