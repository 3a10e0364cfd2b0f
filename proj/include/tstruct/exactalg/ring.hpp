// Exact coefficient rings: Z, F_p[x], and their localizations at one element.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace tstruct {

/// Raised for malformed or incompatible inputs (bad ring, shape mismatch, parse failure).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when two objects over different rings are combined.
class RingMismatch : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace tstruct

namespace tstruct::exactalg {

/// Polynomial over F_p, coefficients low degree first, no trailing zeros.
/// The prime lives in the owning Ring, not here.
struct Poly {
  std::vector<std::uint32_t> c;

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  friend bool operator==(const Poly&, const Poly&) = default;
};

using BaseValue = std::variant<mpz_class, Poly>;

/// Element of a (possibly localized) ring: num / h^exp where h is the ring's
/// inverted element. exp is minimal, so the representation is unique.
struct Elem {
  BaseValue num;
  unsigned exp = 0;

  friend bool operator==(const Elem& a, const Elem& b) {
    return a.exp == b.exp && a.num == b.num;
  }
};

enum class BaseKind { Integers, PolyFp };

class Ring {
 public:
  /// The integers.
  Ring();
  static Ring integers();
  /// F_p[x]; p must be a prime no larger than 2^16.
  static Ring poly_fp(std::uint32_t p);

  /// Same base with `f` additionally inverted. The stored inverted element is
  /// the normalized radical of (current inverted) * f, so D(f) and D(f^2) agree.
  Ring localized_at(const Elem& f) const;
  /// The base ring with nothing inverted.
  Ring base_ring() const;

  BaseKind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_localized() const { return !inverted_primes_.empty(); }
  /// Normalized squarefree inverted element (1 when not localized).
  const BaseValue& inverted() const { return inverted_; }
  /// Prime factors of the inverted element, sorted.
  const std::vector<BaseValue>& inverted_primes() const { return inverted_primes_; }

  std::string describe() const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_ && a.inverted_ == b.inverted_;
  }

  // --- element construction -------------------------------------------------
  Elem zero() const;
  Elem one() const;
  Elem from_int(long v) const;
  Elem from_base(BaseValue v) const;
  /// The monomial x (polynomial rings only).
  Elem variable() const;
  /// a / b where b must be a unit of this ring.
  Elem fraction(const BaseValue& a, const BaseValue& b) const;

  // --- arithmetic -----------------------------------------------------------
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(const Elem& a, unsigned e) const;

  bool is_zero(const Elem& a) const;
  bool is_one(const Elem& a) const;
  bool is_unit(const Elem& a) const;
  /// Inverse of a unit; throws InputError otherwise.
  Elem inverse(const Elem& u) const;

  /// Euclidean division a = q*b + r with norm(r) < norm(b) or r = 0.
  std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const;
  bool divides(const Elem& b, const Elem& a) const;
  /// a / b, requires b | a.
  Elem exact_div(const Elem& a, const Elem& b) const;
  Elem gcd(const Elem& a, const Elem& b) const;

  /// Compares Euclidean norms (|a| or deg a of the part coprime to the
  /// inverted element). Zero sorts above everything.
  int compare_norm(const Elem& a, const Elem& b) const;
  /// Canonical associate: positive/monic, with inverted primes stripped.
  Elem normalize(const Elem& a) const;
  /// The unit u with a = u * normalize(a). Requires a != 0.
  Elem unit_part(const Elem& a) const;

  /// Total order used for canonical sorting (not compatible with arithmetic).
  int compare(const Elem& a, const Elem& b) const;

  std::string to_string(const Elem& a) const;
  Elem parse(const std::string& text) const;

  // --- base ring helpers (used by factorization and localization) -----------
  BaseValue base_zero() const;
  BaseValue base_one() const;
  bool base_is_zero(const BaseValue& a) const;
  bool base_is_unit(const BaseValue& a) const;
  BaseValue base_add(const BaseValue& a, const BaseValue& b) const;
  BaseValue base_sub(const BaseValue& a, const BaseValue& b) const;
  BaseValue base_mul(const BaseValue& a, const BaseValue& b) const;
  std::pair<BaseValue, BaseValue> base_divmod(const BaseValue& a, const BaseValue& b) const;
  BaseValue base_gcd(BaseValue a, BaseValue b) const;
  BaseValue base_normalize(const BaseValue& a) const;
  int base_compare(const BaseValue& a, const BaseValue& b) const;
  std::string base_to_string(const BaseValue& a) const;
  /// Strips every prime factor of the inverted element from a.
  BaseValue strip_inverted(BaseValue a) const;

 private:
  Elem reduce(BaseValue num, unsigned exp) const;
  BaseValue base_pow_inverted(unsigned e) const;
  BaseValue parse_base(const std::string& text) const;

  BaseKind kind_ = BaseKind::Integers;
  std::uint32_t p_ = 0;
  BaseValue inverted_;
  std::vector<BaseValue> inverted_primes_;
};

}  // namespace tstruct::exactalg
