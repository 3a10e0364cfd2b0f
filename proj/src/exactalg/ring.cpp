#include "tstruct/exactalg/ring.hpp"

#include <algorithm>
#include <cctype>

#include "tstruct/exactalg/factor.hpp"
#include "tstruct/exactalg/poly_fp.hpp"

namespace tstruct::exactalg {

namespace {

const mpz_class& Z(const BaseValue& v) { return std::get<mpz_class>(v); }
const Poly& P(const BaseValue& v) { return std::get<Poly>(v); }

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  }
  return out;
}

std::string strip_parens(std::string s) {
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    bool encloses = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0 && i + 1 < s.size()) {
        encloses = false;
        break;
      }
    }
    if (!encloses) break;
    s = s.substr(1, s.size() - 2);
  }
  return s;
}

}  // namespace

Ring::Ring() : inverted_(mpz_class(1)) {}

Ring Ring::integers() { return Ring(); }

Ring Ring::poly_fp(std::uint32_t p) {
  if (p < 2 || p > 65536 || mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 30) == 0) {
    throw InputError("F_p[x] requires a prime p <= 2^16, got " + std::to_string(p));
  }
  Ring r;
  r.kind_ = BaseKind::PolyFp;
  r.p_ = p;
  r.inverted_ = fp::constant(1, p);
  return r;
}

Ring Ring::base_ring() const {
  return kind_ == BaseKind::Integers ? integers() : poly_fp(p_);
}

Ring Ring::localized_at(const Elem& f) const {
  if (is_zero(f)) throw InputError("cannot invert zero");
  BaseValue fresh = strip_inverted(f.num);
  if (base_is_unit(fresh)) return *this;
  std::vector<BaseValue> primes = inverted_primes_;
  if (kind_ == BaseKind::Integers) {
    for (auto& [q, e] : factor_integer(Z(fresh))) primes.emplace_back(q);
  } else {
    for (auto& [q, e] : factor_poly(P(fresh), p_)) primes.emplace_back(q);
  }
  std::sort(primes.begin(), primes.end(),
            [this](const BaseValue& a, const BaseValue& b) { return base_compare(a, b) < 0; });
  Ring r = *this;
  r.inverted_primes_ = primes;
  r.inverted_ = base_one();
  for (auto& q : primes) r.inverted_ = base_mul(r.inverted_, q);
  return r;
}

std::string Ring::describe() const {
  std::string base = kind_ == BaseKind::Integers ? "Z" : "F_" + std::to_string(p_) + "[x]";
  if (!is_localized()) return base;
  std::string h = base_to_string(inverted_);
  if (kind_ == BaseKind::PolyFp && h.find('+') != std::string::npos) h = "(" + h + ")";
  return base + "[1/" + h + "]";
}

// --- base ring ---------------------------------------------------------------

BaseValue Ring::base_zero() const {
  if (kind_ == BaseKind::Integers) return mpz_class(0);
  return Poly{};
}

BaseValue Ring::base_one() const {
  if (kind_ == BaseKind::Integers) return mpz_class(1);
  return fp::constant(1, p_);
}

bool Ring::base_is_zero(const BaseValue& a) const {
  if (kind_ == BaseKind::Integers) return Z(a) == 0;
  return P(a).is_zero();
}

bool Ring::base_is_unit(const BaseValue& a) const {
  if (kind_ == BaseKind::Integers) return abs(Z(a)) == 1;
  return P(a).degree() == 0;
}

BaseValue Ring::base_add(const BaseValue& a, const BaseValue& b) const {
  if (kind_ == BaseKind::Integers) return mpz_class(Z(a) + Z(b));
  return fp::add(P(a), P(b), p_);
}

BaseValue Ring::base_sub(const BaseValue& a, const BaseValue& b) const {
  if (kind_ == BaseKind::Integers) return mpz_class(Z(a) - Z(b));
  return fp::sub(P(a), P(b), p_);
}

BaseValue Ring::base_mul(const BaseValue& a, const BaseValue& b) const {
  if (kind_ == BaseKind::Integers) return mpz_class(Z(a) * Z(b));
  return fp::mul(P(a), P(b), p_);
}

std::pair<BaseValue, BaseValue> Ring::base_divmod(const BaseValue& a, const BaseValue& b) const {
  if (base_is_zero(b)) throw InputError("division by zero");
  if (kind_ == BaseKind::Integers) {
    // Remainder of least absolute value keeps SNF entries small.
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), Z(a).get_mpz_t(), Z(b).get_mpz_t());
    mpz_class twice = 2 * abs(r);
    if (twice > abs(Z(b))) {
      r -= Z(b);
      q += 1;
    }
    return {BaseValue{q}, BaseValue{r}};
  }
  auto [q, r] = fp::divmod(P(a), P(b), p_);
  return {BaseValue{std::move(q)}, BaseValue{std::move(r)}};
}

BaseValue Ring::base_gcd(BaseValue a, BaseValue b) const {
  if (kind_ == BaseKind::Integers) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), Z(a).get_mpz_t(), Z(b).get_mpz_t());
    return g;
  }
  return fp::gcd(P(a), P(b), p_);
}

BaseValue Ring::base_normalize(const BaseValue& a) const {
  if (kind_ == BaseKind::Integers) return mpz_class(abs(Z(a)));
  return fp::monic(P(a), p_);
}

int Ring::base_compare(const BaseValue& a, const BaseValue& b) const {
  if (kind_ == BaseKind::Integers) {
    const int c = cmp(Z(a), Z(b));
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  return fp::compare(P(a), P(b));
}

std::string Ring::base_to_string(const BaseValue& a) const {
  if (kind_ == BaseKind::Integers) return Z(a).get_str();
  return fp::to_string(P(a));
}

BaseValue Ring::strip_inverted(BaseValue a) const {
  if (base_is_zero(a)) return a;
  for (const auto& q : inverted_primes_) {
    for (;;) {
      auto [quot, r] = base_divmod(a, q);
      if (!base_is_zero(r)) break;
      a = std::move(quot);
    }
  }
  return a;
}

BaseValue Ring::base_pow_inverted(unsigned e) const {
  BaseValue r = base_one();
  for (unsigned i = 0; i < e; ++i) r = base_mul(r, inverted_);
  return r;
}

BaseValue Ring::parse_base(const std::string& text) const {
  const std::string s = strip_parens(text);
  if (kind_ == BaseKind::Integers) {
    std::string digits = s;
    if (!digits.empty() && digits[0] == '+') digits = digits.substr(1);
    const std::size_t start = (!digits.empty() && digits[0] == '-') ? 1 : 0;
    if (digits.size() == start ||
        !std::all_of(digits.begin() + static_cast<long>(start), digits.end(),
                     [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      throw InputError("cannot parse integer '" + text + "'");
    }
    return mpz_class(digits);
  }
  return fp::parse(s, p_);
}

// --- localized ring ------------------------------------------------------------

Elem Ring::reduce(BaseValue num, unsigned exp) const {
  if (base_is_zero(num)) return Elem{std::move(num), 0};
  while (exp > 0) {
    auto [q, r] = base_divmod(num, inverted_);
    if (!base_is_zero(r)) break;
    num = std::move(q);
    --exp;
  }
  return Elem{std::move(num), exp};
}

Elem Ring::zero() const { return Elem{base_zero(), 0}; }
Elem Ring::one() const { return Elem{base_one(), 0}; }

Elem Ring::from_int(long v) const {
  if (kind_ == BaseKind::Integers) return Elem{mpz_class(v), 0};
  long m = v % static_cast<long>(p_);
  if (m < 0) m += p_;
  return Elem{fp::constant(static_cast<std::uint64_t>(m), p_), 0};
}

Elem Ring::from_base(BaseValue v) const { return Elem{std::move(v), 0}; }

Elem Ring::variable() const {
  if (kind_ != BaseKind::PolyFp) throw InputError("the integers have no variable x");
  return Elem{fp::monomial(1, 1, p_), 0};
}

Elem Ring::fraction(const BaseValue& a, const BaseValue& b) const {
  if (base_is_zero(b)) throw InputError("zero denominator");
  if (!base_is_unit(strip_inverted(b))) {
    throw InputError("denominator '" + base_to_string(b) + "' is not a unit of " + describe());
  }
  return mul(from_base(a), inverse(from_base(b)));
}

Elem Ring::add(const Elem& a, const Elem& b) const {
  const unsigned e = std::max(a.exp, b.exp);
  BaseValue x = base_mul(a.num, base_pow_inverted(e - a.exp));
  BaseValue y = base_mul(b.num, base_pow_inverted(e - b.exp));
  return reduce(base_add(x, y), e);
}

Elem Ring::neg(const Elem& a) const { return Elem{base_sub(base_zero(), a.num), a.exp}; }

Elem Ring::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

Elem Ring::mul(const Elem& a, const Elem& b) const {
  if (a.exp == 0 && b.exp == 0) return Elem{base_mul(a.num, b.num), 0};
  return reduce(base_mul(a.num, b.num), a.exp + b.exp);
}

Elem Ring::pow(const Elem& a, unsigned e) const {
  Elem r = one();
  for (unsigned i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

bool Ring::is_zero(const Elem& a) const { return base_is_zero(a.num); }

bool Ring::is_one(const Elem& a) const { return a.exp == 0 && a.num == base_one(); }

bool Ring::is_unit(const Elem& a) const {
  return !is_zero(a) && base_is_unit(strip_inverted(a.num));
}

Elem Ring::inverse(const Elem& u) const {
  if (!is_unit(u)) throw InputError("'" + to_string(u) + "' is not a unit of " + describe());
  // num = c * (product of inverted primes); find k with num | h^k.
  BaseValue hk = base_one();
  unsigned k = 0;
  for (;;) {
    auto [q, r] = base_divmod(hk, u.num);
    if (base_is_zero(r)) {
      return reduce(base_mul(q, base_pow_inverted(u.exp)), k);
    }
    hk = base_mul(hk, inverted_);
    ++k;
  }
}

std::pair<Elem, Elem> Ring::divmod(const Elem& a, const Elem& b) const {
  if (is_zero(b)) throw InputError("division by zero");
  const BaseValue core = strip_inverted(b.num);
  // b = s * core / h^eb with s a unit of the localized ring.
  const BaseValue s = base_divmod(b.num, core).first;
  auto [q0, r0] = base_divmod(a.num, core);
  // a = (q0 / h^ea) * core + r0 / h^ea and core = b * h^eb / s.
  Elem q = mul(reduce(base_mul(q0, base_pow_inverted(b.exp)), a.exp), inverse(from_base(s)));
  Elem r = reduce(std::move(r0), a.exp);
  return {std::move(q), std::move(r)};
}

bool Ring::divides(const Elem& b, const Elem& a) const {
  if (is_zero(a)) return true;
  if (is_zero(b)) return false;
  return is_zero(divmod(a, b).second);
}

Elem Ring::exact_div(const Elem& a, const Elem& b) const {
  auto [q, r] = divmod(a, b);
  if (!is_zero(r)) {
    throw InputError("'" + to_string(b) + "' does not divide '" + to_string(a) + "'");
  }
  return q;
}

Elem Ring::gcd(const Elem& a, const Elem& b) const {
  return normalize(from_base(base_gcd(strip_inverted(a.num), strip_inverted(b.num))));
}

int Ring::compare_norm(const Elem& a, const Elem& b) const {
  const bool za = is_zero(a), zb = is_zero(b);
  if (za || zb) return za == zb ? 0 : (za ? 1 : -1);
  const BaseValue x = strip_inverted(a.num), y = strip_inverted(b.num);
  if (kind_ == BaseKind::Integers) {
    const int c = mpz_cmpabs(Z(x).get_mpz_t(), Z(y).get_mpz_t());
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  const int dx = P(x).degree(), dy = P(y).degree();
  return dx < dy ? -1 : (dx > dy ? 1 : 0);
}

Elem Ring::normalize(const Elem& a) const {
  if (is_zero(a)) return zero();
  return Elem{base_normalize(strip_inverted(a.num)), 0};
}

Elem Ring::unit_part(const Elem& a) const {
  if (is_zero(a)) throw InputError("zero has no unit part");
  const Elem n = normalize(a);
  return reduce(base_divmod(a.num, n.num).first, a.exp);
}

int Ring::compare(const Elem& a, const Elem& b) const {
  if (a.exp != b.exp) return a.exp < b.exp ? -1 : 1;
  return base_compare(a.num, b.num);
}

std::string Ring::to_string(const Elem& a) const {
  std::string num = base_to_string(a.num);
  if (a.exp == 0) return num;
  std::string den = base_to_string(base_pow_inverted(a.exp));
  if (kind_ == BaseKind::PolyFp) {
    if (num.find('+') != std::string::npos) num = "(" + num + ")";
    if (den.find('+') != std::string::npos || den.find('x') != std::string::npos) den = "(" + den + ")";
  }
  return num + "/" + den;
}

Elem Ring::parse(const std::string& text) const {
  const std::string s = strip_spaces(text);
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == '/' && depth == 0) {
      return fraction(parse_base(s.substr(0, i)), parse_base(s.substr(i + 1)));
    }
  }
  return from_base(parse_base(s));
}

}  // namespace tstruct::exactalg
