#include "tstruct/exactalg/poly_fp.hpp"

#include <algorithm>
#include <cctype>

namespace tstruct::exactalg::fp {

namespace {

std::uint32_t mulm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

}  // namespace

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat; p is prime.
  std::uint64_t result = 1, base = a % p;
  std::uint32_t e = p - 2;
  while (e) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

void trim(Poly& a) {
  while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

Poly constant(std::uint64_t v, std::uint32_t p) {
  Poly r;
  if (v % p) r.c.push_back(static_cast<std::uint32_t>(v % p));
  return r;
}

Poly monomial(std::uint32_t coeff, int degree, std::uint32_t p) {
  Poly r;
  if (coeff % p == 0) return r;
  r.c.assign(static_cast<std::size_t>(degree) + 1, 0);
  r.c.back() = coeff % p;
  return r;
}

Poly add(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    std::uint32_t x = i < a.c.size() ? a.c[i] : 0;
    std::uint32_t y = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = (x + y) % p;
  }
  trim(r);
  return r;
}

Poly neg(const Poly& a, std::uint32_t p) {
  Poly r = a;
  for (auto& x : r.c) x = x ? p - x : 0;
  return r;
}

Poly sub(const Poly& a, const Poly& b, std::uint32_t p) { return add(a, neg(b, p), p); }

Poly scale(const Poly& a, std::uint32_t s, std::uint32_t p) {
  Poly r = a;
  for (auto& x : r.c) x = mulm(x, s % p, p);
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::uint64_t> acc(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a.c[i]) * b.c[j]) % p;
    }
  }
  Poly r;
  r.c.assign(acc.begin(), acc.end());
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint32_t p) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  Poly r = a;
  if (r.degree() < b.degree()) return {Poly{}, r};
  Poly q;
  q.c.assign(static_cast<std::size_t>(r.degree() - b.degree()) + 1, 0);
  const std::uint32_t lead_inv = inv_mod(b.c.back(), p);
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const int shift = r.degree() - b.degree();
    const std::uint32_t coef = mulm(r.c.back(), lead_inv, p);
    q.c[static_cast<std::size_t>(shift)] = coef;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      auto& slot = r.c[j + static_cast<std::size_t>(shift)];
      slot = (slot + p - mulm(coef, b.c[j], p)) % p;
    }
    trim(r);
  }
  trim(q);
  return {q, r};
}

Poly rem(const Poly& a, const Poly& b, std::uint32_t p) { return divmod(a, b, p).second; }

Poly monic(const Poly& a, std::uint32_t p) {
  if (a.is_zero()) return a;
  return scale(a, inv_mod(a.c.back(), p), p);
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
  while (!b.is_zero()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  return rem(mul(a, b, p), m, p);
}

Poly powmod(Poly base, const mpz_class& e, const Poly& m, std::uint32_t p) {
  Poly result = rem(constant(1, p), m, p);
  base = rem(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, base, m, p);
  }
  return result;
}

Poly derivative(const Poly& a, std::uint32_t p) {
  Poly r;
  for (std::size_t i = 1; i < a.c.size(); ++i) {
    r.c.push_back(mulm(a.c[i], static_cast<std::uint32_t>(i % p), p));
  }
  trim(r);
  return r;
}

int compare(const Poly& a, const Poly& b) {
  if (a.c.size() != b.c.size()) return a.c.size() < b.c.size() ? -1 : 1;
  for (std::size_t i = a.c.size(); i-- > 0;) {
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i] ? -1 : 1;
  }
  return 0;
}

std::string to_string(const Poly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t i = a.c.size(); i-- > 0;) {
    const std::uint32_t coef = a.c[i];
    if (!coef) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(coef);
      continue;
    }
    if (coef != 1) out += std::to_string(coef);
    out += 'x';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

Poly parse(const std::string& text, std::uint32_t p) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw InputError("empty polynomial");
  Poly result;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    }
    mpz_class coef = 1;
    bool have_digits = false;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos > start) {
      coef = mpz_class(s.substr(start, pos - start));
      have_digits = true;
    }
    if (pos < s.size() && s[pos] == '*') ++pos;
    int degree = 0;
    if (pos < s.size() && (s[pos] == 'x' || s[pos] == 'X')) {
      ++pos;
      degree = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw InputError("bad exponent in polynomial '" + text + "'");
        degree = std::stoi(s.substr(start, pos - start));
      }
    } else if (!have_digits) {
      throw InputError("cannot parse polynomial '" + text + "'");
    }
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      throw InputError("unexpected character in polynomial '" + text + "'");
    }
    mpz_class reduced = coef % p;
    if (negative) reduced = (p - reduced) % p;
    result = add(result, monomial(static_cast<std::uint32_t>(reduced.get_ui()), degree, p), p);
  }
  return result;
}

Poly from_index(std::uint64_t index, std::uint32_t p) {
  Poly r;
  while (index) {
    r.c.push_back(static_cast<std::uint32_t>(index % p));
    index /= p;
  }
  trim(r);
  return r;
}

}  // namespace tstruct::exactalg::fp
