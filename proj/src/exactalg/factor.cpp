#include "tstruct/exactalg/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "tstruct/exactalg/poly_fp.hpp"

namespace tstruct::exactalg {

namespace {

mpz_class pollard_brent(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, ys, q = 1, g = 1;
    const unsigned long m = 64;
    unsigned long r = 1;
    auto step = [&](const mpz_class& v) {
      mpz_class t = v * v + c;
      return mpz_class(t % n);
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          mpz_class diff = x - y;
          q = (q * abs(diff)) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        mpz_class diff = x - ys;
        mpz_class a = abs(diff);
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_integer(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  mpz_class d = pollard_brent(n);
  split_integer(d, out);
  split_integer(n / d, out);
}

Poly pth_root(const Poly& f, std::uint32_t p) {
  Poly r;
  for (std::size_t i = 0; i < f.c.size(); i += p) r.c.push_back(f.c[i]);
  fp::trim(r);
  return r;
}

bool is_one(const Poly& f) { return f.c.size() == 1 && f.c[0] == 1; }

// Squarefree decomposition of a monic polynomial: pairs (squarefree part, multiplicity).
void squarefree(const Poly& f, std::uint32_t p, unsigned mult, std::vector<std::pair<Poly, unsigned>>& out) {
  if (f.degree() <= 0) return;
  Poly g = fp::derivative(f, p);
  if (g.is_zero()) {
    squarefree(pth_root(f, p), p, mult * p, out);
    return;
  }
  Poly c = fp::gcd(f, g, p);
  Poly w = fp::divmod(f, c, p).first;
  unsigned i = 1;
  while (!is_one(w)) {
    Poly y = fp::gcd(w, c, p);
    Poly fac = fp::divmod(w, y, p).first;
    if (fac.degree() > 0) out.emplace_back(fp::monic(fac, p), mult * i);
    ++i;
    w = y;
    c = fp::divmod(c, y, p).first;
  }
  c = fp::monic(c, p);
  if (c.degree() > 0) squarefree(pth_root(c, p), p, mult * p, out);
}

void equal_degree(const Poly& f, int d, std::uint32_t p, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (f.degree() == d) {
    out.push_back(fp::monic(f, p));
    return;
  }
  mpz_class exponent;
  if (p != 2) {
    mpz_ui_pow_ui(exponent.get_mpz_t(), p, static_cast<unsigned long>(d));
    exponent = (exponent - 1) / 2;
  }
  std::uniform_int_distribution<std::uint32_t> coef(0, p - 1);
  for (;;) {
    Poly a;
    a.c.resize(static_cast<std::size_t>(f.degree()));
    for (auto& x : a.c) x = coef(rng);
    fp::trim(a);
    if (a.degree() <= 0) continue;
    Poly b;
    if (p == 2) {
      Poly term = a;
      for (int i = 0; i < d; ++i) {
        b = fp::add(b, term, p);
        term = fp::mulmod(term, term, f, p);
      }
    } else {
      b = fp::sub(fp::powmod(a, exponent, f, p), fp::constant(1, p), p);
    }
    Poly g = fp::gcd(b, f, p);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, p, rng, out);
      equal_degree(fp::divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class& n_in) {
  if (n_in == 0) throw InputError("cannot factor zero");
  mpz_class n = abs(n_in);
  std::map<mpz_class, unsigned> found;
  for (unsigned long d = 2; d < 10000 && mpz_class(d) * d <= n; d += (d == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      ++found[mpz_class(d)];
      n /= d;
    }
  }
  split_integer(n, found);
  return {found.begin(), found.end()};
}

std::vector<std::pair<Poly, unsigned>> factor_poly(const Poly& f_in, std::uint32_t p) {
  if (f_in.is_zero()) throw InputError("cannot factor zero");
  Poly f = fp::monic(f_in, p);
  std::vector<std::pair<Poly, unsigned>> sqf;
  squarefree(f, p, 1, sqf);

  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<std::pair<Poly, unsigned>> result;
  for (const auto& [part, mult] : sqf) {
    Poly rest = part;
    Poly h = fp::monomial(1, 1, p);
    const Poly x = h;
    for (int d = 1; rest.degree() >= 2 * d; ++d) {
      h = fp::powmod(h, mpz_class(p), rest, p);
      Poly g = fp::gcd(fp::sub(h, x, p), rest, p);
      if (g.degree() > 0) {
        std::vector<Poly> irreducibles;
        equal_degree(g, d, p, rng, irreducibles);
        for (auto& q : irreducibles) result.emplace_back(std::move(q), mult);
        rest = fp::divmod(rest, g, p).first;
        h = fp::rem(h, rest, p);
      }
    }
    if (rest.degree() > 0) result.emplace_back(fp::monic(rest, p), mult);
  }
  std::sort(result.begin(), result.end(),
            [](const auto& a, const auto& b) { return fp::compare(a.first, b.first) < 0; });
  // Merge in case two squarefree layers share a factor (they never should).
  std::vector<std::pair<Poly, unsigned>> merged;
  for (auto& item : result) {
    if (!merged.empty() && merged.back().first == item.first) {
      merged.back().second += item.second;
    } else {
      merged.push_back(std::move(item));
    }
  }
  return merged;
}

std::vector<PrimePower> factor(const Ring& R, const Elem& a) {
  if (R.is_zero(a)) throw InputError("factor: zero has no factorization");
  BaseValue core = R.strip_inverted(a.num);
  std::vector<PrimePower> out;
  if (R.kind() == BaseKind::Integers) {
    for (auto& [q, e] : factor_integer(std::get<mpz_class>(core))) {
      out.push_back({PrimePoint{Elem{BaseValue{q}, 0}}, e});
    }
  } else {
    for (auto& [q, e] : factor_poly(std::get<Poly>(core), R.characteristic())) {
      out.push_back({PrimePoint{Elem{BaseValue{q}, 0}}, e});
    }
  }
  return out;
}

std::vector<PrimePoint> prime_support(const Ring& R, const Elem& a) {
  std::vector<PrimePoint> out;
  for (auto& pp : factor(R, a)) out.push_back(pp.prime);
  return out;
}

bool is_prime(const Ring& R, const Elem& a) {
  if (R.is_zero(a) || R.is_unit(a)) return false;
  auto f = factor(R, a);
  return f.size() == 1 && f[0].exponent == 1;
}

PrimePoint make_prime_point(const Ring& R, const Elem& a) {
  if (!is_prime(R, a)) {
    throw InputError("'" + R.to_string(a) + "' is not a prime of " + R.describe());
  }
  return PrimePoint{R.normalize(a)};
}

}  // namespace tstruct::exactalg
