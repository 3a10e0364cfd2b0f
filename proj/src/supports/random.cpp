#include "tstruct/supports/random.hpp"

#include <algorithm>

#include "tstruct/exactalg/factor.hpp"
#include "tstruct/exactalg/poly_fp.hpp"

namespace tstruct::supports {

using exactalg::PrimePoint;

namespace {

long uniform(complex::Rng& rng, long a, long b) { return std::uniform_int_distribution<long>(a, b)(rng); }

}  // namespace

std::vector<PrimePoint> small_primes(const Ring& R, std::size_t count) {
  std::vector<PrimePoint> out;
  for (std::uint64_t k = 2; out.size() < count && k < 100000; ++k) {
    exactalg::Elem e = R.kind() == exactalg::BaseKind::Integers
                           ? R.from_int(static_cast<long>(k))
                           : R.from_base(exactalg::fp::from_index(k, R.characteristic()));
    const auto& num = e.num;
    if (R.kind() == exactalg::BaseKind::PolyFp && std::get<exactalg::Poly>(num).c.back() != 1) continue;
    if (!exactalg::is_prime(R, e)) continue;
    out.push_back(exactalg::make_prime_point(R, e));
  }
  return out;
}

Filtration random_filtration(const Ring& R, complex::Rng& rng, const FiltrationBounds& b) {
  if (uniform(rng, 0, 19) == 0) return Filtration(R);
  std::vector<PrimePoint> pool = small_primes(R, 6);
  std::shuffle(pool.begin(), pool.end(), rng);
  const std::size_t np = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(std::min(b.max_primes, pool.size()))));
  std::vector<PrimePoint> current(pool.begin(), pool.begin() + static_cast<long>(np));
  bool all = uniform(rng, 0, 3) < b.all_weight;

  // change points strictly inside (lo, hi + 1]; the last one drops to empty
  const long changes = uniform(rng, 1, 3);
  std::vector<int> degrees;
  for (long k = 0; k < changes; ++k) degrees.push_back(static_cast<int>(uniform(rng, b.lo + 1, b.hi + 1)));
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

  const SpecSubset head = all ? SpecSubset::all(R) : SpecSubset::of(R, current);
  std::vector<std::pair<int, SpecSubset>> steps;
  for (std::size_t k = 0; k < degrees.size(); ++k) {
    if (k + 1 == degrees.size()) {
      steps.emplace_back(degrees[k], SpecSubset::empty(R));
      break;
    }
    if (all) {
      all = false;
    } else {
      // drop a random nonempty part, keeping at least one prime
      if (current.size() > 1) {
        std::shuffle(current.begin(), current.end(), rng);
        current.resize(static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(current.size()) - 1)));
      }
    }
    steps.emplace_back(degrees[k], SpecSubset::of(R, current));
  }
  return Filtration(R, head, std::move(steps)).canonical();
}

}  // namespace tstruct::supports
