#include "tstruct/aisle/harness.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

#include "tstruct/aisle/roundtrip.hpp"
#include "tstruct/aisle/tdecompose.hpp"
#include "tstruct/complex/cohomology.hpp"
#include "tstruct/complex/operations.hpp"
#include "tstruct/complex/random.hpp"
#include "tstruct/supports/random.hpp"
#include "tstruct/zariski/zariski.hpp"

namespace tstruct::aisle {

using complex::ComplexBounds;
using complex::Rng;
using complex::Triangle;
using exactalg::Elem;
using exactalg::spc_contains;
using exactalg::spc_union;

namespace {

using Outcome = std::optional<std::string>;

struct Gen {
  const Ring& R;
  Rng& rng;
  std::size_t size;
  const HarnessBounds& bounds;
  const HarnessConfig& config;

  ComplexBounds complex_bounds(std::size_t rank_cap = 3, int amp_cap = 4) const {
    ComplexBounds b;
    b.max_rank = std::min({size, bounds.max_rank, rank_cap});
    b.amplitude = std::min({static_cast<int>(size), bounds.amplitude, amp_cap});
    b.entry_bound = bounds.entry_bound;
    return b;
  }
  PerfectComplex complex(std::size_t rank_cap = 3, int amp_cap = 4) const {
    ComplexBounds b = complex_bounds(rank_cap, amp_cap);
    if (b.max_rank == 0) return PerfectComplex(R);
    return complex::random_complex(R, rng, b);
  }
  Triangle cone(const ChainMap& f) const { return config.cone ? config.cone(f) : complex::cone(f); }
};

std::string show(const PerfectComplex& C) { return complex::describe(C); }

// Checks in range lo..hi of supph_geq containment; names the first bad degree.
Outcome contained(const std::function<SpecSubset(int)>& big, const std::function<SpecSubset(int)>& small, int lo,
                  int hi, const std::string& what) {
  for (int i = lo; i <= hi; ++i) {
    if (!spc_contains(big(i), small(i))) return what + " fails at i=" + std::to_string(i);
  }
  return std::nullopt;
}

Outcome cone_is_triangle(Gen& g) {
  PerfectComplex A = g.complex(), B = g.complex();
  ChainMap f = complex::random_chain_map(A, B, g.rng);
  Triangle t = g.cone(f);
  for (auto [ok, what] : {std::pair{bool(complex::validate(t.third)), "d^2 != 0 on the cone"},
                          std::pair{bool(complex::validate(t.g)), "inclusion is not a chain map"},
                          std::pair{bool(complex::validate(t.h)), "projection is not a chain map"}}) {
    if (!ok) return std::string(what) + "; A=" + show(A) + " B=" + show(B);
  }
  return std::nullopt;
}

Outcome support_cone(Gen& g) {
  PerfectComplex A = g.complex(), B = g.complex();
  ChainMap f = complex::random_chain_map(A, B, g.rng);
  const PerfectComplex C = g.cone(f).third;
  if (!complex::validate(C)) return "cone is not a complex; A=" + show(A) + " B=" + show(B);
  auto r = contained([&](int i) { return spc_union(complex::supph_geq(A, i), complex::supph_geq(B, i)); },
                     [&](int i) { return complex::supph_geq(C, i); }, -8, 8, "Supph(cone) in Supph(A) u Supph(B)");
  if (r) *r += "; A=" + show(A) + " B=" + show(B);
  return r;
}

Outcome support_shift(Gen& g) {
  PerfectComplex C = g.complex();
  const PerfectComplex S = complex::shift(C, 1);
  auto r = contained([&](int i) { return complex::supph_geq(C, i); }, [&](int i) { return complex::supph_geq(S, i); },
                     -8, 8, "Supph(C[1]) in Supph(C)");
  if (r) *r += "; C=" + show(C);
  return r;
}

Outcome support_sum(Gen& g) {
  std::vector<PerfectComplex> parts;
  const int k = 1 + static_cast<int>(g.rng() % 3);
  for (int j = 0; j < k; ++j) parts.push_back(g.complex());
  const PerfectComplex S = complex::direct_sum(g.R, parts);
  for (int i = -8; i <= 8; ++i) {
    SpecSubset u = SpecSubset::empty(g.R);
    for (const auto& p : parts) u = spc_union(u, complex::supph_geq(p, i));
    if (!(complex::supph_geq(S, i) == u)) return "Supph of a sum is not the union at i=" + std::to_string(i);
  }
  return std::nullopt;
}

Outcome support_tensor(Gen& g) {
  ComplexBounds b = g.complex_bounds(3, 2);
  b.lo_min = -4;
  b.lo_max = -2;
  PerfectComplex E = b.max_rank == 0 ? PerfectComplex(g.R) : complex::random_complex(g.R, g.rng, b);
  PerfectComplex B = g.complex();
  const PerfectComplex T = complex::tensor_total(E, B);
  auto r = contained([&](int i) { return complex::supph_geq(B, i); }, [&](int i) { return complex::supph_geq(T, i); },
                     -10, 8, "Supph(E (x) B) in Supph(B)");
  if (r) *r += "; E=" + show(E) + " B=" + show(B);
  return r;
}

Outcome shift_cohomology(Gen& g) {
  PerfectComplex C = g.complex();
  const int k = static_cast<int>(g.rng() % 5) - 2;
  const PerfectComplex S = complex::shift(C, k);
  for (int i = -8; i <= 8; ++i) {
    if (!(complex::cohomology(S, i) == complex::cohomology(C, i + k))) {
      return "H^" + std::to_string(i) + "(C[" + std::to_string(k) + "]) differs; C=" + show(C);
    }
  }
  return std::nullopt;
}

Outcome split_model_witness(Gen& g) {
  PerfectComplex C = g.complex();
  complex::SplitModel s = complex::split_model(C);
  if (!complex::validate(s.witness) || !complex::is_quasi_iso(s.witness)) return "witness is not a quasi-iso; C=" + show(C);
  ChainMap id = complex::compose(s.projection, s.witness);
  for (int n = s.model.lo(); n <= s.model.hi(); ++n) {
    if (!(id.component(n) == Matrix::identity(g.R, s.model.rank(n)))) return "projection is not a left inverse; C=" + show(C);
  }
  return std::nullopt;
}

Outcome normal_form_idempotent(Gen& g) {
  PerfectComplex C = g.complex();
  for (const auto& [i, H] : complex::cohomology_all(C)) {
    if (!(exactalg::module_normal_form(g.R, exactalg::presentation_of(H)) == H)) {
      return "normal form of " + H.to_string() + " moved";
    }
  }
  return std::nullopt;
}

Outcome graded_support_valid(Gen& g) {
  std::vector<PerfectComplex> family;
  const int k = static_cast<int>(g.rng() % 3);
  for (int j = 0; j < k; ++j) family.push_back(g.complex());
  const supports::Filtration phi = supports::graded_support(g.R, family);
  if (auto v = supports::validate_filtration(phi); !v) return "graded support invalid: " + v.message;
  for (const auto& E : family) {
    if (!supports::in_aisle(E, phi).member) return "family member outside its own aisle: " + show(E);
  }
  return std::nullopt;
}

Outcome phi_psi_roundtrip(Gen& g) {
  const supports::Filtration phi = supports::random_filtration(g.R, g.rng, {-5, 5, 4, 1});
  if (!roundtrip_phi_psi(phi, {-5, 6}).equal) return "Phi(Psi(phi)) != phi for " + phi.to_string();
  return std::nullopt;
}

Outcome koszul_levelwise(Gen& g) {
  PerfectComplex B = g.complex(2, 3);
  const supports::Filtration phi = supports::random_filtration(g.R, g.rng, {-3, 3, 3, 1});
  const bool whole = in_coaisle(B, phi).orthogonal;
  bool levels = true;
  if (auto last = phi.last_nonempty()) {
    const Window w = adequate_window(B, phi);
    for (int i = std::min(w.lo, *last); i <= *last && levels; ++i) {
      levels = in_coaisle(B, supports::Filtration::step(g.R, i, phi.at(i))).orthogonal;
    }
  }
  if (whole != levels) return "coaisle test disagrees with levelwise tests; B=" + show(B) + " phi=" + phi.to_string();
  return std::nullopt;
}

Outcome t_decompose_sound(Gen& g) {
  const supports::Filtration phi = supports::random_filtration(g.R, g.rng, {-3, 3, 3, 1});
  ComplexBounds b = g.complex_bounds(2, 3);
  for (const auto& p : supports::small_primes(g.R, 3)) b.divisor_pool.push_back(p.generator);
  b.free_allowed = [&](int i) { return phi.at(i).is_all() || phi.at(i + 1).is_empty(); };
  PerfectComplex A = b.max_rank == 0 ? PerfectComplex(g.R) : complex::random_complex(g.R, g.rng, b);
  DecompositionReport r = t_decompose(A, phi, 64);
  if (!r.verified) return "t_decompose unverified (" + r.failure + "); A=" + show(A) + " phi=" + phi.to_string();
  return std::nullopt;
}

Outcome restrict_commutes(Gen& g) {
  const Elem f = g.R.kind() == exactalg::BaseKind::Integers ? g.R.from_int(6) : g.R.parse("x^2+x+1");
  zariski::OpenImmersion j(g.R, f);
  PerfectComplex A = g.complex(2, 3), B = g.complex(2, 3);
  ChainMap h = complex::random_chain_map(A, B, g.rng);
  if (!(zariski::restrict(g.cone(h).third, j) == g.cone(zariski::restrict(h, j)).third)) {
    return "restrict does not commute with cone; A=" + show(A) + " B=" + show(B);
  }
  if (!(zariski::restrict(complex::tensor_total(A, B), j) ==
        complex::tensor_total(zariski::restrict(A, j), zariski::restrict(B, j)))) {
    return "restrict does not commute with tensor; A=" + show(A) + " B=" + show(B);
  }
  return std::nullopt;
}

Outcome extend_perfect_qis(Gen& g) {
  const Elem f = g.R.kind() == exactalg::BaseKind::Integers ? g.R.from_int(30) : g.R.variable();
  zariski::OpenImmersion j(g.R, f);
  Gen local{j.localized(), g.rng, g.size, g.bounds, g.config};
  PerfectComplex F = local.complex();
  zariski::Extension e = zariski::extend_perfect(F, j);
  if (!complex::validate(e.complex) || !complex::is_quasi_iso(e.comparison)) {
    return "restrict(extend_perfect(F)) is not quasi-isomorphic to F; F=" + show(F);
  }
  return std::nullopt;
}

struct Property {
  const char* name;
  Outcome (*run)(Gen&);
};

const std::vector<Property>& registry() {
  static const std::vector<Property> props = {
      {"cone-is-triangle", cone_is_triangle},
      {"support-cone", support_cone},
      {"support-shift", support_shift},
      {"support-sum", support_sum},
      {"support-tensor", support_tensor},
      {"shift-cohomology", shift_cohomology},
      {"split-model", split_model_witness},
      {"normal-form-idempotent", normal_form_idempotent},
      {"graded-support-valid", graded_support_valid},
      {"phi-psi-roundtrip", phi_psi_roundtrip},
      {"koszul-levelwise", koszul_levelwise},
      {"t-decompose-sound", t_decompose_sound},
      {"restrict-commutes", restrict_commutes},
      {"extend-perfect-qis", extend_perfect_qis},
  };
  return props;
}

Outcome run_one(const Property& p, const Ring& R, std::uint64_t seed, std::size_t prop, std::size_t index,
                std::size_t attempt, std::size_t size, const HarnessBounds& bounds, const HarnessConfig& config) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(prop), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(attempt), static_cast<std::uint32_t>(size)};
  Rng rng(seq);
  Gen g{R, rng, size, bounds, config};
  try {
    return p.run(g);
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

}  // namespace

std::vector<std::string> harness_properties() {
  std::vector<std::string> out;
  for (const auto& p : registry()) out.emplace_back(p.name);
  return out;
}

HarnessReport property_harness(std::uint64_t seed, std::size_t cases, const HarnessBounds& bounds,
                               const HarnessConfig& config) {
  HarnessReport report;
  report.seed = seed;
  report.cases = cases;
  const std::vector<Ring> rings = {Ring::integers(), Ring::poly_fp(2)};
  const std::size_t full = bounds.max_rank;
  for (std::size_t pi = 0; pi < registry().size(); ++pi) {
    const Property& p = registry()[pi];
    if (!config.only.empty() && std::find(config.only.begin(), config.only.end(), p.name) == config.only.end()) {
      continue;
    }
    PropertyTally tally{p.name, 0, 0};
    for (std::size_t c = 0; c < cases; ++c) {
      const Ring& R = rings[c % rings.size()];
      ++tally.cases;
      Outcome bad = run_one(p, R, seed, pi, c, 0, full, bounds, config);
      if (!bad) continue;
      ++tally.failures;
      HarnessFailure fail{p.name, c, full, full, *bad};
      // shrink: regenerate at smaller sizes, keep the smallest that still fails
      bool found = false;
      for (std::size_t s = 0; s < full && !found; ++s) {
        for (int a = 1; a <= config.shrink_attempts && !found; ++a) {
          if (Outcome small = run_one(p, R, seed, pi, c, static_cast<std::size_t>(a), s, bounds, config)) {
            fail.shrunk_size = s;
            fail.counterexample = *small;
            found = true;
          }
        }
      }
      report.failures.push_back(std::move(fail));
    }
    report.tallies.push_back(std::move(tally));
  }
  return report;
}

std::string HarnessReport::to_text() const {
  std::ostringstream out;
  out << "seed " << seed << ", " << cases << " cases per property\n";
  for (const auto& t : tallies) {
    out << "  " << t.name << ": " << (t.cases - t.failures) << "/" << t.cases << " passed\n";
  }
  for (const auto& f : failures) {
    out << "FAIL " << f.property << " case " << f.case_index << " (size " << f.size << ", shrunk to " << f.shrunk_size
        << "): " << f.counterexample << "\n";
  }
  out << (ok() ? "all properties hold" : std::to_string(failures.size()) + " failing case(s)") << "\n";
  return out.str();
}

}  // namespace tstruct::aisle
