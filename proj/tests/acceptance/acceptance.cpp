// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only
// when every criterion passes.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "../support/hom_oracle.hpp"
#include "../support/worked.hpp"
#include "tstruct/complex/random.hpp"
#include "tstruct/supports/random.hpp"

using namespace tstruct;
using complex::ComplexBounds;
using complex::PerfectComplex;
using complex::Rng;
using exactalg::Elem;
using exactalg::Matrix;
using exactalg::Ring;
using exactalg::SpecSubset;
using supports::Filtration;

namespace {

// Pinned thresholds. Everything is exact, so there are no numeric tolerances.
constexpr std::uint64_t kSeed = 20240601;
constexpr std::size_t kSupportCases = 500;
constexpr double kSupportSeconds = 120.0;
constexpr int kPhiPsiCases = 200;
constexpr int kPsiPhiCases = 200;
constexpr int kDecomposeCases = 120;
constexpr double kDecomposeRate = 0.95;
constexpr int kDecomposeCap = 64;
constexpr int kHomCases = 60;
constexpr int kExtendPerFactor = 40;
constexpr int kExtendSupportMin = 60;
constexpr std::size_t kRestrictionFixtures = 20;
constexpr std::size_t kWorkedFixtures = 30;

const std::filesystem::path kFixtures = TSTRUCT_FIXTURE_DIR;

struct Verdict {
  bool pass = true;
  std::string summary;
  std::string detail;
};

std::string show(const PerfectComplex& C) { return complex::describe(C); }

Verdict support_containments() {
  aisle::HarnessConfig config;
  config.only = {"support-cone", "support-shift", "support-sum", "support-tensor"};
  const auto start = std::chrono::steady_clock::now();
  const aisle::HarnessReport r = aisle::property_harness(kSeed, kSupportCases, {3, 4, 20}, config);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Verdict v;
  std::size_t cases = 0, failures = 0;
  for (const auto& t : r.tallies) {
    cases += t.cases;
    failures += t.failures;
  }
  v.pass = failures == 0 && secs < kSupportSeconds && r.tallies.size() == 4;
  std::ostringstream s;
  s << cases << " support checks (" << kSupportCases << " per property, Z and F_2[x]), " << failures << " failures, "
    << static_cast<int>(secs * 10) / 10.0 << "s";
  v.summary = s.str();
  if (!r.failures.empty()) v.detail = r.failures.front().property + ": " + r.failures.front().counterexample;
  return v;
}

Verdict phi_psi() {
  Rng rng(kSeed + 2);
  const auto tmp = std::filesystem::temp_directory_path() / "tstruct_acceptance_phi.json";
  Verdict v;
  int done = 0, equal = 0;
  for (int t = 0; t < kPhiPsiCases; ++t) {
    const Ring R = t % 2 == 0 ? Ring::integers() : Ring::poly_fp(2);
    const Filtration phi = supports::random_filtration(R, rng, {-5, 5, 4, 1});
    {
      std::ofstream out(tmp);
      out << cli::filtration_to_json(phi).dump();
    }
    std::ostringstream out, err;
    const int code = cli::run({"roundtrip", "--dir", "phi-psi", tmp.string(), "--format", "json"}, out, err);
    ++done;
    bool ok = false;
    if (code == cli::kOk) {
      const cli::json j = cli::json::parse(out.str());
      ok = j.at("equal").get<bool>();
      const auto w = j.at("window");
      ok = ok && w[0].get<int>() >= -6 && w[1].get<int>() <= 5;
    }
    if (ok) {
      ++equal;
    } else if (v.detail.empty()) {
      v.detail = phi.to_string() + ": exit " + std::to_string(code) + " " + err.str();
    }
  }
  std::filesystem::remove(tmp);
  v.pass = equal == done && done >= kPhiPsiCases;
  v.summary = std::to_string(equal) + "/" + std::to_string(done) + " filtrations recovered exactly";
  return v;
}

Verdict psi_phi() {
  Rng rng(kSeed + 3);
  Verdict v;
  int consistent = 0, dominated = 0, probes_total = 0;
  for (int t = 0; t < kPsiPhiCases; ++t) {
    const Ring R = t % 2 == 0 ? Ring::integers() : Ring::poly_fp(2);
    ComplexBounds b;
    b.max_rank = 2;
    b.amplitude = 3;
    b.entry_bound = 12;
    std::vector<PerfectComplex> G;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) G.push_back(complex::random_complex(R, rng, b));
    // probes built from G sit in its aisle; random ones mostly do not
    std::vector<PerfectComplex> probes;
    const PerfectComplex& g0 = G[rng() % G.size()];
    const PerfectComplex& g1 = G[rng() % G.size()];
    probes.push_back(complex::shift(g0, static_cast<int>(rng() % 3)));
    probes.push_back(complex::direct_sum(g0, complex::shift(g1, 1)));
    ComplexBounds nonpos = b;
    nonpos.lo_min = -2;
    nonpos.lo_max = -1;
    nonpos.amplitude = 1;
    probes.push_back(complex::tensor_total(complex::random_complex(R, rng, nonpos), g1));
    probes.push_back(complex::cone(complex::random_chain_map(complex::shift(g0, 1), g1, rng)).third);
    probes.push_back(complex::random_complex(R, rng, b));
    probes.push_back(complex::random_complex(R, rng, b));
    const aisle::PsiPhiReport r = aisle::roundtrip_psi_phi(R, G, probes);
    for (const auto& p : r.probes) dominated += p.dominated ? 1 : 0;
    probes_total += static_cast<int>(r.probes.size());
    if (r.consistent) {
      ++consistent;
    } else if (v.detail.empty()) {
      for (std::size_t i = 0; i < r.probes.size(); ++i) {
        if (r.probes[i].violation) v.detail = "probe " + show(probes[i]) + ": " + r.probes[i].note;
      }
    }
  }
  v.pass = consistent == kPsiPhiCases && dominated > 0;
  v.summary = std::to_string(consistent) + "/" + std::to_string(kPsiPhiCases) + " generator lists consistent, " +
              std::to_string(dominated) + " of " + std::to_string(probes_total) + " probes dominated";
  return v;
}

Verdict t_decomposition() {
  Rng rng(kSeed + 4);
  Verdict v;
  int verified = 0, capped = 0, false_success = 0;
  for (int t = 0; t < kDecomposeCases; ++t) {
    const Ring R = t % 2 == 0 ? Ring::integers() : Ring::poly_fp(2);
    const Filtration phi = supports::random_filtration(R, rng, {-3, 3, 3, 1});
    ComplexBounds b;
    b.max_rank = 2;
    b.amplitude = 3;
    for (const auto& p : supports::small_primes(R, 3)) b.divisor_pool.push_back(p.generator);
    b.free_allowed = [&](int i) { return phi.at(i).is_all() || phi.at(i + 1).is_empty(); };
    const PerfectComplex A = complex::random_complex(R, rng, b);
    const aisle::DecompositionReport r = aisle::t_decompose(A, phi, kDecomposeCap);
    if (r.cap_exceeded) ++capped;
    if (!r.verified) {
      if (v.detail.empty()) v.detail = r.failure + "; A=" + show(A) + " phi=" + phi.to_string();
      continue;
    }
    // recheck every claim behind the verified flag
    const auto& tri = r.triangle;
    const bool ok = !r.cap_exceeded && r.aisle_check.member && r.coaisle_check.orthogonal && r.cone_identity &&
                    r.hom_vanishes && tri.second == A && complex::validate(tri.f) && complex::validate(tri.g) &&
                    supports::in_aisle(tri.first, phi).member && aisle::in_coaisle(tri.third, phi).orthogonal &&
                    aisle::orthogonal_all_shifts(tri.first, tri.third).orthogonal;
    if (ok) {
      ++verified;
    } else {
      ++false_success;
      if (v.detail.empty()) v.detail = "verified flag not backed by checks; A=" + show(A) + " phi=" + phi.to_string();
    }
  }
  const double rate = static_cast<double>(verified) / kDecomposeCases;
  v.pass = false_success == 0 && rate >= kDecomposeRate;
  std::ostringstream s;
  s << verified << "/" << kDecomposeCases << " verified (" << static_cast<int>(rate * 1000) / 10.0 << "%), " << capped
    << " cap-exceeded, " << false_success << " unverified presented as success";
  v.summary = s.str();
  return v;
}

// Enumeration helpers: integer complexes with entries in [-2, 2].
oracle::IntComplex to_int(const PerfectComplex& C) {
  oracle::IntComplex out;
  if (C.empty()) return out;
  out.lo = C.lo();
  for (int n = C.lo(); n <= C.hi(); ++n) out.ranks.push_back(C.rank(n));
  for (int n = C.lo(); n < C.hi(); ++n) {
    const Matrix d = C.diff(n);
    oracle::IntMatrix m(C.rank(n + 1), std::vector<mpz_class>(C.rank(n)));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < C.rank(n); ++j) m[i][j] = std::get<mpz_class>(d.at(i, j).num);
    out.d.push_back(std::move(m));
  }
  return out;
}

PerfectComplex from_int(const Ring& Z, const oracle::IntComplex& C) {
  if (C.ranks.empty()) return PerfectComplex(Z);
  std::vector<Matrix> diffs;
  for (std::size_t k = 0; k + 1 < C.ranks.size(); ++k) {
    Matrix m = Matrix::zero(Z, C.ranks[k + 1], C.ranks[k]);
    for (std::size_t i = 0; i < C.ranks[k + 1]; ++i)
      for (std::size_t j = 0; j < C.ranks[k]; ++j) m.at(i, j) = Z.from_int(C.d[k][i][j].get_si());
    diffs.push_back(std::move(m));
  }
  return PerfectComplex(Z, C.lo, C.ranks, diffs);
}

oracle::IntMatrix product(const oracle::IntMatrix& a, const oracle::IntMatrix& b, std::size_t inner) {
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  oracle::IntMatrix out(a.size(), std::vector<mpz_class>(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t k = 0; k < inner; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

oracle::IntComplex small_complex(Rng& rng) {
  oracle::IntComplex C;
  C.lo = static_cast<int>(rng() % 4) - 2;
  const std::size_t len = 1 + rng() % 3;
  for (std::size_t k = 0; k < len; ++k) C.ranks.push_back(rng() % 3);
  if (std::all_of(C.ranks.begin(), C.ranks.end(), [](std::size_t r) { return r == 0; })) C.ranks[0] = 1;
  auto entry = [&]() -> mpz_class { return rng() % 2 == 0 ? 0 : static_cast<long>(rng() % 5) - 2; };
  for (std::size_t k = 0; k + 1 < len; ++k) {
    oracle::IntMatrix m;
    for (int attempt = 0; attempt < 200; ++attempt) {
      m.assign(C.ranks[k + 1], std::vector<mpz_class>(C.ranks[k]));
      for (auto& row : m)
        for (auto& x : row) x = entry();
      if (k == 0) break;
      const oracle::IntMatrix dd = product(m, C.d[k - 1], C.ranks[k]);
      bool zero = true;
      for (const auto& row : dd)
        for (const auto& x : row) zero = zero && x == 0;
      if (zero) break;
      if (attempt == 199)
        for (auto& row : m)
          for (auto& x : row) x = 0;
    }
    C.d.push_back(std::move(m));
  }
  return C;
}

Verdict hom_enumeration() {
  const Ring Z = Ring::integers();
  Rng rng(kSeed + 5);
  Verdict v;
  const std::vector<std::vector<long>> generators = {{}, {2}, {-2}, {1}, {2, 2}, {2, -1}};
  int agree = 0, maps_checked = 0, nonzero_groups = 0;
  for (int t = 0; t < kHomCases; ++t) {
    std::vector<Elem> elems;
    for (long a : generators[t % generators.size()]) elems.push_back(Z.from_int(a));
    const PerfectComplex g = complex::shift(supports::koszul(Z, elems), static_cast<int>(rng() % 3) - 1);
    const oracle::IntComplex gi = to_int(g), Bi = small_complex(rng);
    const PerfectComplex B = from_int(Z, Bi);
    const PerfectComplex H = complex::hom_complex(g, B);
    bool ok = complex::validate(B).ok;
    bool all_zero = true;
    std::string why;
    for (int n = 0; n <= gi.hi() - Bi.lo + 1 && ok; ++n) {
      const oracle::HomGroup o = oracle::hom_group(gi, Bi, n);
      if (!o.consistent) {
        ok = false;
        why = "oracle homotopies are not chain maps";
        break;
      }
      const exactalg::FgModule lib = complex::cohomology(H, -n);
      std::vector<mpz_class> lib_torsion;
      for (const auto& e : lib.torsion) lib_torsion.push_back(std::get<mpz_class>(e.num));
      if (lib.free_rank != o.group.free_rank || lib_torsion != o.group.torsion) {
        ok = false;
        why = "n=" + std::to_string(n) + ": library " + lib.to_string();
        break;
      }
      if (!lib.is_zero()) {
        all_zero = false;
        ++nonzero_groups;
      }
      // per map: oracle chain-map and null-homotopy tests against the library cocycle and coboundary tests
      oracle::Lattice null(o.unknowns);
      for (const auto& col : o.homotopies) null.insert(col);
      const Matrix dH = H.diff(-n);
      const long box = o.unknowns <= 5 ? 2 : 1;
      oracle::for_each_box_vector(o.unknowns, box, 20000, 4000, kSeed + t * 31 + n, [&](const std::vector<mpz_class>& f) {
        if (!ok) return;
        Matrix vec = Matrix::zero(Z, H.rank(-n), 1);
        for (int k = gi.lo; k <= gi.hi(); ++k) {
          const std::size_t rows = Bi.rank(k - n), cols = gi.rank(k);
          if (rows * cols == 0) continue;
          const std::size_t lib_off = complex::hom_block_offset(g, B, -n, k);
          const std::size_t my_off = oracle::MapLayout(gi, Bi, n).offset.at(k);
          for (std::size_t i = 0; i < rows * cols; ++i) vec.at(lib_off + i, 0) = Z.from_int(f[my_off + i].get_si());
        }
        const bool chain = oracle::satisfies(o.equations, f);
        const bool lib_cocycle = dH.empty() || exactalg::multiply(Z, dH, vec) == Matrix::zero(Z, dH.rows(), 1);
        if (chain != lib_cocycle) {
          ok = false;
          why = "cocycle test disagrees at n=" + std::to_string(n);
          return;
        }
        if (!chain) return;
        ++maps_checked;
        const bool nullhomotopic = null.contains(f);
        if (nullhomotopic != complex::is_coboundary(H, -n, vec)) {
          ok = false;
          why = "null-homotopy test disagrees at n=" + std::to_string(n);
        }
        if (!nullhomotopic && lib.is_zero()) {
          ok = false;
          why = "nonzero class in a zero group at n=" + std::to_string(n);
        }
      });
    }
    if (ok && aisle::orthogonal_all_shifts(g, B).orthogonal != all_zero) {
      ok = false;
      why = "orthogonality verdict disagrees";
    }
    if (ok) {
      ++agree;
    } else if (v.detail.empty()) {
      v.detail = why + "; g=" + show(g) + " B=" + show(B);
    }
  }
  v.pass = agree == kHomCases;
  v.summary = std::to_string(agree) + "/" + std::to_string(kHomCases) + " instances agree (" +
              std::to_string(nonzero_groups) + " nonzero groups, " + std::to_string(maps_checked) +
              " enumerated chain maps)";
  return v;
}

Verdict extension() {
  const Ring Z = Ring::integers();
  Rng rng(kSeed + 6);
  Verdict v;
  int qis = 0, total = 0, step_ok = 0, step_total = 0;
  for (long f : {2L, 6L, 30L}) {
    zariski::OpenImmersion j(Z, Z.from_int(f));
    const Ring& L = j.localized();
    for (int t = 0; t < kExtendPerFactor; ++t) {
      const PerfectComplex F = complex::random_complex(L, rng, {});
      ++total;
      const zariski::Extension e = zariski::extend_perfect(F, j);
      if (complex::validate(e.complex) && complex::validate(e.comparison) && complex::is_quasi_iso(e.comparison) &&
          e.comparison.target() == F) {
        ++qis;
      } else if (v.detail.empty()) {
        v.detail = "extend_perfect: F=" + show(F);
      }
    }
    for (int t = 0; t < kExtendPerFactor; ++t) {
      ComplexBounds b;
      b.free_allowed = [](int) { return false; };
      std::vector<exactalg::PrimePoint> chosen;
      const auto pool = supports::small_primes(L, 3);
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (rng() % 2 == 0 && !(chosen.empty() && i + 1 == pool.size())) continue;
        chosen.push_back(exactalg::make_prime_point(Z, j.to_ambient(pool[i].generator)));
        b.divisor_pool.push_back(pool[i].generator);
      }
      const SpecSubset S = SpecSubset::of(Z, chosen);
      const PerfectComplex F = complex::random_complex(L, rng, b);
      const int N = F.empty() ? 0 : F.hi() + static_cast<int>(rng() % 2);
      ++step_total;
      const PerfectComplex E = zariski::extend_with_support(F, S, N, j);
      if (supports::in_aisle(E, Filtration::step(Z, N, S)).member &&
          complex::cohomology_all(zariski::restrict(E, j)) == complex::cohomology_all(F)) {
        ++step_ok;
      } else if (v.detail.empty()) {
        v.detail = "extend_with_support: F=" + show(F);
      }
    }
  }
  v.pass = qis == total && total >= 100 && step_ok == step_total && step_total >= kExtendSupportMin;
  v.summary = std::to_string(qis) + "/" + std::to_string(total) + " extensions quasi-isomorphic, " +
              std::to_string(step_ok) + "/" + std::to_string(step_total) + " supported extensions in the step aisle";
  return v;
}

Verdict fixtures(const std::string& sub, std::size_t at_least) {
  Verdict v;
  const auto results = worked::run_fixture_dir(kFixtures / sub);
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (r.pass) {
      ++passed;
    } else if (v.detail.empty()) {
      v.detail = r.file + ": " + r.detail;
    }
  }
  v.pass = passed == results.size() && results.size() >= at_least;
  v.summary = std::to_string(passed) + "/" + std::to_string(results.size()) + " fixtures pass";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"support containments", support_containments},
      {"phi-psi round trip", phi_psi},
      {"psi-phi consistency", psi_phi},
      {"t-decomposition soundness", t_decomposition},
      {"Koszul orthogonality vs enumeration", hom_enumeration},
      {"extension suite", extension},
      {"restriction orthogonality fixtures", [] { return fixtures("restriction", kRestrictionFixtures); }},
      {"worked-example fixtures", [] { return fixtures("worked", kWorkedFixtures); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, "exception", e.what()};
    }
    if (!v.pass) ++failed;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " " << criteria[i].first << ": " << v.summary
              << "\n";
    if (!v.detail.empty()) std::cout << "    first problem: " << v.detail << "\n";
    std::cout.flush();
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
  return failed == 0 ? 0 : 1;
}
