#include <gtest/gtest.h>

#include "tstruct/aisle/roundtrip.hpp"
#include "tstruct/aisle/tdecompose.hpp"
#include "tstruct/complex/cohomology.hpp"
#include "tstruct/complex/operations.hpp"
#include "tstruct/exactalg/factor.hpp"
#include "tstruct/supports/random.hpp"

using namespace tstruct;
using namespace tstruct::aisle;
using complex::ComplexBounds;
using complex::Rng;
using supports::koszul;

namespace {

const Ring Z = Ring::integers();

SpecSubset pts(std::vector<long> ps) {
  std::vector<exactalg::PrimePoint> v;
  for (long p : ps) v.push_back(exactalg::make_prime_point(Z, Z.from_int(p)));
  return SpecSubset::of(Z, v);
}

PerfectComplex K(long a) { return koszul(Z, {Z.from_int(a)}); }

Filtration below(int level, const SpecSubset& s) { return Filtration::step(Z, level, s); }

}  // namespace

TEST(Orthogonal, Examples) {
  EXPECT_TRUE(orthogonal_all_shifts(K(2), K(3)));
  OrthoCertificate c = orthogonal_all_shifts(K(2), K(2));
  ASSERT_FALSE(c);
  EXPECT_EQ(c.witness->shift, 0);
  EXPECT_EQ(c.witness->group.to_string(), "Z/(2)");
  OrthoCertificate u = orthogonal_all_shifts(PerfectComplex::unit(Z), complex::shift(PerfectComplex::unit(Z), 1));
  ASSERT_FALSE(u);
  EXPECT_EQ(u.witness->shift, 1);
}

TEST(Coaisle, Examples) {
  EXPECT_TRUE(in_coaisle(K(3), below(0, pts({2}))));
  OrthoCertificate c = in_coaisle(K(2), below(0, pts({2})));
  ASSERT_FALSE(c);
  EXPECT_EQ(c.to_string(), "(K(2)[0], n=0)");
  EXPECT_TRUE(in_coaisle(PerfectComplex(Z), below(0, pts({2, 3}))));
  EXPECT_TRUE(in_coaisle(PerfectComplex(Z), below(3, SpecSubset::all(Z))));
  EXPECT_THROW(in_coaisle(K(2), below(0, pts({2})), {1, 2}), InputError);
}

TEST(Coaisle, KoszulTwoLevelwise) {
  Rng rng(13);
  ComplexBounds b;
  b.max_rank = 2;
  b.amplitude = 3;
  for (const Ring& R : {Ring::integers(), Ring::poly_fp(2)}) {
    for (int t = 0; t < 40; ++t) {
      PerfectComplex B = complex::random_complex(R, rng, b);
      Filtration phi = supports::random_filtration(R, rng, {-3, 3, 3, 1});
      const bool whole = in_coaisle(B, phi).orthogonal;
      bool levels = true;
      if (auto last = phi.last_nonempty()) {
        const Window w = adequate_window(B, phi);
        for (int i = std::min(w.lo, *last); i <= *last; ++i) {
          levels = levels && in_coaisle(B, Filtration::step(R, i, phi.at(i))).orthogonal;
        }
      }
      EXPECT_EQ(whole, levels) << phi.to_string();
    }
  }
}

TEST(TDecompose, Examples) {
  DecompositionReport r1 = t_decompose(K(2), below(0, SpecSubset::all(Z)));
  ASSERT_TRUE(r1.verified) << r1.failure;
  EXPECT_TRUE(r1.classical);
  EXPECT_EQ(r1.triangle.first, K(2));
  EXPECT_TRUE(r1.triangle.third.empty());

  DecompositionReport r2 = t_decompose(PerfectComplex::unit(Z), below(-1, SpecSubset::all(Z)));
  ASSERT_TRUE(r2.verified) << r2.failure;
  EXPECT_TRUE(r2.triangle.first.empty());
  EXPECT_EQ(r2.triangle.third, PerfectComplex::unit(Z));

  DecompositionReport r3 = t_decompose(complex::direct_sum(K(2), K(3)), below(0, pts({2})));
  ASSERT_TRUE(r3.verified) << r3.failure;
  EXPECT_FALSE(r3.classical);
  EXPECT_EQ(complex::cohomology_all(r3.triangle.first), complex::cohomology_all(K(2)));
  EXPECT_EQ(complex::cohomology_all(r3.triangle.third), complex::cohomology_all(K(3)));
}

TEST(TDecompose, TorsionDominatedRandom) {
  Rng rng(17);
  int verified = 0, total = 0;
  for (const Ring& R : {Ring::integers(), Ring::poly_fp(2)}) {
    for (int t = 0; t < 25; ++t) {
      Filtration phi = supports::random_filtration(R, rng, {-3, 3, 3, 1});
      ComplexBounds b;
      b.max_rank = 2;
      b.amplitude = 3;
      for (const auto& p : supports::small_primes(R, 4)) b.divisor_pool.push_back(p.generator);
      b.free_allowed = [&](int i) { return phi.at(i).is_all() || phi.at(i + 1).is_empty(); };
      PerfectComplex A = complex::random_complex(R, rng, b);
      DecompositionReport r = t_decompose(A, phi, 64);
      ++total;
      if (r.verified) ++verified;
      // a report either verifies or says why not
      EXPECT_TRUE(r.verified || !r.failure.empty());
      EXPECT_TRUE(r.verified) << r.failure << " phi=" << phi.to_string() << " A=" << complex::describe(A);
    }
  }
  EXPECT_EQ(verified, total);
}

TEST(TDecompose, FreeInsideFiniteLevelHitsCap) {
  // R[0] already lies in the coaisle when phi(1) is empty
  EXPECT_TRUE(t_decompose(PerfectComplex::unit(Z), below(0, pts({2}))).verified);
  // with phi(1) = {(2)} the truncation is not perfect
  DecompositionReport r = t_decompose(PerfectComplex::unit(Z), below(1, pts({2})), 4);
  EXPECT_FALSE(r.verified);
  EXPECT_TRUE(r.cap_exceeded);
}

TEST(Dominance, Examples) {
  EXPECT_TRUE(support_dominance_check(K(4), K(2)).dominated);
  DominanceReport d = support_dominance_check(K(2), complex::shift(K(2), -1));
  EXPECT_TRUE(d.dominated);
  EXPECT_TRUE(d.consequence_holds);
  DominanceReport f = support_dominance_check(PerfectComplex::unit(Z), K(2));
  EXPECT_FALSE(f.dominated);
  EXPECT_EQ(f.escape_degree, 0);
}

TEST(Roundtrip, PhiPsiExamples) {
  Filtration phi(Z, pts({2, 3}), {{1, pts({2})}, {2, SpecSubset::empty(Z)}});
  PhiPsiReport r = roundtrip_phi_psi(phi, {-1, 2});
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.rows.size(), 4u);
  EXPECT_TRUE(roundtrip_phi_psi(Filtration(Z), {0, 0}).equal);
  EXPECT_TRUE(roundtrip_phi_psi(below(0, SpecSubset::all(Z)), {0, 0}).equal);
  EXPECT_THROW(roundtrip_phi_psi(phi, {-1, 0}), InputError);
}

TEST(Roundtrip, PsiPhiExamples) {
  PsiPhiReport r = roundtrip_psi_phi(Z, {K(2)}, {K(4), K(3), PerfectComplex(Z)});
  EXPECT_TRUE(r.consistent);
  EXPECT_TRUE(r.probes[0].dominated);
  EXPECT_TRUE(r.probes[0].in_aisle);
  EXPECT_FALSE(r.probes[1].dominated);
  EXPECT_TRUE(r.probes[2].in_aisle);
  EXPECT_TRUE(r.probes[2].in_coaisle);
}

TEST(Roundtrip, RandomFiltrations) {
  Rng rng(19);
  for (const Ring& R : {Ring::integers(), Ring::poly_fp(2)}) {
    for (int t = 0; t < 50; ++t) {
      Filtration phi = supports::random_filtration(R, rng, {});
      EXPECT_TRUE(roundtrip_phi_psi(phi, {-5, 6}).equal) << phi.to_string();
    }
  }
}
