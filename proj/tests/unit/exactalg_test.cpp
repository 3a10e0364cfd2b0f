#include <random>

#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "tstruct/exactalg/factor.hpp"
#include "tstruct/exactalg/module.hpp"
#include "tstruct/exactalg/poly_fp.hpp"
#include "tstruct/exactalg/smith.hpp"

using namespace tstruct;
using namespace tstruct::exactalg;

namespace {

Matrix int_matrix(const Ring& R, std::vector<std::vector<long>> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Matrix M = Matrix::zero(R, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) M.at(i, j) = R.from_int(rows[i][j]);
  return M;
}

std::vector<std::string> strs(const Ring& R, const std::vector<Elem>& v) {
  std::vector<std::string> out;
  for (auto& e : v) out.push_back(R.to_string(e));
  return out;
}

std::vector<std::string> prime_strs(const Ring& R, const std::vector<PrimePower>& f) {
  std::vector<std::string> out;
  for (auto& pp : f) out.push_back(R.to_string(pp.prime.generator) + "^" + std::to_string(pp.exponent));
  return out;
}

}  // namespace

TEST(Ring, LocalizationNormalForm) {
  const Ring Z = Ring::integers();
  const Ring Z6 = Z.localized_at(Z.from_int(12));
  EXPECT_EQ(Z6.describe(), "Z[1/6]");
  Elem half = Z6.parse("1/2");
  EXPECT_EQ(Z6.to_string(half), "3/6");
  EXPECT_TRUE(Z6.is_unit(half));
  EXPECT_TRUE(Z6.is_one(Z6.mul(half, Z6.from_int(2))));
  EXPECT_EQ(Z6.to_string(Z6.normalize(Z6.parse("-10/3"))), "5");
  EXPECT_TRUE(Z6.is_unit(Z6.from_int(-12)));
  EXPECT_FALSE(Z6.is_unit(Z6.from_int(5)));
  EXPECT_THROW(Z6.parse("1/5"), InputError);
  // D(f) only depends on the radical.
  EXPECT_EQ(Z.localized_at(Z.from_int(4)), Z.localized_at(Z.from_int(2)));
  EXPECT_EQ(Z.localized_at(Z.from_int(2)).localized_at(Z.from_int(3)), Z6);
}

TEST(Ring, EuclideanDivisionInLocalization) {
  const Ring Z2 = Ring::integers().localized_at(Ring::integers().from_int(2));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-40, 40);
  std::uniform_int_distribution<unsigned> e(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    Elem a = Z2.mul(Z2.from_int(d(rng)), Z2.inverse(Z2.pow(Z2.from_int(2), e(rng))));
    Elem b = Z2.mul(Z2.from_int(d(rng)), Z2.inverse(Z2.pow(Z2.from_int(2), e(rng))));
    if (Z2.is_zero(b)) continue;
    auto [q, r] = Z2.divmod(a, b);
    EXPECT_EQ(Z2.add(Z2.mul(q, b), r), a);
    if (!Z2.is_zero(r)) {
      EXPECT_LT(Z2.compare_norm(r, b), 0);
    }
  }
}

TEST(Ring, PolynomialParsePrint) {
  const Ring F3 = Ring::poly_fp(3);
  Elem f = F3.parse("x^2 - 1");
  EXPECT_EQ(F3.to_string(f), "x^2+2");
  EXPECT_EQ(F3.to_string(F3.parse("2*x^3 + 4x + 5")), "2x^3+x+2");
  EXPECT_EQ(F3.to_string(F3.normalize(F3.parse("2x+1"))), "x+2");
  EXPECT_THROW(Ring::poly_fp(4), InputError);
  EXPECT_THROW(Ring::poly_fp(65537 * 2), InputError);
  const Ring local = F3.localized_at(F3.parse("x"));
  Elem g = local.parse("(x+1)/(x^2)");
  EXPECT_EQ(local.parse(local.to_string(g)), g);
}

TEST(SmithNormalForm, WorkedExample) {
  const Ring Z;
  auto snf = smith_normal_form(Z, int_matrix(Z, {{2, 4}, {6, 8}}));
  EXPECT_EQ(strs(Z, snf.divisors), (std::vector<std::string>{"2", "4"}));
  EXPECT_EQ(snf.rank, 2u);
}

TEST(SmithNormalForm, IdentityAndZero) {
  const Ring Z;
  auto id = smith_normal_form(Z, Matrix::identity(Z, 2));
  EXPECT_EQ(strs(Z, id.divisors), (std::vector<std::string>{"1", "1"}));
  auto zero = smith_normal_form(Z, Matrix::zero(Z, 2, 3));
  EXPECT_TRUE(zero.divisors.empty());
  EXPECT_EQ(zero.rank, 0u);
  auto empty = smith_normal_form(Z, Matrix::zero(Z, 0, 3));
  EXPECT_EQ(empty.rank, 0u);
  EXPECT_EQ(empty.col_transform.rows(), 3u);
}

TEST(SmithNormalForm, RandomIntegerMatricesMatchMinorsOracle) {
  const Ring Z;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> entry(-20, 20);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t m = dim(rng), n = dim(rng);
    oracle::IntMatrix raw(m, std::vector<mpz_class>(n));
    Matrix M = Matrix::zero(Z, m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        long v = (rng() % 3 == 0) ? 0 : entry(rng);
        raw[i][j] = v;
        M.at(i, j) = Z.from_int(v);
      }
    auto snf = smith_normal_form(Z, M);
    Matrix D = multiply(Z, multiply(Z, snf.row_transform, M), snf.col_transform);
    EXPECT_EQ(D, Matrix::diagonal(Z, m, n, snf.divisors));
    EXPECT_TRUE(Z.is_unit(determinant(Z, snf.row_transform)));
    EXPECT_TRUE(Z.is_unit(determinant(Z, snf.col_transform)));
    EXPECT_EQ(multiply(Z, snf.row_transform, snf.row_inverse), Matrix::identity(Z, m));
    EXPECT_EQ(multiply(Z, snf.col_inverse, snf.col_transform), Matrix::identity(Z, n));
    for (std::size_t k = 0; k + 1 < snf.divisors.size(); ++k) {
      EXPECT_TRUE(Z.divides(snf.divisors[k], snf.divisors[k + 1]));
    }
    auto expected = oracle::invariant_factors(raw);
    ASSERT_EQ(expected.size(), snf.divisors.size());
    for (std::size_t k = 0; k < expected.size(); ++k) {
      EXPECT_EQ(mpz_class(abs(expected[k])).get_str(), Z.to_string(snf.divisors[k]));
    }
  }
}

TEST(SmithNormalForm, LocalizedRingStripsInvertedPrimes) {
  const Ring Z;
  const Ring Z2 = Z.localized_at(Z.from_int(2));
  Matrix M = Matrix::zero(Z2, 2, 2);
  M.at(0, 0) = Z2.parse("3/2");
  M.at(0, 1) = Z2.from_int(4);
  M.at(1, 0) = Z2.from_int(6);
  M.at(1, 1) = Z2.parse("5/4");
  auto snf = smith_normal_form(Z2, M);
  Matrix D = multiply(Z2, multiply(Z2, snf.row_transform, M), snf.col_transform);
  EXPECT_EQ(D, Matrix::diagonal(Z2, 2, 2, snf.divisors));
  // det = 15/8 - 24 = -177/8 = -3*59/8 and the entry gcd is a unit.
  EXPECT_EQ(strs(Z2, snf.divisors), (std::vector<std::string>{"1", "177"}));
}

TEST(SmithNormalForm, PolynomialMatrix) {
  const Ring F2 = Ring::poly_fp(2);
  Matrix M = Matrix::zero(F2, 2, 2);
  M.at(0, 0) = F2.parse("x");
  M.at(0, 1) = F2.parse("x^2+x");
  M.at(1, 0) = F2.parse("x+1");
  M.at(1, 1) = F2.parse("0");
  auto snf = smith_normal_form(F2, M);
  Matrix D = multiply(F2, multiply(F2, snf.row_transform, M), snf.col_transform);
  EXPECT_EQ(D, Matrix::diagonal(F2, 2, 2, snf.divisors));
  EXPECT_EQ(strs(F2, snf.divisors), (std::vector<std::string>{"1", "x^3+x"}));
}

TEST(Factor, SmallCases) {
  const Ring Z;
  EXPECT_EQ(prime_strs(Z, factor(Z, Z.from_int(12))), (std::vector<std::string>{"2^2", "3^1"}));
  EXPECT_TRUE(factor(Z, Z.from_int(1)).empty());
  EXPECT_TRUE(factor(Z, Z.from_int(-1)).empty());
  EXPECT_THROW(factor(Z, Z.zero()), InputError);
  EXPECT_EQ(prime_strs(Z, factor(Z, Z.parse("1000000016000000063"))),
            (std::vector<std::string>{"1000000007^1", "1000000009^1"}));
  const Ring Z6 = Z.localized_at(Z.from_int(6));
  EXPECT_EQ(prime_strs(Z6, factor(Z6, Z6.from_int(60))), (std::vector<std::string>{"5^1"}));
}

TEST(Factor, QuadraticOverF3MatchesRootSearch) {
  const Ring F3 = Ring::poly_fp(3);
  // Oracle: the roots of x^2 - 1 in F_3, found by evaluating at 0, 1, 2.
  std::vector<std::uint32_t> roots;
  for (std::uint32_t a = 0; a < 3; ++a) {
    if ((a * a + 2) % 3 == 0) roots.push_back(a);
  }
  ASSERT_EQ(roots.size(), 2u);  // 1 and 2, giving factors x+2 and x+1
  EXPECT_EQ(prime_strs(F3, factor(F3, F3.parse("x^2-1"))), (std::vector<std::string>{"x+1^1", "x+2^1"}));
}

TEST(Factor, PolynomialsMultiplyBack) {
  for (std::uint32_t p : {2u, 3u, 5u, 65521u}) {
    const Ring F = Ring::poly_fp(p);
    std::mt19937_64 rng(p);
    for (int trial = 0; trial < 40; ++trial) {
      Poly f;
      const int deg = 1 + static_cast<int>(rng() % 9);
      for (int i = 0; i <= deg; ++i) f.c.push_back(static_cast<std::uint32_t>(rng() % p));
      fp::trim(f);
      if (f.is_zero()) continue;
      Elem a = F.from_base(f);
      Elem product = F.one();
      for (auto& pp : factor(F, a)) {
        EXPECT_TRUE(is_prime(F, pp.prime.generator));
        product = F.mul(product, F.pow(pp.prime.generator, pp.exponent));
      }
      EXPECT_EQ(product, F.normalize(a));
    }
  }
}

TEST(Factor, MultiplicativeOnRandomPairs) {
  const Ring Z;
  const Ring F2 = Ring::poly_fp(2);
  std::mt19937_64 rng(11);
  auto merge = [](const Ring& R, std::vector<PrimePower> a, const std::vector<PrimePower>& b) {
    for (auto& pp : b) {
      auto it = std::find_if(a.begin(), a.end(), [&](auto& q) { return q.prime == pp.prime; });
      if (it == a.end()) a.push_back(pp); else it->exponent += pp.exponent;
    }
    std::sort(a.begin(), a.end(), [&](auto& x, auto& y) { return R.compare(x.prime.generator, y.prime.generator) < 0; });
    return a;
  };
  for (int trial = 0; trial < 100; ++trial) {
    Elem a = Z.from_int(static_cast<long>(rng() % 5000) + 1), b = Z.from_int(static_cast<long>(rng() % 5000) + 1);
    EXPECT_EQ(factor(Z, Z.mul(a, b)), merge(Z, factor(Z, a), factor(Z, b)));
    Elem c = F2.from_base(fp::from_index(rng() % 300 + 1, 2));
    Elem d = F2.from_base(fp::from_index(rng() % 300 + 1, 2));
    EXPECT_EQ(factor(F2, F2.mul(c, d)), merge(F2, factor(F2, c), factor(F2, d)));
  }
}

TEST(Module, NormalFormExamples) {
  const Ring Z;
  FgModule six = module_normal_form(Z, int_matrix(Z, {{6}}));
  EXPECT_EQ(six.free_rank, 0u);
  EXPECT_EQ(strs(Z, six.torsion), (std::vector<std::string>{"6"}));
  FgModule free2 = module_normal_form(Z, Matrix::zero(Z, 2, 0));
  EXPECT_EQ(free2.free_rank, 2u);
  EXPECT_TRUE(free2.torsion.empty());
  FgModule m = module_normal_form(Z, int_matrix(Z, {{2, 4}, {6, 8}}));
  EXPECT_EQ(m.free_rank, 0u);
  EXPECT_EQ(strs(Z, m.torsion), (std::vector<std::string>{"2", "4"}));
}

TEST(Module, NormalFormIsIdempotent) {
  const Ring Z;
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    Matrix M = Matrix::zero(Z, 1 + rng() % 4, rng() % 4);
    for (std::size_t i = 0; i < M.rows(); ++i)
      for (std::size_t j = 0; j < M.cols(); ++j) M.at(i, j) = Z.from_int(static_cast<long>(rng() % 41) - 20);
    FgModule once = module_normal_form(Z, M);
    EXPECT_EQ(module_normal_form(Z, presentation_of(once)), once);
  }
}

TEST(Module, Supports) {
  const Ring Z;
  FgModule z6{Z, 0, {Z.from_int(6)}};
  EXPECT_EQ(support(z6).to_string(), "{(2), (3)}");
  EXPECT_TRUE(support(FgModule{Z, 1, {}}).is_all());
  EXPECT_TRUE(support(FgModule{Z, 0, {}}).is_empty());
  // Localizing at 2 removes (2) from the support.
  const Ring Z2 = Z.localized_at(Z.from_int(2));
  FgModule local = module_normal_form(Z2, Matrix::diagonal(Z2, 1, 1, {Z2.from_int(6)}));
  EXPECT_EQ(support(local).to_string(), "{(3)}");
}

TEST(Module, SupportOfDirectSumIsUnion) {
  const Ring Z;
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 80; ++trial) {
    auto random_module = [&] {
      Matrix M = Matrix::zero(Z, 1 + rng() % 3, rng() % 3);
      for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) M.at(i, j) = Z.from_int(static_cast<long>(rng() % 31) - 15);
      return module_normal_form(Z, M);
    };
    FgModule a = random_module(), b = random_module();
    EXPECT_EQ(support(module_direct_sum(a, b)), spc_union(support(a), support(b)));
  }
}

TEST(SpecSubsetOps, ContainmentSemantics) {
  const Ring Z;
  auto pts = [&](std::vector<long> v) {
    std::vector<PrimePoint> out;
    for (long x : v) out.push_back(make_prime_point(Z, Z.from_int(x)));
    return SpecSubset::of(Z, out);
  };
  EXPECT_TRUE(spc_contains(SpecSubset::all(Z), pts({2})));
  EXPECT_FALSE(spc_contains(pts({2}), pts({3})));
  EXPECT_TRUE(spc_contains(pts({2, 3}), pts({3})));
  EXPECT_THROW(make_prime_point(Z, Z.from_int(6)), InputError);
  EXPECT_THROW(spc_contains(pts({2}), SpecSubset::empty(Ring::poly_fp(2))), RingMismatch);
}
