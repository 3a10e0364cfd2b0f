#include <gtest/gtest.h>

#include "tstruct/aisle/harness.hpp"
#include "tstruct/complex/operations.hpp"

using namespace tstruct;
using namespace tstruct::aisle;
using complex::ChainMap;
using complex::PerfectComplex;
using complex::Triangle;

namespace {

// cone with d = [[d_A, 0], [f, d_B]]: the sign on the source block is lost
Triangle flipped_cone(const ChainMap& f) {
  Triangle t = complex::cone(f);
  const PerfectComplex& C = t.third;
  const PerfectComplex& A = f.source();
  if (C.empty()) return t;
  std::vector<std::size_t> ranks;
  std::vector<exactalg::Matrix> diffs;
  for (int n = C.lo(); n <= C.hi(); ++n) {
    ranks.push_back(C.rank(n));
    if (n == C.hi()) break;
    exactalg::Matrix d = C.diff(n);
    for (std::size_t r = 0; r < A.rank(n + 2); ++r)
      for (std::size_t c = 0; c < A.rank(n + 1); ++c) d.at(r, c) = C.ring().neg(d.at(r, c));
    diffs.push_back(std::move(d));
  }
  t.third = PerfectComplex(C.ring(), C.lo(), std::move(ranks), std::move(diffs));
  return t;
}

}  // namespace

TEST(Harness, SeedZeroPasses) {
  HarnessReport r = property_harness(0, 100, {2, 3, 20});
  EXPECT_TRUE(r.ok()) << r.to_text();
  EXPECT_EQ(r.tallies.size(), harness_properties().size());
  for (const auto& t : r.tallies) EXPECT_EQ(t.cases, 100u);
}

TEST(Harness, EmptyComplexesOnly) {
  HarnessReport r = property_harness(5, 20, {0, 0, 20});
  EXPECT_TRUE(r.ok()) << r.to_text();
}

TEST(Harness, Deterministic) {
  EXPECT_EQ(property_harness(9, 10).to_text(), property_harness(9, 10).to_text());
}

TEST(Harness, MutantConeIsCaught) {
  HarnessConfig config;
  config.cone = flipped_cone;
  config.only = {"cone-is-triangle", "support-cone"};
  HarnessReport r = property_harness(0, 30, {3, 4, 20}, config);
  ASSERT_FALSE(r.ok());
  bool named = false;
  for (const auto& f : r.failures) {
    named = named || f.property == "cone-is-triangle";
    EXPECT_LE(f.shrunk_size, f.size);
    EXPECT_GT(f.shrunk_size, 0u);
  }
  EXPECT_TRUE(named) << r.to_text();
}
