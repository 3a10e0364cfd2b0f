// Seeded property runs across every module, with shrinking by regeneration.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tstruct/complex/perfect_complex.hpp"

namespace tstruct::aisle {

struct HarnessBounds {
  /// Largest term rank; 0 means only zero complexes are generated.
  std::size_t max_rank = 3;
  int amplitude = 4;
  long entry_bound = 20;
};

struct HarnessConfig {
  /// Cone used by the cone properties; tests swap in broken versions.
  std::function<complex::Triangle(const complex::ChainMap&)> cone;
  /// Property names to run; all of them when empty.
  std::vector<std::string> only;
  /// Regeneration attempts per smaller size while shrinking.
  int shrink_attempts = 8;
};

struct PropertyTally {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
};

struct HarnessFailure {
  std::string property;
  std::size_t case_index = 0;
  std::size_t size = 0;
  /// Smallest size at which a regenerated case still failed.
  std::size_t shrunk_size = 0;
  std::string counterexample;
};

struct HarnessReport {
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::vector<PropertyTally> tallies;
  std::vector<HarnessFailure> failures;

  bool ok() const { return failures.empty(); }
  std::string to_text() const;
};

std::vector<std::string> harness_properties();

/// Runs `cases` cases of every selected property, alternating Z and F_2[x].
/// Deterministic in (seed, cases, bounds); cases run one after another.
HarnessReport property_harness(std::uint64_t seed, std::size_t cases, const HarnessBounds& bounds = {},
                               const HarnessConfig& config = {});

}  // namespace tstruct::aisle
