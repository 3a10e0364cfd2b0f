// Koszul complexes and the generator families K^i_Z of a filtration.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tstruct/complex/perfect_complex.hpp"
#include "tstruct/supports/filtration.hpp"

namespace tstruct::supports {

using complex::PerfectComplex;
using exactalg::Elem;

/// Exterior Koszul complex in degrees [-n, 0]; degree -k has the k-subsets in
/// lexicographic order and d(e_S) = sum_j (-1)^{pos of j in S} a_j e_{S - j}.
/// The empty list gives R[0].
PerfectComplex koszul(const Ring& R, const std::vector<Elem>& elements);

struct GeneratorEntry {
  PerfectComplex complex;
  /// Level i: the entry is K(a)[-i] or R[-i].
  int level = 0;
  SpecSubset declared;
  /// The Koszul element; none for the unit R[-i].
  std::optional<Elem> element;

  std::string label() const;
};

struct GeneratorSet {
  Ring ring;
  std::vector<GeneratorEntry> entries;
  std::vector<std::string> warnings;
};

struct Window {
  int lo = 0;
  int hi = 0;
};

/// For each level i of the window, ascending: R[-i] when phi(i) = All,
/// otherwise K(prod S)[-i] for each nonempty subset S of phi(i), by size.
GeneratorSet koszul_generators(const Filtration& phi, Window window);

/// True when the window reaches every level where phi changes and its last nonempty level.
bool window_covers(const Filtration& phi, Window window);

}  // namespace tstruct::supports
