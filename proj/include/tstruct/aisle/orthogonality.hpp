// Orthogonality to shifted generators and coaisle membership.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tstruct/complex/perfect_complex.hpp"
#include "tstruct/exactalg/module.hpp"
#include "tstruct/supports/koszul.hpp"

namespace tstruct::aisle {

using complex::ChainMap;
using complex::PerfectComplex;
using exactalg::FgModule;
using exactalg::Matrix;
using exactalg::Ring;
using supports::Filtration;
using supports::GeneratorSet;
using supports::Window;

/// A nonzero class of Hom(g[n], B) = H^{-n}(Hom(g, B)).
struct OrthoWitness {
  std::size_t generator = 0;
  std::string generator_label;
  int shift = 0;
  /// H^{-n} of the Hom complex.
  FgModule group;
  /// Cocycle representing a nonzero class, as a column in Hom(g, B)^{-n}.
  Matrix cocycle;
};

struct OrthoCertificate {
  bool orthogonal = true;
  std::optional<OrthoWitness> witness;
  /// Hom-complex degrees examined (all j <= 0 carrying terms).
  int checked_lo = 0;
  int checked_hi = 0;

  explicit operator bool() const { return orthogonal; }
  std::string to_string() const;
};

/// Hom(g[n], B) = 0 for every n >= 0, read off H^j(Hom(g, B)) for j <= 0.
OrthoCertificate orthogonal_all_shifts(const PerfectComplex& g, const PerfectComplex& B);

/// Every nonzero class of Hom(g[n], B) for n >= 0, as chain maps g[n] -> B
/// generating each group.
struct ShiftedClasses {
  int shift = 0;
  std::vector<ChainMap> maps;
};
std::vector<ShiftedClasses> nonzero_classes(const PerfectComplex& g, const PerfectComplex& B);

/// Smallest window that decides coaisle membership of B: it reaches from
/// min(lo(B), last nonempty level) to the last nonempty level of phi.
Window adequate_window(const PerfectComplex& B, const Filtration& phi);
/// True when `window` contains every level whose generators can see B.
bool window_adequate(const PerfectComplex& B, const Filtration& phi, Window window);

/// B orthogonal to every shifted Koszul generator of phi on the window.
/// Throws InputError when the window cannot decide membership.
OrthoCertificate in_coaisle(const PerfectComplex& B, const Filtration& phi, Window window);
OrthoCertificate in_coaisle(const PerfectComplex& B, const Filtration& phi);

}  // namespace tstruct::aisle
