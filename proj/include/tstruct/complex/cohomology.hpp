// Cohomology, supports and the splitting of a complex over a PID into
// elementary pieces: free generators R[-n] and two-term complexes [R --e--> R].
#pragma once

#include <map>
#include <vector>

#include "tstruct/complex/perfect_complex.hpp"
#include "tstruct/exactalg/module.hpp"

namespace tstruct::complex {

using exactalg::FgModule;
using exactalg::SpecSubset;

/// A summand of the splitting. Torsion pieces sit in degrees (degree - 1, degree).
struct Piece {
  enum class Kind { Free, Torsion, Contractible };
  Kind kind = Kind::Free;
  /// Cohomology degree (the top of a two-term piece).
  int degree = 0;
  /// Divisor of a torsion or contractible piece.
  Elem divisor;
  /// Column in the adapted basis of C^degree; `bottom` is the column in
  /// C^{degree-1} for two-term pieces.
  std::size_t top = 0;
  std::size_t bottom = 0;
};

/// C written in an adapted basis. basis[n] has the new basis vectors as
/// columns; basis_inverse[n] converts back. Within degree n the first columns
/// are cocycles (torsion tops in divisor order, then free), the rest map onto them.
struct Decomposition {
  PerfectComplex complex;
  std::map<int, Matrix> basis;
  std::map<int, Matrix> basis_inverse;
  std::vector<Piece> pieces;

  /// Column of the adapted basis as a vector of C^n.
  Matrix vector(int n, std::size_t column) const;
};

Decomposition decompose(const PerfectComplex& C);

/// ker d^i / im d^{i-1} in normal form.
FgModule cohomology(const PerfectComplex& C, int i);
/// H^i for every degree of C with nonzero cohomology.
std::map<int, FgModule> cohomology_all(const PerfectComplex& C);
bool is_acyclic(const PerfectComplex& C);
/// v (a column in C^n) lies in the image of d^{n-1}.
bool is_coboundary(const PerfectComplex& C, int n, const Matrix& v);

/// Union of Supp H^j(C) for j >= i.
SpecSubset supph_geq(const PerfectComplex& C, int i);

struct SplitModel {
  PerfectComplex model;
  /// Quasi-isomorphism model -> C.
  ChainMap witness;
  /// Chain map C -> model, left inverse of the witness.
  ChainMap projection;
  /// Pieces of the model in basis order (no contractible pieces).
  std::vector<Piece> pieces;
};

/// The model is a direct sum of R[-n] and [R --e--> R] summands with basis
/// at degree n ordered: torsion tops of H^n, free generators of H^n, then
/// bottoms of the torsion of H^{n+1}.
SplitModel split_model(const PerfectComplex& C);

/// cone(f) acyclic.
bool is_quasi_iso(const ChainMap& f);

}  // namespace tstruct::complex
