// Finitely generated modules in elementary-divisor form and their supports.
#pragma once

#include <string>
#include <vector>

#include "tstruct/exactalg/factor.hpp"
#include "tstruct/exactalg/matrix.hpp"

namespace tstruct::exactalg {

/// R^free_rank (+) R/(d_1) (+) ... (+) R/(d_k) with d_1 | ... | d_k nonunit, normalized.
struct FgModule {
  Ring ring;
  std::size_t free_rank = 0;
  std::vector<Elem> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
  friend bool operator==(const FgModule&, const FgModule&) = default;
};

/// Specialization-closed subset of Spec R: everything, or finitely many closed points.
class SpecSubset {
 public:
  explicit SpecSubset(Ring ring = Ring()) : ring_(std::move(ring)) {}
  static SpecSubset all(Ring ring);
  static SpecSubset empty(Ring ring) { return SpecSubset(std::move(ring)); }
  /// Points are normalized, deduplicated and sorted.
  static SpecSubset of(Ring ring, std::vector<PrimePoint> points);

  const Ring& ring() const { return ring_; }
  bool is_all() const { return all_; }
  bool is_empty() const { return !all_ && points_.empty(); }
  const std::vector<PrimePoint>& points() const { return points_; }
  bool contains_point(const PrimePoint& p) const;

  std::string to_string() const;
  friend bool operator==(const SpecSubset&, const SpecSubset&) = default;

 private:
  Ring ring_;
  bool all_ = false;
  std::vector<PrimePoint> points_;
};

/// B subset of A.
bool spc_contains(const SpecSubset& A, const SpecSubset& B);
SpecSubset spc_union(const SpecSubset& A, const SpecSubset& B);
SpecSubset spc_intersection(const SpecSubset& A, const SpecSubset& B);

/// Cokernel of the presentation R^cols -> R^rows.
FgModule module_normal_form(const Ring& R, const Matrix& presentation);
/// Presentation whose cokernel is exactly M (diagonal, one column per divisor).
Matrix presentation_of(const FgModule& M);
FgModule module_direct_sum(const FgModule& A, const FgModule& B);

/// All when free_rank > 0, else the primes dividing the largest divisor.
SpecSubset support(const FgModule& M);

}  // namespace tstruct::exactalg
