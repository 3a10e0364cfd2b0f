// Bounded complexes of finite free modules, chain maps and triangles.
//
// Indexing is cohomological: the term in degree n has rank(n) and the
// differential d^n : C^n -> C^{n+1} is a rank(n+1) x rank(n) matrix.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tstruct/exactalg/matrix.hpp"

namespace tstruct::complex {

using exactalg::Elem;
using exactalg::Matrix;
using exactalg::Ring;

class PerfectComplex {
 public:
  /// The zero complex.
  explicit PerfectComplex(Ring ring = Ring());
  /// Terms in degrees lo .. lo + ranks.size() - 1; diffs[k] is d^{lo+k}
  /// (ranks.size() - 1 matrices, or none). Throws InputError on shape mismatch.
  PerfectComplex(Ring ring, int lo, std::vector<std::size_t> ranks, std::vector<Matrix> diffs);

  /// R in degree `degree`.
  static PerfectComplex unit(const Ring& ring, int degree = 0);

  const Ring& ring() const { return ring_; }
  bool empty() const { return ranks_.empty(); }
  /// Lowest and highest stored degree; hi() < lo() for the zero complex.
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int n) const;
  std::size_t total_rank() const;
  /// d^n; the zero map of the right shape outside the stored range.
  Matrix diff(int n) const;

  /// Drops zero-rank terms at both ends.
  PerfectComplex trimmed() const;

  /// Entrywise equality after trimming.
  friend bool operator==(const PerfectComplex& a, const PerfectComplex& b);

 private:
  Ring ring_;
  int lo_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<Matrix> diffs_;
};

/// f^n : A^n -> B^n, a rank_B(n) x rank_A(n) matrix per degree.
class ChainMap {
 public:
  ChainMap() = default;
  ChainMap(PerfectComplex source, PerfectComplex target);
  static ChainMap identity(const PerfectComplex& C);
  static ChainMap zero(const PerfectComplex& source, const PerfectComplex& target);

  const PerfectComplex& source() const { return source_; }
  const PerfectComplex& target() const { return target_; }
  const Ring& ring() const { return source_.ring(); }

  Matrix component(int n) const;
  void set_component(int n, Matrix m);

 private:
  PerfectComplex source_;
  PerfectComplex target_;
  int lo_ = 0;
  std::vector<Matrix> components_;
};

/// first --f--> second --g--> third --h--> first[1]
struct Triangle {
  PerfectComplex first, second, third;
  ChainMap f, g, h;
};

/// Outcome of a structural check; `degree` and `entry` locate the first failure.
struct Verdict {
  bool ok = true;
  std::string message;
  std::optional<int> degree;
  std::optional<std::pair<std::size_t, std::size_t>> entry;

  explicit operator bool() const { return ok; }
  static Verdict pass() { return {}; }
};

/// d^{n+1} d^n = 0 for every n.
Verdict validate(const PerfectComplex& C);
/// Commutes with differentials in every degree.
Verdict validate(const ChainMap& f);

std::string describe(const PerfectComplex& C);

}  // namespace tstruct::complex
