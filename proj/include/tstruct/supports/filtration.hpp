// Decreasing filtrations Z -> SpecSubset with finite presentations.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tstruct/complex/perfect_complex.hpp"
#include "tstruct/exactalg/module.hpp"

namespace tstruct::supports {

using complex::Verdict;
using exactalg::Ring;
using exactalg::SpecSubset;

/// phi(i) = head for i below the first step; otherwise the value of the last
/// step whose degree is <= i. A valid filtration decreases and its last value
/// is empty, so phi is eventually constant on both sides.
class Filtration {
 public:
  explicit Filtration(Ring ring = Ring());
  Filtration(Ring ring, SpecSubset head, std::vector<std::pair<int, SpecSubset>> steps);

  /// i <= level -> Z, i > level -> empty.
  static Filtration step(const Ring& ring, int level, const SpecSubset& Z);

  const Ring& ring() const { return ring_; }
  const SpecSubset& head() const { return head_; }
  const std::vector<std::pair<int, SpecSubset>>& steps() const { return steps_; }

  SpecSubset at(int i) const;
  /// Largest i with phi(i) nonempty; none for the zero filtration.
  std::optional<int> last_nonempty() const;
  /// Smallest i with phi(i) != head; none when constant.
  std::optional<int> first_change() const;
  /// True when every value is All or empty.
  bool is_classical() const;

  /// Equal consecutive values merged, steps restating the head dropped.
  Filtration canonical() const;
  std::string to_string() const;

  /// Pointwise equality.
  friend bool operator==(const Filtration& a, const Filtration& b);

 private:
  Ring ring_;
  SpecSubset head_;
  std::vector<std::pair<int, SpecSubset>> steps_;
};

/// Degrees strictly increasing, values weakly decreasing, final value empty.
Verdict validate_filtration(const Filtration& phi);

}  // namespace tstruct::supports
