#include "tstruct/complex/perfect_complex.hpp"

#include <algorithm>

namespace tstruct::complex {

using exactalg::multiply;

PerfectComplex::PerfectComplex(Ring ring) : ring_(std::move(ring)) {}

PerfectComplex::PerfectComplex(Ring ring, int lo, std::vector<std::size_t> ranks, std::vector<Matrix> diffs)
    : ring_(std::move(ring)), lo_(lo), ranks_(std::move(ranks)), diffs_(std::move(diffs)) {
  const std::size_t expected = ranks_.empty() ? 0 : ranks_.size() - 1;
  if (diffs_.size() != expected) {
    throw InputError("complex has " + std::to_string(ranks_.size()) + " terms but " +
                     std::to_string(diffs_.size()) + " differentials");
  }
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    if (diffs_[k].rows() != ranks_[k + 1] || diffs_[k].cols() != ranks_[k]) {
      throw InputError("differential d^" + std::to_string(lo_ + static_cast<int>(k)) + " has shape " +
                       std::to_string(diffs_[k].rows()) + "x" + std::to_string(diffs_[k].cols()) +
                       ", expected " + std::to_string(ranks_[k + 1]) + "x" + std::to_string(ranks_[k]));
    }
  }
}

PerfectComplex PerfectComplex::unit(const Ring& ring, int degree) {
  return PerfectComplex(ring, degree, {1}, {});
}

std::size_t PerfectComplex::rank(int n) const {
  if (n < lo_ || n > hi()) return 0;
  return ranks_[static_cast<std::size_t>(n - lo_)];
}

std::size_t PerfectComplex::total_rank() const {
  std::size_t total = 0;
  for (auto r : ranks_) total += r;
  return total;
}

Matrix PerfectComplex::diff(int n) const {
  if (n >= lo_ && n < hi()) return diffs_[static_cast<std::size_t>(n - lo_)];
  return Matrix::zero(ring_, rank(n + 1), rank(n));
}

PerfectComplex PerfectComplex::trimmed() const {
  int a = lo_, b = hi();
  while (a <= b && rank(a) == 0) ++a;
  while (b >= a && rank(b) == 0) --b;
  if (a > b) return PerfectComplex(ring_);
  std::vector<std::size_t> ranks;
  std::vector<Matrix> diffs;
  for (int n = a; n <= b; ++n) {
    ranks.push_back(rank(n));
    if (n < b) diffs.push_back(diff(n));
  }
  return PerfectComplex(ring_, a, std::move(ranks), std::move(diffs));
}

bool operator==(const PerfectComplex& a, const PerfectComplex& b) {
  if (!(a.ring_ == b.ring_)) return false;
  const PerfectComplex x = a.trimmed(), y = b.trimmed();
  return x.lo_ == y.lo_ && x.ranks_ == y.ranks_ && x.diffs_ == y.diffs_;
}

ChainMap::ChainMap(PerfectComplex source, PerfectComplex target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (!(source_.ring() == target_.ring())) {
    throw RingMismatch("chain map between complexes over " + source_.ring().describe() + " and " +
                       target_.ring().describe());
  }
  lo_ = std::min(source_.lo(), target_.lo());
  const int hi = std::max(source_.hi(), target_.hi());
  for (int n = lo_; n <= hi; ++n) {
    components_.push_back(Matrix::zero(source_.ring(), target_.rank(n), source_.rank(n)));
  }
}

ChainMap ChainMap::identity(const PerfectComplex& C) {
  ChainMap f(C, C);
  for (int n = C.lo(); n <= C.hi(); ++n) f.set_component(n, Matrix::identity(C.ring(), C.rank(n)));
  return f;
}

ChainMap ChainMap::zero(const PerfectComplex& source, const PerfectComplex& target) {
  return ChainMap(source, target);
}

Matrix ChainMap::component(int n) const {
  const int k = n - lo_;
  if (k >= 0 && k < static_cast<int>(components_.size())) return components_[static_cast<std::size_t>(k)];
  return Matrix::zero(ring(), target_.rank(n), source_.rank(n));
}

void ChainMap::set_component(int n, Matrix m) {
  if (m.rows() != target_.rank(n) || m.cols() != source_.rank(n)) {
    throw InputError("chain map component in degree " + std::to_string(n) + " has wrong shape");
  }
  if (m.empty()) return;
  components_[static_cast<std::size_t>(n - lo_)] = std::move(m);
}

Verdict validate(const PerfectComplex& C) {
  const Ring& R = C.ring();
  for (int n = C.lo(); n + 1 < C.hi(); ++n) {
    Matrix dd = multiply(R, C.diff(n + 1), C.diff(n));
    for (std::size_t i = 0; i < dd.rows(); ++i) {
      for (std::size_t j = 0; j < dd.cols(); ++j) {
        if (!R.is_zero(dd.at(i, j))) {
          Verdict v;
          v.ok = false;
          v.degree = n;
          v.entry = std::make_pair(i, j);
          v.message = "d^" + std::to_string(n + 1) + " d^" + std::to_string(n) + " has entry (" +
                      std::to_string(i) + "," + std::to_string(j) + ") = " + R.to_string(dd.at(i, j));
          return v;
        }
      }
    }
  }
  return Verdict::pass();
}

Verdict validate(const ChainMap& f) {
  const Ring& R = f.ring();
  const int lo = std::min(f.source().lo(), f.target().lo()) - 1;
  const int hi = std::max(f.source().hi(), f.target().hi());
  for (int n = lo; n <= hi; ++n) {
    Matrix left = multiply(R, f.target().diff(n), f.component(n));
    Matrix right = multiply(R, f.component(n + 1), f.source().diff(n));
    if (!(left == right)) {
      Verdict v;
      v.ok = false;
      v.degree = n;
      v.message = "chain map does not commute with d^" + std::to_string(n);
      return v;
    }
  }
  return Verdict::pass();
}

std::string describe(const PerfectComplex& C) {
  if (C.empty()) return "0";
  std::string out;
  for (int n = C.lo(); n <= C.hi(); ++n) {
    if (n > C.lo()) out += " -> ";
    out += "R^" + std::to_string(C.rank(n)) + "[" + std::to_string(n) + "]";
  }
  return out;
}

}  // namespace tstruct::complex
