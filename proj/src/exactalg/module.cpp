#include "tstruct/exactalg/module.hpp"

#include <algorithm>

#include "tstruct/exactalg/smith.hpp"

namespace tstruct::exactalg {

namespace {

void require_same_ring(const Ring& a, const Ring& b, const char* what) {
  if (!(a == b)) {
    throw RingMismatch(std::string(what) + ": " + a.describe() + " vs " + b.describe());
  }
}

}  // namespace

std::string FgModule::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  const std::string base = ring.describe();
  if (free_rank > 0) out = free_rank == 1 ? base : base + "^" + std::to_string(free_rank);
  for (const auto& d : torsion) {
    if (!out.empty()) out += " + ";
    out += base + "/(" + ring.to_string(d) + ")";
  }
  return out;
}

SpecSubset SpecSubset::all(Ring ring) {
  SpecSubset s(std::move(ring));
  s.all_ = true;
  return s;
}

SpecSubset SpecSubset::of(Ring ring, std::vector<PrimePoint> points) {
  SpecSubset s(std::move(ring));
  for (auto& p : points) p.generator = s.ring_.normalize(p.generator);
  std::sort(points.begin(), points.end(), [&](const PrimePoint& a, const PrimePoint& b) {
    return s.ring_.compare(a.generator, b.generator) < 0;
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (const auto& p : points) {
    if (s.ring_.is_unit(p.generator) || s.ring_.is_zero(p.generator)) {
      throw InputError("'" + s.ring_.to_string(p.generator) + "' is not a closed point of " +
                       s.ring_.describe());
    }
  }
  s.points_ = std::move(points);
  return s;
}

bool SpecSubset::contains_point(const PrimePoint& p) const {
  if (all_) return true;
  return std::find(points_.begin(), points_.end(), p) != points_.end();
}

std::string SpecSubset::to_string() const {
  if (all_) return "all";
  std::string out = "{";
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i) out += ", ";
    out += "(" + ring_.to_string(points_[i].generator) + ")";
  }
  return out + "}";
}

bool spc_contains(const SpecSubset& A, const SpecSubset& B) {
  require_same_ring(A.ring(), B.ring(), "spc_contains");
  if (A.is_all()) return true;
  if (B.is_all()) return false;
  return std::all_of(B.points().begin(), B.points().end(),
                     [&](const PrimePoint& p) { return A.contains_point(p); });
}

SpecSubset spc_union(const SpecSubset& A, const SpecSubset& B) {
  require_same_ring(A.ring(), B.ring(), "spc_union");
  if (A.is_all() || B.is_all()) return SpecSubset::all(A.ring());
  std::vector<PrimePoint> pts = A.points();
  pts.insert(pts.end(), B.points().begin(), B.points().end());
  return SpecSubset::of(A.ring(), std::move(pts));
}

SpecSubset spc_intersection(const SpecSubset& A, const SpecSubset& B) {
  require_same_ring(A.ring(), B.ring(), "spc_intersection");
  if (A.is_all()) return B;
  if (B.is_all()) return A;
  std::vector<PrimePoint> pts;
  for (const auto& p : A.points()) {
    if (B.contains_point(p)) pts.push_back(p);
  }
  return SpecSubset::of(A.ring(), std::move(pts));
}

FgModule module_normal_form(const Ring& R, const Matrix& presentation) {
  SmithForm snf = smith_normal_form(R, presentation);
  FgModule M{R, presentation.rows() - snf.rank, {}};
  for (const auto& d : snf.divisors) {
    if (!R.is_unit(d)) M.torsion.push_back(d);
  }
  return M;
}

Matrix presentation_of(const FgModule& M) {
  const std::size_t rows = M.free_rank + M.torsion.size();
  Matrix P = Matrix::zero(M.ring, rows, M.torsion.size());
  for (std::size_t k = 0; k < M.torsion.size(); ++k) P.at(k, k) = M.torsion[k];
  return P;
}

FgModule module_direct_sum(const FgModule& A, const FgModule& B) {
  require_same_ring(A.ring, B.ring, "module_direct_sum");
  const Ring& R = A.ring;
  std::vector<Elem> diag = A.torsion;
  diag.insert(diag.end(), B.torsion.begin(), B.torsion.end());
  const std::size_t rows = A.free_rank + B.free_rank + diag.size();
  Matrix P = Matrix::zero(R, rows, diag.size());
  for (std::size_t k = 0; k < diag.size(); ++k) P.at(k, k) = diag[k];
  return module_normal_form(R, P);
}

SpecSubset support(const FgModule& M) {
  if (M.free_rank > 0) return SpecSubset::all(M.ring);
  if (M.torsion.empty()) return SpecSubset::empty(M.ring);
  return SpecSubset::of(M.ring, prime_support(M.ring, M.torsion.back()));
}

}  // namespace tstruct::exactalg
