#include "tstruct/aisle/orthogonality.hpp"

#include <algorithm>

#include "tstruct/complex/cohomology.hpp"
#include "tstruct/complex/operations.hpp"

namespace tstruct::aisle {

using complex::Piece;

std::string OrthoCertificate::to_string() const {
  if (orthogonal) {
    if (checked_hi < checked_lo) return "all vanish (no Hom terms in degrees <= 0)";
    return "all vanish (Hom degrees " + std::to_string(checked_lo) + ".." + std::to_string(checked_hi) + ")";
  }
  return "(" + witness->generator_label + ", n=" + std::to_string(witness->shift) + ")";
}

namespace {

struct HomData {
  PerfectComplex hom;
  complex::Decomposition dec;
};

HomData hom_data(const PerfectComplex& g, const PerfectComplex& B) {
  PerfectComplex H = complex::hom_complex(g, B);
  complex::Decomposition dec = complex::decompose(H);
  return {std::move(H), std::move(dec)};
}

FgModule group_at(const Ring& R, const complex::Decomposition& dec, int j) {
  FgModule M{R, 0, {}};
  for (const auto& p : dec.pieces) {
    if (p.degree != j || p.kind == Piece::Kind::Contractible) continue;
    if (p.kind == Piece::Kind::Free) {
      ++M.free_rank;
    } else {
      M.torsion.push_back(p.divisor);
    }
  }
  return M;
}

}  // namespace

OrthoCertificate orthogonal_all_shifts(const PerfectComplex& g, const PerfectComplex& B) {
  if (!(g.ring() == B.ring())) {
    throw RingMismatch("orthogonality between complexes over " + g.ring().describe() + " and " + B.ring().describe());
  }
  OrthoCertificate cert;
  HomData data = hom_data(g, B);
  const PerfectComplex& H = data.hom;
  if (H.empty()) {
    cert.checked_lo = 0;
    cert.checked_hi = -1;
    return cert;
  }
  cert.checked_lo = H.lo();
  cert.checked_hi = std::min(0, H.hi());
  for (int j = cert.checked_hi; j >= cert.checked_lo; --j) {
    for (const auto& p : data.dec.pieces) {
      if (p.degree != j || p.kind == Piece::Kind::Contractible) continue;
      cert.orthogonal = false;
      cert.witness = OrthoWitness{0, "", -j, group_at(g.ring(), data.dec, j), data.dec.vector(j, p.top)};
      return cert;
    }
  }
  return cert;
}

std::vector<ShiftedClasses> nonzero_classes(const PerfectComplex& g, const PerfectComplex& B) {
  std::vector<ShiftedClasses> out;
  HomData data = hom_data(g, B);
  if (data.hom.empty()) return out;
  for (int j = std::min(0, data.hom.hi()); j >= data.hom.lo(); --j) {
    ShiftedClasses cls{-j, {}};
    for (const auto& p : data.dec.pieces) {
      if (p.degree != j || p.kind == Piece::Kind::Contractible) continue;
      cls.maps.push_back(complex::hom_cocycle_to_map(g, B, -j, data.dec.vector(j, p.top)));
    }
    if (!cls.maps.empty()) out.push_back(std::move(cls));
  }
  return out;
}

Window adequate_window(const PerfectComplex& B, const Filtration& phi) {
  const auto last = phi.last_nonempty();
  if (!last) return {0, 0};
  if (B.empty()) return {*last, *last};
  return {std::min(B.lo(), *last), *last};
}

bool window_adequate(const PerfectComplex& B, const Filtration& phi, Window window) {
  const auto last = phi.last_nonempty();
  if (!last || B.empty() || B.lo() > *last) return true;
  return window.lo <= B.lo() && window.hi >= *last;
}

OrthoCertificate in_coaisle(const PerfectComplex& B, const Filtration& phi, Window window) {
  if (!(B.ring() == phi.ring())) {
    throw RingMismatch("complex over " + B.ring().describe() + ", filtration over " + phi.ring().describe());
  }
  if (!window_adequate(B, phi, window)) {
    const Window need = adequate_window(B, phi);
    throw InputError("window [" + std::to_string(window.lo) + ", " + std::to_string(window.hi) +
                     "] cannot decide coaisle membership; it must contain [" + std::to_string(need.lo) + ", " +
                     std::to_string(need.hi) + "]");
  }
  OrthoCertificate total;
  total.checked_lo = 0;
  total.checked_hi = -1;
  const GeneratorSet G = supports::koszul_generators(phi, window);
  for (std::size_t k = 0; k < G.entries.size(); ++k) {
    OrthoCertificate c = orthogonal_all_shifts(G.entries[k].complex, B);
    if (!c.orthogonal) {
      c.witness->generator = k;
      c.witness->generator_label = G.entries[k].label();
      return c;
    }
    if (c.checked_lo <= c.checked_hi) {
      if (total.checked_lo > total.checked_hi) {
        total.checked_lo = c.checked_lo;
        total.checked_hi = c.checked_hi;
      } else {
        total.checked_lo = std::min(total.checked_lo, c.checked_lo);
        total.checked_hi = std::max(total.checked_hi, c.checked_hi);
      }
    }
  }
  return total;
}

OrthoCertificate in_coaisle(const PerfectComplex& B, const Filtration& phi) {
  return in_coaisle(B, phi, adequate_window(B, phi));
}

}  // namespace tstruct::aisle
