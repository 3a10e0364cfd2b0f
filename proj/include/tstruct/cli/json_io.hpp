// JSON encoding of rings, elements, subsets, complexes, filtrations and modules.
//
//   ring:       {"base": "Z" | {"Fp": p}, "invert": "<element>"}   (invert optional)
//   element:    "12", "-3/2", "x^2+1", "(x+1)/x^3"; integers may be bare numbers
//   subset:     "all" | ["2", "3"]
//   complex:    {"ring": ..., "terms": {"<deg>": rank}, "diff": {"<deg>": [[...], ...]}}
//   filtration: {"ring": ..., "head": subset, "steps": [[deg, subset], ...]}
#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "tstruct/complex/perfect_complex.hpp"
#include "tstruct/exactalg/module.hpp"
#include "tstruct/supports/filtration.hpp"

namespace tstruct::cli {

using nlohmann::json;
using complex::PerfectComplex;
using exactalg::Elem;
using exactalg::FgModule;
using exactalg::Ring;
using exactalg::SpecSubset;
using supports::Filtration;

json ring_to_json(const Ring& R);
Ring ring_from_json(const json& j);

json elem_to_json(const Ring& R, const Elem& a);
Elem elem_from_json(const Ring& R, const json& j);

json subset_to_json(const SpecSubset& S);
SpecSubset subset_from_json(const Ring& R, const json& j);

json matrix_to_json(const Ring& R, const exactalg::Matrix& M);

/// `ring` is used when the object carries no "ring" key.
json complex_to_json(const PerfectComplex& C);
PerfectComplex complex_from_json(const json& j, const std::optional<Ring>& ring = std::nullopt);

json filtration_to_json(const Filtration& phi);
Filtration filtration_from_json(const json& j, const std::optional<Ring>& ring = std::nullopt);

json module_to_json(const FgModule& M);
FgModule module_from_json(const Ring& R, const json& j);

/// Throws InputError when the file is missing or not JSON.
json load_json_file(const std::string& path);

}  // namespace tstruct::cli
