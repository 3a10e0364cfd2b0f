#include "tstruct/cli/json_io.hpp"

#include <fstream>

#include "tstruct/exactalg/factor.hpp"

namespace tstruct::cli {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InputError(what); }

const json& field(const json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) bad(std::string(where) + ": missing \"" + key + "\"");
  return j.at(key);
}

Ring ring_of(const json& j, const std::optional<Ring>& ring, const char* where) {
  if (j.is_object() && j.contains("ring")) return ring_from_json(j.at("ring"));
  if (ring) return *ring;
  bad(std::string(where) + ": missing \"ring\"");
}

int degree_key(const std::string& key) {
  std::size_t used = 0;
  int d = 0;
  try {
    d = std::stoi(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != key.size() || key.empty()) bad("degree key '" + key + "' is not an integer");
  return d;
}

}  // namespace

json ring_to_json(const Ring& R) {
  json j;
  if (R.kind() == exactalg::BaseKind::Integers) {
    j["base"] = "Z";
  } else {
    j["base"] = {{"Fp", R.characteristic()}};
  }
  if (R.is_localized()) j["invert"] = R.base_to_string(R.inverted());
  return j;
}

Ring ring_from_json(const json& j) {
  const json& base = field(j, "base", "ring");
  Ring R;
  if (base.is_string() && base.get<std::string>() == "Z") {
    R = Ring::integers();
  } else if (base.is_object() && base.contains("Fp") && base.at("Fp").is_number_unsigned()) {
    R = Ring::poly_fp(base.at("Fp").get<std::uint32_t>());
  } else {
    bad("ring: base must be \"Z\" or {\"Fp\": p}");
  }
  if (j.contains("invert")) R = R.localized_at(elem_from_json(R, j.at("invert")));
  return R;
}

json elem_to_json(const Ring& R, const Elem& a) { return R.to_string(a); }

Elem elem_from_json(const Ring& R, const json& j) {
  if (j.is_number_integer()) return R.from_int(j.get<long>());
  if (j.is_string()) return R.parse(j.get<std::string>());
  bad("element must be a string or an integer, got " + j.dump());
}

json subset_to_json(const SpecSubset& S) {
  if (S.is_all()) return "all";
  json out = json::array();
  for (const auto& p : S.points()) out.push_back(S.ring().to_string(p.generator));
  return out;
}

SpecSubset subset_from_json(const Ring& R, const json& j) {
  if (j.is_string() && j.get<std::string>() == "all") return SpecSubset::all(R);
  if (!j.is_array()) bad("subset must be \"all\" or a list of primes, got " + j.dump());
  std::vector<exactalg::PrimePoint> pts;
  for (const auto& e : j) pts.push_back(exactalg::make_prime_point(R, elem_from_json(R, e)));
  return SpecSubset::of(R, pts);
}

json matrix_to_json(const Ring& R, const exactalg::Matrix& M) {
  json rows = json::array();
  for (std::size_t r = 0; r < M.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < M.cols(); ++c) row.push_back(elem_to_json(R, M.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json complex_to_json(const PerfectComplex& C) {
  const Ring& R = C.ring();
  json j;
  j["ring"] = ring_to_json(R);
  j["terms"] = json::object();
  j["diff"] = json::object();
  const PerfectComplex T = C.trimmed();
  if (T.empty()) return j;
  for (int n = T.lo(); n <= T.hi(); ++n) {
    j["terms"][std::to_string(n)] = T.rank(n);
    if (n < T.hi() && T.rank(n) > 0 && T.rank(n + 1) > 0) j["diff"][std::to_string(n)] = matrix_to_json(R, T.diff(n));
  }
  return j;
}

PerfectComplex complex_from_json(const json& j, const std::optional<Ring>& ring) {
  const Ring R = ring_of(j, ring, "complex");
  const json& terms = field(j, "terms", "complex");
  if (!terms.is_object()) bad("complex: \"terms\" must be an object");
  std::map<int, std::size_t> ranks;
  for (const auto& [key, v] : terms.items()) {
    if (!v.is_number_unsigned()) bad("complex: rank of degree " + key + " must be a nonnegative integer");
    ranks[degree_key(key)] = v.get<std::size_t>();
  }
  std::map<int, exactalg::Matrix> diffs;
  if (j.contains("diff")) {
    if (!j.at("diff").is_object()) bad("complex: \"diff\" must be an object");
    for (const auto& [key, rows] : j.at("diff").items()) {
      const int n = degree_key(key);
      const std::size_t r = ranks.count(n + 1) ? ranks[n + 1] : 0, c = ranks.count(n) ? ranks[n] : 0;
      if (!rows.is_array() || rows.size() != r) {
        bad("complex: d^" + key + " must have " + std::to_string(r) + " rows");
      }
      exactalg::Matrix M = exactalg::Matrix::zero(R, r, c);
      for (std::size_t a = 0; a < r; ++a) {
        if (!rows[a].is_array() || rows[a].size() != c) {
          bad("complex: row " + std::to_string(a) + " of d^" + key + " must have " + std::to_string(c) + " entries");
        }
        for (std::size_t b = 0; b < c; ++b) M.at(a, b) = elem_from_json(R, rows[a][b]);
      }
      diffs[n] = std::move(M);
    }
  }
  if (ranks.empty()) {
    if (!diffs.empty()) bad("complex: differentials without terms");
    return PerfectComplex(R);
  }
  const int lo = ranks.begin()->first, hi = ranks.rbegin()->first;
  for (const auto& [n, M] : diffs) {
    if (n < lo || n >= hi) bad("complex: d^" + std::to_string(n) + " lies outside the terms");
  }
  std::vector<std::size_t> rank_list;
  std::vector<exactalg::Matrix> diff_list;
  for (int n = lo; n <= hi; ++n) {
    rank_list.push_back(ranks.count(n) ? ranks[n] : 0);
    if (n == hi) break;
    const std::size_t r = ranks.count(n + 1) ? ranks[n + 1] : 0, c = ranks.count(n) ? ranks[n] : 0;
    diff_list.push_back(diffs.count(n) ? diffs[n] : exactalg::Matrix::zero(R, r, c));
  }
  return PerfectComplex(R, lo, std::move(rank_list), std::move(diff_list));
}

json filtration_to_json(const Filtration& phi) {
  json j;
  j["ring"] = ring_to_json(phi.ring());
  j["head"] = subset_to_json(phi.head());
  j["steps"] = json::array();
  for (const auto& [d, S] : phi.steps()) j["steps"].push_back(json::array({d, subset_to_json(S)}));
  return j;
}

Filtration filtration_from_json(const json& j, const std::optional<Ring>& ring) {
  const Ring R = ring_of(j, ring, "filtration");
  const SpecSubset head = subset_from_json(R, field(j, "head", "filtration"));
  std::vector<std::pair<int, SpecSubset>> steps;
  if (j.contains("steps")) {
    if (!j.at("steps").is_array()) bad("filtration: \"steps\" must be a list");
    for (const auto& s : j.at("steps")) {
      if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer()) {
        bad("filtration: each step is [degree, subset], got " + s.dump());
      }
      steps.emplace_back(s[0].get<int>(), subset_from_json(R, s[1]));
    }
  }
  return Filtration(R, head, std::move(steps));
}

json module_to_json(const FgModule& M) {
  json t = json::array();
  for (const auto& d : M.torsion) t.push_back(elem_to_json(M.ring, d));
  return {{"free_rank", M.free_rank}, {"torsion", t}};
}

FgModule module_from_json(const Ring& R, const json& j) {
  FgModule M{R, 0, {}};
  const json& f = field(j, "free_rank", "module");
  if (!f.is_number_unsigned()) bad("module: free_rank must be a nonnegative integer");
  M.free_rank = f.get<std::size_t>();
  for (const auto& d : field(j, "torsion", "module")) M.torsion.push_back(elem_from_json(R, d));
  return M;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

}  // namespace tstruct::cli
