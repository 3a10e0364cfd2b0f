#include "tstruct/cli/run.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "tstruct/aisle/harness.hpp"
#include "tstruct/aisle/roundtrip.hpp"
#include "tstruct/aisle/tdecompose.hpp"
#include "tstruct/cli/json_io.hpp"
#include "tstruct/complex/cohomology.hpp"
#include "tstruct/zariski/zariski.hpp"

namespace tstruct::cli {

namespace {

struct Report {
  int code = kOk;
  std::string text;
  json data;
};

struct Options {
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 0;
  std::size_t cases = 100;
  std::string window;
  int cap = 64;
  std::vector<std::string> files;
  std::vector<std::string> probes;
  std::string dir;
  std::string invert;
  std::string support;
  std::optional<int> bound;
  std::optional<int> degree;
  std::size_t max_rank = 3;
  int amplitude = 4;
};

supports::Window parse_window(const std::string& s) {
  const auto colon = s.find(':', 1);
  try {
    if (colon != std::string::npos) {
      std::size_t a = 0, b = 0;
      const int lo = std::stoi(s.substr(0, colon), &a), hi = std::stoi(s.substr(colon + 1), &b);
      if (a == colon && b == s.size() - colon - 1 && lo <= hi) return {lo, hi};
    }
  } catch (const std::exception&) {
  }
  throw InputError("--window expects lo:hi with lo <= hi, got '" + s + "'");
}

PerfectComplex load_complex(const std::string& path) { return complex_from_json(load_json_file(path)); }

Filtration load_filtration(const std::string& path) {
  Filtration phi = filtration_from_json(load_json_file(path));
  if (auto v = supports::validate_filtration(phi); !v) throw InputError(path + ": invalid filtration: " + v.message);
  return phi;
}

void same_ring(const Ring& a, const Ring& b) {
  if (!(a == b)) throw RingMismatch("ring mismatch: " + a.describe() + " vs " + b.describe());
}

std::size_t need(const Options& o, std::size_t n, const char* cmd) {
  if (o.files.size() != n) {
    throw InputError(std::string(cmd) + " expects " + std::to_string(n) + " file argument(s), got " +
                     std::to_string(o.files.size()));
  }
  return n;
}

supports::Window default_window(const Filtration& phi) {
  const auto last = phi.last_nonempty();
  if (!last) return {0, 0};
  const auto first = phi.first_change();
  return {first ? std::min(*first - 1, *last) : *last, *last};
}

Report cmd_validate(const Options& o) {
  need(o, 1, "validate");
  const json j = load_json_file(o.files[0]);
  Report r;
  if (j.is_object() && j.contains("terms")) {
    const PerfectComplex C = complex_from_json(j);
    const complex::Verdict v = complex::validate(C);
    r.data = {{"kind", "complex"}, {"valid", v.ok}, {"describe", complex::describe(C)}};
    if (v.ok) {
      r.text = "valid complex " + complex::describe(C);
    } else {
      r.code = kFalse;
      r.text = "invalid complex: " + v.message;
      r.data["message"] = v.message;
      if (v.degree) r.data["degree"] = *v.degree;
      if (v.entry) r.data["entry"] = {v.entry->first, v.entry->second};
    }
  } else if (j.is_object() && j.contains("head")) {
    const Filtration phi = filtration_from_json(j);
    const complex::Verdict v = supports::validate_filtration(phi);
    r.data = {{"kind", "filtration"}, {"valid", v.ok}, {"filtration", phi.to_string()}};
    if (v.ok) {
      r.text = "valid filtration " + phi.to_string();
    } else {
      r.code = kFalse;
      r.text = "invalid filtration: " + v.message;
      r.data["message"] = v.message;
      if (v.degree) r.data["degree"] = *v.degree;
    }
  } else {
    throw InputError(o.files[0] + ": neither a complex (\"terms\") nor a filtration (\"head\")");
  }
  return r;
}

Report cmd_cohomology(const Options& o) {
  need(o, 1, "cohomology");
  const PerfectComplex C = load_complex(o.files[0]);
  Report r;
  std::ostringstream t;
  json H = json::object();
  if (o.degree) {
    const FgModule M = complex::cohomology(C, *o.degree);
    H[std::to_string(*o.degree)] = module_to_json(M);
    t << "H^" << *o.degree << " = " << M.to_string() << "\n";
  } else {
    const auto all = complex::cohomology_all(C);
    for (const auto& [n, M] : all) {
      H[std::to_string(n)] = module_to_json(M);
      t << "H^" << n << " = " << M.to_string() << "\n";
    }
    if (all.empty()) t << "acyclic\n";
  }
  r.text = t.str();
  r.data = {{"ring", C.ring().describe()}, {"cohomology", H}};
  return r;
}

Report cmd_support(const Options& o) {
  need(o, 1, "support");
  const PerfectComplex C = load_complex(o.files[0]);
  Report r;
  std::ostringstream t;
  json geq = json::object();
  SpecSubset total = SpecSubset::empty(C.ring());
  if (!C.empty()) {
    total = complex::supph_geq(C, C.lo());
    for (int n = C.lo(); n <= C.hi(); ++n) {
      const SpecSubset S = complex::supph_geq(C, n);
      geq[std::to_string(n)] = subset_to_json(S);
      t << "Supph>=" << n << " = " << S.to_string() << "\n";
    }
  }
  t << "Supph = " << total.to_string() << "\n";
  r.text = t.str();
  r.data = {{"supph", subset_to_json(total)}, {"supph_geq", geq}};
  return r;
}

Report cmd_membership(const Options& o) {
  need(o, 2, "membership");
  const PerfectComplex E = load_complex(o.files[0]);
  const Filtration phi = load_filtration(o.files[1]);
  same_ring(E.ring(), phi.ring());
  const supports::AisleResult a = supports::in_aisle(E, phi);
  Report r;
  r.data = {{"member", a.member}, {"violation", nullptr}};
  if (a.member) {
    r.text = "in aisle: yes";
  } else {
    const std::string v = a.violation->to_string(E.ring());
    r.code = kFalse;
    r.text = "in aisle: no; first violation " + v;
    r.data["violation"] = v;
  }
  return r;
}

Report cmd_coaisle(const Options& o) {
  need(o, 2, "coaisle");
  const PerfectComplex B = load_complex(o.files[0]);
  const Filtration phi = load_filtration(o.files[1]);
  same_ring(B.ring(), phi.ring());
  const aisle::OrthoCertificate c =
      o.window.empty() ? aisle::in_coaisle(B, phi) : aisle::in_coaisle(B, phi, parse_window(o.window));
  Report r;
  r.data = {{"orthogonal", c.orthogonal}, {"certificate", c.to_string()}, {"checked", {c.checked_lo, c.checked_hi}}};
  if (c.orthogonal) {
    r.text = "in coaisle: yes";
  } else {
    r.code = kFalse;
    r.text = "in coaisle: no; witness " + c.to_string() + " with Hom group " + c.witness->group.to_string();
    r.data["group"] = module_to_json(c.witness->group);
  }
  return r;
}

Report cmd_tdecomp(const Options& o) {
  need(o, 2, "tdecomp");
  const PerfectComplex A = load_complex(o.files[0]);
  const Filtration phi = load_filtration(o.files[1]);
  same_ring(A.ring(), phi.ring());
  const aisle::DecompositionReport d = aisle::t_decompose(A, phi, o.cap);
  Report r;
  r.code = d.verified ? kOk : kFalse;
  std::ostringstream t;
  t << "L = " << complex::describe(d.triangle.first) << "\n";
  t << "N = " << complex::describe(d.triangle.third) << "\n";
  t << "iterations " << d.iterations << (d.classical ? " (soft truncation)" : "") << "\n";
  t << "aisle " << (d.aisle_check.member ? "ok" : "FAILED") << ", coaisle " << (d.coaisle_check.orthogonal ? "ok" : "FAILED")
    << ", cone " << (d.cone_identity ? "ok" : "FAILED") << ", Hom(L,N)=0 " << (d.hom_vanishes ? "ok" : "FAILED") << "\n";
  if (d.cap_exceeded) t << "cap of " << o.cap << " iterations exceeded\n";
  t << (d.verified ? "verified" : "NOT verified: " + d.failure);
  r.text = t.str();
  r.data = {{"verified", d.verified},
            {"cap_exceeded", d.cap_exceeded},
            {"iterations", d.iterations},
            {"classical", d.classical},
            {"failure", d.failure},
            {"checks",
             {{"aisle", d.aisle_check.member},
              {"coaisle", d.coaisle_check.orthogonal},
              {"cone_identity", d.cone_identity},
              {"hom_vanishes", d.hom_vanishes}}},
            {"L", complex_to_json(d.triangle.first)},
            {"N", complex_to_json(d.triangle.third)}};
  return r;
}

Report cmd_gsupp(const Options& o) {
  if (o.files.empty()) throw InputError("gsupp expects at least one complex file");
  std::vector<PerfectComplex> family;
  for (const auto& f : o.files) {
    family.push_back(load_complex(f));
    same_ring(family.front().ring(), family.back().ring());
  }
  const Filtration phi = supports::graded_support(family.front().ring(), family);
  return {kOk, phi.to_string(), filtration_to_json(phi)};
}

Report cmd_generators(const Options& o) {
  need(o, 1, "generators");
  const Filtration phi = load_filtration(o.files[0]);
  const supports::Window w = o.window.empty() ? default_window(phi) : parse_window(o.window);
  const supports::GeneratorSet G = supports::koszul_generators(phi, w);
  Report r;
  std::ostringstream t;
  json labels = json::array();
  for (const auto& e : G.entries) {
    labels.push_back(e.label());
    t << e.label() << "\n";
  }
  for (const auto& w : G.warnings) t << "warning: " << w << "\n";
  if (G.entries.empty()) t << "no generators\n";
  r.text = t.str();
  r.data = {{"window", {w.lo, w.hi}}, {"generators", labels}, {"warnings", G.warnings}};
  return r;
}

Report cmd_roundtrip(const Options& o) {
  Report r;
  std::ostringstream t;
  if (o.dir == "phi-psi") {
    need(o, 1, "roundtrip --dir phi-psi");
    const Filtration phi = load_filtration(o.files[0]);
    const supports::Window w = o.window.empty() ? default_window(phi) : parse_window(o.window);
    const aisle::PhiPsiReport p = aisle::roundtrip_phi_psi(phi, w);
    json rows = json::array();
    t << "i | phi(i) | recovered\n";
    for (const auto& row : p.rows) {
      t << row.degree << " | " << row.expected.to_string() << " | " << row.recovered.to_string()
        << (row.expected == row.recovered ? "" : "  MISMATCH") << "\n";
      rows.push_back({{"degree", row.degree},
                      {"expected", subset_to_json(row.expected)},
                      {"recovered", subset_to_json(row.recovered)}});
    }
    t << (p.equal ? "equal on the window" : "NOT equal");
    r.code = p.equal ? kOk : kFalse;
    r.data = {{"direction", "phi-psi"}, {"window", {w.lo, w.hi}}, {"equal", p.equal}, {"rows", rows},
              {"generators", p.generators}};
  } else if (o.dir == "psi-phi") {
    if (o.files.empty()) throw InputError("roundtrip --dir psi-phi expects generator complex files");
    std::vector<PerfectComplex> G, probes;
    for (const auto& f : o.files) G.push_back(load_complex(f));
    for (const auto& f : o.probes) probes.push_back(load_complex(f));
    const Ring R = G.front().ring();
    for (const auto& C : G) same_ring(R, C.ring());
    for (const auto& C : probes) same_ring(R, C.ring());
    const aisle::PsiPhiReport p = aisle::roundtrip_psi_phi(R, G, probes);
    json rows = json::array();
    t << "phi = " << p.phi.to_string() << "\n";
    for (std::size_t k = 0; k < p.probes.size(); ++k) {
      const auto& q = p.probes[k];
      t << o.probes[k] << ": dominated " << (q.dominated ? "yes" : "no") << ", aisle " << (q.in_aisle ? "yes" : "no")
        << ", coaisle " << (q.in_coaisle ? "yes" : "no") << (q.note.empty() ? "" : " (" + q.note + ")") << "\n";
      rows.push_back({{"probe", o.probes[k]},
                      {"dominated", q.dominated},
                      {"in_aisle", q.in_aisle},
                      {"in_coaisle", q.in_coaisle},
                      {"acyclic", q.acyclic},
                      {"violation", q.violation},
                      {"note", q.note}});
    }
    t << (p.consistent ? "consistent" : "INCONSISTENT");
    r.code = p.consistent ? kOk : kFalse;
    r.data = {{"direction", "psi-phi"}, {"phi", filtration_to_json(p.phi)}, {"consistent", p.consistent}, {"probes", rows}};
  } else {
    throw InputError("--dir must be phi-psi or psi-phi");
  }
  r.text = t.str();
  return r;
}

Report cmd_restrict(const Options& o) {
  need(o, 1, "restrict");
  if (o.invert.empty()) throw InputError("restrict needs --invert f");
  const PerfectComplex E = load_complex(o.files[0]);
  const zariski::OpenImmersion j(E.ring(), E.ring().parse(o.invert));
  const PerfectComplex U = zariski::restrict(E, j);
  return {kOk, "over " + U.ring().describe() + ": " + complex::describe(U), complex_to_json(U)};
}

Report cmd_extend(const Options& o) {
  need(o, 1, "extend");
  const PerfectComplex F = load_complex(o.files[0]);
  const Ring& L = F.ring();
  if (!L.is_localized()) throw InputError("extend expects a complex over a localized ring");
  const Ring base = L.base_ring();
  const zariski::OpenImmersion j(base, base.from_base(L.inverted()));
  Report r;
  if (o.support.empty()) {
    const zariski::Extension e = zariski::extend_perfect(F, j);
    r.text = "over " + base.describe() + ": " + complex::describe(e.complex) + "\n" + e.note;
    r.data = {{"complex", complex_to_json(e.complex)}, {"note", e.note}};
  } else {
    if (!o.bound) throw InputError("extend --support needs --bound N");
    json pts = json::array();
    if (o.support == "all") {
      pts = "all";
    } else {
      std::stringstream ss(o.support);
      for (std::string item; std::getline(ss, item, ',');) pts.push_back(item);
    }
    const SpecSubset Z = subset_from_json(base, pts);
    const PerfectComplex E = zariski::extend_with_support(F, Z, *o.bound, j);
    r.text = "over " + base.describe() + ": " + complex::describe(E);
    r.data = {{"complex", complex_to_json(E)}, {"support", subset_to_json(Z)}, {"bound", *o.bound}};
  }
  return r;
}

Report cmd_harness(const Options& o) {
  aisle::HarnessBounds b;
  b.max_rank = o.max_rank;
  b.amplitude = o.amplitude;
  const aisle::HarnessReport h = aisle::property_harness(o.seed, o.cases, b);
  json props = json::array(), fails = json::array();
  for (const auto& t : h.tallies) props.push_back({{"name", t.name}, {"cases", t.cases}, {"failures", t.failures}});
  for (const auto& f : h.failures) {
    fails.push_back({{"property", f.property},
                     {"case", f.case_index},
                     {"size", f.size},
                     {"shrunk_size", f.shrunk_size},
                     {"counterexample", f.counterexample}});
  }
  std::string text = h.to_text();
  if (!text.empty() && text.back() == '\n') text.pop_back();
  return {h.ok() ? kOk : kFalse, text,
          {{"seed", h.seed}, {"cases", h.cases}, {"properties", props}, {"failures", fails}, {"ok", h.ok()}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tensor t-structures over PIDs"};
  app.name("tstruct");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", o.out, "write the report to this file");
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--cases", o.cases, "cases per property");
  app.add_option("--window", o.window, "levels lo:hi");
  app.add_option("--cap", o.cap, "t-decomposition iteration cap");

  using Handler = Report (*)(const Options&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("files", o.files, "input files");
    commands.emplace_back(sub, h);
    return sub;
  };
  add("validate", "check a complex or filtration file", cmd_validate);
  add("cohomology", "cohomology modules of a complex", cmd_cohomology)->add_option("--degree", o.degree);
  add("support", "cohomological supports of a complex", cmd_support);
  add("membership", "aisle membership of COMPLEX for FILTRATION", cmd_membership);
  add("coaisle", "coaisle membership of COMPLEX for FILTRATION", cmd_coaisle);
  add("tdecomp", "verified t-decomposition of COMPLEX for FILTRATION", cmd_tdecomp);
  add("gsupp", "graded support of a family of complexes", cmd_gsupp);
  add("generators", "Koszul generators of a filtration", cmd_generators);
  CLI::App* rt = add("roundtrip", "phi-psi or psi-phi round trip", cmd_roundtrip);
  rt->add_option("--dir", o.dir, "phi-psi or psi-phi")->required();
  rt->add_option("--probe", o.probes, "probe complexes for psi-phi");
  add("restrict", "restrict a complex to D(f)", cmd_restrict)->add_option("--invert", o.invert, "f");
  CLI::App* ex = add("extend", "extend a complex over R[1/f] to R", cmd_extend);
  ex->add_option("--support", o.support, "comma separated primes of Z");
  ex->add_option("--bound", o.bound, "degree bound N");
  CLI::App* hs = add("harness", "run the property harness", cmd_harness);
  hs->add_option("--max-rank", o.max_rank);
  hs->add_option("--amplitude", o.amplitude);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    for (const auto& a : args) {
      if (a.empty() || a[0] == '-') continue;
      if (!app.get_subcommand_no_throw(a)) {
        err << "error: unknown command '" << a << "'\n";
        return kInputError;
      }
      break;
    }
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  Report report;
  try {
    for (auto& [sub, handler] : commands) {
      if (sub->parsed()) report = handler(o);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInputError;
  }

  std::ostringstream body;
  if (o.format == "json") {
    body << report.data.dump(2) << "\n";
  } else {
    body << report.text;
    if (!report.text.empty() && report.text.back() != '\n') body << "\n";
    body << "--- json\n" << report.data.dump() << "\n";
  }
  if (o.out.empty()) {
    out << body.str();
  } else {
    std::ofstream f(o.out);
    if (!f) {
      err << "error: cannot write " << o.out << "\n";
      return kInputError;
    }
    f << body.str();
  }
  return report.code;
}

}  // namespace tstruct::cli
