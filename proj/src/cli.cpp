#include "ortholat/cli.hpp"

#include <sstream>

#include "ortholat/builders.hpp"
#include "ortholat/equivalence.hpp"
#include "ortholat/subspace.hpp"
#include "ortholat/textio.hpp"

namespace ortholat {

namespace {

CmdResult input_error(const Error& e) {
  Json j{{"error", e.what()}, {"error_kind", err_name(e.kind())}};
  return {2, j, std::string("error: ") + e.what() + "\n"};
}

std::vector<std::vector<std::string>> class_names(const Lattice& L,
                                                  const EquivRelation& rel) {
  std::vector<std::vector<std::string>> out;
  for (const IdVec& cls : rel.classes) {
    std::vector<std::string> names;
    for (Id a : cls) names.push_back(L.name(a));
    out.push_back(std::move(names));
  }
  return out;
}

}  // namespace

CmdResult cmd_check(const std::string& path) {
  try {
    return cmd_check_text(read_text_file(path));
  } catch (const Error& e) {
    return input_error(e);
  }
}

CmdResult cmd_check_text(const std::string& text) {
  LatticeSource src;
  try {
    src = parse_lattice_source(text);
  } catch (const Error& e) {
    return input_error(e);
  }

  auto diag = validate_complete_lattice(src.elements, src.covers);
  if (!diag.ok()) {
    Report rep;
    rep.name = src.name;
    rep.element_count = src.elements.size();
    rep.type_tag = "unclassified";
    rep.failed_stage = "lattice";
    for (const LawViolation& v : diag.violations)
      rep.violations.push_back({v.law, v.witness, v.detail});
    return {1, to_json(rep), render_text(rep)};
  }

  Lattice L = Lattice::from_covers(src.elements, src.covers);
  std::optional<OrthoLattice> ol;
  std::optional<Violation> ortho_violation;
  if (!src.ortho.empty()) {
    try {
      ol = OrthoLattice::attach(L, src.ortho);
    } catch (const Error& e) {
      ortho_violation = Violation{"orthocomplement", {}, e.what()};
    }
  }

  Report rep = make_report(src.name, L, ol ? &*ol : nullptr);
  if (ortho_violation) rep.violations.push_back(*ortho_violation);
  int code = rep.violations.empty() ? 0 : 1;
  return {code, to_json(rep), render_text(rep)};
}

CmdResult cmd_gen(const std::string& kind, unsigned m, unsigned atoms) {
  try {
    std::string text;
    if (kind == "pentagon") {
      text = serialize_lattice("pentagon", gen_pentagon());
    } else if (kind == "hexagon") {
      OrthoLattice ol = gen_hexagon();
      text = serialize_lattice("hexagon", ol.base(), &ol);
    } else if (kind == "boolean") {
      OrthoLattice ol = gen_boolean(atoms);
      text = serialize_lattice("boolean_" + std::to_string(atoms), ol.base(),
                               &ol);
    } else if (kind == "lm") {
      OrthoLattice ol = gen_horizontal_sum(m);
      text = serialize_lattice("lm_" + std::to_string(m), ol.base(), &ol);
    } else if (kind == "section3") {
      OrthoLattice ol = gen_section3_ortho();
      text = serialize_lattice("section3", ol.base(), &ol);
    } else {
      fail(Err::ParseError,
           "unknown generator '" + kind +
               "': expected pentagon, hexagon, boolean, lm or section3");
    }
    Json j{{"kind", kind}, {"file", text}};
    return {0, j, text};
  } catch (const Error& e) {
    return input_error(e);
  }
}

CmdResult cmd_decompose(const std::string& path) {
  try {
    return cmd_decompose_text(read_text_file(path));
  } catch (const Error& e) {
    return input_error(e);
  }
}

CmdResult cmd_decompose_text(const std::string& text) {
  try {
    ParsedLattice in = parse_lattice_file(text);
    if (!in.ortho)
      fail(Err::IncompleteInvolution,
           "decomposition needs an orthocomplemented lattice (no ortho lines)");
    CentralDecomposition dec = decompose_central(*in.ortho);
    Json j;
    j["name"] = in.name;
    j["element_count"] = in.lattice.size();
    j["boolean_exponent"] = dec.boolean_exponent;
    j["sum_sizes"] = dec.sums;
    Json atoms = Json::array();
    for (Id a : dec.central_atoms) atoms.push_back(in.lattice.name(a));
    j["central_atoms"] = atoms;

    std::ostringstream out;
    out << "lattice " << in.name << ": " << in.lattice.size() << " elements\n";
    out << "  signature: {0,1}^" << dec.boolean_exponent;
    for (unsigned s : dec.sums) out << " x L_" << s;
    out << "\n  central atoms:";
    for (Id a : dec.central_atoms) out << " " << in.lattice.name(a);
    out << "\n";
    return {0, j, out.str()};
  } catch (const Error& e) {
    return input_error(e);
  }
}

CmdResult cmd_regular(const std::string& path, bool enumerate) {
  try {
    return cmd_regular_text(read_text_file(path), enumerate);
  } catch (const Error& e) {
    return input_error(e);
  }
}

CmdResult cmd_regular_text(const std::string& text, bool enumerate) {
  try {
    ParsedLattice in = parse_lattice_file(text);
    if (!in.ortho)
      fail(Err::IncompleteInvolution,
           "regularity needs an orthocomplemented lattice (no ortho lines)");
    const Lattice& L = in.lattice;
    PerspectivityResult persp = perspectivity(L);
    RegularReport vr = verify_regular(*in.ortho, persp.rel, L.size());

    Json j;
    j["name"] = in.name;
    j["element_count"] = L.size();
    Json p;
    p["classes"] = class_names(L, persp.rel);
    p["closure_needed"] = persp.closure_needed;
    p["regular"] = vr.regular;
    if (!vr.regular) {
      p["failed_axiom"] = vr.failed_axiom;
      p["detail"] = vr.detail;
    }
    j["perspectivity"] = p;

    std::ostringstream out;
    out << "lattice " << in.name << ": " << L.size() << " elements\n";
    out << "  perspectivity classes:";
    for (const auto& cls : class_names(L, persp.rel)) {
      out << " {";
      for (std::size_t i = 0; i < cls.size(); ++i)
        out << (i ? "," : "") << cls[i];
      out << "}";
    }
    out << "\n  regular: " << (vr.regular ? "yes" : "no");
    if (!vr.regular)
      out << " (axiom " << vr.failed_axiom << ": " << vr.detail << ")";
    out << "\n";

    if (enumerate) {
      EnumerationResult er = enumerate_regular_relations(*in.ortho);
      Json en;
      en["partitions_scanned"] = er.partitions_scanned;
      en["regular_found"] = er.regular.size();
      Json rels = Json::array();
      for (const EquivRelation& rel : er.regular)
        rels.push_back(class_names(L, rel));
      en["relations"] = rels;
      bool match = er.regular.size() == 1 && er.regular[0] == persp.rel;
      en["matches_perspectivity"] = match;
      j["enumeration"] = en;
      out << "  scanned " << er.partitions_scanned << " partitions, "
           << er.regular.size() << " regular";
      if (match) out << "; the one regular relation is perspectivity";
      out << "\n";
    }
    return {0, j, out.str()};
  } catch (const Error& e) {
    return input_error(e);
  }
}

CmdResult cmd_subspace(unsigned dim, std::uint64_t trials, std::uint64_t seed,
                       const std::string& suite) {
  SuiteReport rep;
  try {
    rep = run_property_suite(dim, trials, seed, suite);
  } catch (const Error& e) {
    return input_error(e);
  }
  Json j;
  j["ambient"] = rep.ambient;
  j["trials"] = rep.trials;
  j["seed"] = rep.seed;
  j["suite"] = rep.suite;
  j["all_pass"] = rep.all_pass;
  Json checks = Json::array();
  for (const SuiteCheck& c : rep.checks)
    checks.push_back(Json{{"law", c.law},
                          {"pass", c.pass},
                          {"fail", c.fail},
                          {"counterexample", c.counterexample}});
  j["checks"] = checks;
  j["notes"] = rep.notes;

  std::ostringstream out;
  out << "Q^" << rep.ambient << ", " << rep.trials << " trials, seed "
       << rep.seed << ", suite " << rep.suite << "\n";
  for (const SuiteCheck& c : rep.checks) {
    out << "  " << c.law << ": " << c.pass << "/" << (c.pass + c.fail)
        << " pass\n";
    for (const std::string& s : c.counterexample) out << "    " << s << "\n";
  }
  out << (rep.all_pass ? "all laws hold\n" : "FAILURES above\n");
  return {rep.all_pass ? 0 : 1, j, out.str()};
}

}  // namespace ortholat
