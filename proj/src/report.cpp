#include "ortholat/report.hpp"

#include <sstream>

#include "ortholat/textio.hpp"

namespace ortholat {

namespace {

std::vector<std::string> names_of(const Lattice& L, const IdVec& ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (Id a : ids) out.push_back(L.name(a));
  return out;
}

}  // namespace

Report make_report(const std::string& name, const Lattice& L,
                   const OrthoLattice* ol, std::size_t enumerate_cap) {
  Report rep;
  rep.name = name;
  rep.element_count = L.size();
  rep.f_lattice = true;

  TypeReport tr = classify_type(L, ol);
  rep.f_modular = tr.modular.holds;
  rep.f_distributive = tr.distributive.holds;
  rep.f_ortho = tr.has_ortho;
  rep.f_abelian = tr.abelian.value_or(false);
  rep.f_factorial = tr.factorial.value_or(false);
  rep.f_r_property =
      tr.rprop && tr.rprop->status == RPropertyReport::Status::holds;
  rep.f_irreducible = tr.irreducible.value_or(false);
  if (tr.center_ids) rep.center = names_of(L, *tr.center_ids);
  if (tr.minimal_ids) rep.minimal = names_of(L, *tr.minimal_ids);
  rep.type_tag = tr.tag;
  rep.failed_stage = tr.failed_stage;
  rep.waivers = tr.waivers;

  if (!tr.modular.holds) {
    const TripleLaw& w = tr.modular;
    std::string detail = "(" + L.name(w.l) + "∨" + L.name(w.lp) + ")∧" +
                         L.name(w.lpp) + " = " + L.name(w.lhs) + " ≠ " +
                         L.name(w.rhs) + " = " + L.name(w.l) + "∨(" +
                         L.name(w.lp) + "∧" + L.name(w.lpp) + ")";
    rep.violations.push_back(
        {"modular", {L.name(w.l), L.name(w.lp), L.name(w.lpp)}, detail});
  }

  if (tr.dim) {
    for (Id a = 0; a < L.size(); ++a)
      rep.dimension[L.name(a)] = rat_str(tr.dim->value[a]);
  }

  if (ol && L.size() <= enumerate_cap) {
    auto er = enumerate_regular_relations(*ol, enumerate_cap);
    rep.regular_relations_found = er.regular.size();
  }
  return rep;
}

Json to_json(const Report& rep) {
  Json j;
  j["name"] = rep.name;
  j["element_count"] = rep.element_count;
  j["flags"] = Json{{"lattice", rep.f_lattice},
                    {"modular", rep.f_modular},
                    {"distributive", rep.f_distributive},
                    {"ortho", rep.f_ortho},
                    {"abelian", rep.f_abelian},
                    {"factorial", rep.f_factorial},
                    {"r_property", rep.f_r_property},
                    {"irreducible", rep.f_irreducible}};
  j["center"] = rep.center;
  j["minimal"] = rep.minimal;
  j["type_tag"] = rep.type_tag;
  if (!rep.failed_stage.empty()) j["failed_stage"] = rep.failed_stage;
  if (!rep.dimension.empty()) j["dimension"] = rep.dimension;
  if (rep.regular_relations_found)
    j["regular_relations_found"] = *rep.regular_relations_found;
  else
    j["regular_relations_found"] = "not-enumerated";
  j["violations"] = Json::array();
  for (const Violation& v : rep.violations)
    j["violations"].push_back(
        Json{{"law", v.law}, {"witness", v.witness}, {"detail", v.detail}});
  j["waivers"] = rep.waivers;
  return j;
}

std::string render_text(const Report& rep) {
  std::ostringstream out;
  out << "lattice " << rep.name << ": " << rep.element_count << " elements\n";
  auto flag = [&](const char* k, bool v) {
    out << "  " << k << ": " << (v ? "yes" : "no") << "\n";
  };
  flag("lattice", rep.f_lattice);
  flag("modular", rep.f_modular);
  flag("distributive", rep.f_distributive);
  flag("ortho", rep.f_ortho);
  flag("abelian", rep.f_abelian);
  flag("factorial", rep.f_factorial);
  flag("r-property", rep.f_r_property);
  flag("irreducible", rep.f_irreducible);
  auto list = [&](const char* k, const std::vector<std::string>& xs) {
    out << "  " << k << ":";
    for (const auto& x : xs) out << " " << x;
    out << "\n";
  };
  list("center", rep.center);
  list("minimal", rep.minimal);
  out << "  type: " << rep.type_tag;
  if (!rep.failed_stage.empty()) out << " (stopped at " << rep.failed_stage << ")";
  out << "\n";
  if (!rep.dimension.empty()) {
    out << "  dimension:";
    for (const auto& [k, v] : rep.dimension) out << " " << k << "=" << v;
    out << "\n";
  }
  if (rep.regular_relations_found)
    out << "  regular relations: " << *rep.regular_relations_found << "\n";
  else
    out << "  regular relations: not enumerated\n";
  for (const Violation& v : rep.violations) {
    out << "  violation [" << v.law << "]";
    if (!v.witness.empty()) {
      out << " at (";
      for (std::size_t i = 0; i < v.witness.size(); ++i)
        out << (i ? ", " : "") << v.witness[i];
      out << ")";
    }
    if (!v.detail.empty()) out << ": " << v.detail;
    out << "\n";
  }
  for (const auto& w : rep.waivers) out << "  waiver: " << w << "\n";
  return out.str();
}

}  // namespace ortholat
