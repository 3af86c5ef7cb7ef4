#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ortholat/dimension.hpp"

namespace ortholat {

using Json = nlohmann::json;  // keys are kept sorted, so dumps are stable

struct Violation {
  std::string law;
  std::vector<std::string> witness;
  std::string detail;
};

// The machine-readable outcome of checking one lattice. `violations` holds
// failures of what the input claims to be: a well-formed lattice, modular,
// and (when ortho pairs are declared) orthocomplemented. Classification
// flags that merely come out false (factorial, abelian, ...) are not
// violations; they are findings.
struct Report {
  std::string name;
  std::size_t element_count = 0;

  bool f_lattice = false;
  bool f_modular = false;
  bool f_distributive = false;
  bool f_ortho = false;
  bool f_abelian = false;
  bool f_factorial = false;
  bool f_r_property = false;
  bool f_irreducible = false;

  std::vector<std::string> center;
  std::vector<std::string> minimal;
  std::string type_tag = "unclassified";
  std::string failed_stage;                      // empty when classified
  std::map<std::string, std::string> dimension;  // only when type I_n
  std::optional<std::uint64_t> regular_relations_found;  // else not enumerated
  std::vector<Violation> violations;
  std::vector<std::string> waivers;
};

// Classification pipeline + report assembly for a validated lattice.
// Enumerates regular relations when the element count is at most
// `enumerate_cap` (the partition scan is Bell(n)).
Report make_report(const std::string& name, const Lattice& L,
                   const OrthoLattice* ol, std::size_t enumerate_cap = 10);

Json to_json(const Report& rep);
std::string render_text(const Report& rep);

}  // namespace ortholat
