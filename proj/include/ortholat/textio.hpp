#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ortholat/lattice.hpp"
#include "ortholat/ortho.hpp"

namespace ortholat {

// Raw content of a lattice file, before any order theory happens.
//
// Grammar (line oriented, `#` starts a comment):
//   lattice <name>
//   elem <id>...           one or more, ids are whitespace-free tokens
//   cover <a> <b>          a is covered by b
//   ortho <a> <b>          involution pair, stated once; symmetric closure
//   end
struct LatticeSource {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<std::pair<std::string, std::string>> ortho;
};

// Grammar errors only: ParseError (with the line number in the message),
// DuplicatePair for restated elements / covers / ortho pairs,
// IncompleteInvolution for conflicting ortho assignments.
LatticeSource parse_lattice_source(const std::string& text);

struct ParsedLattice {
  std::string name;
  Lattice lattice;
  std::optional<OrthoLattice> ortho;
};

// Builds and validates; throws the usual construction errors on top of the
// grammar ones.
ParsedLattice build_lattice(const LatticeSource& src);
ParsedLattice parse_lattice_file(const std::string& text);

// Inverse of parsing: parse(serialize(x)) reproduces name, element order,
// relation and involution exactly.
std::string serialize_lattice(const std::string& name, const Lattice& L,
                              const OrthoLattice* ol = nullptr);

std::string read_text_file(const std::string& path);

}  // namespace ortholat
