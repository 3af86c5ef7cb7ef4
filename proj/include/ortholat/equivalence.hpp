#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ortholat/ortho.hpp"

namespace ortholat {

// Partition of the element set. class_of[e] is the class index; classes
// are indexed by their smallest member, listed in ascending order.
struct EquivRelation {
  IdVec class_of;
  std::vector<IdVec> classes;

  static EquivRelation from_class_of(IdVec class_map);
  bool same(Id a, Id b) const { return class_of[a] == class_of[b]; }
  bool operator==(const EquivRelation&) const = default;
};

struct PerspectivityResult {
  EquivRelation rel;
  // The raw common-inverse relation is already transitive on every
  // irreducible lattice seen so far; when it is not, the transitive
  // closure is taken and this flag records that it mattered.
  bool closure_needed = false;
};

// a ∼ b iff some x is a common inverse: a ∨ x = b ∨ x = 1, a ∧ x = b ∧ x = 0.
PerspectivityResult perspectivity(const Lattice& L);

// ∃ x ≤ b with x ∼ a. The strict form demands x < b.
bool sim_dominates(const Lattice& L, const EquivRelation& rel, Id a, Id b);
bool sim_dominates_strict(const Lattice& L, const EquivRelation& rel, Id a, Id b);

// Axioms of a regular equivalence relation, checked in order:
//   1  the class of 0 is {0}
//   2  b ≥ a and b ≼ a imply b ∼ a
//   3  exactly one of a ∼ b, a ≺ b, b ≺ a   (≺ strict domination)
//   4  additivity: pairwise-equivalent orthogonal families of equal size
//      (up to family_cap, plus every greedily maximal family) have
//      equivalent joins
//   5  classes are antichains
struct RegularReport {
  bool regular = true;
  int failed_axiom = 0;               // 1..5 when regular == false
  std::array<Id, 4> witness{};        // elements involved, padded with 0
  std::string detail;
};

RegularReport verify_regular(const OrthoLattice& ol, const EquivRelation& rel,
                             std::size_t family_cap = 4);

struct EnumerationResult {
  std::vector<EquivRelation> regular;
  std::uint64_t partitions_scanned = 0;
};

// Scans every partition of the element set (restricted growth strings)
// and keeps those passing verify_regular with an uncapped family check.
// Rejects lattices above size_cap: the scan is Bell(n).
EnumerationResult enumerate_regular_relations(const OrthoLattice& ol,
                                              std::size_t size_cap = 12);

// Class division: repeatedly removes an A-class element from below a
// representative of B, counting the steps. Returns the count and the
// class of the remainder, after asserting the result does not depend on
// the representative or on the greedy order.
struct DivideResult {
  std::uint64_t quotient = 0;
  Id remainder_class = 0;  // class index into rel.classes
};

DivideResult class_divide(const OrthoLattice& ol, const EquivRelation& rel,
                          Id b_class, Id a_class);

}  // namespace ortholat
