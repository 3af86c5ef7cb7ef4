#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ortholat/equivalence.hpp"
#include "ortholat/modularity.hpp"
#include "ortholat/ortho.hpp"
#include "ortholat/rational.hpp"

namespace ortholat {

// Minimal elements: nonzero l whose meet with anything is 0 or l. On a
// finite lattice these are exactly the covers of bottom, and tests check
// both readings against each other.
IdVec minimal_elements(const Lattice& L);

// Least-id (or greatest-id, when from_high) minimal element below l.
std::optional<Id> min_below(const Lattice& L, Id l, bool from_high = false);

// Adapter giving an OrthoLattice the shared backend interface.
struct ExplicitOps {
  using Elem = Id;
  const OrthoLattice& ol;

  bool leq(Id a, Id b) const { return ol.leq(a, b); }
  Id meet(Id a, Id b) const { return ol.meet(a, b); }
  Id join(Id a, Id b) const { return ol.join(a, b); }
  Id perp(Id a) const { return ol.perp(a); }
  Id bottom() const { return ol.bottom(); }
  Id top() const { return ol.top(); }
  bool is_minimal(Id a) const;
  std::optional<Id> min_below(Id a, bool reversed) const;
};

// Every element outside {0, 1} has a number of inverses different from one.
bool is_irreducible(const Lattice& L);

// Factorial lattice with an abelian element other than bottom.
// Throws NotFactorial when the center is not {0, 1}.
bool is_type_I(const OrthoLattice& ol);

// Greedy orthogonal family of minimal elements exhausting l.
IdVec decompose_minimal_orthogonal(const OrthoLattice& ol, Id l,
                                   bool reversed = false);

// Maximal orthogonal family of minimal elements: the decomposition of top.
IdVec find_reference(const OrthoLattice& ol);

struct DimensionFunction {
  std::size_t order = 0;        // reference size n
  std::vector<Rat> value;       // element id -> D(l) ∈ {0, 1/n, …, 1}
};

// Builds D(l) = |decomposition of l| / n and then proves, exhaustively on
// the finite lattice, that D satisfies:
//   D1  D(0) = 0, D(1) = 1
//   D2  D(a ∨ b) + D(a ∧ b) = D(a) + D(b)
//   D3  D(a) = D(b)  ⇔  a ∼ b
//   D4  D(a) ≤ D(b)  ⇔  a ≼ b
//   D5  additivity over orthogonal families
// together with: image exactly {0, 1/n, …, 1}, and independence from the
// greedy tie-break. Any failure throws AxiomFails naming the axiom.
// Preconditions (modular, factorial, R-property, type I, rel regular) are
// enforced with their own error kinds.
DimensionFunction dimension_function(const OrthoLattice& ol,
                                     const EquivRelation& rel);

struct StageResult {
  std::string stage;
  std::string verdict;  // "pass" | "fail" | "skip"
  std::string detail;
};

// Full classification pipeline. tag is "I_n" on success, "unclassified"
// otherwise with failed_stage naming the first stage that stopped it.
struct TypeReport {
  std::string tag = "unclassified";
  std::string failed_stage;
  std::vector<StageResult> stages;
  std::vector<std::string> waivers;

  // Payloads computed along the way, for report assembly.
  TripleLaw modular, distributive;
  bool has_ortho = false;
  std::optional<IdVec> center_ids;
  std::optional<IdVec> minimal_ids;
  std::optional<bool> factorial, abelian, irreducible;
  std::optional<RPropertyReport> rprop;
  std::optional<DimensionFunction> dim;
};

TypeReport classify_type(const Lattice& L, const OrthoLattice* ol);
TypeReport classify_type(const OrthoLattice& ol);

// Explicit-lattice instantiation of the affine reference test.
bool is_affine_reference(const OrthoLattice& ol, const IdVec& family);

}  // namespace ortholat
