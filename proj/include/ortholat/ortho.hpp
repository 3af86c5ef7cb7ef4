#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ortholat/lattice.hpp"

namespace ortholat {

// Finite lattice with a validated orthocomplementation. Attachment checks,
// exhaustively: the map is a total involution, l ∨ l⊥ = 1 and l ∧ l⊥ = 0,
// antitonicity, and both De Morgan identities (derived facts, but checked
// rather than assumed).
class OrthoLattice {
public:
  OrthoLattice() = default;

  static OrthoLattice attach(
      Lattice base, const std::vector<std::pair<std::string, std::string>>& pairs);
  static OrthoLattice attach_ids(Lattice base, IdVec perp);

  const Lattice& base() const { return lat_; }
  Id perp(Id a) const { return perp_[a]; }

  std::size_t size() const { return lat_.size(); }
  Id bottom() const { return lat_.bottom(); }
  Id top() const { return lat_.top(); }
  bool leq(Id a, Id b) const { return lat_.leq(a, b); }
  Id meet(Id a, Id b) const { return lat_.meet(a, b); }
  Id join(Id a, Id b) const { return lat_.join(a, b); }
  const std::string& name(Id a) const { return lat_.name(a); }

private:
  Lattice lat_;
  IdVec perp_;
};

// {x : x ≤ a⊥}
IdVec orthogonal_set(const OrthoLattice& ol, Id a);

// a commutes with b:  a = (a ∧ b) ∨ (a ∧ b⊥). Not symmetric in general;
// symmetry holds on modular ortholattices and is asserted there by tests.
bool commutes(const OrthoLattice& ol, Id a, Id b);

// {x : x commutes with a}
IdVec commutant(const OrthoLattice& ol, Id a);

// {z : z commutes with every element}
IdVec center(const OrthoLattice& ol);

bool is_factorial(const OrthoLattice& ol);  // center = {0, 1}
bool is_abelian(const OrthoLattice& ol);    // center = everything

// a − b within [0, a]: (a ∧ b⊥). Requires b ≤ a.
Id relative_complement(const OrthoLattice& ol, Id a, Id b);

// The interval [0, l] with x ↦ l ∧ x⊥ as candidate orthocomplement.
// parent_ids[i] maps reduced element i back to the original lattice.
struct Reduced {
  OrthoLattice ol;
  IdVec parent_ids;
};

// Throws ComplementLawFails (or NotInvolution / NotAntitone) when the
// candidate map is not a valid orthocomplementation; on a modular base it
// always is.
Reduced reduced_lattice(const OrthoLattice& ol, Id l);

// Same construction, reporting failure instead of throwing.
std::optional<Reduced> try_reduced(const OrthoLattice& ol, Id l,
                                   std::string* why = nullptr);

// {l : the reduced lattice at l exists and is abelian}. Bottom always
// qualifies: the one-point lattice is its own center.
IdVec abelian_elements(const OrthoLattice& ol);

struct RPropertyReport {
  enum class Status { holds, fails, not_applicable };
  Status status = Status::holds;
  Id witness = 0;        // element whose reduced center misbehaves
  std::string detail;
};

// Checks C(L ∧ l) = {c ∧ l : c ∈ C(L)} for every l.
RPropertyReport check_r_property(const OrthoLattice& ol);

}  // namespace ortholat
