#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ortholat/ortho.hpp"

namespace ortholat {

// N5: 0 < x < y < 1 on one side, 0 < z < 1 on the other. No
// orthocomplementation exists on it, so it stays a plain lattice.
Lattice gen_pentagon();

// Benzene ring O6: chains 0 < a < b < 1 and 0 < 1-b < 1-a < 1 glued at the
// bounds, with the label-swapping involution.
OrthoLattice gen_hexagon();

// Power set of {1, …, k} with set complement. k ≤ 12: 2^k elements must
// fit the lattice table limit.
OrthoLattice gen_boolean(unsigned k);

// Horizontal sum with m middle pairs: 0, l1, 1-l1, …, lm, 1-lm, 1 where
// distinct middles meet at 0 and join at 1. m = 1 is the 4-element Boolean
// algebra; m ≤ 64.
OrthoLattice gen_horizontal_sum(unsigned m);

// 16-element ortholattice generated by two complemented elements x, y in
// general position: the Boolean algebra on the four atoms x^y, x^(1-y),
// y^(1-x), 1-(xvy). The classical hand-drawn Hasse diagram of this object
// shows only 14 nodes; the two missing joins of opposite atoms (d, 1-d)
// are required for unique meets and are included here.
OrthoLattice gen_section3_ortho();

// Componentwise-ordered product with componentwise orthocomplement.
// Element names are tuples "(a,b,…)". Total size ≤ 4096.
OrthoLattice gen_product(const std::vector<const OrthoLattice*>& factors);
OrthoLattice gen_product(const OrthoLattice& a, const OrthoLattice& b);

// Order- and perp-preserving bijection, found by backtracking with degree
// invariants. Both sides ≤ 64 elements. Returns the map a-id -> b-id.
std::optional<IdVec> is_isomorphic(const OrthoLattice& a, const OrthoLattice& b);

// Central decomposition: the atoms of the center split the lattice into a
// product of factorial intervals, each a 2-chain (Boolean exponent) or a
// horizontal sum L_m (recorded by its m; the 4-element Boolean counts as
// L_1). The factorization is verified elementwise via l ↦ (l ∧ c_i) before
// returning; anything else throws NotDecomposable.
struct CentralDecomposition {
  unsigned boolean_exponent = 0;
  std::vector<unsigned> sums;  // ascending
  IdVec central_atoms;
  std::vector<OrthoLattice> factors;
};

CentralDecomposition decompose_central(const OrthoLattice& ol);

}  // namespace ortholat
