#pragma once

#include "ortholat/lattice.hpp"

namespace ortholat {

// Exhaustive triple check with early exit. The witness is the first failing
// triple in id-lexicographic order, so identical inputs always report the
// same counterexample.
struct TripleLaw {
  bool holds = true;
  Id l = 0, lp = 0, lpp = 0;  // witness triple when holds == false
  Id lhs = 0, rhs = 0;        // evaluated sides at the witness
};

// a ≤ c  ⇒  (a ∨ b) ∧ c = a ∨ (b ∧ c)
TripleLaw check_modular(const Lattice& L);

// (a ∨ b) ∧ c = (a ∧ c) ∨ (b ∧ c)
TripleLaw check_distributive(const Lattice& L);

// Five-element sublattice 0' < x < y < 1', z incomparable, with
// x ∨ z = y ∨ z = 1' and x ∧ z = y ∧ z = 0'. Present iff the modular law
// fails somewhere; both facts are cross-checked by tests.
struct Pentagon {
  bool found = false;
  Id bot = 0, x = 0, y = 0, z = 0, top = 0;
};

Pentagon find_pentagon(const Lattice& L);

}  // namespace ortholat
