#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ortholat/errors.hpp"
#include "ortholat/rational.hpp"

namespace ortholat {

// Linear subspace of Q^n in reduced row echelon form. RREF is the
// canonical representative, so equality of subspaces is equality of rows.
struct Subspace {
  unsigned ambient = 0;
  std::vector<std::vector<Rat>> rows;

  unsigned dim() const { return unsigned(rows.size()); }
  bool operator==(const Subspace&) const = default;
};

std::string subspace_str(const Subspace& s);

// The lattice of subspaces of Q^n under inclusion, with the orthogonal
// complement for the standard dot product. Over Q the form is anisotropic
// (a sum of squares vanishes only at zero), so U ∧ U⊥ = 0 exactly and the
// complement laws hold with no further hypothesis. Elements are produced
// on demand; nothing is enumerated. Everything is exact: no floating
// point anywhere.
class QnLattice {
public:
  using Elem = Subspace;

  explicit QnLattice(unsigned n);  // 2 ≤ n ≤ 6
  unsigned ambient() const { return n_; }

  Subspace bottom() const { return Subspace{n_, {}}; }
  Subspace top() const;

  // Canonicalizes arbitrary spanning rows. Throws WidthMismatch when a row
  // has the wrong length.
  Subspace make(std::vector<std::vector<Rat>> rows) const;
  Subspace line(std::vector<Rat> v) const;

  bool leq(const Subspace& a, const Subspace& b) const;
  Subspace meet(const Subspace& a, const Subspace& b) const;
  Subspace join(const Subspace& a, const Subspace& b) const;
  Subspace perp(const Subspace& a) const;

  bool is_minimal(const Subspace& a) const { return a.dim() == 1; }
  std::optional<Subspace> min_below(const Subspace& a, bool reversed) const;

  Rat dimension(const Subspace& a) const;  // dim / n, image in {0, 1/n, …, 1}

  // Pairwise orthogonal lines joining to a, by Gram–Schmidt over Q without
  // normalization (square roots don't exist here; scaling is irrelevant).
  // `reversed` processes the basis rows back to front.
  std::vector<Subspace> ortho_decompose(const Subspace& a,
                                        bool reversed = false) const;

  // Common inverse of two subspaces of equal dimension: W with
  // W ∨ a = W ∨ b = top and W ∧ a = W ∧ b = bottom. Greedy over integer
  // vectors ordered by max-norm then lexicographically, so the result is
  // deterministic. Throws DimensionMismatch when dims differ (no common
  // inverse can exist: rank counting).
  Subspace common_complement(const Subspace& a, const Subspace& b) const;

private:
  void check_elem(const Subspace& s) const;
  unsigned n_;
};

// Deterministic sampling. mt19937_64 output is fixed by the standard and
// all draws go through hand-rolled reductions, so a seed pins the exact
// sequence on every platform. Entries are drawn from [-3, 3].
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  std::uint64_t raw() { return gen(); }
  std::uint32_t below(std::uint32_t k);  // uniform in [0, k)
  int entry() { return int(below(7)) - 3; }
};

// Uniform dimension in [lo, hi], then basis rows with entries in [-3, 3],
// redrawn until the rank matches the drawn dimension.
Subspace sample_subspace(const QnLattice& lat, Rng& rng, unsigned lo,
                         unsigned hi);
Subspace sample_subspace(const QnLattice& lat, Rng& rng);

// Random d-dimensional subspace of U (random integer coefficient rows
// against U's basis, redrawn until the rank is d).
Subspace sample_subspace_of(const QnLattice& lat, Rng& rng, const Subspace& u,
                            unsigned d);

// Orthogonal decomposition of the full space from a random basis.
std::vector<Subspace> sample_orthogonal_lines(const QnLattice& lat, Rng& rng);

struct SuiteCheck {
  std::string law;
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::vector<std::string> counterexample;  // empty when clean
};

struct SuiteReport {
  unsigned ambient = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string suite;
  std::vector<SuiteCheck> checks;
  std::vector<std::string> notes;
  bool all_pass = true;
};

// suite ∈ {lattice, modular, commutation, regular, lemmas, dimension, all}.
// Each law gets its own generator stream derived from (seed, law name), so
// results do not depend on which other laws run alongside.
SuiteReport run_property_suite(unsigned ambient, std::uint64_t trials,
                               std::uint64_t seed, const std::string& suite);

// Class division transported to the subspace side: classes are dimensions.
// Repeatedly removes an a_dim-dimensional piece from under a sampled
// b_dim-dimensional representative; asserts that the count and remainder
// dimension are stable across representatives and both greedy orders.
struct SubspaceDivide {
  std::uint64_t quotient = 0;
  unsigned remainder_dim = 0;
};

SubspaceDivide s_class_divide(const QnLattice& lat, Rng& rng, unsigned b_dim,
                              unsigned a_dim, unsigned representatives = 5);

}  // namespace ortholat
