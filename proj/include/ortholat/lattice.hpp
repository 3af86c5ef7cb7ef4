#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ortholat/errors.hpp"

namespace ortholat {

using Id = std::uint32_t;
using IdVec = std::vector<Id>;

// Square bit relation over element ids. Row i is the set {j : rel(i, j)},
// packed 64 per word so closure and bound searches run word-parallel.
class BitRel {
public:
  BitRel() = default;
  explicit BitRel(std::size_t n)
      : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  std::size_t size() const { return n_; }
  std::size_t words() const { return words_; }

  bool get(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(std::size_t i, std::size_t j) {
    bits_[i * words_ + j / 64] |= std::uint64_t(1) << (j % 64);
  }

  const std::uint64_t* row(std::size_t i) const { return &bits_[i * words_]; }
  std::uint64_t* row(std::size_t i) { return &bits_[i * words_]; }

  void or_row_into(std::size_t src, std::size_t dst);
  bool row_subset(std::size_t i, std::size_t j) const;  // row i ⊆ row j
  std::size_t row_count(std::size_t i) const;
  BitRel transpose() const;

  bool operator==(const BitRel&) const = default;

private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct LawViolation {
  std::string law;
  std::vector<std::string> witness;
  std::string detail;
};

// Outcome of running every structural check on a cover description without
// throwing. `violations` empty means the input is a bounded lattice.
struct LatticeDiagnostics {
  std::vector<LawViolation> violations;
  std::vector<std::string> notes;
  bool ok() const { return violations.empty(); }
};

// Finite bounded lattice. The order relation is closed from the cover list
// at construction and every pairwise meet/join is materialized, so all
// queries after a successful build are table lookups.
//
// Construction validates: antisymmetry of the closure, existence and
// uniqueness of bottom/top, uniqueness of every pairwise glb/lub, and the
// algebraic laws (idempotent / commutative / absorption; associativity is
// checked exhaustively up to 512 elements, above that it is implied by the
// uniqueness of bounds). Anything larger than 4096 elements is rejected:
// the tables are the point of this type, and they stop fitting.
class Lattice {
public:
  static constexpr std::size_t kMaxElements = 4096;
  static constexpr std::size_t kAssocCheckLimit = 512;

  Lattice() = default;

  static Lattice from_covers(
      const std::vector<std::string>& names,
      const std::vector<std::pair<std::string, std::string>>& covers);

  // `up` must already be reflexive and transitive; row i = {j : i ≤ j}.
  static Lattice from_leq(std::vector<std::string> names, BitRel up);

  std::size_t size() const { return names_.size(); }
  Id bottom() const { return bottom_; }
  Id top() const { return top_; }

  bool leq(Id a, Id b) const { return up_.get(a, b); }
  bool lt(Id a, Id b) const { return a != b && up_.get(a, b); }

  Id meet(Id a, Id b) const { return meet_[a * size() + b]; }
  Id join(Id a, Id b) const { return join_[a * size() + b]; }

  // Empty input folds to the neutral element: meet of nothing is top,
  // join of nothing is bottom.
  Id meet_all(const IdVec& xs) const;
  Id join_all(const IdVec& xs) const;

  const std::string& name(Id a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Id> id_of(std::string_view name) const;
  Id require_id(std::string_view name) const;

  IdVec down_set(Id a) const;  // {b : b ≤ a}, ascending ids
  IdVec up_set(Id a) const;    // {b : a ≤ b}
  IdVec atoms() const;         // covers of bottom
  std::vector<std::pair<Id, Id>> cover_pairs() const;

  // {x : join(a, x) = top and meet(a, x) = bottom}
  IdVec inverses(Id a) const;

  const BitRel& relation() const { return up_; }

  bool operator==(const Lattice& other) const {
    return names_ == other.names_ && up_ == other.up_;
  }

private:
  friend struct LatticeBuilder;

  std::vector<std::string> names_;
  BitRel up_;    // up_.get(a, b)  ⇔  a ≤ b
  BitRel down_;  // transpose of up_
  std::vector<std::uint16_t> meet_;
  std::vector<std::uint16_t> join_;
  Id bottom_ = 0;
  Id top_ = 0;
};

// Non-throwing twin of Lattice::from_covers: reports every failed check
// with a witness instead of stopping at the first one.
LatticeDiagnostics validate_complete_lattice(
    const std::vector<std::string>& names,
    const std::vector<std::pair<std::string, std::string>>& covers);

}  // namespace ortholat
