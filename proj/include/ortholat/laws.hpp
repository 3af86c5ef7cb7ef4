#pragma once

#include <concepts>
#include <optional>
#include <vector>

#include "ortholat/errors.hpp"

namespace ortholat {

// The operation contract shared by the explicit finite lattice and the
// rational subspace backend. Elements are values with equality; the
// subspace side produces them on demand and never enumerates.
template <typename B>
concept LatticeOps = requires(const B& b, const typename B::Elem& x,
                              const typename B::Elem& y) {
  typename B::Elem;
  { b.leq(x, y) } -> std::convertible_to<bool>;
  { b.meet(x, y) } -> std::same_as<typename B::Elem>;
  { b.join(x, y) } -> std::same_as<typename B::Elem>;
  { b.perp(x) } -> std::same_as<typename B::Elem>;
  { b.bottom() } -> std::same_as<typename B::Elem>;
  { b.top() } -> std::same_as<typename B::Elem>;
  { b.is_minimal(x) } -> std::convertible_to<bool>;
  { b.min_below(x, bool{}) } -> std::same_as<std::optional<typename B::Elem>>;
  { x == y } -> std::convertible_to<bool>;
};

// x − y within [0, x]; requires y ≤ x.
template <LatticeOps B>
typename B::Elem rel_complement(const B& b, const typename B::Elem& x,
                                const typename B::Elem& y) {
  return b.meet(b.perp(y), x);
}

// x commutes with y:  x = (x ∧ y) ∨ (x ∧ y⊥).
template <LatticeOps B>
bool commutes_with(const B& b, const typename B::Elem& x,
                   const typename B::Elem& y) {
  return x == b.join(b.meet(x, y), b.meet(x, b.perp(y)));
}

template <LatticeOps B>
bool modular_triple(const B& b, const typename B::Elem& x,
                    const typename B::Elem& y, const typename B::Elem& z) {
  if (!b.leq(x, z)) return true;
  return b.meet(b.join(x, y), z) == b.join(x, b.meet(y, z));
}

template <LatticeOps B>
bool distributive_triple(const B& b, const typename B::Elem& x,
                         const typename B::Elem& y, const typename B::Elem& z) {
  return b.meet(b.join(x, y), z) == b.join(b.meet(x, z), b.meet(y, z));
}

// Greedy orthogonal family of minimal elements exhausting x. Each step
// takes a minimal element under the remainder and passes to the relative
// complement, so later picks are automatically orthogonal to earlier ones.
// `reversed` flips the tie-break used by min_below; the family size must
// not depend on it, and callers assert exactly that.
template <LatticeOps B>
std::vector<typename B::Elem> greedy_minimal_decomposition(
    const B& b, const typename B::Elem& x, bool reversed = false) {
  std::vector<typename B::Elem> family;
  typename B::Elem r = x;
  while (!(r == b.bottom())) {
    auto m = b.min_below(r, reversed);
    if (!m) fail(Err::NoMinimalBelow, "nonzero remainder with no minimal element");
    family.push_back(*m);
    r = rel_complement(b, r, *m);
  }
  return family;
}

// Minimal family joining to the top with no redundant member.
template <LatticeOps B>
bool is_affine_reference(const B& b,
                         const std::vector<typename B::Elem>& family) {
  for (const auto& m : family)
    if (!b.is_minimal(m)) fail(Err::NotMinimal, "family member not minimal");
  auto join_all = [&](std::size_t skip) {
    typename B::Elem acc = b.bottom();
    for (std::size_t i = 0; i < family.size(); ++i)
      if (i != skip) acc = b.join(acc, family[i]);
    return acc;
  };
  if (!(join_all(family.size()) == b.top())) return false;
  for (std::size_t i = 0; i < family.size(); ++i)
    if (join_all(i) == b.top()) return false;
  return true;
}

}  // namespace ortholat
