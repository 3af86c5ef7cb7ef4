#include "ortholat/modularity.hpp"

namespace ortholat {

TripleLaw check_modular(const Lattice& L) {
  std::size_t n = L.size();
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b)
      for (Id c = 0; c < n; ++c) {
        if (!L.leq(a, c)) continue;
        Id lhs = L.meet(L.join(a, b), c);
        Id rhs = L.join(a, L.meet(b, c));
        if (lhs != rhs) return {false, a, b, c, lhs, rhs};
      }
  return {};
}

TripleLaw check_distributive(const Lattice& L) {
  std::size_t n = L.size();
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b)
      for (Id c = 0; c < n; ++c) {
        Id lhs = L.meet(L.join(a, b), c);
        Id rhs = L.join(L.meet(a, c), L.meet(b, c));
        if (lhs != rhs) return {false, a, b, c, lhs, rhs};
      }
  return {};
}

Pentagon find_pentagon(const Lattice& L) {
  std::size_t n = L.size();
  for (Id x = 0; x < n; ++x)
    for (Id y = 0; y < n; ++y) {
      if (x == y || !L.leq(x, y)) continue;
      for (Id z = 0; z < n; ++z) {
        if (L.leq(z, y) || L.leq(x, z)) continue;  // z incomparable to both
        Id top = L.join(x, z);
        Id bot = L.meet(y, z);
        if (L.join(y, z) != top || L.meet(x, z) != bot) continue;
        // {bot, x, y, z, top} is closed under meet and join: the chain side
        // x < y and the incomparable z share exactly these bounds.
        return {true, bot, x, y, z, top};
      }
    }
  return {};
}

}  // namespace ortholat
