#pragma once

// Brute-force reference implementations for rings of order <= 16. They scan
// every subset of the ring, so they share no code with the lattice BFS.

#include <cstdint>
#include <vector>

#include "ringlab/ring.hpp"

namespace oracle {

using Mask = std::uint32_t;

inline bool is_right_ideal(const ringlab::FiniteRing& r, Mask m) {
  const auto n = static_cast<ringlab::Elem>(r.order());
  if (!(m >> r.zero() & 1u)) return false;
  for (ringlab::Elem a = 0; a < n; ++a) {
    if (!(m >> a & 1u)) continue;
    for (ringlab::Elem b = 0; b < n; ++b) {
      if ((m >> b & 1u) && !(m >> r.add(a, b) & 1u)) return false;
      if (!(m >> r.mul(a, b) & 1u)) return false;
    }
  }
  return true;
}

inline std::vector<Mask> right_ideals(const ringlab::FiniteRing& r) {
  std::vector<Mask> out;
  const std::uint64_t top = (std::uint64_t{1} << r.order()) - 1;
  for (std::uint64_t m = 0; m <= top; ++m) {
    if (is_right_ideal(r, static_cast<Mask>(m))) out.push_back(static_cast<Mask>(m));
  }
  return out;
}

inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

struct Radicals {
  Mask jacobson;
  Mask socle;
  Mask delta;
  std::size_t ideal_count;
};

inline Radicals radicals(const ringlab::FiniteRing& r) {
  const auto ideals = right_ideals(r);
  const Mask full = (Mask{1} << r.order()) - 1;
  const Mask zero = Mask{1} << r.zero();

  std::vector<Mask> maximal, minimal;
  for (Mask i : ideals) {
    if (i != full) {
      bool is_max = true;
      for (Mask k : ideals) {
        if (k != full && k != i && subset(i, k)) is_max = false;
      }
      if (is_max) maximal.push_back(i);
    }
    if (i != zero) {
      bool is_min = true;
      for (Mask k : ideals) {
        if (k != zero && k != i && subset(k, i)) is_min = false;
      }
      if (is_min) minimal.push_back(i);
    }
  }
  const auto essential = [&](Mask e) {
    for (Mask k : ideals) {
      if (k != zero && (k & e) == zero) return false;
    }
    return true;
  };

  Radicals out{full, zero, full, ideals.size()};
  for (Mask m : maximal) {
    out.jacobson &= m;
    if (essential(m)) out.delta &= m;
  }
  // Socle: the smallest right ideal containing every minimal one.
  Mask un = zero;
  for (Mask m : minimal) un |= m;
  out.socle = full;
  for (Mask i : ideals) {
    if (subset(un, i)) out.socle &= i;
  }
  return out;
}

inline std::vector<ringlab::Elem> elements(Mask m) {
  std::vector<ringlab::Elem> out;
  for (ringlab::Elem e = 0; e < 32; ++e) {
    if (m >> e & 1u) out.push_back(e);
  }
  return out;
}

}  // namespace oracle
