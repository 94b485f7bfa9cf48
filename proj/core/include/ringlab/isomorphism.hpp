#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// Cheap isomorphism invariants used to bucket rings before exact search.
struct Fingerprint {
  std::size_t order = 0;
  std::size_t units = 0;
  std::size_t idempotents = 0;
  std::size_t nilpotents = 0;
  std::size_t characteristic = 0;
  bool commutative = false;

  auto operator<=>(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const FiniteRing& r);

/// Exact search for a ring isomorphism a -> b. Images of a greedy additive
/// generating set of `a` are chosen by backtracking among signature-matched
/// elements of `b`; the map is extended additively and accepted once it is a
/// bijection preserving products of generators. Returns phi with
/// phi[x] = image of x.
std::optional<std::vector<Elem>> find_isomorphism(const FiniteRing& a, const FiniteRing& b);

bool are_isomorphic(const FiniteRing& a, const FiniteRing& b);

/// True when phi is a bijective map a -> b preserving +, * and identity.
bool is_isomorphism(const FiniteRing& a, const FiniteRing& b, const std::vector<Elem>& phi);

}  // namespace ringlab
