#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

inline constexpr std::size_t kMaxEnumerationOrder = 8;

/// Invariant factors (d1, d2, ...) with d_{i+1} | d_i of every abelian
/// group of the given order, in a fixed deterministic order.
std::vector<std::vector<std::size_t>> abelian_group_types(std::size_t order);

/// Every unital ring structure on every abelian group of the given order.
/// The identity is placed on the generator of the largest cyclic factor
/// (an element of maximal additive order generates a direct summand), the
/// remaining generator products are chosen by backtracking, and partial
/// assignments are pruned as soon as an associativity instance on
/// generators is decidable. With `up_to_iso`, rings are deduplicated by
/// fingerprint and then exact isomorphism search.
/// Throws SizeCapExceeded for order > kMaxEnumerationOrder.
void enumerate_unital_rings(std::size_t order, bool up_to_iso,
                            const std::function<void(FiniteRing)>& sink);

std::vector<FiniteRing> enumerate_unital_rings(std::size_t order, bool up_to_iso);

}  // namespace ringlab
