#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "ringlab/element_set.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Every right ideal of a ring, closed under pairwise sums, sorted
/// lexicographically by element list.
struct IdealLattice {
  std::size_t order = 0;
  std::vector<ElementSet> right_ideals;
  /// Indices into right_ideals.
  std::vector<std::size_t> maximal;
  std::vector<std::size_t> minimal;
  std::vector<std::size_t> essential_maximal;
  /// Distinct principal right ideals aR, as indices.
  std::vector<std::size_t> principal_ideals;
  /// principal_of[a] = index of aR.
  std::vector<std::size_t> principal_of;

  std::optional<std::size_t> find(const ElementSet& s) const;

 private:
  friend IdealLattice all_right_ideals(const FiniteRing& r);
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
};

/// Smallest right ideal containing `seeds`: the additive closure of
/// {s*r : s in seeds, r in R}.
ElementSet right_ideal_generated(const FiniteRing& r, std::span<const Elem> seeds);

/// Fixpoint of pairwise sums starting from {0} and all principal right
/// ideals. Throws LatticeCapExceeded beyond limits().lattice_cap ideals.
IdealLattice all_right_ideals(const FiniteRing& r);

/// Caches the lattice and the radicals of one ring. Not thread-safe; use
/// one instance per worker. The ring must outlive the analysis.
class RingAnalysis {
 public:
  explicit RingAnalysis(const FiniteRing& ring);
  explicit RingAnalysis(RingPtr ring);
  // Takes ownership, so RingAnalysis an(build_ring(...)) does not dangle.
  explicit RingAnalysis(FiniteRing&& ring);

  RingAnalysis(const RingAnalysis&) = delete;
  RingAnalysis& operator=(const RingAnalysis&) = delete;

  const FiniteRing& ring() const noexcept { return ring_; }

  const IdealLattice& lattice();
  const ElementSet& units();
  const ElementSet& idempotents();

  /// Sum of the minimal right ideals; a two-sided ideal.
  const ElementSet& socle();
  /// Intersection of maximal right ideals, cross-checked against
  /// {x : 1 - xy is a unit for all y}.
  const ElementSet& jacobson();
  /// Zhou radical: intersection of the essential maximal right ideals
  /// (R when there are none), cross-checked against the pullback of
  /// J(R/Soc) along the quotient map.
  const ElementSet& delta();
  const ElementSet& delta_sharp();

  /// The two algorithms behind delta(), exposed individually.
  ElementSet delta_essential_maximal();
  ElementSet delta_socle_pullback();

  /// x such that xR + K = R forces K to be a direct summand.
  bool r3_membership(Elem x);
  ElementSet r3_set();
  /// x such that every (1+xy)R has a complement inside the socle.
  bool r5_membership(Elem x);
  ElementSet r5_set();
  /// Intersection of two-sided ideals P for which R/P has a faithful
  /// simple module that is singular as an R-module.
  ElementSet r4_ideal();
  /// The unique largest delta-small right ideal, if one exists.
  std::optional<ElementSet> r2_largest_delta_small();

  bool is_essential(const ElementSet& e);
  /// R/L is singular: (L : x) = {r : xr in L} is essential for every x.
  bool quotient_is_singular(const ElementSet& l);
  bool is_delta_small(const ElementSet& n);
  bool is_direct_summand(const ElementSet& k);

  const std::vector<ElementSet>& two_sided_ideals();

 private:
  const std::vector<std::size_t>& non_summands();
  const std::vector<std::size_t>& socle_subideals();

  RingPtr owner_;
  const FiniteRing& ring_;
  std::unique_ptr<IdealLattice> lattice_;
  std::optional<ElementSet> units_, idempotents_, socle_, jacobson_, delta_, delta_sharp_;
  std::optional<std::vector<ElementSet>> two_sided_;
  std::optional<std::vector<bool>> singular_quotient_;
  // Per principal ideal: 0 unknown, 1 true, 2 false.
  std::vector<char> r3_good_, r5_complemented_;
  std::optional<std::vector<std::size_t>> non_summands_, socle_subideals_;
};

// Free-function forms; each builds a temporary RingAnalysis.

bool is_essential(const FiniteRing& r, const ElementSet& e);
ElementSet socle(const FiniteRing& r);
ElementSet jacobson_radical(const FiniteRing& r);
ElementSet zhou_radical(const FiniteRing& r);
ElementSet delta_sharp(const FiniteRing& r);
bool r3_membership(const FiniteRing& r, Elem x);
bool r5_membership(const FiniteRing& r, Elem x);
ElementSet r4_ideal(const FiniteRing& r);
bool is_delta_small(const FiniteRing& r, const ElementSet& n);
bool is_direct_summand(const FiniteRing& r, const ElementSet& k);

/// aRa is contained in I only for a in I.
bool is_semiprime_ideal(const FiniteRing& r, const ElementSet& ideal);
/// The smallest a outside I with aRa inside I, if any.
std::optional<Elem> semiprime_violation(const FiniteRing& r, const ElementSet& ideal);

}  // namespace ringlab
