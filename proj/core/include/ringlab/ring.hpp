#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringlab/element_set.hpp"
#include "ringlab/errors.hpp"

namespace ringlab {

/// Process-wide size and cost limits. Set once (for instance by the CLI)
/// before any worker threads start; read-only afterwards.
struct Limits {
  std::size_t warn_order = 1024;
  std::size_t size_cap = 4096;
  std::size_t lattice_cap = 100000;
  std::size_t armendariz_cap = 128;
  /// Rings up to this order get the lattice-quantified characterizations.
  std::size_t expensive_order = 32;
};

Limits& limits();

/// Unvalidated input to `validate_ring`.
struct RingTables {
  std::string name;
  std::size_t order = 0;
  Elem zero = 0;
  Elem one = 0;
  std::vector<std::vector<Elem>> add;
  std::vector<std::vector<Elem>> mul;
  std::vector<std::string> labels;
};

/// A finite unital ring given by its addition and multiplication tables
/// over element indices 0..n-1. Instances only come out of `validate_ring`,
/// so every FiniteRing satisfies the ring axioms.
class FiniteRing {
 public:
  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return n_; }
  Elem zero() const noexcept { return zero_; }
  Elem one() const noexcept { return one_; }

  Elem add(Elem a, Elem b) const noexcept { return add_[a * n_ + b]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * n_ + b]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg_[b]); }

  /// Row a of the multiplication table, i.e. the map x -> a*x.
  std::span<const Elem> mul_row(Elem a) const noexcept {
    return {mul_.data() + a * n_, n_};
  }
  std::span<const Elem> add_row(Elem a) const noexcept {
    return {add_.data() + a * n_, n_};
  }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Elem e) const { return labels_.at(e); }
  bool has_custom_labels() const noexcept { return custom_labels_; }

  Elem power(Elem a, std::size_t k) const noexcept;
  Elem times(std::size_t k, Elem a) const noexcept;  // a + a + ... (k terms)
  std::size_t additive_order(Elem a) const noexcept;

  bool is_commutative() const noexcept;
  bool same_tables(const FiniteRing& other) const noexcept;

  FiniteRing renamed(std::string name) const;
  RingTables tables() const;

  ElementSet empty_set(SetKind kind = SetKind::subset) const {
    return ElementSet(n_, kind);
  }
  ElementSet full_set(SetKind kind = SetKind::subset) const {
    return ElementSet::full(n_, kind);
  }
  ElementSet zero_set(SetKind kind = SetKind::subset) const {
    return ElementSet::singleton(n_, zero_, kind);
  }

 private:
  friend FiniteRing validate_ring(RingTables raw);
  FiniteRing() = default;

  std::string name_;
  std::size_t n_ = 0;
  Elem zero_ = 0;
  Elem one_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<std::string> labels_;
  bool custom_labels_ = false;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

/// Checks every ring axiom exactly and returns the ring. Instances that
/// are linear in one slot only range over additive generators there, so
/// the cost is O(n^2 log n) rather than O(n^3).
/// Throws DimensionMismatch for malformed tables, AxiomViolation with the
/// first failing instance otherwise, SizeCapExceeded above limits().size_cap.
FiniteRing validate_ring(RingTables raw);

RingPtr share(FiniteRing ring);

// Element-level machinery.

ElementSet units(const FiniteRing& r);
ElementSet idempotents(const FiniteRing& r);
ElementSet nilpotents(const FiniteRing& r);
ElementSet center(const FiniteRing& r);

std::optional<Elem> inverse(const FiniteRing& r, Elem a);
bool is_nilpotent(const FiniteRing& r, Elem a);
bool is_central(const FiniteRing& r, Elem a);
std::size_t characteristic(const FiniteRing& r);

/// {x : x*a = 0}; a left ideal, returned as a plain subset.
ElementSet left_annihilator(const FiniteRing& r, Elem a);
/// {x : a*x = 0}; a right ideal, returned as a plain subset.
ElementSet right_annihilator(const FiniteRing& r, Elem a);

ElementSet commutant(const FiniteRing& r, Elem a);
ElementSet double_commutant(const FiniteRing& r, Elem a);

/// Right-ideal closure checks used by set producers and tests.
bool is_additive_subgroup(const FiniteRing& r, const ElementSet& s);
bool is_right_ideal(const FiniteRing& r, const ElementSet& s);
bool is_left_ideal(const FiniteRing& r, const ElementSet& s);
bool is_two_sided_ideal(const FiniteRing& r, const ElementSet& s);

/// Smallest additive subgroup containing `seeds`.
ElementSet additive_closure(const FiniteRing& r, std::span<const Elem> seeds);

}  // namespace ringlab
