#include "ringlab/ideals.hpp"

#include <algorithm>
#include <numeric>

#include "ringlab/constructions.hpp"

namespace ringlab {

namespace {

/// Adjoins `gens` to the additive subgroup `base` (coset by coset).
ElementSet extend_subgroup(const FiniteRing& r, const ElementSet& base,
                           std::span<const Elem> gens) {
  ElementSet set = base;
  std::vector<Elem> members = base.elements();
  for (Elem g : gens) {
    if (set.contains(g)) continue;
    const std::size_t size = members.size();
    Elem shift = g;
    while (!set.contains(shift)) {
      for (std::size_t i = 0; i < size; ++i) {
        const Elem x = r.add(members[i], shift);
        set.insert(x);
        members.push_back(x);
      }
      shift = r.add(shift, g);
    }
  }
  return set;
}

/// A small additive generating set of the subgroup `s`.
std::vector<Elem> additive_generators(const FiniteRing& r, const ElementSet& s) {
  std::vector<Elem> gens;
  ElementSet span = r.zero_set();
  s.for_each([&](Elem x) {
    if (span.contains(x)) return;
    gens.push_back(x);
    const Elem g[] = {x};
    span = extend_subgroup(r, span, g);
  });
  return gens;
}

/// |A + B| = |A||B| / |A ∩ B| for subgroups.
bool sum_is_everything(const ElementSet& a, const ElementSet& b, std::size_t n) {
  return a.size() * b.size() == n * a.intersection_size(b);
}

ElementSet principal_right_ideal(const FiniteRing& r, Elem a) {
  ElementSet s(r.order(), SetKind::right_ideal);
  for (Elem x : r.mul_row(a)) s.insert(x);
  return s;
}

}  // namespace

std::optional<std::size_t> IdealLattice::find(const ElementSet& s) const {
  const auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementSet right_ideal_generated(const FiniteRing& r, std::span<const Elem> seeds) {
  std::vector<Elem> products;
  ElementSet seen = r.empty_set();
  for (Elem s : seeds) {
    for (Elem x : r.mul_row(s)) {
      if (!seen.contains(x)) {
        seen.insert(x);
        products.push_back(x);
      }
    }
  }
  return additive_closure(r, products).with_kind(SetKind::right_ideal);
}

IdealLattice all_right_ideals(const FiniteRing& r) {
  const std::size_t n = r.order();
  const std::size_t cap = limits().lattice_cap;

  // Distinct principal right ideals and their additive generators.
  std::vector<ElementSet> cyclic;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> cyclic_index;
  std::vector<std::size_t> cyclic_of(n);
  for (Elem a = 0; a < n; ++a) {
    ElementSet c = principal_right_ideal(r, a);
    auto [it, inserted] = cyclic_index.emplace(c, cyclic.size());
    if (inserted) cyclic.push_back(std::move(c));
    cyclic_of[a] = it->second;
  }
  std::vector<std::vector<Elem>> cyclic_gens;
  cyclic_gens.reserve(cyclic.size());
  for (const auto& c : cyclic) cyclic_gens.push_back(additive_generators(r, c));

  std::vector<ElementSet> ideals;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  const auto insert = [&](ElementSet s) {
    if (index.contains(s)) return;
    if (ideals.size() >= cap) throw LatticeCapExceeded(cap);
    index.emplace(s, ideals.size());
    ideals.push_back(std::move(s));
  };
  insert(r.zero_set(SetKind::right_ideal));
  for (const auto& c : cyclic) insert(c);
  for (std::size_t q = 0; q < ideals.size(); ++q) {
    const ElementSet current = ideals[q];
    for (std::size_t c = 0; c < cyclic.size(); ++c) {
      if (cyclic[c].is_subset_of(current)) continue;
      insert(extend_subgroup(r, current, cyclic_gens[c]).with_kind(SetKind::right_ideal));
    }
  }

  std::vector<std::size_t> perm(ideals.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return ideals[a].lex_less(ideals[b]); });

  IdealLattice lat;
  lat.order = n;
  lat.right_ideals.reserve(ideals.size());
  for (std::size_t i : perm) lat.right_ideals.push_back(std::move(ideals[i]));
  for (std::size_t i = 0; i < lat.right_ideals.size(); ++i) {
    lat.index_.emplace(lat.right_ideals[i], i);
  }
  lat.principal_of.resize(n);
  for (Elem a = 0; a < n; ++a) lat.principal_of[a] = *lat.find(cyclic[cyclic_of[a]]);
  for (const auto& c : cyclic) lat.principal_ideals.push_back(*lat.find(c));
  std::sort(lat.principal_ideals.begin(), lat.principal_ideals.end());

  const auto& all = lat.right_ideals;
  const ElementSet zero = r.zero_set();
  std::vector<std::size_t> nonzero_cyclic;
  for (std::size_t c : lat.principal_ideals) {
    if (all[c].size() > 1) nonzero_cyclic.push_back(c);
  }

  for (std::size_t i = 0; i < all.size(); ++i) {
    const ElementSet& m = all[i];
    if (m.size() == n) continue;
    // Maximal: M + aR = R for every a outside M.
    bool maximal = true;
    for (std::size_t c : nonzero_cyclic) {
      if (all[c].is_subset_of(m)) continue;
      if (!sum_is_everything(m, all[c], n)) {
        maximal = false;
        break;
      }
    }
    if (!maximal) continue;
    lat.maximal.push_back(i);
    bool essential = true;
    for (std::size_t c : nonzero_cyclic) {
      if (!m.intersects_nontrivially(all[c], r.zero())) {
        essential = false;
        break;
      }
    }
    if (essential) lat.essential_maximal.push_back(i);
  }

  // Every minimal right ideal is principal.
  for (std::size_t c : nonzero_cyclic) {
    bool minimal = true;
    for (std::size_t d : nonzero_cyclic) {
      if (d != c && all[d].size() < all[c].size() && all[d].is_subset_of(all[c])) {
        minimal = false;
        break;
      }
    }
    if (minimal) lat.minimal.push_back(c);
  }
  return lat;
}

RingAnalysis::RingAnalysis(const FiniteRing& ring) : ring_(ring) {}

RingAnalysis::RingAnalysis(RingPtr ring) : owner_(std::move(ring)), ring_(*owner_) {}

RingAnalysis::RingAnalysis(FiniteRing&& ring) : RingAnalysis(share(std::move(ring))) {}

const IdealLattice& RingAnalysis::lattice() {
  if (!lattice_) lattice_ = std::make_unique<IdealLattice>(all_right_ideals(ring_));
  return *lattice_;
}

const ElementSet& RingAnalysis::units() {
  if (!units_) units_ = ringlab::units(ring_);
  return *units_;
}

const ElementSet& RingAnalysis::idempotents() {
  if (!idempotents_) idempotents_ = ringlab::idempotents(ring_);
  return *idempotents_;
}

const ElementSet& RingAnalysis::socle() {
  if (socle_) return *socle_;
  const auto& lat = lattice();
  std::vector<Elem> gens;
  for (std::size_t m : lat.minimal) {
    const auto g = lat.right_ideals[m].elements();
    gens.insert(gens.end(), g.begin(), g.end());
  }
  ElementSet s = additive_closure(ring_, gens);
  if (!is_two_sided_ideal(ring_, s)) {
    throw SocleNotTwoSided("socle of " + ring_.name() + " is not a two-sided ideal");
  }
  socle_ = s.with_kind(SetKind::two_sided_ideal);
  return *socle_;
}

const ElementSet& RingAnalysis::jacobson() {
  if (jacobson_) return *jacobson_;
  const auto& lat = lattice();
  ElementSet by_maximal = ring_.full_set();
  for (std::size_t m : lat.maximal) by_maximal &= lat.right_ideals[m];

  const ElementSet& u = units();
  ElementSet by_units = ring_.empty_set();
  for (Elem x = 0; x < ring_.order(); ++x) {
    bool in = true;
    for (Elem y = 0; y < ring_.order() && in; ++y) {
      in = u.contains(ring_.sub(ring_.one(), ring_.mul(x, y)));
    }
    if (in) by_units.insert(x);
  }
  if (!(by_maximal == by_units)) {
    throw CrossCheckMismatch("Jacobson radical of " + ring_.name() +
                             ": maximal-ideal intersection disagrees with the unit criterion");
  }
  jacobson_ = by_maximal.with_kind(SetKind::two_sided_ideal);
  return *jacobson_;
}

ElementSet RingAnalysis::delta_essential_maximal() {
  const auto& lat = lattice();
  ElementSet d = ring_.full_set();
  for (std::size_t m : lat.essential_maximal) d &= lat.right_ideals[m];
  return d;
}

ElementSet RingAnalysis::delta_socle_pullback() {
  const QuotientRing q = quotient_ring(ring_, socle());
  RingAnalysis qa(q.ring);
  const ElementSet& jq = qa.jacobson();
  ElementSet d = ring_.empty_set();
  for (Elem x = 0; x < ring_.order(); ++x) {
    if (jq.contains(q.projection[x])) d.insert(x);
  }
  return d;
}

const ElementSet& RingAnalysis::delta() {
  if (delta_) return *delta_;
  const ElementSet primary = delta_essential_maximal();
  const ElementSet pullback = delta_socle_pullback();
  if (!(primary == pullback)) {
    throw CrossCheckMismatch("Zhou radical of " + ring_.name() +
                             ": essential-maximal intersection disagrees with socle pullback");
  }
  if (!is_two_sided_ideal(ring_, primary)) {
    throw CrossCheckMismatch("Zhou radical of " + ring_.name() + " is not a two-sided ideal");
  }
  delta_ = primary.with_kind(SetKind::two_sided_ideal);
  return *delta_;
}

const ElementSet& RingAnalysis::delta_sharp() {
  if (delta_sharp_) return *delta_sharp_;
  const ElementSet& d = delta();
  ElementSet out = ring_.empty_set();
  for (Elem x = 0; x < ring_.order(); ++x) {
    Elem p = x;
    for (std::size_t k = 1; k <= ring_.order(); ++k) {
      if (d.contains(p)) {
        out.insert(x);
        break;
      }
      p = ring_.mul(p, x);
    }
  }
  delta_sharp_ = std::move(out);
  return *delta_sharp_;
}

bool RingAnalysis::is_direct_summand(const ElementSet& k) {
  bool found = false;
  idempotents().for_each([&](Elem e) {
    if (!found && principal_right_ideal(ring_, e) == k) found = true;
  });
  return found;
}

const std::vector<std::size_t>& RingAnalysis::non_summands() {
  if (non_summands_) return *non_summands_;
  const auto& lat = lattice();
  std::vector<char> summand(lat.right_ideals.size(), 0);
  idempotents().for_each([&](Elem e) { summand[lat.principal_of[e]] = 1; });
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < summand.size(); ++i) {
    if (!summand[i]) out.push_back(i);
  }
  non_summands_ = std::move(out);
  return *non_summands_;
}

bool RingAnalysis::r3_membership(Elem x) {
  const auto& lat = lattice();
  if (r3_good_.empty()) r3_good_.assign(lat.right_ideals.size(), 0);
  const std::size_t c = lat.principal_of[x];
  if (r3_good_[c] == 0) {
    bool good = true;
    for (std::size_t k : non_summands()) {
      if (sum_is_everything(lat.right_ideals[c], lat.right_ideals[k], ring_.order())) {
        good = false;
        break;
      }
    }
    r3_good_[c] = good ? 1 : 2;
  }
  return r3_good_[c] == 1;
}

ElementSet RingAnalysis::r3_set() {
  ElementSet out = ring_.empty_set();
  for (Elem x = 0; x < ring_.order(); ++x) {
    if (r3_membership(x)) out.insert(x);
  }
  return out;
}

const std::vector<std::size_t>& RingAnalysis::socle_subideals() {
  if (socle_subideals_) return *socle_subideals_;
  const auto& lat = lattice();
  const ElementSet& s = socle();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lat.right_ideals.size(); ++i) {
    if (lat.right_ideals[i].is_subset_of(s)) out.push_back(i);
  }
  socle_subideals_ = std::move(out);
  return *socle_subideals_;
}

bool RingAnalysis::r5_membership(Elem x) {
  const auto& lat = lattice();
  if (r5_complemented_.empty()) r5_complemented_.assign(lat.right_ideals.size(), 0);
  const std::size_t n = ring_.order();
  for (Elem y = 0; y < n; ++y) {
    const Elem u = ring_.add(ring_.one(), ring_.mul(x, y));
    const std::size_t c = lat.principal_of[u];
    if (r5_complemented_[c] == 0) {
      bool complemented = false;
      for (std::size_t yi : socle_subideals()) {
        const ElementSet& yset = lat.right_ideals[yi];
        if (lat.right_ideals[c].intersection_size(yset) == 1 &&
            lat.right_ideals[c].size() * yset.size() == n) {
          complemented = true;
          break;
        }
      }
      r5_complemented_[c] = complemented ? 1 : 2;
    }
    if (r5_complemented_[c] == 2) return false;
  }
  return true;
}

ElementSet RingAnalysis::r5_set() {
  ElementSet out = ring_.empty_set();
  for (Elem x = 0; x < ring_.order(); ++x) {
    if (r5_membership(x)) out.insert(x);
  }
  return out;
}

bool RingAnalysis::is_essential(const ElementSet& e) {
  const auto& lat = lattice();
  for (std::size_t c : lat.principal_ideals) {
    const ElementSet& cs = lat.right_ideals[c];
    if (cs.size() > 1 && !e.intersects_nontrivially(cs, ring_.zero())) return false;
  }
  return true;
}

bool RingAnalysis::quotient_is_singular(const ElementSet& l) {
  const std::size_t n = ring_.order();
  for (Elem x = 0; x < n; ++x) {
    if (l.contains(x)) continue;
    ElementSet colon = ring_.empty_set();
    const auto row = ring_.mul_row(x);
    for (Elem r = 0; r < n; ++r) {
      if (l.contains(row[r])) colon.insert(r);
    }
    if (!is_essential(colon)) return false;
  }
  return true;
}

bool RingAnalysis::is_delta_small(const ElementSet& n_ideal) {
  const auto& lat = lattice();
  const std::size_t n = ring_.order();
  if (!singular_quotient_) {
    std::vector<bool> flags(lat.right_ideals.size());
    for (std::size_t i = 0; i < flags.size(); ++i) {
      flags[i] = quotient_is_singular(lat.right_ideals[i]);
    }
    singular_quotient_ = std::move(flags);
  }
  for (std::size_t i = 0; i < lat.right_ideals.size(); ++i) {
    const ElementSet& l = lat.right_ideals[i];
    if (l.size() == n || !(*singular_quotient_)[i]) continue;
    if (sum_is_everything(n_ideal, l, n)) return false;
  }
  return true;
}

std::optional<ElementSet> RingAnalysis::r2_largest_delta_small() {
  const auto& lat = lattice();
  std::vector<std::size_t> small;
  for (std::size_t i = 0; i < lat.right_ideals.size(); ++i) {
    if (is_delta_small(lat.right_ideals[i])) small.push_back(i);
  }
  for (std::size_t candidate : small) {
    bool largest = true;
    for (std::size_t other : small) {
      if (!lat.right_ideals[other].is_subset_of(lat.right_ideals[candidate])) {
        largest = false;
        break;
      }
    }
    if (largest) return lat.right_ideals[candidate];
  }
  return std::nullopt;
}

const std::vector<ElementSet>& RingAnalysis::two_sided_ideals() {
  if (two_sided_) return *two_sided_;
  std::vector<ElementSet> out;
  for (const auto& i : lattice().right_ideals) {
    bool left_closed = true;
    i.for_each([&](Elem a) {
      if (!left_closed) return;
      for (Elem x = 0; x < ring_.order(); ++x) {
        if (!i.contains(ring_.mul(x, a))) {
          left_closed = false;
          return;
        }
      }
    });
    if (left_closed) out.push_back(i.with_kind(SetKind::two_sided_ideal));
  }
  two_sided_ = std::move(out);
  return *two_sided_;
}

ElementSet RingAnalysis::r4_ideal() {
  // Simple modules of R/P are R/M for maximal right ideals M of R containing
  // P; the module is faithful over R/P when its annihilator, the largest
  // two-sided ideal inside M, equals P. Singularity is over R.
  const auto& lat = lattice();
  const std::size_t n = ring_.order();
  std::vector<ElementSet> cores;
  std::vector<bool> singular;
  for (std::size_t mi : lat.maximal) {
    const ElementSet& m = lat.right_ideals[mi];
    ElementSet core = ring_.empty_set();
    for (Elem r = 0; r < n; ++r) {
      bool inside = true;
      for (Elem x = 0; x < n && inside; ++x) inside = m.contains(ring_.mul(x, r));
      if (inside) core.insert(r);
    }
    cores.push_back(std::move(core));
    singular.push_back(quotient_is_singular(m));
  }
  ElementSet result = ring_.full_set();
  for (const ElementSet& p : two_sided_ideals()) {
    if (p.is_full()) continue;
    for (std::size_t i = 0; i < cores.size(); ++i) {
      if (singular[i] && cores[i] == p) {
        result &= p;
        break;
      }
    }
  }
  return result.with_kind(SetKind::two_sided_ideal);
}

bool is_essential(const FiniteRing& r, const ElementSet& e) { return RingAnalysis(r).is_essential(e); }
ElementSet socle(const FiniteRing& r) { return RingAnalysis(r).socle(); }
ElementSet jacobson_radical(const FiniteRing& r) { return RingAnalysis(r).jacobson(); }
ElementSet zhou_radical(const FiniteRing& r) { return RingAnalysis(r).delta(); }
ElementSet delta_sharp(const FiniteRing& r) { return RingAnalysis(r).delta_sharp(); }
bool r3_membership(const FiniteRing& r, Elem x) { return RingAnalysis(r).r3_membership(x); }
bool r5_membership(const FiniteRing& r, Elem x) { return RingAnalysis(r).r5_membership(x); }
ElementSet r4_ideal(const FiniteRing& r) { return RingAnalysis(r).r4_ideal(); }
bool is_delta_small(const FiniteRing& r, const ElementSet& n) {
  return RingAnalysis(r).is_delta_small(n);
}
bool is_direct_summand(const FiniteRing& r, const ElementSet& k) {
  return RingAnalysis(r).is_direct_summand(k);
}

std::optional<Elem> semiprime_violation(const FiniteRing& r, const ElementSet& ideal) {
  for (Elem a = 0; a < r.order(); ++a) {
    if (ideal.contains(a)) continue;
    bool inside = true;
    for (Elem x = 0; x < r.order() && inside; ++x) {
      inside = ideal.contains(r.mul(r.mul(a, x), a));
    }
    if (inside) return a;
  }
  return std::nullopt;
}

bool is_semiprime_ideal(const FiniteRing& r, const ElementSet& ideal) {
  return !semiprime_violation(r, ideal).has_value();
}

}  // namespace ringlab
