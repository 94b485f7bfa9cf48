#include "ringlab/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace ringlab {

Fingerprint fingerprint(const FiniteRing& r) {
  return Fingerprint{r.order(),          units(r).size(),   idempotents(r).size(),
                     nilpotents(r).size(), characteristic(r), r.is_commutative()};
}

namespace {

/// Per-element invariants preserved by every ring isomorphism.
using Signature = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t,
                             std::size_t, std::size_t, bool>;

std::vector<Signature> signatures(const FiniteRing& r) {
  const std::size_t n = r.order();
  std::vector<std::size_t> right_ann(n, 0), left_ann(n, 0);
  for (Elem x = 0; x < n; ++x) {
    const auto row = r.mul_row(x);
    for (Elem y = 0; y < n; ++y) {
      if (row[y] == r.zero()) {
        ++right_ann[x];
        ++left_ann[y];
      }
    }
  }
  std::vector<std::size_t> comm(n, 0);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (r.mul(x, y) == r.mul(y, x)) ++comm[x];
    }
  }
  std::vector<Signature> sig(n);
  for (Elem x = 0; x < n; ++x) {
    // Tail length and period of the power sequence x, x^2, ...
    std::vector<Elem> seen;
    Elem p = x;
    std::size_t tail = 0, period = 0;
    while (true) {
      auto it = std::find(seen.begin(), seen.end(), p);
      if (it != seen.end()) {
        tail = static_cast<std::size_t>(it - seen.begin());
        period = seen.size() - tail;
        break;
      }
      seen.push_back(p);
      p = r.mul(p, x);
    }
    sig[x] = Signature{r.additive_order(x), right_ann[x], left_ann[x], comm[x], tail, period,
                       r.additive_order(r.mul(x, x)), r.mul(x, x) == x};
  }
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const FiniteRing& a, const FiniteRing& b) : a_(a), b_(b), n_(a.order()) {
    sig_a_ = signatures(a);
    sig_b_ = signatures(b);
  }

  std::optional<std::vector<Elem>> run() {
    {
      auto sa = sig_a_, sb = sig_b_;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) return std::nullopt;
    }
    std::map<Signature, std::vector<Elem>> classes_b;
    for (Elem y = 0; y < n_; ++y) classes_b[sig_b_[y]].push_back(y);

    // Greedy additive generators of a, rarest signature classes first.
    std::vector<Elem> order(n_);
    for (Elem x = 0; x < n_; ++x) order[x] = x;
    std::stable_sort(order.begin(), order.end(), [&](Elem x, Elem y) {
      return classes_b[sig_a_[x]].size() < classes_b[sig_a_[y]].size();
    });
    ElementSet span = a_.zero_set();
    for (Elem x : order) {
      if (span.contains(x)) continue;
      gens_.push_back(x);
      const std::vector<Elem> g(gens_.begin(), gens_.end());
      span = additive_closure(a_, g);
      if (span.is_full()) break;
    }
    for (Elem g : gens_) candidates_.push_back(classes_b[sig_a_[g]]);

    phi_.assign(n_, kUnset);
    used_ = b_.empty_set();
    phi_[a_.zero()] = b_.zero();
    used_.insert(b_.zero());
    members_ = {a_.zero()};
    if (n_ == 1) return phi_;
    if (search(0)) return phi_;
    return std::nullopt;
  }

 private:
  static constexpr Elem kUnset = ~Elem{0};

  bool search(std::size_t level) {
    if (level == gens_.size()) return products_match(gens_.size());
    const Elem g = gens_[level];
    for (Elem image : candidates_[level]) {
      if (used_.contains(image)) continue;
      const std::size_t mark = members_.size();
      if (extend(g, image) && products_match(level + 1) && search(level + 1)) return true;
      rollback(mark);
    }
    return false;
  }

  /// Adjoins generator g with phi(g) = image, extending phi additively over
  /// the cosets of the current subgroup. Fails on inconsistency,
  /// non-injectivity or a signature mismatch.
  bool extend(Elem g, Elem image) {
    const std::size_t base = members_.size();
    Elem shift = g;
    Elem shift_image = image;
    while (phi_[shift] == kUnset) {
      for (std::size_t i = 0; i < base; ++i) {
        const Elem h = members_[i];
        const Elem x = a_.add(h, shift);
        const Elem y = b_.add(phi_[h], shift_image);
        if (phi_[x] != kUnset) return false;
        if (used_.contains(y) || sig_a_[x] != sig_b_[y]) return false;
        phi_[x] = y;
        used_.insert(y);
        members_.push_back(x);
      }
      shift = a_.add(shift, g);
      shift_image = b_.add(shift_image, image);
    }
    // shift = m*g now lies in the old subgroup; its image must agree.
    return phi_[shift] == shift_image;
  }

  void rollback(std::size_t mark) {
    while (members_.size() > mark) {
      const Elem x = members_.back();
      members_.pop_back();
      used_.erase(phi_[x]);
      phi_[x] = kUnset;
    }
  }

  bool products_match(std::size_t assigned) const {
    for (std::size_t i = 0; i < assigned; ++i) {
      for (std::size_t j = 0; j < assigned; ++j) {
        const Elem p = a_.mul(gens_[i], gens_[j]);
        if (phi_[p] == kUnset) continue;
        if (phi_[p] != b_.mul(phi_[gens_[i]], phi_[gens_[j]])) return false;
      }
    }
    return true;
  }

  const FiniteRing& a_;
  const FiniteRing& b_;
  std::size_t n_;
  std::vector<Signature> sig_a_, sig_b_;
  std::vector<Elem> gens_;
  std::vector<std::vector<Elem>> candidates_;
  std::vector<Elem> phi_;
  ElementSet used_;
  std::vector<Elem> members_;
};

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const FiniteRing& a, const FiniteRing& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (fingerprint(a) != fingerprint(b)) return std::nullopt;
  auto phi = IsoSearch(a, b).run();
  if (phi && !is_isomorphism(a, b, *phi)) {
    throw CrossCheckMismatch("isomorphism search produced a map that is not an isomorphism");
  }
  return phi;
}

bool are_isomorphic(const FiniteRing& a, const FiniteRing& b) {
  return find_isomorphism(a, b).has_value();
}

bool is_isomorphism(const FiniteRing& a, const FiniteRing& b, const std::vector<Elem>& phi) {
  const std::size_t n = a.order();
  if (b.order() != n || phi.size() != n) return false;
  ElementSet image = b.empty_set();
  for (Elem x : phi) {
    if (x >= n || image.contains(x)) return false;
    image.insert(x);
  }
  if (phi[a.one()] != b.one()) return false;
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (phi[a.add(x, y)] != b.add(phi[x], phi[y])) return false;
      if (phi[a.mul(x, y)] != b.mul(phi[x], phi[y])) return false;
    }
  }
  return true;
}

}  // namespace ringlab
