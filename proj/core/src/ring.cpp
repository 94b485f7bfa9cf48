#include "ringlab/ring.hpp"

#include <algorithm>
#include <iostream>
#include <mutex>

namespace ringlab {

Limits& limits() {
  static Limits instance;
  return instance;
}

namespace {

void check_table(const std::vector<std::vector<Elem>>& table, std::size_t n, const char* which) {
  if (table.size() != n) {
    throw DimensionMismatch(std::string(which) + " table has " + std::to_string(table.size()) +
                            " rows, expected " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw DimensionMismatch(std::string(which) + " table row " + std::to_string(i) + " has " +
                              std::to_string(table[i].size()) + " entries, expected " +
                              std::to_string(n));
    }
    for (Elem v : table[i]) {
      if (v >= n) {
        throw DimensionMismatch(std::string(which) + " table entry " + std::to_string(v) +
                                " out of range in row " + std::to_string(i));
      }
    }
  }
}

void warn_large(std::size_t n) {
  static std::once_flag flag;
  std::call_once(flag, [n] {
    std::clog << "ringlab: warning: working with a ring of order " << n
              << " (above " << limits().warn_order << "); expect slow computations\n";
  });
}

}  // namespace

FiniteRing validate_ring(RingTables raw) {
  const std::size_t n = raw.order;
  if (n == 0) throw DimensionMismatch("ring order must be positive");
  if (n > limits().size_cap) throw SizeCapExceeded("ring", n, limits().size_cap);
  if (n > limits().warn_order) warn_large(n);
  check_table(raw.add, n, "add");
  check_table(raw.mul, n, "mul");
  if (raw.zero >= n || raw.one >= n) {
    throw DimensionMismatch("zero/one index outside 0.." + std::to_string(n - 1));
  }
  if (!raw.labels.empty() && raw.labels.size() != n) {
    throw DimensionMismatch("labels list has " + std::to_string(raw.labels.size()) +
                            " entries, expected " + std::to_string(n));
  }

  FiniteRing r;
  r.name_ = std::move(raw.name);
  r.n_ = n;
  r.zero_ = raw.zero;
  r.one_ = raw.one;
  r.add_.resize(n * n);
  r.mul_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(raw.add[i].begin(), raw.add[i].end(), r.add_.begin() + static_cast<std::ptrdiff_t>(i * n));
    std::copy(raw.mul[i].begin(), raw.mul[i].end(), r.mul_.begin() + static_cast<std::ptrdiff_t>(i * n));
  }
  raw.add.clear();
  raw.mul.clear();
  r.custom_labels_ = !raw.labels.empty();
  if (r.custom_labels_) {
    r.labels_ = std::move(raw.labels);
  } else {
    r.labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r.labels_.push_back(std::to_string(i));
  }

  const Elem z = r.zero_;
  const Elem o = r.one_;
  const auto A = [&](Elem a, Elem b) { return r.add_[a * n + b]; };
  const auto M = [&](Elem a, Elem b) { return r.mul_[a * n + b]; };

  // Additive abelian group.
  for (Elem a = 0; a < n; ++a) {
    if (A(z, a) != a || A(a, z) != a) throw AxiomViolation("additive identity", {z, a});
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (A(a, b) != A(b, a)) throw AxiomViolation("additive commutativity", {a, b});
    }
  }
  r.neg_.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n; ++b) {
      if (A(a, b) == z) {
        r.neg_[a] = b;
        found = true;
        break;
      }
    }
    if (!found) throw AxiomViolation("additive inverse", {a});
  }
  // Every element is ((0+g1)+g2)+... for generators g in G; the checks
  // below only need to range over G in one slot.
  std::vector<Elem> gens;
  {
    std::vector<char> reached(n, 0);
    const auto close = [&] {
      std::fill(reached.begin(), reached.end(), 0);
      std::vector<Elem> queue{z};
      reached[z] = 1;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (Elem g : gens) {
          const Elem next = A(queue[i], g);
          if (!reached[next]) {
            reached[next] = 1;
            queue.push_back(next);
          }
        }
      }
    };
    close();
    for (Elem a = 0; a < n; ++a) {
      if (reached[a]) continue;
      gens.push_back(a);
      close();
    }
  }

  // Light's test: (x+g)+y = x+(g+y) for g in a generating set.
  for (Elem g : gens) {
    const Elem* row_g = r.add_.data() + g * n;
    for (Elem x = 0; x < n; ++x) {
      const Elem* row_xg = r.add_.data() + A(x, g) * n;
      const Elem* row_x = r.add_.data() + x * n;
      for (Elem y = 0; y < n; ++y) {
        if (row_xg[y] != row_x[row_g[y]]) throw AxiomViolation("additive associativity", {x, g, y});
      }
    }
  }

  for (Elem a = 0; a < n; ++a) {
    if (M(o, a) != a || M(a, o) != a) throw AxiomViolation("multiplicative identity", {o, a});
  }

  // Distributivity: x -> ax and x -> xa are additive; enough on b + g.
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem g : gens) {
        const Elem bg = A(b, g);
        if (M(a, bg) != A(M(a, b), M(a, g))) throw AxiomViolation("left distributivity", {a, b, g});
        if (M(bg, a) != A(M(b, a), M(g, a))) throw AxiomViolation("right distributivity", {a, b, g});
      }
    }
  }

  // Both sides of (ab)c = a(bc) are additive in c.
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = M(a, b);
      for (Elem g : gens) {
        if (M(ab, g) != M(a, M(b, g))) throw AxiomViolation("multiplicative associativity", {a, b, g});
      }
    }
  }

  if (n > 1 && z == o) throw AxiomViolation("zero differs from one", {z, o});
  return r;
}

RingPtr share(FiniteRing ring) { return std::make_shared<const FiniteRing>(std::move(ring)); }

Elem FiniteRing::power(Elem a, std::size_t k) const noexcept {
  Elem result = one_;
  for (std::size_t i = 0; i < k; ++i) result = mul(result, a);
  return result;
}

Elem FiniteRing::times(std::size_t k, Elem a) const noexcept {
  Elem result = zero_;
  for (std::size_t i = 0; i < k; ++i) result = add(result, a);
  return result;
}

std::size_t FiniteRing::additive_order(Elem a) const noexcept {
  std::size_t k = 1;
  for (Elem x = a; x != zero_; x = add(x, a)) ++k;
  return k;
}

bool FiniteRing::is_commutative() const noexcept {
  for (Elem a = 0; a < n_; ++a) {
    for (Elem b = a + 1; b < n_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

bool FiniteRing::same_tables(const FiniteRing& other) const noexcept {
  return n_ == other.n_ && zero_ == other.zero_ && one_ == other.one_ && add_ == other.add_ &&
         mul_ == other.mul_;
}

FiniteRing FiniteRing::renamed(std::string name) const {
  FiniteRing copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

RingTables FiniteRing::tables() const {
  RingTables t;
  t.name = name_;
  t.order = n_;
  t.zero = zero_;
  t.one = one_;
  t.add.assign(n_, std::vector<Elem>(n_));
  t.mul.assign(n_, std::vector<Elem>(n_));
  for (Elem a = 0; a < n_; ++a) {
    for (Elem b = 0; b < n_; ++b) {
      t.add[a][b] = add(a, b);
      t.mul[a][b] = mul(a, b);
    }
  }
  if (custom_labels_) t.labels = labels_;
  return t;
}

ElementSet units(const FiniteRing& r) {
  ElementSet out = r.empty_set();
  for (Elem u = 0; u < r.order(); ++u) {
    if (inverse(r, u)) out.insert(u);
  }
  return out;
}

std::optional<Elem> inverse(const FiniteRing& r, Elem a) {
  for (Elem v = 0; v < r.order(); ++v) {
    if (r.mul(a, v) == r.one() && r.mul(v, a) == r.one()) return v;
  }
  return std::nullopt;
}

ElementSet idempotents(const FiniteRing& r) {
  ElementSet out = r.empty_set();
  for (Elem e = 0; e < r.order(); ++e) {
    if (r.mul(e, e) == e) out.insert(e);
  }
  return out;
}

bool is_nilpotent(const FiniteRing& r, Elem a) {
  // The powers of a cycle within order(R) steps.
  Elem x = a;
  for (std::size_t k = 1; k <= r.order(); ++k) {
    if (x == r.zero()) return true;
    x = r.mul(x, a);
  }
  return x == r.zero();
}

ElementSet nilpotents(const FiniteRing& r) {
  ElementSet out = r.empty_set();
  for (Elem a = 0; a < r.order(); ++a) {
    if (is_nilpotent(r, a)) out.insert(a);
  }
  return out;
}

bool is_central(const FiniteRing& r, Elem a) {
  for (Elem x = 0; x < r.order(); ++x) {
    if (r.mul(a, x) != r.mul(x, a)) return false;
  }
  return true;
}

ElementSet center(const FiniteRing& r) {
  ElementSet out = r.empty_set();
  for (Elem a = 0; a < r.order(); ++a) {
    if (is_central(r, a)) out.insert(a);
  }
  return out;
}

std::size_t characteristic(const FiniteRing& r) { return r.additive_order(r.one()); }

ElementSet left_annihilator(const FiniteRing& r, Elem a) {
  ElementSet out = r.empty_set();
  for (Elem x = 0; x < r.order(); ++x) {
    if (r.mul(x, a) == r.zero()) out.insert(x);
  }
  return out;
}

ElementSet right_annihilator(const FiniteRing& r, Elem a) {
  ElementSet out = r.empty_set();
  const auto row = r.mul_row(a);
  for (Elem x = 0; x < r.order(); ++x) {
    if (row[x] == r.zero()) out.insert(x);
  }
  return out;
}

ElementSet commutant(const FiniteRing& r, Elem a) {
  ElementSet out = r.empty_set();
  for (Elem x = 0; x < r.order(); ++x) {
    if (r.mul(x, a) == r.mul(a, x)) out.insert(x);
  }
  return out;
}

ElementSet double_commutant(const FiniteRing& r, Elem a) {
  const std::vector<Elem> comm = commutant(r, a).elements();
  ElementSet out = r.empty_set();
  for (Elem x = 0; x < r.order(); ++x) {
    bool ok = true;
    for (Elem y : comm) {
      if (r.mul(x, y) != r.mul(y, x)) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(x);
  }
  return out;
}

bool is_additive_subgroup(const FiniteRing& r, const ElementSet& s) {
  if (!s.contains(r.zero())) return false;
  const std::vector<Elem> elems = s.elements();
  for (Elem a : elems) {
    if (!s.contains(r.neg(a))) return false;
    for (Elem b : elems) {
      if (!s.contains(r.add(a, b))) return false;
    }
  }
  return true;
}

bool is_right_ideal(const FiniteRing& r, const ElementSet& s) {
  if (!is_additive_subgroup(r, s)) return false;
  bool ok = true;
  s.for_each([&](Elem a) {
    if (!ok) return;
    for (Elem x : r.mul_row(a)) {
      if (!s.contains(x)) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

bool is_left_ideal(const FiniteRing& r, const ElementSet& s) {
  if (!is_additive_subgroup(r, s)) return false;
  bool ok = true;
  s.for_each([&](Elem a) {
    if (!ok) return;
    for (Elem x = 0; x < r.order(); ++x) {
      if (!s.contains(r.mul(x, a))) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

bool is_two_sided_ideal(const FiniteRing& r, const ElementSet& s) {
  return is_right_ideal(r, s) && is_left_ideal(r, s);
}

ElementSet additive_closure(const FiniteRing& r, std::span<const Elem> seeds) {
  ElementSet set = r.zero_set();
  std::vector<Elem> members{r.zero()};
  for (Elem g : seeds) {
    if (set.contains(g)) continue;
    // Adjoin g: the new subgroup is the union of cosets S + k*g.
    const std::size_t base = members.size();
    Elem shift = g;
    while (!set.contains(shift)) {
      for (std::size_t i = 0; i < base; ++i) {
        const Elem x = r.add(members[i], shift);
        set.insert(x);
        members.push_back(x);
      }
      shift = r.add(shift, g);
    }
  }
  return set;
}

}  // namespace ringlab
