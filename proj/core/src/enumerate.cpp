#include "ringlab/enumerate.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "ringlab/constructions.hpp"
#include "ringlab/isomorphism.hpp"

namespace ringlab {

namespace {

std::vector<std::vector<std::size_t>> partitions(std::size_t n, std::size_t max_part) {
  if (n == 0) return {{}};
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t first = std::min(n, max_part); first >= 1; --first) {
    for (auto rest : partitions(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

/// Structure constants over Z_{d1} x ... x Z_{dr} with basis e_0 = 1.
class StructureSearch {
 public:
  StructureSearch(std::vector<std::size_t> factors, std::size_t order,
                  const std::function<void(FiniteRing)>& sink)
      : d_(std::move(factors)), r_(d_.size()), codec_(d_), order_(order), sink_(sink) {
    product_.assign(r_ * r_, std::nullopt);
    for (std::size_t j = 0; j < r_; ++j) {
      product_[0 * r_ + j] = unit_vector(j);
      product_[j * r_ + 0] = unit_vector(j);
    }
    for (std::size_t i = 1; i < r_; ++i) {
      for (std::size_t j = 1; j < r_; ++j) slots_.emplace_back(i, j);
    }
  }

  void run() { assign(0); }

 private:
  using Vec = std::vector<std::size_t>;

  Vec unit_vector(std::size_t j) const {
    Vec v(r_, 0);
    v[j] = 1 % d_[j];
    return v;
  }

  /// Elements x with d * x = 0.
  std::vector<Vec> torsion(std::size_t d) const {
    std::vector<Vec> out;
    for (Elem idx = 0; idx < codec_.total(); ++idx) {
      const auto digits = codec_.decode(idx);
      bool ok = true;
      for (std::size_t l = 0; l < r_; ++l) {
        if ((d * digits[l]) % d_[l] != 0) ok = false;
      }
      if (ok) out.emplace_back(digits.begin(), digits.end());
    }
    return out;
  }

  Vec add(const Vec& x, const Vec& y) const {
    Vec out(r_);
    for (std::size_t l = 0; l < r_; ++l) out[l] = (x[l] + y[l]) % d_[l];
    return out;
  }

  Vec scale(std::size_t k, const Vec& x) const {
    Vec out(r_);
    for (std::size_t l = 0; l < r_; ++l) out[l] = (k * x[l]) % d_[l];
    return out;
  }

  /// x * y by bilinearity, or nullopt if a needed product is unassigned.
  std::optional<Vec> mul(const Vec& x, const Vec& y) const {
    Vec acc(r_, 0);
    for (std::size_t i = 0; i < r_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < r_; ++j) {
        if (y[j] == 0) continue;
        const auto& p = product_[i * r_ + j];
        if (!p) return std::nullopt;
        acc = add(acc, scale(x[i] * y[j], *p));
      }
    }
    return acc;
  }

  /// False when some decidable associativity instance on generators fails.
  bool consistent() const {
    for (std::size_t a = 1; a < r_; ++a) {
      for (std::size_t b = 1; b < r_; ++b) {
        for (std::size_t c = 1; c < r_; ++c) {
          const auto ab = mul(unit_vector(a), unit_vector(b));
          const auto bc = mul(unit_vector(b), unit_vector(c));
          if (!ab || !bc) continue;
          const auto left = mul(*ab, unit_vector(c));
          const auto right = mul(unit_vector(a), *bc);
          if (left && right && *left != *right) return false;
        }
      }
    }
    return true;
  }

  void assign(std::size_t k) {
    if (k == slots_.size()) {
      emit();
      return;
    }
    const auto [i, j] = slots_[k];
    // e_i e_j is killed by both d_i and d_j; the smaller factor divides the larger.
    for (const Vec& v : torsion(std::min(d_[i], d_[j]))) {
      product_[i * r_ + j] = v;
      if (consistent()) assign(k + 1);
    }
    product_[i * r_ + j] = std::nullopt;
  }

  void emit() {
    const std::size_t n = codec_.total();
    RingTables raw;
    raw.order = n;
    raw.zero = 0;
    const Vec one = unit_vector(0);
    raw.one = codec_.encode(std::vector<Elem>(one.begin(), one.end()));
    raw.add.assign(n, std::vector<Elem>(n));
    raw.mul.assign(n, std::vector<Elem>(n));
    std::vector<Vec> coords(n);
    for (Elem idx = 0; idx < n; ++idx) {
      const auto digits = codec_.decode(idx);
      coords[idx] = Vec(digits.begin(), digits.end());
    }
    const auto encode = [&](const Vec& v) {
      return codec_.encode(std::vector<Elem>(v.begin(), v.end()));
    };
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        raw.add[x][y] = encode(add(coords[x], coords[y]));
        raw.mul[x][y] = encode(*mul(coords[x], coords[y]));
      }
    }
    if (r_ > 1) {
      for (Elem x = 0; x < n; ++x) {
        std::string s = "(";
        for (std::size_t l = 0; l < r_; ++l) s += (l ? "," : "") + std::to_string(coords[x][l]);
        raw.labels.push_back(s + ")");
      }
    }
    raw.name = "Enum(" + std::to_string(order_) + ")";
    sink_(validate_ring(std::move(raw)));
  }

  std::vector<std::size_t> d_;
  std::size_t r_;
  MixedRadix codec_;
  std::size_t order_;
  const std::function<void(FiniteRing)>& sink_;
  std::vector<std::optional<Vec>> product_;
  std::vector<std::pair<std::size_t, std::size_t>> slots_;
};

}  // namespace

std::vector<std::vector<std::size_t>> abelian_group_types(std::size_t order) {
  if (order == 0) throw DimensionMismatch("group order must be positive");
  std::vector<std::pair<std::size_t, std::size_t>> primes;  // (p, exponent)
  std::size_t rest = order;
  for (std::size_t p = 2; p * p <= rest; ++p) {
    std::size_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e) primes.emplace_back(p, e);
  }
  if (rest > 1) primes.emplace_back(rest, 1);

  std::vector<std::vector<std::size_t>> types{{}};
  for (const auto& [p, e] : primes) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& t : types) {
      for (const auto& part : partitions(e, e)) {
        std::vector<std::size_t> merged(std::max(t.size(), part.size()), 1);
        for (std::size_t i = 0; i < merged.size(); ++i) {
          merged[i] = (i < t.size() ? t[i] : 1) * (i < part.size() ? ipow(p, part[i]) : 1);
        }
        next.push_back(std::move(merged));
      }
    }
    types = std::move(next);
  }
  if (order == 1) return {{1}};
  return types;
}

void enumerate_unital_rings(std::size_t order, bool up_to_iso,
                            const std::function<void(FiniteRing)>& sink) {
  if (order == 0) throw DimensionMismatch("ring order must be positive");
  if (order > kMaxEnumerationOrder) {
    throw SizeCapExceeded("enumeration", order, kMaxEnumerationOrder);
  }
  std::size_t counter = 0;
  std::map<Fingerprint, std::vector<FiniteRing>> seen;
  const std::function<void(FiniteRing)> collect = [&](FiniteRing ring) {
    if (up_to_iso) {
      auto& bucket = seen[fingerprint(ring)];
      for (const auto& other : bucket) {
        if (are_isomorphic(other, ring)) return;
      }
      bucket.push_back(ring);
    }
    ring = ring.renamed("Enum(" + std::to_string(order) + "," + std::to_string(counter++) + ")");
    sink(std::move(ring));
  };
  for (const auto& factors : abelian_group_types(order)) {
    StructureSearch(factors, order, collect).run();
  }
}

std::vector<FiniteRing> enumerate_unital_rings(std::size_t order, bool up_to_iso) {
  std::vector<FiniteRing> out;
  enumerate_unital_rings(order, up_to_iso, [&](FiniteRing r) { out.push_back(std::move(r)); });
  return out;
}

}  // namespace ringlab
