#include "ringlab/constructions.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace ringlab {

MixedRadix::MixedRadix(std::vector<std::size_t> radices) : radices_(std::move(radices)) {
  total_ = 1;
  for (std::size_t r : radices_) total_ *= r;
}

MixedRadix::MixedRadix(std::size_t radix, std::size_t length)
    : MixedRadix(std::vector<std::size_t>(length, radix)) {}

Elem MixedRadix::encode(std::span<const Elem> digits) const {
  std::size_t index = 0;
  for (std::size_t i = 0; i < radices_.size(); ++i) index = index * radices_[i] + digits[i];
  return static_cast<Elem>(index);
}

std::vector<Elem> MixedRadix::decode(Elem index) const {
  std::vector<Elem> digits(radices_.size());
  std::size_t rest = index;
  for (std::size_t i = radices_.size(); i-- > 0;) {
    digits[i] = static_cast<Elem>(rest % radices_[i]);
    rest /= radices_[i];
  }
  return digits;
}

std::size_t checked_order(const std::string& what, std::span<const std::size_t> factors) {
  const std::size_t cap = limits().size_cap;
  std::size_t total = 1;
  bool overflow = false;
  for (std::size_t f : factors) {
    overflow = overflow || __builtin_mul_overflow(total, f, &total);
  }
  if (overflow) throw SizeCapExceeded(what, std::numeric_limits<std::size_t>::max(), cap);
  if (total > cap) throw SizeCapExceeded(what, total, cap);
  return total;
}

namespace {

/// Builds the tables of a ring whose elements are coordinate tuples.
/// `op(x, y, out)` fills `out` with the coordinates of x+y or x*y.
template <typename AddOp, typename MulOp, typename LabelOp>
FiniteRing build_ring(std::string name, const MixedRadix& codec, std::span<const Elem> zero,
                      std::span<const Elem> one, AddOp add_op, MulOp mul_op, LabelOp label_op) {
  const std::size_t n = codec.total();
  const std::size_t len = codec.length();
  std::vector<Elem> coords(n * len);
  for (Elem i = 0; i < n; ++i) {
    const auto d = codec.decode(i);
    std::copy(d.begin(), d.end(), coords.begin() + static_cast<std::ptrdiff_t>(i * len));
  }
  const auto tuple = [&](Elem i) { return std::span<const Elem>(coords.data() + i * len, len); };

  RingTables raw;
  raw.name = std::move(name);
  raw.order = n;
  raw.zero = codec.encode(zero);
  raw.one = codec.encode(one);
  raw.add.assign(n, std::vector<Elem>(n));
  raw.mul.assign(n, std::vector<Elem>(n));
  std::vector<Elem> out(len);
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      add_op(tuple(i), tuple(j), std::span<Elem>(out));
      raw.add[i][j] = codec.encode(out);
      mul_op(tuple(i), tuple(j), std::span<Elem>(out));
      raw.mul[i][j] = codec.encode(out);
    }
  }
  raw.labels.reserve(n);
  for (Elem i = 0; i < n; ++i) raw.labels.push_back(label_op(tuple(i)));
  return validate_ring(std::move(raw));
}

std::string matrix_label(const FiniteRing& base, std::size_t rows, std::size_t cols,
                         const std::vector<Elem>& entries) {
  std::string s = "[";
  for (std::size_t i = 0; i < rows; ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < cols; ++j) {
      if (j) s += ",";
      s += base.label(entries[i * cols + j]);
    }
    s += "]";
  }
  return s + "]";
}

void require_central_unit(const FiniteRing& r, Elem x, const char* which) {
  if (x >= r.order()) throw DimensionMismatch(std::string(which) + " is not an element index");
  if (!is_central(r, x) || !inverse(r, x)) {
    throw NotCentralUnit(std::string(which) + " = " + std::to_string(x) +
                         " is not a central unit of " + r.name());
  }
}

/// Product of two row-major k x k matrices over r.
void matmul(const FiniteRing& r, std::size_t k, std::span<const Elem> x, std::span<const Elem> y,
            std::span<Elem> out) {
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Elem acc = r.zero();
      for (std::size_t l = 0; l < k; ++l) acc = r.add(acc, r.mul(x[i * k + l], y[l * k + j]));
      out[i * k + j] = acc;
    }
  }
}

}  // namespace

FiniteRing make_zn(std::size_t k) {
  if (k == 0) throw DimensionMismatch("Zn requires k >= 1");
  if (k > limits().size_cap) throw SizeCapExceeded("Zn", k, limits().size_cap);
  RingTables raw;
  raw.name = "Zn(" + std::to_string(k) + ")";
  raw.order = k;
  raw.zero = 0;
  raw.one = static_cast<Elem>(1 % k);
  raw.add.assign(k, std::vector<Elem>(k));
  raw.mul.assign(k, std::vector<Elem>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      raw.add[a][b] = static_cast<Elem>((a + b) % k);
      raw.mul[a][b] = static_cast<Elem>((a * b) % k);
    }
  }
  return validate_ring(std::move(raw));
}

FiniteRing direct_product(std::span<const RingPtr> parts) {
  if (parts.empty()) throw DimensionMismatch("direct product needs at least one factor");
  std::vector<std::size_t> radices;
  std::string name = "Prod(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    radices.push_back(parts[i]->order());
    name += (i ? "," : "") + parts[i]->name();
  }
  name += ")";
  checked_order(name, radices);
  if (parts.size() == 1) return parts[0]->renamed(name);

  const MixedRadix codec(radices);
  std::vector<Elem> zero, one;
  for (const auto& p : parts) {
    zero.push_back(p->zero());
    one.push_back(p->one());
  }
  return build_ring(
      name, codec, zero, one,
      [&](auto x, auto y, std::span<Elem> out) {
        for (std::size_t i = 0; i < parts.size(); ++i) out[i] = parts[i]->add(x[i], y[i]);
      },
      [&](auto x, auto y, std::span<Elem> out) {
        for (std::size_t i = 0; i < parts.size(); ++i) out[i] = parts[i]->mul(x[i], y[i]);
      },
      [&](auto x) {
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i]->label(x[i]);
        return s + ")";
      });
}

FiniteRing direct_product(const FiniteRing& a, const FiniteRing& b) {
  const std::vector<RingPtr> parts{std::make_shared<const FiniteRing>(a),
                                   std::make_shared<const FiniteRing>(b)};
  return direct_product(parts);
}

FiniteRing matrix_ring(std::size_t n, const FiniteRing& base) {
  if (n == 0) throw DimensionMismatch("matrix size must be >= 1");
  const std::string name = "M(" + std::to_string(n) + "," + base.name() + ")";
  const std::vector<std::size_t> radices(n * n, base.order());
  checked_order(name, radices);
  if (n == 1) return base.renamed(name);

  const MixedRadix codec(radices);
  std::vector<Elem> zero(n * n, base.zero());
  std::vector<Elem> one(n * n, base.zero());
  for (std::size_t i = 0; i < n; ++i) one[i * n + i] = base.one();
  return build_ring(
      name, codec, zero, one,
      [&](auto x, auto y, std::span<Elem> out) {
        for (std::size_t i = 0; i < n * n; ++i) out[i] = base.add(x[i], y[i]);
      },
      [&](auto x, auto y, std::span<Elem> out) { matmul(base, n, x, y, out); },
      [&](auto x) { return matrix_label(base, n, n, std::vector<Elem>(x.begin(), x.end())); });
}

Elem matrix_element(const FiniteRing& base, std::size_t n, std::span<const Elem> entries) {
  if (entries.size() != n * n) throw DimensionMismatch("matrix_element needs n*n entries");
  return MixedRadix(base.order(), n * n).encode(entries);
}

std::vector<Elem> matrix_entries(const FiniteRing& base, std::size_t n, Elem index) {
  return MixedRadix(base.order(), n * n).decode(index);
}

FiniteRing upper_triangular_ring(std::size_t n, const FiniteRing& base) {
  if (n == 0) throw DimensionMismatch("matrix size must be >= 1");
  const std::string name = "T(" + std::to_string(n) + "," + base.name() + ")";
  const std::size_t slots = n * (n + 1) / 2;
  const std::vector<std::size_t> radices(slots, base.order());
  checked_order(name, radices);
  if (n == 1) return base.renamed(name);

  // slot[i][j] for i <= j, row-major.
  std::vector<std::size_t> slot(n * n, 0);
  for (std::size_t i = 0, k = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) slot[i * n + j] = k++;
  }
  const auto expand = [&](std::span<const Elem> x) {
    std::vector<Elem> full(n * n, base.zero());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) full[i * n + j] = x[slot[i * n + j]];
    }
    return full;
  };

  const MixedRadix codec(radices);
  std::vector<Elem> zero(slots, base.zero());
  std::vector<Elem> one(slots, base.zero());
  for (std::size_t i = 0; i < n; ++i) one[slot[i * n + i]] = base.one();
  std::vector<Elem> prod(n * n);
  return build_ring(
      name, codec, zero, one,
      [&](auto x, auto y, std::span<Elem> out) {
        for (std::size_t i = 0; i < slots; ++i) out[i] = base.add(x[i], y[i]);
      },
      [&](auto x, auto y, std::span<Elem> out) {
        const auto fx = expand(x);
        const auto fy = expand(y);
        matmul(base, n, fx, fy, prod);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (j < i && prod[i * n + j] != base.zero()) {
              throw ClosureViolation("triangular product left the triangular shape");
            }
            if (j >= i) out[slot[i * n + j]] = prod[i * n + j];
          }
        }
      },
      [&](auto x) { return matrix_label(base, n, n, expand(x)); });
}

CornerRing corner_ring(const FiniteRing& r, Elem e) {
  if (e >= r.order()) throw DimensionMismatch("idempotent index out of range");
  if (r.mul(e, e) != e) {
    throw NotIdempotent("element " + std::to_string(e) + " of " + r.name() + " is not idempotent");
  }
  ElementSet members = r.empty_set();
  for (Elem x = 0; x < r.order(); ++x) members.insert(r.mul(r.mul(e, x), e));
  std::vector<Elem> embedding = members.elements();
  std::vector<Elem> index(r.order(), 0);
  for (Elem i = 0; i < embedding.size(); ++i) index[embedding[i]] = i;

  const std::size_t m = embedding.size();
  RingTables raw;
  raw.name = "Corner(" + r.name() + ",e=" + std::to_string(e) + ")";
  raw.order = m;
  raw.zero = index[r.zero()];
  raw.one = index[e];
  raw.add.assign(m, std::vector<Elem>(m));
  raw.mul.assign(m, std::vector<Elem>(m));
  for (Elem i = 0; i < m; ++i) {
    for (Elem j = 0; j < m; ++j) {
      const Elem s = r.add(embedding[i], embedding[j]);
      const Elem p = r.mul(embedding[i], embedding[j]);
      if (!members.contains(s) || !members.contains(p)) {
        throw ClosureViolation("eRe is not closed under the ring operations");
      }
      raw.add[i][j] = index[s];
      raw.mul[i][j] = index[p];
    }
  }
  for (Elem x : embedding) raw.labels.push_back(r.label(x));
  return CornerRing{validate_ring(std::move(raw)), std::move(embedding)};
}

QuotientRing quotient_ring(const FiniteRing& r, const ElementSet& ideal) {
  if (ideal.universe() != r.order() || !is_two_sided_ideal(r, ideal)) {
    throw NotTwoSidedIdeal("quotient requires a two-sided ideal of " + r.name());
  }
  const std::vector<Elem> members = ideal.elements();
  constexpr Elem unassigned = std::numeric_limits<Elem>::max();
  std::vector<Elem> projection(r.order(), unassigned);
  std::vector<Elem> reps;
  for (Elem x = 0; x < r.order(); ++x) {
    if (projection[x] != unassigned) continue;
    const Elem coset = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem i : members) projection[r.add(x, i)] = coset;
  }
  const std::size_t m = reps.size();
  RingTables raw;
  raw.name = "Quot(" + r.name() + ",|I|=" + std::to_string(members.size()) + ")";
  raw.order = m;
  raw.zero = projection[r.zero()];
  raw.one = projection[r.one()];
  raw.add.assign(m, std::vector<Elem>(m));
  raw.mul.assign(m, std::vector<Elem>(m));
  for (Elem i = 0; i < m; ++i) {
    for (Elem j = 0; j < m; ++j) {
      raw.add[i][j] = projection[r.add(reps[i], reps[j])];
      raw.mul[i][j] = projection[r.mul(reps[i], reps[j])];
    }
  }
  for (Elem x : reps) raw.labels.push_back("[" + r.label(x) + "]");
  return QuotientRing{validate_ring(std::move(raw)), std::move(projection), std::move(reps)};
}

std::vector<Elem> hst_matrix(const FiniteRing& r, Elem s, Elem t, Elem index) {
  const auto ced = MixedRadix(r.order(), 3).decode(index);
  const Elem c = ced[0], d = ced[1], e = ced[2];
  const Elem z = r.zero();
  const Elem a = r.add(d, r.mul(s, c));
  const Elem f = r.sub(d, r.mul(t, e));
  return {a, z, z, c, d, e, z, z, f};
}

std::vector<Elem> lst_matrix(const FiniteRing& r, Elem s, Elem t, Elem index) {
  const auto v = MixedRadix(r.order(), 5).decode(index);
  const Elem z = r.zero();
  return {v[0], z, z, r.mul(s, v[1]), v[2], r.mul(t, v[3]), z, z, v[4]};
}

FiniteRing hst_ring(const FiniteRing& r, Elem s, Elem t) {
  require_central_unit(r, s, "s");
  require_central_unit(r, t, "t");
  const std::string name = "Hst(" + r.name() + ",s=" + std::to_string(s) + ",t=" +
                           std::to_string(t) + ")";
  const std::vector<std::size_t> radices(3, r.order());
  checked_order(name, radices);
  const MixedRadix codec(radices);
  const Elem z = r.zero();
  const auto to_matrix = [&](std::span<const Elem> x) {
    const Elem a = r.add(x[1], r.mul(s, x[0]));
    const Elem f = r.sub(x[1], r.mul(t, x[2]));
    return std::vector<Elem>{a, z, z, x[0], x[1], x[2], z, z, f};
  };
  std::vector<Elem> prod(9);
  const std::vector<Elem> zero{z, z, z};
  const std::vector<Elem> one{z, r.one(), z};
  return build_ring(
      name, codec, zero, one,
      [&](auto x, auto y, std::span<Elem> out) {
        for (std::size_t i = 0; i < 3; ++i) out[i] = r.add(x[i], y[i]);
      },
      [&](auto x, auto y, std::span<Elem> out) {
        matmul(r, 3, to_matrix(x), to_matrix(y), prod);
        out[0] = prod[3];
        out[1] = prod[4];
        out[2] = prod[5];
        // The product must again have the H shape.
        if (to_matrix(std::span<const Elem>(out.data(), 3)) != prod) {
          throw ClosureViolation("H_(s,t) product left the subring");
        }
      },
      [&](auto x) { return matrix_label(r, 3, 3, to_matrix(x)); });
}

FiniteRing lst_ring(const FiniteRing& r, Elem s, Elem t) {
  require_central_unit(r, s, "s");
  require_central_unit(r, t, "t");
  const std::string name = "Lst(" + r.name() + ",s=" + std::to_string(s) + ",t=" +
                           std::to_string(t) + ")";
  const std::vector<std::size_t> radices(5, r.order());
  checked_order(name, radices);
  const MixedRadix codec(radices);
  const Elem z = r.zero();
  const Elem s_inv = *inverse(r, s);
  const Elem t_inv = *inverse(r, t);
  const auto to_matrix = [&](std::span<const Elem> x) {
    return std::vector<Elem>{x[0], z, z, r.mul(s, x[1]), x[2], r.mul(t, x[3]), z, z, x[4]};
  };
  std::vector<Elem> prod(9);
  const std::vector<Elem> zero(5, z);
  const std::vector<Elem> one{r.one(), z, r.one(), z, r.one()};
  return build_ring(
      name, codec, zero, one,
      [&](auto x, auto y, std::span<Elem> out) {
        for (std::size_t i = 0; i < 5; ++i) out[i] = r.add(x[i], y[i]);
      },
      [&](auto x, auto y, std::span<Elem> out) {
        matmul(r, 3, to_matrix(x), to_matrix(y), prod);
        out[0] = prod[0];
        out[1] = r.mul(s_inv, prod[3]);
        out[2] = prod[4];
        out[3] = r.mul(t_inv, prod[5]);
        out[4] = prod[8];
        if (to_matrix(std::span<const Elem>(out.data(), 5)) != prod) {
          throw ClosureViolation("L_(s,t) product left the subring");
        }
      },
      [&](auto x) { return matrix_label(r, 3, 3, to_matrix(x)); });
}

FiniteRing ks_ring(const FiniteRing& r, Elem s) {
  if (s >= r.order()) throw DimensionMismatch("s is not an element index");
  if (!is_central(r, s)) {
    throw NotCentral("s = " + std::to_string(s) + " is not central in " + r.name());
  }
  const std::string name = s == r.zero() ? "K0(" + r.name() + ")"
                                         : "Ks(" + r.name() + ",s=" + std::to_string(s) + ")";
  const std::vector<std::size_t> radices(4, r.order());
  checked_order(name, radices);
  const MixedRadix codec(radices);
  const Elem z = r.zero();
  const std::vector<Elem> zero(4, z);
  const std::vector<Elem> one{r.one(), z, z, r.one()};
  return build_ring(
      name, codec, zero, one,
      [&](auto x, auto y, std::span<Elem> out) {
        for (std::size_t i = 0; i < 4; ++i) out[i] = r.add(x[i], y[i]);
      },
      [&](auto x, auto y, std::span<Elem> out) {
        // x = (a1, x1, y1, b1), y = (a2, x2, y2, b2)
        out[0] = r.add(r.mul(x[0], y[0]), r.mul(s, r.mul(x[1], y[2])));
        out[1] = r.add(r.mul(x[0], y[1]), r.mul(x[1], y[3]));
        out[2] = r.add(r.mul(x[2], y[0]), r.mul(x[3], y[2]));
        out[3] = r.add(r.mul(s, r.mul(x[2], y[1])), r.mul(x[3], y[3]));
      },
      [&](auto x) { return matrix_label(r, 2, 2, std::vector<Elem>(x.begin(), x.end())); });
}

Bimodule self_bimodule(const FiniteRing& r) {
  Bimodule m;
  m.name = "self";
  m.order = r.order();
  m.zero = r.zero();
  const std::size_t n = r.order();
  m.add.resize(n * n);
  m.left.resize(n * n);
  m.right.resize(n * n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      m.add[a * n + b] = r.add(a, b);
      m.left[a * n + b] = r.mul(a, b);
      m.right[a * n + b] = r.mul(a, b);
    }
  }
  m.labels = r.labels();
  return m;
}

Bimodule zero_bimodule(const FiniteRing& left, const FiniteRing& right) {
  Bimodule m;
  m.name = "zero";
  m.order = 1;
  m.zero = 0;
  m.add = {0};
  m.left.assign(left.order(), 0);
  m.right.assign(right.order(), 0);
  m.labels = {"0"};
  return m;
}

void validate_bimodule(const Bimodule& m, const FiniteRing& left, const FiniteRing& right) {
  const std::size_t k = m.order;
  const std::size_t ns = left.order();
  const std::size_t nt = right.order();
  if (k == 0 || m.add.size() != k * k || m.left.size() != ns * k || m.right.size() != k * nt ||
      m.zero >= k) {
    throw DimensionMismatch("bimodule tables have the wrong shape");
  }
  if (!m.labels.empty() && m.labels.size() != k) {
    throw DimensionMismatch("bimodule labels have the wrong length");
  }
  for (Elem v : m.add) {
    if (v >= k) throw DimensionMismatch("bimodule add entry out of range");
  }
  for (Elem v : m.left) {
    if (v >= k) throw DimensionMismatch("bimodule left action entry out of range");
  }
  for (Elem v : m.right) {
    if (v >= k) throw DimensionMismatch("bimodule right action entry out of range");
  }
  const auto A = [&](Elem x, Elem y) { return m.add[x * k + y]; };
  const auto L = [&](Elem s, Elem x) { return m.left[s * k + x]; };
  const auto R = [&](Elem x, Elem t) { return m.right[x * nt + t]; };

  for (Elem x = 0; x < k; ++x) {
    if (A(m.zero, x) != x) throw BimoduleAxiomViolation("module additive identity", {x});
    bool has_inverse = false;
    for (Elem y = 0; y < k; ++y) {
      if (A(x, y) != A(y, x)) throw BimoduleAxiomViolation("module additive commutativity", {x, y});
      if (A(x, y) == m.zero) has_inverse = true;
      for (Elem z = 0; z < k; ++z) {
        if (A(A(x, y), z) != A(x, A(y, z))) {
          throw BimoduleAxiomViolation("module additive associativity", {x, y, z});
        }
      }
    }
    if (!has_inverse) throw BimoduleAxiomViolation("module additive inverse", {x});
  }
  for (Elem x = 0; x < k; ++x) {
    if (L(left.one(), x) != x) throw BimoduleAxiomViolation("left unital action", {x});
    if (R(x, right.one()) != x) throw BimoduleAxiomViolation("right unital action", {x});
  }
  for (Elem s = 0; s < ns; ++s) {
    for (Elem x = 0; x < k; ++x) {
      for (Elem y = 0; y < k; ++y) {
        if (L(s, A(x, y)) != A(L(s, x), L(s, y))) {
          throw BimoduleAxiomViolation("left action additive in module", {s, x, y});
        }
      }
      for (Elem s2 = 0; s2 < ns; ++s2) {
        if (L(left.add(s, s2), x) != A(L(s, x), L(s2, x))) {
          throw BimoduleAxiomViolation("left action additive in ring", {s, s2, x});
        }
        if (L(left.mul(s, s2), x) != L(s, L(s2, x))) {
          throw BimoduleAxiomViolation("left action associative", {s, s2, x});
        }
      }
      for (Elem t = 0; t < nt; ++t) {
        if (R(L(s, x), t) != L(s, R(x, t))) {
          throw BimoduleAxiomViolation("actions commute", {s, x, t});
        }
      }
    }
  }
  for (Elem t = 0; t < nt; ++t) {
    for (Elem x = 0; x < k; ++x) {
      for (Elem y = 0; y < k; ++y) {
        if (R(A(x, y), t) != A(R(x, t), R(y, t))) {
          throw BimoduleAxiomViolation("right action additive in module", {x, y, t});
        }
      }
      for (Elem t2 = 0; t2 < nt; ++t2) {
        if (R(x, right.add(t, t2)) != A(R(x, t), R(x, t2))) {
          throw BimoduleAxiomViolation("right action additive in ring", {x, t, t2});
        }
        if (R(x, right.mul(t, t2)) != R(R(x, t), t2)) {
          throw BimoduleAxiomViolation("right action associative", {x, t, t2});
        }
      }
    }
  }
}

namespace {

std::string module_label(const Bimodule& m, Elem x) {
  return m.labels.empty() ? std::to_string(x) : m.labels[x];
}

}  // namespace

FiniteRing formal_triangular(const FiniteRing& s, const FiniteRing& t, const Bimodule& m) {
  validate_bimodule(m, s, t);
  std::string name = "Tri(" + s.name() + "," + t.name();
  if (m.name != "self") name += ",M=" + m.name;
  name += ")";
  const std::vector<std::size_t> radices{s.order(), m.order, t.order()};
  checked_order(name, radices);
  const MixedRadix codec(radices);
  const std::size_t nt = t.order();
  const std::size_t k = m.order;
  const std::vector<Elem> zero{s.zero(), m.zero, t.zero()};
  const std::vector<Elem> one{s.one(), m.zero, t.one()};
  return build_ring(
      name, codec, zero, one,
      [&](auto x, auto y, std::span<Elem> out) {
        out[0] = s.add(x[0], y[0]);
        out[1] = m.plus(x[1], y[1]);
        out[2] = t.add(x[2], y[2]);
      },
      [&](auto x, auto y, std::span<Elem> out) {
        out[0] = s.mul(x[0], y[0]);
        out[1] = m.plus(m.left[x[0] * k + y[1]], m.right[x[1] * nt + y[2]]);
        out[2] = t.mul(x[2], y[2]);
      },
      [&](auto x) {
        return "[[" + s.label(x[0]) + "," + module_label(m, x[1]) + "],[0," + t.label(x[2]) + "]]";
      });
}

FiniteRing trivial_morita(const FiniteRing& a, const FiniteRing& b, const Bimodule& m,
                          const Bimodule& n) {
  validate_bimodule(m, a, b);
  validate_bimodule(n, b, a);
  std::string name = "Morita(" + a.name() + "," + b.name();
  if (m.name != "self" || n.name != "self") name += ",M=" + m.name + ",N=" + n.name;
  name += ")";
  const std::vector<std::size_t> radices{a.order(), m.order, n.order, b.order()};
  checked_order(name, radices);
  const MixedRadix codec(radices);
  const std::size_t km = m.order;
  const std::size_t kn = n.order;
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  const std::vector<Elem> zero{a.zero(), m.zero, n.zero, b.zero()};
  const std::vector<Elem> one{a.one(), m.zero, n.zero, b.one()};
  return build_ring(
      name, codec, zero, one,
      [&](auto x, auto y, std::span<Elem> out) {
        out[0] = a.add(x[0], y[0]);
        out[1] = m.plus(x[1], y[1]);
        out[2] = n.plus(x[2], y[2]);
        out[3] = b.add(x[3], y[3]);
      },
      [&](auto x, auto y, std::span<Elem> out) {
        // Context products MN and NM vanish.
        out[0] = a.mul(x[0], y[0]);
        out[1] = m.plus(m.left[x[0] * km + y[1]], m.right[x[1] * nb + y[3]]);
        out[2] = n.plus(n.right[x[2] * na + y[0]], n.left[x[3] * kn + y[2]]);
        out[3] = b.mul(x[3], y[3]);
      },
      [&](auto x) {
        return "[[" + a.label(x[0]) + "," + module_label(m, x[1]) + "],[" + module_label(n, x[2]) +
               "," + b.label(x[3]) + "]]";
      });
}

std::vector<Elem> central_units(const FiniteRing& r) {
  std::vector<Elem> out;
  for (Elem x = 0; x < r.order(); ++x) {
    if (is_central(r, x) && inverse(r, x)) out.push_back(x);
  }
  return out;
}

}  // namespace ringlab
