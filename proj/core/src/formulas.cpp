#include "ringlab/formulas.hpp"

#include <functional>

#include "ringlab/constructions.hpp"

namespace ringlab {

namespace {

/// equality: delta(R) == {x : shape(x)}; otherwise delta(R) inside it.
FormulaCheck compare(RingAnalysis& r, const std::function<bool(Elem)>& shape, bool equality,
                     std::string statement) {
  const ElementSet& d = r.delta();
  for (Elem x = 0; x < r.ring().order(); ++x) {
    const bool in_shape = shape(x);
    if (d.contains(x) && !in_shape) {
      return {false, {x}, {"in-delta-outside-shape"}, std::move(statement)};
    }
    if (equality && !d.contains(x) && in_shape) {
      return {false, {x}, {"in-shape-outside-delta"}, std::move(statement)};
    }
  }
  return {true, {}, {}, std::move(statement)};
}

}  // namespace

FormulaCheck product_formula(RingAnalysis& product, std::span<const FiniteRing* const> parts) {
  std::vector<std::size_t> radices;
  std::vector<ElementSet> deltas;
  for (const FiniteRing* p : parts) {
    radices.push_back(p->order());
    deltas.push_back(zhou_radical(*p));
  }
  const MixedRadix codec(radices);
  return compare(
      product,
      [&](Elem x) {
        const auto digits = codec.decode(x);
        for (std::size_t i = 0; i < digits.size(); ++i) {
          if (!deltas[i].contains(digits[i])) return false;
        }
        return true;
      },
      true, "delta of a product is the product of the deltas");
}

FormulaCheck corner_formula(RingAnalysis& parent, Elem e) {
  const CornerRing c = corner_ring(parent.ring(), e);
  RingAnalysis corner(c.ring);
  return corner_formula(parent, e, c.embedding, corner);
}

FormulaCheck corner_formula(RingAnalysis& parent, Elem e, std::span<const Elem> embedding,
                            RingAnalysis& corner) {
  const FiniteRing& r = parent.ring();
  const ElementSet& corner_delta = corner.delta();
  ElementSet predicted = r.empty_set();
  parent.delta().for_each([&](Elem d) { predicted.insert(r.mul(r.mul(e, d), e)); });
  ElementSet actual = r.empty_set();
  corner_delta.for_each([&](Elem x) { actual.insert(embedding[x]); });
  const std::string statement = "delta(eRe) = e delta(R) e at e=" + std::to_string(e);
  for (Elem x = 0; x < r.order(); ++x) {
    if (actual.contains(x) != predicted.contains(x)) {
      return {false,
              {e, x},
              {"e", actual.contains(x) ? "in-delta(eRe)-only" : "in-e.delta(R).e-only"},
              statement};
    }
  }
  return {true, {}, {}, statement};
}

FormulaCheck matrix_formula(RingAnalysis& m, std::size_t n, RingAnalysis& base) {
  const MixedRadix codec(base.ring().order(), n * n);
  const ElementSet& d = base.delta();
  return compare(
      m,
      [&](Elem x) {
        for (Elem v : codec.decode(x)) {
          if (!d.contains(v)) return false;
        }
        return true;
      },
      true, "delta(M_n(R)) = M_n(delta(R))");
}

FormulaCheck triangular_formula(RingAnalysis& t, std::size_t n, RingAnalysis& base) {
  const MixedRadix codec(base.ring().order(), n * (n + 1) / 2);
  // Positions of the diagonal in the row-major list of upper entries.
  std::vector<std::size_t> diagonal;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < n; ++i) {
    diagonal.push_back(pos);
    pos += n - i;
  }
  const ElementSet& d = base.delta();
  return compare(
      t,
      [&](Elem x) {
        const auto digits = codec.decode(x);
        for (std::size_t p : diagonal) {
          if (!d.contains(digits[p])) return false;
        }
        return true;
      },
      false, "delta(T_n(R)) inside {diagonal entries in delta(R)}");
}

FormulaCheck hst_formula(RingAnalysis& h, RingAnalysis& base, Elem s, Elem t) {
  const FiniteRing& r = base.ring();
  const MixedRadix codec(r.order(), 3);
  const ElementSet& d = base.delta();
  return compare(
      h,
      [&](Elem x) {
        const auto v = codec.decode(x);  // (c, d, e)
        const Elem a = r.add(v[1], r.mul(s, v[0]));
        const Elem f = r.sub(v[1], r.mul(t, v[2]));
        return d.contains(a) && d.contains(v[1]) && d.contains(f);
      },
      true, "delta(H_(s,t)(R)) = {a, d, f in delta(R)}");
}

FormulaCheck lst_formula(RingAnalysis& l, RingAnalysis& base) {
  const MixedRadix codec(base.ring().order(), 5);
  const ElementSet& d = base.delta();
  return compare(
      l,
      [&](Elem x) {
        const auto v = codec.decode(x);  // (a, c, d, e, f)
        return d.contains(v[0]) && d.contains(v[2]) && d.contains(v[4]);
      },
      true, "delta(L_(s,t)(R)) = {a, d, f in delta(R)}");
}

FormulaCheck k0_formula(RingAnalysis& k, RingAnalysis& base) {
  const MixedRadix codec(base.ring().order(), 4);
  const ElementSet& d = base.delta();
  return compare(
      k,
      [&](Elem x) {
        const auto v = codec.decode(x);  // (a, x, y, b)
        return d.contains(v[0]) && d.contains(v[3]);
      },
      true, "delta(K_0(R)) = {diagonal entries in delta(R)}");
}

FormulaCheck block_formula(RingAnalysis& r, RingAnalysis& first, RingAnalysis& second,
                           std::size_t module_m, std::size_t module_n, bool morita) {
  std::vector<std::size_t> radices{first.ring().order(), module_m};
  if (morita) radices.push_back(module_n);
  radices.push_back(second.ring().order());
  const MixedRadix codec(radices);
  const ElementSet& d1 = first.delta();
  const ElementSet& d2 = second.delta();
  return compare(
      r,
      [&](Elem x) {
        const auto v = codec.decode(x);
        return d1.contains(v.front()) && d2.contains(v.back());
      },
      false,
      morita ? "delta of a trivial Morita context inside [[delta(A),M],[N,delta(B)]]"
             : "delta of a formal triangular ring inside [[delta(S),M],[0,delta(T)]]");
}

}  // namespace ringlab
