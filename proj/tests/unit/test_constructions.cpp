#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/enumerate.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/isomorphism.hpp"
#include "ringlab/ring_json.hpp"

using namespace ringlab;

namespace {

using V = std::vector<Elem>;

V matmul3(const FiniteRing& r, const V& x, const V& y) {
  V out(9, r.zero());
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) out[i * 3 + j] = r.add(out[i * 3 + j], r.mul(x[i * 3 + k], y[k * 3 + j]));
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("orders") {
    const std::vector<std::pair<const char*, std::size_t>> cases{
        {"Zn(1)", 1},           {"Zn(9)", 9},           {"M(2,Zn(3))", 81},
        {"T(2,Zn(4))", 64},     {"T(3,Zn(2))", 64},     {"Prod(Zn(2),Zn(3),Zn(5))", 30},
        {"Hst(Zn(4),s=1,t=3)", 64}, {"Lst(Zn(2),s=1,t=1)", 32}, {"K0(Zn(3))", 81},
        {"Ks(Zn(2),s=1)", 16},  {"Tri(Zn(2),Zn(2))", 8}, {"Morita(Zn(3),Zn(3))", 81},
        {"Corner(M(2,Zn(3)),e=27)", 3}, {"Quot(Zn(8),gens=[2])", 2}};
    for (const auto& [e, n] : cases) {
      CAPTURE(e);
      CHECK(build_ring(e).order() == n);
    }
  }

  TEST_CASE("CRT: Z2 x Z3 is Z6, Z2 x Z2 is not Z4") {
    const auto p = build_ring("Prod(Zn(2),Zn(3))");
    const auto z6 = make_zn(6);
    const auto phi = find_isomorphism(p, z6);
    REQUIRE(phi.has_value());
    CHECK(is_isomorphism(p, z6, *phi));
    CHECK_FALSE(are_isomorphic(build_ring("Prod(Zn(2),Zn(2))"), make_zn(4)));
  }

  TEST_CASE("corner ring E11 M2(Z3) E11 is Z3 with identity E11") {
    const auto m = build_ring("M(2,Zn(3))");
    const auto c = corner_ring(m, 27);
    CHECK(are_isomorphic(c.ring, make_zn(3)));
    CHECK(c.embedding[c.ring.one()] == 27);
    for (Elem x = 0; x < c.ring.order(); ++x) {
      for (Elem y = 0; y < c.ring.order(); ++y) {
        CHECK(c.embedding[c.ring.mul(x, y)] == m.mul(c.embedding[x], c.embedding[y]));
        CHECK(c.embedding[c.ring.add(x, y)] == m.add(c.embedding[x], c.embedding[y]));
      }
    }
  }

  TEST_CASE("quotients") {
    CHECK(are_isomorphic(build_ring("Quot(Zn(4),gens=[2])"), make_zn(2)));
    CHECK(are_isomorphic(build_ring("Quot(Zn(12),gens=[4])"), make_zn(4)));
    const auto q = quotient_ring(make_zn(6), ElementSet::from_elements(6, V{0, 3}));
    CHECK(q.ring.order() == 3);
    CHECK(q.projection[4] == q.projection[1]);
    CHECK(q.representatives[q.projection[5]] == 2);
    // E11 R is a right ideal but not a left ideal.
    CHECK_THROWS_AS(build_ring("Quot(M(2,Zn(2)),gens=[8])"), NotTwoSidedIdeal);
  }

  TEST_CASE("H and L multiply as the 3x3 matrices they encode") {
    for (const auto& [base, s, t] : std::vector<std::tuple<const char*, Elem, Elem>>{
             {"Zn(2)", 1, 1}, {"Zn(3)", 2, 1}, {"Zn(3)", 2, 2}}) {
      CAPTURE(base);
      CAPTURE(s);
      CAPTURE(t);
      const auto r = build_ring(base);
      const auto h = hst_ring(r, s, t);
      const auto l = lst_ring(r, s, t);
      for (Elem x = 0; x < h.order(); ++x) {
        const V mx = hst_matrix(r, s, t, x);
        // a - d = s c and d - f = t e
        CHECK(r.sub(mx[0], mx[4]) == r.mul(s, mx[3]));
        CHECK(r.sub(mx[4], mx[8]) == r.mul(t, mx[5]));
        for (Elem y = 0; y < h.order(); ++y) {
          CHECK(hst_matrix(r, s, t, h.mul(x, y)) == matmul3(r, mx, hst_matrix(r, s, t, y)));
        }
      }
      for (Elem x = 0; x < l.order(); ++x) {
        const V mx = lst_matrix(r, s, t, x);
        for (Elem y = 0; y < l.order(); ++y) {
          REQUIRE(lst_matrix(r, s, t, l.mul(x, y)) == matmul3(r, mx, lst_matrix(r, s, t, y)));
        }
      }
    }
  }

  TEST_CASE("K_s: s = 1 over Z2 is the matrix ring, s = 0 kills xy") {
    const auto k1 = build_ring("Ks(Zn(2),s=1)");
    const auto k0 = build_ring("K0(Zn(2))");
    CHECK(k1.same_tables(build_ring("M(2,Zn(2))")));
    // (a,x,y,b): E12 = 4, E21 = 2, E11 = 8.
    CHECK(k1.mul(4, 2) == 8);
    CHECK(k0.mul(4, 2) == 0);
    CHECK(k0.is_commutative() == false);
  }

  TEST_CASE("formal triangular rings") {
    const auto t2 = build_ring("T(2,Zn(2))");
    CHECK(build_ring("Tri(Zn(2),Zn(2))").same_tables(t2));
    const std::string with_file = "Tri(Zn(2),Zn(2),M=File(\"" + fixture("z2_bimodule.json") + "\"))";
    CHECK(build_ring(with_file).same_tables(t2));
    CHECK(are_isomorphic(build_ring("Tri(Zn(2),Zn(3),M=zero)"), make_zn(6)));
    CHECK_THROWS_AS(build_ring("Tri(Zn(2),Zn(3))"), DimensionMismatch);
  }

  TEST_CASE("trivial Morita context has the off-diagonal square-zero radical") {
    const auto m = build_ring("Morita(Zn(2),Zn(2))");
    CHECK(m.order() == 16);
    CHECK(jacobson_radical(m).size() == 4);
    CHECK_FALSE(are_isomorphic(m, build_ring("M(2,Zn(2))")));
  }

  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(build_ring("Corner(Zn(4),e=2)"), NotIdempotent);
    CHECK_THROWS_AS(build_ring("Corner(Zn(4),e=9)"), DimensionMismatch);
    CHECK_THROWS_AS(build_ring("Hst(Zn(4),s=2,t=1)"), NotCentralUnit);
    CHECK_THROWS_AS(build_ring("Ks(M(2,Zn(2)),s=8)"), NotCentral);
    CHECK_THROWS_AS(build_ring("M(4,Zn(4))"), SizeCapExceeded);
  }

  TEST_CASE("central units") {
    CHECK(central_units(make_zn(4)) == V{1, 3});
    CHECK(central_units(make_zn(6)) == V{1, 5});
    CHECK(central_units(build_ring("M(2,Zn(2))")) == V{9});
  }

  TEST_CASE("expression grammar") {
    CHECK(to_string(parse_ring_expr("  M( 2 , Zn( 3 ) ) ")) == "M(2,Zn(3))");
    for (const char* e : {"Zn(4)", "Prod(Zn(2),Zn(3))", "Corner(M(2,Zn(3)),e=27)",
                          "Quot(Zn(4),gens=[2])", "Hst(Zn(4),s=1,t=3)", "Lst(Zn(2),s=1,t=1)",
                          "K0(Zn(4))", "Ks(Zn(2),s=1)", "Tri(Zn(2),Zn(2))",
                          "Tri(Zn(2),Zn(3),M=zero)", "Morita(Zn(2),Zn(2),M=zero,N=self)",
                          "Enum(4,2)", "File(\"r.json\")"}) {
      CAPTURE(e);
      const auto parsed = parse_ring_expr(e);
      CHECK(parse_ring_expr(to_string(parsed)) == parsed);
    }
    const auto position = [](const char* text) -> long {
      try {
        parse_ring_expr(text);
      } catch (const ParseError& e) {
        return static_cast<long>(e.position());
      }
      return -1;
    };
    CHECK(position("Zq(3)") == 0);
    CHECK(position("Zn(0)") == 3);
    CHECK(position("M(2,Zn(3)") >= 9);
    CHECK(position("Zn(4) x") >= 5);
    CHECK(position("Hst(Zn(4),s=1)") > 0);
  }

  TEST_CASE("enumeration counts up to isomorphism") {
    const std::vector<std::size_t> expected{1, 1, 1, 4, 1, 1, 1, 11};
    for (std::size_t n = 1; n <= 8; ++n) {
      CAPTURE(n);
      const auto rings = enumerate_unital_rings(n, true);
      CHECK(rings.size() == expected[n - 1]);
      for (std::size_t i = 0; i < rings.size(); ++i) {
        // Reload forces a fresh validation.
        CHECK(ring_from_json(ring_to_json(rings[i])).order() == n);
        for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(are_isomorphic(rings[i], rings[j]));
      }
    }
    CHECK_THROWS_AS(enumerate_unital_rings(9, true), SizeCapExceeded);
  }

  TEST_CASE("known rings of order 4 each match one enumerated class") {
    const auto rings = enumerate_unital_rings(4, true);
    std::set<std::size_t> hit;
    for (const auto& known : {make_zn(4), build_ring("Prod(Zn(2),Zn(2))"), load_ring(fixture("f4.json"))}) {
      std::size_t matches = 0;
      for (std::size_t i = 0; i < rings.size(); ++i) {
        if (are_isomorphic(known, rings[i])) {
          ++matches;
          hit.insert(i);
        }
      }
      CHECK(matches == 1);
    }
    CHECK(hit.size() == 3);
  }
}
