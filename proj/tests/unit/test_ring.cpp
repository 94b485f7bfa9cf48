#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/ring_json.hpp"

using namespace ringlab;

namespace {

using V = std::vector<Elem>;

RingTables zn_tables(std::size_t k) {
  RingTables t;
  t.name = "raw";
  t.order = k;
  t.zero = 0;
  t.one = k > 1 ? 1 : 0;
  t.add.assign(k, std::vector<Elem>(k));
  t.mul.assign(k, std::vector<Elem>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      t.add[a][b] = static_cast<Elem>((a + b) % k);
      t.mul[a][b] = static_cast<Elem>((a * b) % k);
    }
  }
  return t;
}

// Commutative F2-algebra on basis {1, x, y} with x^2 = y, y^2 = x, xy = 0:
// bilinear and unital, but (xx)y = x while x(xy) = 0.
RingTables nonassociative_algebra() {
  const auto mul_basis = [](int i, int j) -> int {  // basis bitmask product
    if (i == 0) return 1 << j;
    if (j == 0) return 1 << i;
    if (i == 1 && j == 1) return 1 << 2;
    if (i == 2 && j == 2) return 1 << 1;
    return 0;
  };
  // Element bits: 4 -> 1, 2 -> x, 1 -> y (first coordinate most significant).
  const auto to_basis = [](int e) {
    std::vector<int> b;
    if (e & 4) b.push_back(0);
    if (e & 2) b.push_back(1);
    if (e & 1) b.push_back(2);
    return b;
  };
  const auto from_basis_mask = [](int m) { return ((m & 1) << 2) | (m & 2) | ((m >> 2) & 1); };
  RingTables t;
  t.name = "nonassoc";
  t.order = 8;
  t.zero = 0;
  t.one = 4;
  t.add.assign(8, std::vector<Elem>(8));
  t.mul.assign(8, std::vector<Elem>(8));
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      t.add[a][b] = static_cast<Elem>(a ^ b);
      int m = 0;
      for (int i : to_basis(a)) {
        for (int j : to_basis(b)) m ^= mul_basis(i, j);
      }
      t.mul[a][b] = static_cast<Elem>(from_basis_mask(m));
    }
  }
  return t;
}

}  // namespace

TEST_SUITE("ring-core") {
  TEST_CASE("units, idempotents and nilpotents of Z4 and Z6") {
    const auto z4 = make_zn(4);
    CHECK(units(z4).elements() == V{1, 3});
    CHECK(idempotents(z4).elements() == V{0, 1});
    CHECK(nilpotents(z4).elements() == V{0, 2});
    CHECK(characteristic(z4) == 4);
    CHECK(inverse(z4, 3) == Elem{3});
    CHECK_FALSE(inverse(z4, 2).has_value());

    const auto z6 = make_zn(6);
    CHECK(idempotents(z6).elements() == V{0, 1, 3, 4});
    CHECK(units(z6).elements() == V{1, 5});
    CHECK(center(z6).is_full());
  }

  TEST_CASE("matrix unit groups match |GL2(Fq)| = (q^2-1)(q^2-q)") {
    CHECK(units(build_ring("M(2,Zn(2))")).size() == 6);
    CHECK(units(build_ring("M(2,Zn(3))")).size() == 48);
  }

  TEST_CASE("M2(Fq) has q^2+q rank-one idempotents plus 0 and 1") {
    CHECK(idempotents(build_ring("M(2,Zn(2))")).size() == 8);
    CHECK(idempotents(build_ring("M(2,Zn(3))")).size() == 14);
  }

  TEST_CASE("annihilators and commutants in M2(Z2)") {
    const auto m = build_ring("M(2,Zn(2))");
    // E11 = 8, E12 = 4, E21 = 2, E22 = 1.
    CHECK(m.mul(8, 4) == 4);
    CHECK(m.mul(4, 8) == 0);
    CHECK(right_annihilator(m, 8).elements() == V{0, 1, 2, 3});  // second row only
    CHECK(left_annihilator(m, 8).elements() == V{0, 1, 4, 5});   // second column only
    CHECK(commutant(m, 8).size() == 4);                          // diagonal matrices
    CHECK(double_commutant(m, 8).size() == 4);
  }

  TEST_CASE("validate_ring accepts Zn tables") {
    for (std::size_t k = 1; k <= 12; ++k) {
      const auto r = validate_ring(zn_tables(k));
      CHECK(r.order() == k);
    }
  }

  TEST_CASE("validate_ring rejects broken tables") {
    SUBCASE("wrong shape") {
      auto t = zn_tables(3);
      t.mul[1].pop_back();
      CHECK_THROWS_AS(validate_ring(t), DimensionMismatch);
    }
    SUBCASE("entry out of range") {
      auto t = zn_tables(3);
      t.add[1][1] = 7;
      CHECK_THROWS_AS(validate_ring(t), DimensionMismatch);
    }
    SUBCASE("identity") {
      auto t = zn_tables(3);
      t.one = 2;
      CHECK_THROWS_AS(validate_ring(t), AxiomViolation);
    }
    SUBCASE("additive inverse") {
      RingTables t = zn_tables(2);
      t.add = {{0, 1}, {1, 1}};
      try {
        validate_ring(t);
        FAIL("accepted");
      } catch (const AxiomViolation& e) {
        CHECK(e.axiom() == "additive inverse");
      }
    }
    SUBCASE("distributivity") {
      try {
        load_ring(fixture("not_distributive.json"));
        FAIL("accepted");
      } catch (const AxiomViolation& e) {
        CHECK(e.axiom().find("distributivity") != std::string::npos);
      }
    }
    SUBCASE("associativity of a bilinear product") {
      try {
        validate_ring(nonassociative_algebra());
        FAIL("accepted");
      } catch (const AxiomViolation& e) {
        CHECK(e.axiom() == "multiplicative associativity");
        const auto& w = e.witness();
        REQUIRE(w.size() == 3);
        // The reported instance really is non-associative.
        const auto t = nonassociative_algebra();
        CHECK(t.mul[t.mul[w[0]][w[1]]][w[2]] != t.mul[w[0]][t.mul[w[1]][w[2]]]);
      }
    }
    SUBCASE("size cap") {
      const std::size_t saved = limits().size_cap;
      limits().size_cap = 8;
      CHECK_THROWS_AS(validate_ring(zn_tables(9)), SizeCapExceeded);
      limits().size_cap = saved;
    }
  }

  TEST_CASE("ring JSON round-trips byte for byte") {
    for (const char* e : {"Zn(1)", "Zn(6)", "M(2,Zn(3))", "T(2,Zn(4))", "Hst(Zn(4),s=1,t=3)",
                          "K0(Zn(2))", "Tri(Zn(2),Zn(2))", "Enum(8,5)"}) {
      CAPTURE(e);
      const std::string once = ring_to_json(build_ring(e));
      CHECK(ring_to_json(ring_from_json(once)) == once);
    }
  }

  TEST_CASE("fixture F4 loads with labels") {
    const auto f4 = load_ring(fixture("f4.json"));
    CHECK(f4.order() == 4);
    CHECK(f4.has_custom_labels());
    CHECK(f4.label(3) == "a+1");
    CHECK(units(f4).size() == 3);
    const std::string text = ring_to_json(f4);
    CHECK(text.find("\"labels\":[\"0\",\"1\",\"a\",\"a+1\"]") != std::string::npos);
    CHECK(ring_to_json(ring_from_json(text)) == text);
  }

  TEST_CASE("malformed JSON is a format error") {
    CHECK_THROWS_AS(ring_from_json("{\"order\":2}"), FormatError);
    CHECK_THROWS_AS(ring_from_json("not json"), FormatError);
  }

  TEST_CASE("element sets") {
    auto a = ElementSet::from_elements(10, V{1, 3, 5});
    const auto b = ElementSet::from_elements(10, V{3, 4});
    CHECK(a.size() == 3);
    CHECK((a & b).elements() == V{3});
    CHECK((a | b).elements() == V{1, 3, 4, 5});
    CHECK(a.intersection_size(b) == 1);
    CHECK_FALSE(a.is_subset_of(b));
    CHECK(ElementSet::from_elements(10, V{3}).is_subset_of(a));
    CHECK(a.lex_less(b));
    a.erase(1);
    CHECK(a.elements() == V{3, 5});
    CHECK(ElementSet::full(130).size() == 130);
    CHECK(ElementSet::full(130).is_full());
  }
}
