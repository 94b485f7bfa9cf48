#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/enumerate.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/ring_json.hpp"

using namespace ringlab;

namespace {

using V = std::vector<Elem>;

std::vector<FiniteRing> small_rings() {
  std::vector<FiniteRing> out;
  for (std::size_t k = 1; k <= 16; ++k) out.push_back(make_zn(k));
  for (std::size_t n = 4; n <= 8; n *= 2) {
    for (auto& r : enumerate_unital_rings(n, true)) out.push_back(std::move(r));
  }
  for (const char* e : {"M(2,Zn(2))", "T(2,Zn(2))", "K0(Zn(2))", "Ks(Zn(2),s=1)",
                        "Hst(Zn(2),s=1,t=1)", "Prod(Zn(2),Zn(4))", "Prod(Zn(2),Zn(2),Zn(2))",
                        "Tri(Zn(2),Zn(2))", "Morita(Zn(2),Zn(2))", "Tri(Zn(2),Zn(2),M=zero)",
                        "Prod(Zn(4),Zn(4))", "Corner(M(2,Zn(2)),e=8)"}) {
    out.push_back(build_ring(e));
  }
  out.push_back(load_ring(fixture("f4.json")));
  return out;
}

}  // namespace

TEST_SUITE("ideals") {
  TEST_CASE("right ideals of Z4") {
    const auto lat = all_right_ideals(make_zn(4));
    REQUIRE(lat.right_ideals.size() == 3);
    CHECK(lat.right_ideals[0].elements() == V{0});
    CHECK(lat.right_ideals[1].elements() == V{0, 1, 2, 3});
    CHECK(lat.right_ideals[2].elements() == V{0, 2});
    REQUIRE(lat.maximal.size() == 1);
    CHECK(lat.right_ideals[lat.maximal[0]].elements() == V{0, 2});
    CHECK(lat.essential_maximal == lat.maximal);
    CHECK(lat.minimal == lat.maximal);
  }

  TEST_CASE("lattice sizes: right ideals of M2(Fq) are the q+1 lines plus 0 and R") {
    CHECK(all_right_ideals(build_ring("M(2,Zn(2))")).right_ideals.size() == 5);
    CHECK(all_right_ideals(build_ring("M(2,Zn(3))")).right_ideals.size() == 6);
    CHECK(all_right_ideals(make_zn(6)).right_ideals.size() == 4);
    CHECK(all_right_ideals(make_zn(8)).right_ideals.size() == 4);
  }

  TEST_CASE("lattice, J, socle and delta agree with subset enumeration") {
    for (const auto& r : small_rings()) {
      CAPTURE(r.name());
      const auto o = oracle::radicals(r);
      RingAnalysis an(r);
      CHECK(an.lattice().right_ideals.size() == o.ideal_count);
      CHECK(an.jacobson().elements() == oracle::elements(o.jacobson));
      CHECK(an.socle().elements() == oracle::elements(o.socle));
      CHECK(an.delta().elements() == oracle::elements(o.delta));
    }
  }

  TEST_CASE("every description of delta agrees on small rings") {
    for (const auto& r : small_rings()) {
      CAPTURE(r.name());
      RingAnalysis an(r);
      const auto d = an.delta_essential_maximal();
      CHECK(an.delta_socle_pullback() == d);
      CHECK(an.r3_set() == d);
      CHECK(an.r5_set() == d);
      CHECK(an.r4_ideal() == d);
      const auto r2 = an.r2_largest_delta_small();
      REQUIRE(r2.has_value());
      CHECK(*r2 == d);
    }
  }

  TEST_CASE("known radicals") {
    const auto m23 = build_ring("M(2,Zn(3))");
    CHECK(jacobson_radical(m23).elements() == V{0});
    CHECK(zhou_radical(m23).size() == 81);
    CHECK(zhou_radical(make_zn(6)).is_full());
    CHECK(zhou_radical(make_zn(4)).elements() == V{0, 2});
    CHECK(zhou_radical(make_zn(8)).elements() == V{0, 2, 4, 6});
    CHECK(socle(make_zn(8)).elements() == V{0, 4});
    // T2(Z2), (a,b,c) = [[a,b],[0,c]]: delta is {a = 0}.
    CHECK(zhou_radical(build_ring("T(2,Zn(2))")).elements() == V{0, 1, 2, 3});
    CHECK(jacobson_radical(build_ring("T(2,Zn(2))")).elements() == V{0, 2});
    CHECK(zhou_radical(build_ring("Prod(Zn(2),Zn(4))")).size() == 4);
  }

  TEST_CASE("M2(Z4): delta = M2(2Z4), delta# = everything nilpotent mod delta") {
    RingAnalysis an(build_ring("M(2,Zn(4))"));
    CHECK(an.delta().size() == 16);
    CHECK(an.delta_sharp().size() == 64);
    CHECK(an.jacobson() == an.delta());
  }

  TEST_CASE("r4 on Z4 is {0,2}") { CHECK(r4_ideal(make_zn(4)).elements() == V{0, 2}); }

  TEST_CASE("delta is semiprime and two-sided") {
    for (const auto& r : small_rings()) {
      CAPTURE(r.name());
      const auto d = zhou_radical(r);
      CHECK(is_semiprime_ideal(r, d));
      CHECK(is_two_sided_ideal(r, d));
    }
    // {0,4} in Z8: 2*Z8*2 = {0,4} but 2 is outside.
    CHECK(semiprime_violation(make_zn(8), ElementSet::from_elements(8, V{0, 4})) == Elem{2});
  }

  TEST_CASE("generated right ideals and direct summands") {
    const auto m = build_ring("M(2,Zn(2))");
    const V seed{8};
    const auto e11r = right_ideal_generated(m, seed);
    CHECK(e11r.elements() == V{0, 4, 8, 12});  // first-row matrices
    CHECK(is_direct_summand(m, e11r));
    const auto z4 = make_zn(4);
    CHECK_FALSE(is_direct_summand(z4, ElementSet::from_elements(4, V{0, 2})));
    CHECK(is_essential(z4, ElementSet::from_elements(4, V{0, 2})));
    CHECK(is_delta_small(z4, ElementSet::from_elements(4, V{0, 2})));
  }

  TEST_CASE("lattice cap") {
    const std::size_t saved = limits().lattice_cap;
    limits().lattice_cap = 3;
    CHECK_THROWS_AS(all_right_ideals(build_ring("M(2,Zn(2))")), LatticeCapExceeded);
    limits().lattice_cap = saved;
    CHECK(all_right_ideals(build_ring("M(2,Zn(2))")).right_ideals.size() == 5);
  }
}
