#include "doctest.h"
#include "json.hpp"
#include "oracle.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/enumerate.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/predicates.hpp"

using namespace ringlab;

namespace {

using V = std::vector<Elem>;

Verdict eval(const char* expr, const char* predicate) {
  RingAnalysis an(build_ring(expr));
  return evaluate_predicate(predicate, an);
}

// ab = 0 => ba in `target`, scanned directly.
bool brute_reversible_into(const FiniteRing& r, oracle::Mask target) {
  for (Elem a = 0; a < r.order(); ++a) {
    for (Elem b = 0; b < r.order(); ++b) {
      if (r.mul(a, b) == r.zero() && !(target >> r.mul(b, a) & 1u)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("predicates") {
  TEST_CASE("M2(Z3) is delta-reversible but not J-reversible") {
    const auto m = build_ring("M(2,Zn(3))");
    RingAnalysis an(m);
    CHECK(is_delta_reversible(an).value);
    const auto j = is_j_reversible(an);
    REQUIRE_FALSE(j.value);
    CHECK(j.roles == std::vector<std::string>{"a", "b"});
    CHECK(witness_reproduces("j-reversible", m, j));
    // A = [[1,2],[0,0]], B = [[2,0],[2,0]]; index = 27a + 9b + 3c + d.
    const Elem A = 45, B = 60;
    CHECK(m.mul(A, B) == m.zero());
    CHECK(m.mul(B, A) == 70);  // [[2,1],[2,1]]
    CHECK_FALSE(an.jacobson().contains(70));
  }

  TEST_CASE("small commutative rings") {
    CHECK(eval("Zn(4)", "reversible").value);
    CHECK(eval("Zn(4)", "commutative").value);
    CHECK(eval("Zn(4)", "local").value);
    CHECK(eval("Zn(4)", "delta-clean").value);
    const auto red = eval("Zn(4)", "reduced");
    CHECK_FALSE(red.value);
    CHECK(red.witness == V{2});
    CHECK(eval("Zn(6)", "reduced").value);
    CHECK(eval("Zn(6)", "semisimple").value);
    CHECK_FALSE(eval("Zn(6)", "local").value);
    CHECK(eval("Zn(1)", "true").value);
  }

  TEST_CASE("M2(Z2)") {
    CHECK_FALSE(eval("M(2,Zn(2))", "abelian").value);
    CHECK_FALSE(eval("M(2,Zn(2))", "reversible").value);
    CHECK(eval("M(2,Zn(2))", "semisimple").value);
    CHECK(eval("M(2,Zn(2))", "delta-reversible").value);
    CHECK_FALSE(eval("M(2,Zn(2))", "j-reversible").value);
  }

  TEST_CASE("M2(Z4) is not delta-reversible; K0(Z4) is") {
    const auto m = build_ring("M(2,Zn(4))");
    RingAnalysis an(m);
    const auto v = is_delta_reversible(an);
    REQUIRE_FALSE(v.value);
    CHECK(witness_reproduces("delta-reversible", m, v));
    CHECK_FALSE(corner_containment(an).value);
    CHECK_FALSE(delta_sharp_equals_delta(an).value);
    CHECK(eval("K0(Zn(4))", "delta-reversible").value);
  }

  TEST_CASE("reversibility verdicts match direct scans with oracle radicals") {
    std::vector<FiniteRing> rings;
    for (std::size_t n = 1; n <= 8; ++n) {
      for (auto& r : enumerate_unital_rings(n, true)) rings.push_back(std::move(r));
    }
    for (const char* e : {"M(2,Zn(2))", "T(2,Zn(2))", "K0(Zn(2))", "Morita(Zn(2),Zn(2))",
                          "Hst(Zn(2),s=1,t=1)"}) {
      rings.push_back(build_ring(e));
    }
    for (const auto& r : rings) {
      CAPTURE(r.name());
      const auto o = oracle::radicals(r);
      const oracle::Mask zero = oracle::Mask{1} << r.zero();
      RingAnalysis an(r);
      CHECK(is_reversible(an).value == brute_reversible_into(r, zero));
      CHECK(is_j_reversible(an).value == brute_reversible_into(r, o.jacobson));
      CHECK(is_delta_reversible(an).value == brute_reversible_into(r, o.delta));
    }
  }

  TEST_CASE("failing verdicts re-verify and tampered witnesses do not") {
    const auto r = build_ring("M(2,Zn(2))");
    RingAnalysis an(r);
    auto v = is_reversible(an);
    REQUIRE_FALSE(v.value);
    CHECK(witness_reproduces("reversible", r, v));
    v.witness[0] = r.zero();
    CHECK_FALSE(witness_reproduces("reversible", r, v));
  }

  TEST_CASE("Armendariz scan respects its cap") {
    const std::size_t saved = limits().armendariz_cap;
    limits().armendariz_cap = 4;
    RingAnalysis an(make_zn(8));
    CHECK_THROWS_AS(is_delta_linear_armendariz(an), SizeCapExceeded);
    limits().armendariz_cap = saved;
    CHECK(is_delta_linear_armendariz(an).value);
  }

  TEST_CASE("registry") {
    const auto& names = predicate_names();
    CHECK(std::is_sorted(names.begin(), names.end()));
    CHECK(is_registered_predicate("delta-reversible"));
    CHECK_FALSE(is_registered_predicate("delta-reversable"));
    RingAnalysis an(make_zn(2));
    CHECK_THROWS_AS(evaluate_predicate("nope", an), UnknownPredicate);
  }

  TEST_CASE("property report JSON") {
    RingAnalysis an(build_ring("M(2,Zn(3))"));
    const auto report = check_properties(an, {"j-reversible", "delta-reversible"});
    const auto j = nlohmann::json::parse(report_to_json(report));
    CHECK(j["ring"] == "M(2,Zn(3))");
    CHECK(j["results"]["delta-reversible"]["verdict"] == true);
    CHECK(j["results"]["j-reversible"]["verdict"] == false);
    CHECK(j["results"]["j-reversible"]["witness"].size() == 2);
    CHECK_FALSE(j["results"]["delta-reversible"].contains("witness"));
    CHECK(report_to_markdown(report).find("| j-reversible | false |") != std::string::npos);
  }
}
