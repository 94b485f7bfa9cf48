#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/suite.hpp"

using namespace ringlab;

namespace {

const CaseResult& find_case(const SuiteReport& r, const std::string& id) {
  for (const auto& c : r.cases) {
    if (c.id == id) return c;
  }
  throw std::runtime_error("no case " + id);
}

}  // namespace

TEST_SUITE("suite") {
  TEST_CASE("custom corpus specs") {
    CHECK(build_corpus("Zn(4)").entries.size() == 1);
    const auto two = build_corpus("Zn(2); M(2,Zn(2))");
    REQUIRE(two.entries.size() == 2);
    CHECK(two.entries[1].expr == "M(2,Zn(2))");
    CHECK(two.version == "custom");
    const auto file = build_corpus("@" + fixture("corpus.txt"));
    REQUIRE(file.entries.size() == 2);
    CHECK(file.entries[0].expr == "Zn(4)");
    CHECK_THROWS_AS(build_corpus(" ; "), FormatError);
    CHECK_THROWS_AS(build_corpus("@/nonexistent/corpus"), FormatError);
  }

  TEST_CASE("default corpus is fixed") {
    const auto a = build_corpus("default");
    const auto b = build_corpus("default");
    CHECK(a.version == "default-v1");
    CHECK(a.entries.size() == 136);
    REQUIRE(a.entries.size() == b.entries.size());
    std::set<std::string> exprs;
    std::size_t hst_over_z4 = 0;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
      CHECK(a.entries[i].expr == b.entries[i].expr);
      exprs.insert(a.entries[i].expr);
      if (a.entries[i].expr.rfind("Hst(Zn(4)", 0) == 0) ++hst_over_z4;
    }
    CHECK(exprs.size() == a.entries.size());
    CHECK(hst_over_z4 == 4);  // (s,t) in {1,3}^2
    CHECK(exprs.count("M(2,Zn(4))") == 1);
    CHECK(exprs.count("Lst(Zn(3),s=2,t=2)") == 1);
  }

  TEST_CASE("corpus expressions rebuild their rings") {
    for (const auto& e : build_corpus("quick").entries) {
      CAPTURE(e.expr);
      CHECK(build_ring(e.expr).same_tables(*e.ring));
    }
  }

  TEST_CASE("M2(Z3) alone: T3 is vacuous, the hunt finds the separation") {
    const auto corpus = build_corpus("M(2,Zn(3))");
    const auto report = run_theorem_suite(corpus, 1, {"T3"});
    REQUIRE(report.cases.size() == 1);
    CHECK(report.cases[0].verdict == "PASS");
    CHECK(report.cases[0].in_scope == 1);
    CHECK(report.cases[0].hypothesis == 0);
    const auto hunt = hunt_counterexample(corpus, parse_implication("delta-reversible => j-reversible"));
    REQUIRE(hunt.findings.size() == 1);
    CHECK(hunt.findings[0].ring == "M(2,Zn(3))");
  }

  TEST_CASE("quick corpus report does not depend on the job count") {
    const auto corpus = build_corpus("quick");
    const auto one = suite_report_json(run_theorem_suite(corpus, 1));
    const auto four = suite_report_json(run_theorem_suite(corpus, 4));
    CHECK(one == four);
    const auto j = nlohmann::json::parse(one);
    CHECK(j["tool"]["version"] == kToolVersion);
    CHECK(j["corpus_version"] == "quick-v1");
    CHECK(j["caps"]["lattice_cap"] == limits().lattice_cap);
  }

  TEST_CASE("quick corpus verdicts") {
    const auto report = run_theorem_suite(build_corpus("quick"), 1);
    const auto& t20 = find_case(report, "T20");
    CHECK(t20.verdict == "PASS");
    REQUIRE(t20.counterexample.has_value());
    CHECK(t20.counterexample->ring == "M(2,Zn(4))");
    for (const char* id : {"T1", "T2", "T3", "T8", "T10", "T11", "T16", "T19", "I1", "I4"}) {
      CAPTURE(id);
      CHECK(find_case(report, id).verdict == "PASS");
    }
    CHECK(find_case(report, "T19-converse").kind == CaseKind::observation);
  }

  TEST_CASE("case registry") {
    std::set<std::string> ids;
    for (const auto& c : suite_cases()) {
      CHECK_FALSE(c.paper_ref.empty());
      ids.insert(c.id);
    }
    CHECK(ids.size() == suite_cases().size());
    for (int t = 1; t <= 23; ++t) CHECK(ids.count("T" + std::to_string(t)) == 1);
    CHECK(ids.count("T19-converse") == 1);
    CHECK_THROWS_AS(run_theorem_suite(build_corpus("Zn(2)"), 1, {"T99"}), UnknownPredicate);
  }

  TEST_CASE("implication parsing") {
    const auto q = parse_implication(" reversible=>j-reversible ");
    CHECK(q.antecedent == "reversible");
    CHECK(q.consequent == "j-reversible");
    CHECK_THROWS_AS(parse_implication("reversible j-reversible"), ParseError);
    CHECK_THROWS_AS(parse_implication("=> reversible"), ParseError);
    CHECK_THROWS_AS(parse_implication("foo => reversible"), UnknownPredicate);
  }

  TEST_CASE("hunts") {
    const auto corpus = build_corpus("quick");
    CHECK(hunt_counterexample(corpus, parse_implication("reversible => reversible")).findings.empty());
    const auto h = hunt_counterexample(corpus, parse_implication("true => delta-reversible"), 3);
    REQUIRE(h.findings.size() == 1);
    CHECK(h.findings[0].ring == "M(2,Zn(4))");
    CHECK(witness_reproduces("delta-reversible", build_ring(h.findings[0].expr), h.findings[0].consequent));
    auto all = parse_implication("true => delta-reversible");
    all.stop_at_first = false;
    CHECK(hunt_counterexample(corpus, all).findings.size() >= 1);
  }
}
