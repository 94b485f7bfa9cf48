#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/expr.hpp"
#include "ringlab/predicates.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

inline constexpr const char* kToolVersion = "0.1.0";

struct CorpusEntry {
  /// Canonical expression; rebuilding it reproduces the ring exactly.
  std::string expr;
  RingExpr source;
  RingPtr ring;
};

struct Corpus {
  std::string spec;     // what the caller asked for
  std::string version;  // preset version tag, or "custom"
  std::vector<CorpusEntry> entries;
};

/// Presets: "default" (version default-v1), "quick" (quick-v1, small rings
/// only). Anything else is "@path" (one expression per line, '#' comments)
/// or a ';'-separated expression list. Corner rings of the preset members
/// are appended at every idempotent other than 0 and 1, one per
/// isomorphism class within each parent.
Corpus build_corpus(std::string_view spec);
const std::vector<std::string>& corpus_presets();

enum class CaseKind { assertion, existential, observation };
std::string to_string(CaseKind kind);

struct Counterexample {
  std::string ring;
  std::string expr;
  std::vector<Elem> witness;
  std::vector<std::string> roles;
  std::string detail;

  bool operator==(const Counterexample&) const = default;
};

struct CaseResult {
  std::string id;
  std::string title;
  CaseKind kind = CaseKind::assertion;
  std::string paper_ref;
  /// assertion: PASS | FAIL; existential: PASS (example found) | FAIL;
  /// observation: HOLDS | REFUTED.
  std::string verdict;
  std::size_t in_scope = 0;    // rings the case applied to
  std::size_t hypothesis = 0;  // of those, rings meeting the hypothesis
  std::size_t skipped = 0;     // dropped by a size or lattice cap
  /// First failing ring (or first example, for existential cases).
  std::optional<Counterexample> counterexample;

  bool operator==(const CaseResult&) const = default;
};

struct SuiteReport {
  std::string corpus_spec;
  std::string corpus_version;
  std::size_t corpus_size = 0;
  Limits caps;
  std::vector<CaseResult> cases;

  /// False when an assertion or existential case failed.
  bool ok() const;
};

struct CaseInfo {
  std::string id;
  std::string title;
  CaseKind kind;
  std::string paper_ref;
};
const std::vector<CaseInfo>& suite_cases();

/// Runs every case (or only `ids`, if nonempty) over the corpus with
/// `jobs` worker threads. The report does not depend on `jobs`.
SuiteReport run_theorem_suite(const Corpus& corpus, std::size_t jobs = 1,
                              const std::vector<std::string>& ids = {});

std::string suite_report_json(const SuiteReport& report);
std::string suite_report_markdown(const SuiteReport& report);

struct HuntQuery {
  std::string antecedent;
  std::string consequent;
  bool stop_at_first = true;
};

/// Parses "A => B"; throws ParseError or UnknownPredicate.
HuntQuery parse_implication(std::string_view text);

struct HuntFinding {
  std::string ring;
  std::string expr;
  Verdict consequent;  // the failing verdict, witness included
};

struct HuntReport {
  std::string corpus_spec;
  std::string corpus_version;
  std::size_t corpus_size = 0;
  HuntQuery query;
  std::size_t searched = 0;
  std::vector<HuntFinding> findings;
};

/// Scans the corpus in order for rings satisfying the antecedent but not
/// the consequent.
HuntReport hunt_counterexample(const Corpus& corpus, const HuntQuery& q, std::size_t jobs = 1);

std::string hunt_report_json(const HuntReport& report);
std::string hunt_report_markdown(const HuntReport& report);

}  // namespace ringlab
