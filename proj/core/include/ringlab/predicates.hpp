#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/ideals.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Outcome of one ring-level property. A false verdict carries the
/// lexicographically smallest witness; roles[i] names witness[i].
struct Verdict {
  bool value = true;
  std::vector<Elem> witness;
  std::vector<std::string> roles;
  std::string method;

  static Verdict pass(std::string method) { return {true, {}, {}, std::move(method)}; }
  static Verdict fail(std::vector<Elem> witness, std::vector<std::string> roles,
                      std::string method) {
    return {false, std::move(witness), std::move(roles), std::move(method)};
  }

  bool operator==(const Verdict&) const = default;
};

struct PropertyReport {
  std::string ring;
  std::map<std::string, Verdict> results;  // ordered by predicate name
};

Verdict is_reversible(RingAnalysis& a);
Verdict is_j_reversible(RingAnalysis& a);
/// Decided three ways (definition, square-zero elements, annihilator
/// products); throws CharacterizationMismatch if they disagree.
Verdict is_delta_reversible(RingAnalysis& a);

Verdict is_commutative(RingAnalysis& a);
Verdict is_abelian(RingAnalysis& a);
Verdict is_reduced(RingAnalysis& a);
Verdict is_semisimple(RingAnalysis& a);
Verdict is_local(RingAnalysis& a);

Verdict is_delta_clean(RingAnalysis& a);
/// As-used definition: every a has an idempotent p in comm²(a) with
/// a + p in delta.
Verdict is_delta_quasipolar(RingAnalysis& a);
/// Throws SizeCapExceeded above limits().armendariz_cap.
Verdict is_delta_linear_armendariz(RingAnalysis& a);

Verdict idempotents_lift_mod_delta(RingAnalysis& a);
Verdict corner_containment(RingAnalysis& a);
/// Evaluated on R/delta(R); witnesses are the smallest coset representatives.
Verdict quotient_abelian(RingAnalysis& a);
Verdict quotient_reduced(RingAnalysis& a);
Verdict delta_sharp_equals_delta(RingAnalysis& a);
Verdict socle_in_jacobson(RingAnalysis& a);
Verdict quotient_by_socle_j_reversible(RingAnalysis& a);

/// Registered names, sorted.
const std::vector<std::string>& predicate_names();
bool is_registered_predicate(std::string_view name);
/// Throws UnknownPredicate.
Verdict evaluate_predicate(std::string_view name, RingAnalysis& a);

PropertyReport check_properties(RingAnalysis& a, const std::vector<std::string>& names);

/// Re-runs the predicate on a fresh analysis of `r` and compares.
bool witness_reproduces(std::string_view name, const FiniteRing& r, const Verdict& v);

std::string report_to_json(const PropertyReport& report);
std::string report_to_markdown(const PropertyReport& report);

}  // namespace ringlab
