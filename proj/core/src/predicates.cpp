#include "ringlab/predicates.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>

#include "report_json.hpp"
#include "ringlab/constructions.hpp"

namespace ringlab {

namespace {

using Pair = std::pair<Elem, Elem>;

/// Smallest (a,b) with ab = 0 and ba outside `target`.
std::optional<Pair> reversibility_violation(const FiniteRing& r, const ElementSet& target) {
  const Elem z = r.zero();
  for (Elem a = 0; a < r.order(); ++a) {
    const auto row = r.mul_row(a);
    for (Elem b = 0; b < r.order(); ++b) {
      if (row[b] == z && !target.contains(r.mul(b, a))) return Pair{a, b};
    }
  }
  return std::nullopt;
}

Verdict reversibility(const FiniteRing& r, const ElementSet& target, std::string method) {
  if (auto w = reversibility_violation(r, target)) {
    return Verdict::fail({w->first, w->second}, {"a", "b"}, std::move(method));
  }
  return Verdict::pass(std::move(method));
}

std::optional<Elem> first_outside(const FiniteRing& r, const ElementSet& s,
                                  const std::function<bool(Elem)>& pred) {
  for (Elem x = 0; x < r.order(); ++x) {
    if (pred(x) && !s.contains(x)) return x;
  }
  return std::nullopt;
}

/// Runs `pred` on R/I and maps the witness back to coset representatives.
Verdict on_quotient(RingAnalysis& a, const ElementSet& ideal,
                    Verdict (*pred)(RingAnalysis&), const std::string& label) {
  const QuotientRing q = quotient_ring(a.ring(), ideal);
  RingAnalysis qa(q.ring);
  Verdict v = pred(qa);
  for (Elem& w : v.witness) w = q.representatives[w];
  v.method = "on " + label + ": " + v.method;
  return v;
}

}  // namespace

Verdict is_reversible(RingAnalysis& a) {
  return reversibility(a.ring(), a.ring().zero_set(), "exhaustive scan: ab=0 => ba=0");
}

Verdict is_j_reversible(RingAnalysis& a) {
  return reversibility(a.ring(), a.jacobson(), "exhaustive scan: ab=0 => ba in J(R)");
}

Verdict is_delta_reversible(RingAnalysis& an) {
  const FiniteRing& r = an.ring();
  const ElementSet& d = an.delta();
  const std::size_t n = r.order();
  const Elem z = r.zero();

  const auto by_definition = reversibility_violation(r, d);

  // Square-zero elements all lie in delta.
  std::optional<Elem> square_zero;
  for (Elem x = 0; x < n && !square_zero; ++x) {
    if (r.mul(x, x) == z && !d.contains(x)) square_zero = x;
  }

  // a * l(a) and r(a) * a inside delta for every a.
  std::optional<Pair> annihilator;
  for (Elem x = 0; x < n && !annihilator; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if ((r.mul(y, x) == z && !d.contains(r.mul(x, y))) ||
          (r.mul(x, y) == z && !d.contains(r.mul(y, x)))) {
        annihilator = Pair{x, y};
        break;
      }
    }
  }

  const bool def = !by_definition;
  if (def != !square_zero || def != !annihilator) {
    throw CharacterizationMismatch(
        "delta-reversibility of " + r.name() + ": definition=" + (def ? "true" : "false") +
        ", square-zero=" + (square_zero ? "false" : "true") +
        ", annihilator=" + (annihilator ? "false" : "true"));
  }
  const std::string method =
      "definition (ab=0 => ba in delta); agrees with square-zero and annihilator routes";
  if (def) return Verdict::pass(method);
  return Verdict::fail({by_definition->first, by_definition->second}, {"a", "b"}, method);
}

Verdict is_commutative(RingAnalysis& an) {
  const FiniteRing& r = an.ring();
  for (Elem a = 0; a < r.order(); ++a) {
    for (Elem b = a + 1; b < r.order(); ++b) {
      if (r.mul(a, b) != r.mul(b, a)) {
        return Verdict::fail({a, b}, {"a", "b"}, "exhaustive scan: ab=ba");
      }
    }
  }
  return Verdict::pass("exhaustive scan: ab=ba");
}

Verdict is_abelian(RingAnalysis& an) {
  const FiniteRing& r = an.ring();
  const std::string method = "every idempotent commutes with every element";
  std::optional<Pair> w;
  an.idempotents().for_each([&](Elem e) {
    if (w) return;
    for (Elem x = 0; x < r.order(); ++x) {
      if (r.mul(e, x) != r.mul(x, e)) {
        w = Pair{e, x};
        return;
      }
    }
  });
  if (w) return Verdict::fail({w->first, w->second}, {"e", "x"}, method);
  return Verdict::pass(method);
}

Verdict is_reduced(RingAnalysis& an) {
  const FiniteRing& r = an.ring();
  std::optional<Elem> square_zero;
  for (Elem x = 0; x < r.order() && !square_zero; ++x) {
    if (x != r.zero() && r.mul(x, x) == r.zero()) square_zero = x;
  }
  const bool has_nilpotent = nilpotents(r).size() > 1;
  if (has_nilpotent != square_zero.has_value()) {
    throw CrossCheckMismatch("reducedness of " + r.name() +
                             ": nilpotent and square-zero scans disagree");
  }
  const std::string method = "no nonzero nilpotent; cross-checked with square-zero scan";
  if (square_zero) return Verdict::fail({*square_zero}, {"square-zero"}, method);
  return Verdict::pass(method);
}

Verdict is_semisimple(RingAnalysis& an) {
  const FiniteRing& r = an.ring();
  const bool by_delta = an.delta().is_full();
  const bool by_jacobson = an.jacobson().size() == 1;
  if (by_delta != by_jacobson) {
    throw CrossCheckMismatch("semisimplicity of " + r.name() + ": delta=R and J=0 disagree");
  }
  const std::string method = "delta(R) = R; cross-checked with J(R) = 0";
  if (by_delta) return Verdict::pass(method);
  const auto w = first_outside(r, an.delta(), [](Elem) { return true; });
  return Verdict::fail({*w}, {"outside-delta"}, method);
}

Verdict is_local(RingAnalysis& an) {
  const FiniteRing& r = an.ring();
  const ElementSet& u = an.units();
  const bool by_lattice = an.lattice().maximal.size() == 1;

  std::optional<Pair> w;
  for (Elem a = 0; a < r.order() && !w; ++a) {
    if (u.contains(a)) continue;
    for (Elem b = a; b < r.order(); ++b) {
      if (!u.contains(b) && u.contains(r.add(a, b))) {
        w = Pair{a, b};
        break;
      }
    }
  }
  const bool by_units = r.order() > 1 && !w;
  if (by_lattice != by_units) {
    throw CrossCheckMismatch("locality of " + r.name() +
                             ": maximal-ideal count and non-unit closure disagree");
  }
  const std::string method = "unique maximal right ideal; cross-checked with non-unit sums";
  if (by_lattice) return Verdict::pass(method);
  if (!w) return Verdict::fail({r.zero()}, {"zero-ring"}, method);
  return Verdict::fail({w->first, w->second}, {"a", "b"}, method);
}

Verdict is_delta_clean(RingAnalysis& an) {
  const FiniteRing& r = an.ring();
  const ElementSet& d = an.delta();
  const auto idem = an.idempotents().elements();
  const std::string method = "exhaustive scan: x = e + d with e idempotent, d in delta";
  for (Elem x = 0; x < r.order(); ++x) {
    const bool ok = std::any_of(idem.begin(), idem.end(),
                                [&](Elem e) { return d.contains(r.sub(x, e)); });
    if (!ok) return Verdict::fail({x}, {"x"}, method);
  }
  return Verdict::pass(method);
}

Verdict is_delta_quasipolar(RingAnalysis& an) {
  const FiniteRing& r = an.ring();
  const ElementSet& d = an.delta();
  const auto idem = an.idempotents().elements();
  const std::string method =
      "as-used definition: idempotent p in comm2(a) with a + p in delta, exhaustive scan";
  for (Elem a = 0; a < r.order(); ++a) {
    std::vector<Elem> comm;
    for (Elem c = 0; c < r.order(); ++c) {
      if (r.mul(a, c) == r.mul(c, a)) comm.push_back(c);
    }
    const bool ok = std::any_of(idem.begin(), idem.end(), [&](Elem p) {
      if (!d.contains(r.add(a, p))) return false;
      return std::all_of(comm.begin(), comm.end(),
                         [&](Elem c) { return r.mul(p, c) == r.mul(c, p); });
    });
    if (!ok) return Verdict::fail({a}, {"a"}, method);
  }
  return Verdict::pass(method);
}

Verdict is_delta_linear_armendariz(RingAnalysis& an) {
  const FiniteRing& r = an.ring();
  const std::size_t cap = limits().armendariz_cap;
  if (r.order() > cap) throw SizeCapExceeded("delta-linear Armendariz scan", r.order(), cap);
  const ElementSet& d = an.delta();
  const std::string method =
      "exhaustive scan over pairs of zero-product pairs (a0,b0), (a1,b1)";
  if (d.is_full()) return Verdict::pass(method + "; delta(R) = R");

  std::vector<Pair> zero_pairs;
  for (Elem a = 0; a < r.order(); ++a) {
    const auto row = r.mul_row(a);
    for (Elem b = 0; b < r.order(); ++b) {
      if (row[b] == r.zero()) zero_pairs.emplace_back(a, b);
    }
  }
  for (const auto& [a0, b0] : zero_pairs) {
    for (const auto& [a1, b1] : zero_pairs) {
      const Elem x = r.mul(a0, b1);
      const Elem y = r.mul(a1, b0);
      if (r.add(x, y) != r.zero()) continue;
      if (!d.contains(x) || !d.contains(y)) {
        return Verdict::fail({a0, b0, a1, b1}, {"a0", "b0", "a1", "b1"}, method);
      }
    }
  }
  return Verdict::pass(method);
}

Verdict idempotents_lift_mod_delta(RingAnalysis& an) {
  const FiniteRing& r = an.ring();
  const ElementSet& d = an.delta();
  const auto idem = an.idempotents().elements();
  const std::string method = "every f with f^2 - f in delta has idempotent e with e - f in delta";
  for (Elem f = 0; f < r.order(); ++f) {
    if (!d.contains(r.sub(r.mul(f, f), f))) continue;
    const bool ok = std::any_of(idem.begin(), idem.end(),
                                [&](Elem e) { return d.contains(r.sub(e, f)); });
    if (!ok) return Verdict::fail({f}, {"f"}, method);
  }
  return Verdict::pass(method);
}

Verdict corner_containment(RingAnalysis& an) {
  const FiniteRing& r = an.ring();
  const ElementSet& d = an.delta();
  const std::string method = "eR(1-e) and (1-e)Re inside delta for every idempotent e";
  std::optional<Pair> w;
  an.idempotents().for_each([&](Elem e) {
    if (w) return;
    const Elem f = r.sub(r.one(), e);
    for (Elem x = 0; x < r.order(); ++x) {
      if (!d.contains(r.mul(r.mul(e, x), f)) || !d.contains(r.mul(r.mul(f, x), e))) {
        w = Pair{e, x};
        return;
      }
    }
  });
  if (w) return Verdict::fail({w->first, w->second}, {"e", "x"}, method);
  return Verdict::pass(method);
}

Verdict quotient_abelian(RingAnalysis& an) {
  return on_quotient(an, an.delta(), is_abelian, "R/delta(R)");
}

Verdict quotient_reduced(RingAnalysis& an) {
  return on_quotient(an, an.delta(), is_reduced, "R/delta(R)");
}

Verdict delta_sharp_equals_delta(RingAnalysis& an) {
  const FiniteRing& r = an.ring();
  const std::string method = "x^k in delta for some k <= |R| only when x in delta";
  const auto w = first_outside(r, an.delta(), [&](Elem x) { return an.delta_sharp().contains(x); });
  if (w) return Verdict::fail({*w}, {"x"}, method);
  return Verdict::pass(method);
}

Verdict socle_in_jacobson(RingAnalysis& an) {
  const FiniteRing& r = an.ring();
  const std::string method = "Soc(R_R) contained in J(R)";
  const auto w = first_outside(r, an.jacobson(), [&](Elem x) { return an.socle().contains(x); });
  if (w) return Verdict::fail({*w}, {"x"}, method);
  return Verdict::pass(method);
}

Verdict quotient_by_socle_j_reversible(RingAnalysis& an) {
  return on_quotient(an, an.socle(), is_j_reversible, "R/Soc(R_R)");
}

namespace {

Verdict always_true(RingAnalysis&) { return Verdict::pass("constant"); }

using PredicateFn = Verdict (*)(RingAnalysis&);

const std::map<std::string, PredicateFn, std::less<>>& registry() {
  static const std::map<std::string, PredicateFn, std::less<>> table = {
      {"abelian", is_abelian},
      {"commutative", is_commutative},
      {"corner-containment", corner_containment},
      {"delta-clean", is_delta_clean},
      {"delta-linear-armendariz", is_delta_linear_armendariz},
      {"delta-quasipolar", is_delta_quasipolar},
      {"delta-reversible", is_delta_reversible},
      {"delta-sharp-equals-delta", delta_sharp_equals_delta},
      {"idempotents-lift", idempotents_lift_mod_delta},
      {"j-reversible", is_j_reversible},
      {"local", is_local},
      {"quotient-abelian", quotient_abelian},
      {"quotient-by-socle-j-reversible", quotient_by_socle_j_reversible},
      {"quotient-reduced", quotient_reduced},
      {"reduced", is_reduced},
      {"reversible", is_reversible},
      {"semisimple", is_semisimple},
      {"socle-in-jacobson", socle_in_jacobson},
      {"true", always_true},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& predicate_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_registered_predicate(std::string_view name) { return registry().contains(name); }

Verdict evaluate_predicate(std::string_view name, RingAnalysis& a) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw UnknownPredicate(std::string(name));
  return it->second(a);
}

PropertyReport check_properties(RingAnalysis& a, const std::vector<std::string>& names) {
  PropertyReport report{a.ring().name(), {}};
  for (const auto& name : names) report.results[name] = evaluate_predicate(name, a);
  return report;
}

bool witness_reproduces(std::string_view name, const FiniteRing& r, const Verdict& v) {
  RingAnalysis fresh(r);
  return evaluate_predicate(name, fresh) == v;
}

std::string report_to_json(const PropertyReport& report) {
  detail::ojson j;
  j["ring"] = report.ring;
  detail::ojson results = detail::ojson::object();
  for (const auto& [name, v] : report.results) results[name] = detail::verdict_json(v);
  j["results"] = std::move(results);
  return j.dump(2) + "\n";
}

std::string report_to_markdown(const PropertyReport& report) {
  std::string out = "# Properties of " + detail::md_cell(report.ring) + "\n\n";
  out += "| predicate | verdict | witness | method |\n|---|---|---|---|\n";
  for (const auto& [name, v] : report.results) {
    out += "| " + name + " | " + (v.value ? "true" : "false") + " | " +
           detail::witness_text(v) + " | " + detail::md_cell(v.method) + " |\n";
  }
  return out;
}

}  // namespace ringlab
