#include "ringlab/suite.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <thread>

#include "report_json.hpp"
#include "ringlab/constructions.hpp"
#include "ringlab/formulas.hpp"
#include "ringlab/isomorphism.hpp"
#include "ringlab/ring_json.hpp"

namespace ringlab {

// ---------------------------------------------------------------- corpus

namespace {

std::vector<std::string> default_members() {
  std::vector<std::string> out;
  for (int k = 1; k <= 9; ++k) out.push_back("Zn(" + std::to_string(k) + ")");
  for (int k : {2, 3, 4}) out.push_back("M(2,Zn(" + std::to_string(k) + "))");
  for (int k : {2, 3, 4}) out.push_back("T(2,Zn(" + std::to_string(k) + "))");
  for (int k : {2, 3, 4}) out.push_back("K0(Zn(" + std::to_string(k) + "))");
  for (const char* head : {"Hst", "Lst"}) {
    for (int k : {2, 3, 4}) {
      const auto units = central_units(make_zn(static_cast<std::size_t>(k)));
      for (Elem s : units) {
        for (Elem t : units) {
          out.push_back(std::string(head) + "(Zn(" + std::to_string(k) + "),s=" +
                        std::to_string(s) + ",t=" + std::to_string(t) + ")");
        }
      }
    }
  }
  out.push_back("Prod(Zn(2),Zn(4))");
  for (int k : {2, 3}) {
    const std::string z = "Zn(" + std::to_string(k) + ")";
    out.push_back("Tri(" + z + "," + z + ")");
    out.push_back("Morita(" + z + "," + z + ")");
  }
  for (std::size_t order = 1; order <= 8; ++order) {
    const std::size_t count = [&] {
      std::size_t c = 0;
      // Enum(order,k) indexes the up-to-isomorphism list.
      while (true) {
        try {
          build_ring(parse_ring_expr("Enum(" + std::to_string(order) + "," + std::to_string(c) + ")"));
        } catch (const DimensionMismatch&) {
          return c;
        }
        ++c;
      }
    }();
    for (std::size_t k = 0; k < count; ++k) {
      out.push_back("Enum(" + std::to_string(order) + "," + std::to_string(k) + ")");
    }
  }
  return out;
}

std::vector<std::string> quick_members() {
  return {"Zn(1)",        "Zn(2)",          "Zn(3)",
          "Zn(4)",        "Zn(6)",          "M(2,Zn(2))",
          "M(2,Zn(3))",   "M(2,Zn(4))",     "T(2,Zn(2))",     "T(2,Zn(3))",
          "K0(Zn(2))",    "K0(Zn(4))",      "Hst(Zn(2),s=1,t=1)", "Lst(Zn(2),s=1,t=1)",
          "Prod(Zn(2),Zn(4))", "Tri(Zn(2),Zn(2))", "Morita(Zn(2),Zn(2))",
          "Enum(4,0)",    "Enum(4,1)",      "Enum(4,2)",
          "Enum(4,3)"};
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_members(std::string_view spec) {
  std::vector<std::string> out;
  if (!spec.empty() && spec.front() == '@') {
    const std::string path(spec.substr(1));
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open corpus file " + path);
    std::string line;
    while (std::getline(in, line)) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      line = trim(line);
      if (!line.empty()) out.push_back(line);
    }
    return out;
  }
  std::string cur;
  int depth = 0;
  bool quoted = false;
  for (char c : spec) {
    if (c == '"') quoted = !quoted;
    if (!quoted && c == '(') ++depth;
    if (!quoted && c == ')') --depth;
    if (!quoted && depth == 0 && c == ';') {
      if (!trim(cur).empty()) out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

}  // namespace

const std::vector<std::string>& corpus_presets() {
  static const std::vector<std::string> names{"default", "quick"};
  return names;
}

Corpus build_corpus(std::string_view spec) {
  Corpus corpus;
  corpus.spec = std::string(spec);
  std::vector<std::string> members;
  if (spec == "default") {
    corpus.version = "default-v1";
    members = default_members();
  } else if (spec == "quick") {
    corpus.version = "quick-v1";
    members = quick_members();
  } else {
    corpus.version = "custom";
    members = split_members(spec);
  }
  if (members.empty()) throw FormatError("corpus '" + corpus.spec + "' is empty");

  std::vector<CorpusEntry> base;
  for (const auto& text : members) {
    RingExpr e = parse_ring_expr(text);
    RingPtr ring = share(build_ring(e));
    base.push_back({to_string(e), std::move(e), std::move(ring)});
  }
  corpus.entries = base;
  if (corpus.version == "custom") return corpus;

  for (const auto& parent : base) {
    const FiniteRing& r = *parent.ring;
    std::vector<FiniteRing> kept;
    idempotents(r).for_each([&](Elem e) {
      if (e == r.zero() || e == r.one()) return;
      CornerRing c = corner_ring(r, e);
      const Fingerprint fp = fingerprint(c.ring);
      for (const auto& k : kept) {
        if (fingerprint(k) == fp && are_isomorphic(k, c.ring)) return;
      }
      RingExpr ce;
      ce.kind = RingExpr::Kind::corner;
      ce.children = {parent.source};
      ce.params = {e};
      corpus.entries.push_back({to_string(ce), ce, share(c.ring)});
      kept.push_back(std::move(c.ring));
    });
  }
  return corpus;
}

// ---------------------------------------------------------------- cases

std::string to_string(CaseKind kind) {
  switch (kind) {
    case CaseKind::assertion:
      return "assertion";
    case CaseKind::existential:
      return "existential";
    case CaseKind::observation:
      return "observation";
  }
  return "assertion";
}

bool SuiteReport::ok() const {
  return std::none_of(cases.begin(), cases.end(), [](const CaseResult& c) {
    return c.kind != CaseKind::observation && c.verdict == "FAIL";
  });
}

namespace {

using K = RingExpr::Kind;

/// Derived rings built while checking one corpus entry.
constexpr std::size_t kDerivedProductOrder = 128;
constexpr std::size_t kDerivedTriangularOrder = 8;
constexpr std::size_t kIdealCaseOrder = 256;

struct Node {
  explicit Node(RingPtr r, std::string e) : ring(std::move(r)), an(ring), expr(std::move(e)) {}
  RingPtr ring;
  RingAnalysis an;
  std::string expr;
  std::map<std::string, Verdict, std::less<>> verdicts;

  const Verdict& verdict(std::string_view name) {
    auto it = verdicts.find(name);
    if (it == verdicts.end()) {
      it = verdicts.emplace(std::string(name), evaluate_predicate(name, an)).first;
    }
    return it->second;
  }
  bool holds(std::string_view name) { return verdict(name).value; }
};

struct Corner {
  std::vector<Elem> embedding;
  std::unique_ptr<Node> node;
};

class RingContext {
 public:
  explicit RingContext(const CorpusEntry& e) : entry(e), root(e.ring, e.expr) {}

  const CorpusEntry& entry;
  Node root;

  K kind() const { return entry.source.kind; }

  Node& derived(const std::string& expr, const std::function<FiniteRing()>& make) {
    auto it = derived_.find(expr);
    if (it == derived_.end()) {
      it = derived_.emplace(expr, std::make_unique<Node>(share(make()), expr)).first;
    }
    return *it->second;
  }

  Node& child(std::size_t i) {
    const RingExpr& c = entry.source.children.at(i);
    return derived(to_string(c), [&] { return build_ring(c); });
  }

  /// R x Zn(2) for small non-corner rings, or the corpus product itself.
  std::optional<std::pair<Node*, std::vector<Node*>>> product_pair() {
    if (kind() == K::product) {
      std::vector<Node*> parts;
      for (std::size_t i = 0; i < entry.source.children.size(); ++i) parts.push_back(&child(i));
      return std::make_pair(&root, parts);
    }
    if (kind() == K::corner || root.ring->order() > kDerivedProductOrder) return std::nullopt;
    Node& z2 = derived("Zn(2)", [] { return make_zn(2); });
    Node& p = derived("Prod(" + entry.expr + ",Zn(2))",
                      [&] { return direct_product(*root.ring, *z2.ring); });
    return std::make_pair(&p, std::vector<Node*>{&root, &z2});
  }

  /// (R, T_n(R)) for corpus triangular rings, or (R, T_2(R)) for small rings.
  std::optional<std::pair<Node*, Node*>> triangular_pair() {
    if (kind() == K::triangular) return std::make_pair(&child(0), &root);
    if (kind() == K::corner || root.ring->order() > kDerivedTriangularOrder) return std::nullopt;
    Node& t = derived("T(2," + entry.expr + ")",
                      [&] { return upper_triangular_ring(2, *root.ring); });
    return std::make_pair(&root, &t);
  }

  Corner& corner(Elem e) {
    auto it = corners_.find(e);
    if (it == corners_.end()) {
      CornerRing c = corner_ring(*root.ring, e);
      Corner entry_corner{std::move(c.embedding), nullptr};
      entry_corner.node = std::make_unique<Node>(
          share(std::move(c.ring)), "Corner(" + entry.expr + ",e=" + std::to_string(e) + ")");
      it = corners_.emplace(e, std::move(entry_corner)).first;
    }
    return it->second;
  }

 private:
  std::map<std::string, std::unique_ptr<Node>> derived_;
  std::map<Elem, Corner> corners_;
};

struct Outcome {
  enum Status { out_of_scope, vacuous, pass, fail, found, skipped };
  Status status = out_of_scope;
  Counterexample cx;
};

Outcome out_of_scope() { return {}; }
Outcome vacuous() { return {Outcome::vacuous, {}}; }
Outcome pass() { return {Outcome::pass, {}}; }

Outcome fail(const Node& n, std::vector<Elem> w, std::vector<std::string> roles,
             std::string detail, Outcome::Status status = Outcome::fail) {
  return {status, {n.ring->name(), n.expr, std::move(w), std::move(roles), std::move(detail)}};
}

Outcome fail_with(const Node& n, const Verdict& v, const std::string& name) {
  return fail(n, v.witness, v.roles, name + " is false (" + v.method + ")");
}

Outcome from_formula(const Node& n, const FormulaCheck& f) {
  if (f.holds) return pass();
  return fail(n, f.witness, f.roles, f.statement);
}

/// hypothesis => conclusion on the corpus ring itself.
Outcome implication(RingContext& c, std::string_view hyp, std::string_view concl) {
  if (!c.root.holds(hyp)) return vacuous();
  const Verdict& v = c.root.verdict(concl);
  if (v.value) return pass();
  return fail_with(c.root, v, std::string(concl));
}

/// delta-reversibility of the ring and of its construction agree.
Outcome equivalence(Node& composite, Node& base) {
  const bool a = composite.holds("delta-reversible");
  const bool b = base.holds("delta-reversible");
  if (a == b) return pass();
  if (!a) return fail_with(composite, composite.verdict("delta-reversible"), "delta-reversible");
  return fail(base, base.verdict("delta-reversible").witness,
              base.verdict("delta-reversible").roles,
              "base ring not delta-reversible while " + composite.ring->name() + " is");
}

std::optional<Elem> set_difference_witness(const FiniteRing& r, const ElementSet& a,
                                           const ElementSet& b) {
  for (Elem x = 0; x < r.order(); ++x) {
    if (a.contains(x) != b.contains(x)) return x;
  }
  return std::nullopt;
}

Outcome radical_agreement(RingContext& c) {
  RingAnalysis& an = c.root.an;
  const FiniteRing& r = *c.root.ring;
  const ElementSet r1 = an.delta_essential_maximal();
  const auto check = [&](const ElementSet& other, const std::string& what) -> std::optional<Outcome> {
    if (auto x = set_difference_witness(r, r1, other)) {
      return fail(c.root, {*x}, {"x"},
                  "R1 (essential maximal) differs from " + what + " at x; x in R1: " +
                      (r1.contains(*x) ? "yes" : "no"));
    }
    return std::nullopt;
  };
  if (auto o = check(an.delta_socle_pullback(), "the socle-quotient pullback")) return *o;
  if (auto o = check(an.r3_set(), "R3 (direct-summand condition)")) return *o;
  if (auto o = check(an.r5_set(), "R5 (complement in the socle)")) return *o;
  if (r.order() <= limits().expensive_order) {
    const auto r2 = an.r2_largest_delta_small();
    if (!r2) return fail(c.root, {}, {}, "no largest delta-small right ideal");
    if (auto o = check(*r2, "R2 (largest delta-small right ideal)")) return *o;
    if (auto o = check(an.r4_ideal(), "R4 (faithful singular simple modules)")) return *o;
  }
  return pass();
}

Outcome semiprime(RingContext& c) {
  if (auto a = semiprime_violation(*c.root.ring, c.root.an.delta())) {
    return fail(c.root, {*a}, {"a"}, "aRa inside delta(R) although a is not");
  }
  return pass();
}

Outcome socle_in_j_equivalence(RingContext& c) {
  if (!c.root.holds("socle-in-jacobson")) return vacuous();
  const Verdict& d = c.root.verdict("delta-reversible");
  const Verdict& j = c.root.verdict("j-reversible");
  if (d.value == j.value) return pass();
  const Verdict& bad = d.value ? j : d;
  return fail(c.root, bad.witness, bad.roles,
              std::string("delta-reversible=") + (d.value ? "true" : "false") +
                  " but j-reversible=" + (j.value ? "true" : "false"));
}

Outcome lifting_abelian(RingContext& c) {
  if (!c.root.holds("delta-reversible") || !c.root.holds("idempotents-lift")) return vacuous();
  const Verdict& v = c.root.verdict("quotient-abelian");
  if (v.value) return pass();
  return fail_with(c.root, v, "quotient-abelian");
}

Outcome three_routes(RingContext& c) {
  try {
    is_delta_reversible(c.root.an);
  } catch (const CharacterizationMismatch& e) {
    return fail(c.root, {}, {}, e.what());
  }
  return pass();
}

Outcome ideal_absorption(RingContext& c) {
  const FiniteRing& r = *c.root.ring;
  if (r.order() > kIdealCaseOrder) return out_of_scope();
  if (!c.root.holds("delta-reversible")) return vacuous();
  const ElementSet& d = c.root.an.delta();
  for (const ElementSet& ideal : c.root.an.two_sided_ideals()) {
    const auto members = ideal.elements();
    for (Elem a : members) {
      for (Elem b : members) {
        if (r.mul(a, b) != r.zero()) continue;
        const Elem ba = r.mul(b, a);
        if (!ideal.contains(ba) || !d.contains(ba)) {
          return fail(c.root, {a, b}, {"a", "b"},
                      "ab = 0 inside an ideal of size " + std::to_string(ideal.size()) +
                          " but ba is not in I and delta(R)");
        }
      }
    }
  }
  return pass();
}

Outcome product_iff(RingContext& c) {
  auto pp = c.product_pair();
  if (!pp) return out_of_scope();
  auto& [prod, parts] = *pp;
  const bool whole = prod->holds("delta-reversible");
  bool all = true;
  Node* bad = nullptr;
  for (Node* p : parts) {
    if (!p->holds("delta-reversible")) {
      all = false;
      if (!bad) bad = p;
    }
  }
  if (whole == all) return pass();
  if (!whole) return fail_with(*prod, prod->verdict("delta-reversible"), "delta-reversible");
  return fail(*bad, bad->verdict("delta-reversible").witness, bad->verdict("delta-reversible").roles,
              "factor not delta-reversible while " + prod->ring->name() + " is");
}

Outcome corner_iff(RingContext& c) {
  const FiniteRing& r = *c.root.ring;
  const bool whole = c.root.holds("delta-reversible");
  std::optional<Elem> bad;
  c.root.an.idempotents().for_each([&](Elem e) {
    if (bad) return;
    // e = 1 is R itself.
    const bool ok = e == r.one() ? whole : c.corner(e).node->holds("delta-reversible");
    if (!ok) bad = e;
  });
  if (whole == !bad) return pass();
  Corner& k = c.corner(*bad);
  const Verdict& v = k.node->verdict("delta-reversible");
  std::vector<Elem> w{*bad};
  for (Elem x : v.witness) w.push_back(k.embedding[x]);
  return fail(c.root, w, {"e", "a", "b"}, "eRe not delta-reversible while R is");
}

Outcome quasipolar(RingContext& c) {
  if (!c.root.holds("delta-quasipolar")) return vacuous();
  const Verdict& v = c.root.verdict("delta-reversible");
  if (!v.value) return fail_with(c.root, v, "delta-reversible");
  // Spectral idempotents of nilpotent elements lie in delta.
  const FiniteRing& r = *c.root.ring;
  const ElementSet& d = c.root.an.delta();
  const auto idem = c.root.an.idempotents().elements();
  for (Elem a = 0; a < r.order(); ++a) {
    if (!is_nilpotent(r, a)) continue;
    std::vector<Elem> comm;
    for (Elem x = 0; x < r.order(); ++x) {
      if (r.mul(a, x) == r.mul(x, a)) comm.push_back(x);
    }
    for (Elem p : idem) {
      if (!d.contains(r.add(a, p)) || d.contains(p)) continue;
      const bool in_double_commutant = std::all_of(
          comm.begin(), comm.end(), [&](Elem x) { return r.mul(p, x) == r.mul(x, p); });
      if (in_double_commutant) {
        return fail(c.root, {a, p}, {"a", "p"},
                    "nilpotent a has spectral idempotent p outside delta(R)");
      }
    }
  }
  return pass();
}

/// Module orders of a Tri / Morita expression.
std::pair<std::size_t, std::size_t> module_orders(const RingExpr& e, std::size_t first) {
  const auto order = [&](const ModuleSpec& m) -> std::size_t {
    switch (m.kind) {
      case ModuleSpec::Kind::self:
        return first;
      case ModuleSpec::Kind::zero:
        return 1;
      case ModuleSpec::Kind::file:
        return load_bimodule(m.path).order;
    }
    return 1;
  };
  return {order(e.m), e.kind == K::morita ? order(e.n) : 0};
}

struct Blocks {
  Node* first;
  Node* second;
  std::size_t m, n;
  bool morita;
};

std::optional<Blocks> block_structure(RingContext& c) {
  if (c.kind() == K::tri || c.kind() == K::morita) {
    Node& a = c.child(0);
    Node& b = c.child(1);
    const auto [m, n] = module_orders(c.entry.source, a.ring->order());
    return Blocks{&a, &b, m, n, c.kind() == K::morita};
  }
  if (c.kind() == K::triangular && c.entry.source.params[0] == 2) {
    Node& base = c.child(0);
    return Blocks{&base, &base, base.ring->order(), 0, false};
  }
  return std::nullopt;
}

Outcome block_inheritance(RingContext& c) {
  const auto b = block_structure(c);
  if (!b) return out_of_scope();
  const auto f = block_formula(c.root.an, b->first->an, b->second->an, b->m, b->n, b->morita);
  if (!f.holds) return fail(c.root, f.witness, f.roles, f.statement);
  if (!c.root.holds("delta-reversible")) return pass();
  for (Node* part : {b->first, b->second}) {
    if (!part->holds("delta-reversible")) {
      return fail(*part, part->verdict("delta-reversible").witness,
                  part->verdict("delta-reversible").roles,
                  "diagonal block not delta-reversible while " + c.root.ring->name() + " is");
    }
  }
  return pass();
}

Outcome block_containment(RingContext& c) {
  const auto b = block_structure(c);
  if (!b || c.kind() == K::triangular) return out_of_scope();
  return from_formula(c.root,
                      block_formula(c.root.an, b->first->an, b->second->an, b->m, b->n, b->morita));
}

Outcome triangular_down(RingContext& c) {
  auto tp = c.triangular_pair();
  if (!tp) return out_of_scope();
  auto [base, tri] = *tp;
  if (!tri->holds("delta-reversible")) return vacuous();
  const Verdict& v = base->verdict("delta-reversible");
  if (v.value) return pass();
  return fail_with(*base, v, "delta-reversible");
}

Outcome triangular_up(RingContext& c) {
  auto tp = c.triangular_pair();
  if (!tp) return out_of_scope();
  auto [base, tri] = *tp;
  if (!base->holds("delta-reversible")) return vacuous();
  const Verdict& v = tri->verdict("delta-reversible");
  if (v.value) return pass();
  return fail_with(*tri, v, "delta-reversible");
}

Outcome matrix_non_inheritance(RingContext& c) {
  if (c.kind() != K::matrix) return out_of_scope();
  Node& base = c.child(0);
  if (!base.holds("delta-reversible")) return vacuous();
  const Verdict& v = c.root.verdict("delta-reversible");
  if (v.value) return pass();
  return fail(c.root, v.witness, v.roles,
              base.ring->name() + " is delta-reversible but " + c.root.ring->name() +
                  " is not",
              Outcome::found);
}

Outcome construction_iff(RingContext& c, K k) {
  if (c.kind() != k) return out_of_scope();
  return equivalence(c.root, c.child(0));
}

Outcome product_formula_case(RingContext& c) {
  auto pp = c.product_pair();
  if (!pp) return out_of_scope();
  auto& [prod, parts] = *pp;
  std::vector<const FiniteRing*> rings;
  for (Node* p : parts) rings.push_back(p->ring.get());
  return from_formula(*prod, product_formula(prod->an, rings));
}

Outcome corner_formula_case(RingContext& c) {
  std::optional<Outcome> bad;
  c.root.an.idempotents().for_each([&](Elem e) {
    if (bad) return;
    Corner& k = c.corner(e);
    const auto f = corner_formula(c.root.an, e, k.embedding, k.node->an);
    if (!f.holds) bad = from_formula(c.root, f);
  });
  return bad ? *bad : pass();
}

Outcome radical_chain(RingContext& c) {
  const FiniteRing& r = *c.root.ring;
  RingAnalysis& an = c.root.an;
  const ElementSet& j = an.jacobson();
  const ElementSet& d = an.delta();
  const ElementSet& ds = an.delta_sharp();
  for (Elem x = 0; x < r.order(); ++x) {
    if (j.contains(x) && !d.contains(x)) return fail(c.root, {x}, {"x"}, "x in J(R) but not delta(R)");
    if (d.contains(x) && !ds.contains(x)) return fail(c.root, {x}, {"x"}, "x in delta(R) but not delta#(R)");
  }
  if (d.is_full() != (j.size() == 1)) {
    return fail(c.root, {}, {}, "delta(R) = R and J(R) = 0 disagree");
  }
  return pass();
}

Outcome reversibility_chain(RingContext& c) { return implication(c, "reversible", "j-reversible"); }

Outcome delta_small_maximality(RingContext& c) {
  if (c.root.ring->order() > limits().expensive_order) return out_of_scope();
  RingAnalysis& an = c.root.an;
  const ElementSet& d = an.delta();
  if (!an.is_delta_small(d)) return fail(c.root, {}, {}, "delta(R) is not delta-small");
  for (const ElementSet& i : an.lattice().right_ideals) {
    if (i.size() > d.size() && d.is_subset_of(i) && an.is_delta_small(i)) {
      const auto x = set_difference_witness(*c.root.ring, i, d);
      return fail(c.root, {*x}, {"x"},
                  "a right ideal strictly containing delta(R) is delta-small; x lies in it");
    }
  }
  return pass();
}

Outcome two_sided_closure(RingContext& c) {
  const FiniteRing& r = *c.root.ring;
  if (!is_two_sided_ideal(r, c.root.an.socle())) return fail(c.root, {}, {}, "socle not two-sided");
  if (!is_two_sided_ideal(r, c.root.an.delta())) return fail(c.root, {}, {}, "delta not two-sided");
  return pass();
}

struct CaseDef {
  CaseInfo info;
  std::function<Outcome(RingContext&)> run;
};

const std::vector<CaseDef>& case_defs() {
  using CK = CaseKind;
  const auto imp = [](const char* h, const char* c) {
    return [h, c](RingContext& ctx) { return implication(ctx, h, c); };
  };
  static const std::vector<CaseDef> defs = {
      {{"T1", "radical characterizations agree", CK::assertion,
        "The Zhou radical equals each alternative description: the direct-summand condition, "
        "the largest delta-small right ideal, the faithful singular simple modules, and "
        "complements inside the socle"},
       radical_agreement},
      {{"T2", "delta(R) is semiprime", CK::assertion, "The Zhou radical is a semiprime ideal"},
       semiprime},
      {{"T3", "J-reversible implies delta-reversible", CK::assertion,
        "J-reversibility implies delta-reversibility since J(R) is inside delta(R)"},
       imp("j-reversible", "delta-reversible")},
      {{"T4", "socle inside J: delta-reversible iff J-reversible", CK::assertion,
        "When the right socle lies in the Jacobson radical the two reversibility notions coincide"},
       socle_in_j_equivalence},
      {{"T5", "R/Soc J-reversible implies delta-reversible", CK::assertion,
        "J-reversibility of the quotient by the right socle gives delta-reversibility"},
       imp("quotient-by-socle-j-reversible", "delta-reversible")},
      {{"T6", "delta-reversible with lifting gives abelian R/delta", CK::assertion,
        "A delta-reversible ring whose idempotents lift modulo delta(R) has abelian quotient "
        "R/delta(R)"},
       lifting_abelian},
      {{"T7", "delta-reversible implies corner containment", CK::assertion,
        "In a delta-reversible ring eR(1-e) + (1-e)Re lies in delta(R) for every idempotent e"},
       imp("delta-reversible", "corner-containment")},
      {{"T8", "three routes to delta-reversibility agree", CK::assertion,
        "delta-reversibility is equivalent to square-zero elements lying in delta(R) and to "
        "a l(a) and r(a) a lying in delta(R)"},
       three_routes},
      {{"T9", "ideals inherit delta-reversibility", CK::assertion,
        "In a delta-reversible ring, ab = 0 with a, b in an ideal I forces ba into I meet "
        "delta(R) (the reading used for ideals without identity)"},
       ideal_absorption},
      {{"T10", "products", CK::assertion,
        "A direct product is delta-reversible exactly when every factor is"},
       product_iff},
      {{"T11", "corner rings", CK::assertion,
        "R is delta-reversible exactly when eRe is for every idempotent e"},
       corner_iff},
      {{"T12", "local implies delta# = delta", CK::assertion,
        "For a local ring delta#(R) = delta(R)"},
       imp("local", "delta-sharp-equals-delta")},
      {{"T13", "delta# = delta implies delta-reversible", CK::assertion,
        "delta#(R) = delta(R) implies delta-reversibility"},
       imp("delta-sharp-equals-delta", "delta-reversible")},
      {{"T14", "R/delta reduced implies delta-reversible", CK::assertion,
        "A reduced quotient R/delta(R) implies delta-reversibility"},
       imp("quotient-reduced", "delta-reversible")},
      {{"T15", "delta-reversible implies delta-linear Armendariz", CK::assertion,
        "delta-reversible rings are delta-linear Armendariz"},
       [](RingContext& c) {
         if (c.root.ring->order() > limits().armendariz_cap) return out_of_scope();
         return implication(c, "delta-reversible", "delta-linear-armendariz");
       }},
      {{"T16", "delta-clean implies delta-reversible", CK::assertion,
        "Every delta-clean ring is delta-reversible"},
       imp("delta-clean", "delta-reversible")},
      {{"T17", "delta-quasipolar implies delta-reversible", CK::assertion,
        "Every delta-quasipolar ring (as-used definition) is delta-reversible, and spectral "
        "idempotents of nilpotent elements lie in delta(R)"},
       quasipolar},
      {{"T18", "formal triangular and Morita blocks", CK::assertion,
        "delta of a trivial Morita context or formal triangular ring sits inside the diagonal "
        "blocks' radicals, and delta-reversibility passes to the diagonal rings"},
       block_inheritance},
      {{"T19", "T_n(R) delta-reversible implies R is", CK::assertion,
        "delta-reversibility of the upper triangular ring passes down to the base ring"},
       triangular_down},
      {{"T19-converse", "R delta-reversible implies T_2(R) is", CK::observation,
        "Converse direction, only claimed informally; checked empirically"},
       triangular_up},
      {{"T20", "matrix rings need not inherit", CK::existential,
        "Some delta-reversible R has M_2(R) not delta-reversible"},
       matrix_non_inheritance},
      {{"T21", "H_(s,t)(R)", CK::assertion,
        "R is delta-reversible exactly when H_(s,t)(R) is"},
       [](RingContext& c) { return construction_iff(c, K::hst); }},
      {{"T22", "L_(s,t)(R)", CK::assertion, "R is delta-reversible exactly when L_(s,t)(R) is"},
       [](RingContext& c) { return construction_iff(c, K::lst); }},
      {{"T23", "K_0(R)", CK::assertion, "R is delta-reversible exactly when K_0(R) is"},
       [](RingContext& c) { return construction_iff(c, K::k0); }},
      {{"F1", "radical of a product", CK::assertion,
        "delta of a direct product is the product of the radicals"},
       product_formula_case},
      {{"F2", "radical of a corner", CK::assertion, "delta(eRe) = e delta(R) e"},
       corner_formula_case},
      {{"F3", "radical of a matrix ring", CK::assertion, "delta(M_n(R)) = M_n(delta(R))"},
       [](RingContext& c) {
         if (c.kind() != K::matrix) return out_of_scope();
         return from_formula(c.root, matrix_formula(c.root.an, c.entry.source.params[0],
                                                    c.child(0).an));
       }},
      {{"F4", "radical of a triangular ring", CK::assertion,
        "delta(T_n(R)) has diagonal entries in delta(R)"},
       [](RingContext& c) {
         if (c.kind() != K::triangular) return out_of_scope();
         return from_formula(c.root, triangular_formula(c.root.an, c.entry.source.params[0],
                                                        c.child(0).an));
       }},
      {{"F5", "radical of H_(s,t)(R)", CK::assertion,
        "delta(H_(s,t)(R)) consists of the elements with a, d, f in delta(R)"},
       [](RingContext& c) {
         if (c.kind() != K::hst) return out_of_scope();
         const auto& p = c.entry.source.params;
         return from_formula(c.root, hst_formula(c.root.an, c.child(0).an,
                                                 static_cast<Elem>(p[0]), static_cast<Elem>(p[1])));
       }},
      {{"F6", "radical of L_(s,t)(R)", CK::assertion,
        "delta(L_(s,t)(R)) consists of the elements with a, d, f in delta(R)"},
       [](RingContext& c) {
         if (c.kind() != K::lst) return out_of_scope();
         return from_formula(c.root, lst_formula(c.root.an, c.child(0).an));
       }},
      {{"F7", "radical of K_0(R)", CK::assertion,
        "delta(K_0(R)) consists of the elements with diagonal entries in delta(R)"},
       [](RingContext& c) {
         if (c.kind() != K::k0) return out_of_scope();
         return from_formula(c.root, k0_formula(c.root.an, c.child(0).an));
       }},
      {{"F8", "radical of block rings", CK::assertion,
        "delta of a trivial Morita context or formal triangular ring has diagonal blocks in "
        "the blocks' radicals"},
       block_containment},
      {{"I1", "J inside delta inside delta#", CK::assertion,
        "J(R) is inside delta(R) is inside delta#(R), and delta(R) = R exactly when J(R) = 0"},
       radical_chain},
      {{"I2", "reversible implies J-reversible", CK::assertion,
        "Reversibility implies J-reversibility"},
       reversibility_chain},
      {{"I3", "delta(R) is the largest delta-small right ideal", CK::assertion,
        "delta(R) is delta-small and no larger right ideal is"},
       delta_small_maximality},
      {{"I4", "socle and delta are two-sided", CK::assertion,
        "The right socle and the Zhou radical are two-sided ideals"},
       two_sided_closure},
  };
  return defs;
}

/// Runs `work(i)` for i in [0, n) on up to `jobs` threads.
void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& work) {
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mu;
  for (std::size_t t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          work(i);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

const std::vector<CaseInfo>& suite_cases() {
  static const std::vector<CaseInfo> infos = [] {
    std::vector<CaseInfo> out;
    for (const auto& d : case_defs()) out.push_back(d.info);
    return out;
  }();
  return infos;
}

SuiteReport run_theorem_suite(const Corpus& corpus, std::size_t jobs,
                              const std::vector<std::string>& ids) {
  std::vector<const CaseDef*> selected;
  for (const auto& d : case_defs()) {
    if (ids.empty() || std::find(ids.begin(), ids.end(), d.info.id) != ids.end()) {
      selected.push_back(&d);
    }
  }
  for (const auto& id : ids) {
    const bool known = std::any_of(case_defs().begin(), case_defs().end(),
                                   [&](const CaseDef& d) { return d.info.id == id; });
    if (!known) throw UnknownPredicate("suite case " + id);
  }

  const std::size_t n = corpus.entries.size();
  std::vector<std::vector<Outcome>> grid(n);
  parallel_for(n, jobs, [&](std::size_t i) {
    RingContext ctx(corpus.entries[i]);
    std::vector<Outcome> row;
    for (const CaseDef* d : selected) {
      Outcome o;
      try {
        o = d->run(ctx);
      } catch (const LatticeCapExceeded&) {
        o.status = Outcome::skipped;
      } catch (const SizeCapExceeded&) {
        o.status = Outcome::skipped;
      } catch (const Error& e) {
        o = fail(ctx.root, {}, {}, std::string("error: ") + e.what());
      }
      row.push_back(std::move(o));
    }
    grid[i] = std::move(row);
  });

  SuiteReport report;
  report.corpus_spec = corpus.spec;
  report.corpus_version = corpus.version;
  report.corpus_size = n;
  report.caps = limits();
  for (std::size_t c = 0; c < selected.size(); ++c) {
    const CaseInfo& info = selected[c]->info;
    CaseResult res{info.id, info.title, info.kind, info.paper_ref, {}, 0, 0, 0, std::nullopt};
    bool failed = false;
    bool found = false;
    for (std::size_t i = 0; i < n; ++i) {
      const Outcome& o = grid[i][c];
      switch (o.status) {
        case Outcome::out_of_scope:
          continue;
        case Outcome::skipped:
          ++res.skipped;
          continue;
        case Outcome::vacuous:
          ++res.in_scope;
          continue;
        case Outcome::pass:
          ++res.in_scope;
          ++res.hypothesis;
          continue;
        case Outcome::fail:
          ++res.in_scope;
          ++res.hypothesis;
          if (!failed) res.counterexample = o.cx;
          failed = true;
          continue;
        case Outcome::found:
          ++res.in_scope;
          ++res.hypothesis;
          if (!found) res.counterexample = o.cx;
          found = true;
          continue;
      }
    }
    switch (info.kind) {
      case CaseKind::assertion:
        res.verdict = failed ? "FAIL" : "PASS";
        break;
      case CaseKind::existential:
        res.verdict = found && !failed ? "PASS" : "FAIL";
        break;
      case CaseKind::observation:
        res.verdict = failed ? "REFUTED" : "HOLDS";
        break;
    }
    report.cases.push_back(std::move(res));
  }
  return report;
}

namespace {

detail::ojson caps_json(const Limits& l) {
  detail::ojson j;
  j["size_cap"] = l.size_cap;
  j["lattice_cap"] = l.lattice_cap;
  j["armendariz_cap"] = l.armendariz_cap;
  j["expensive_order"] = l.expensive_order;
  return j;
}

detail::ojson header_json(const std::string& spec, const std::string& version, std::size_t size) {
  detail::ojson j;
  j["tool"] = {{"name", "ringlab"}, {"version", kToolVersion}};
  j["corpus"] = spec;
  j["corpus_version"] = version;
  j["corpus_size"] = size;
  j["caps"] = caps_json(limits());
  return j;
}

std::string witness_list(const std::vector<Elem>& w, const std::vector<std::string>& roles) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += (i < roles.size() ? roles[i] : "?") + "=" + std::to_string(w[i]);
  }
  return out;
}

}  // namespace

std::string suite_report_json(const SuiteReport& report) {
  detail::ojson j = header_json(report.corpus_spec, report.corpus_version, report.corpus_size);
  j["caps"] = caps_json(report.caps);
  j["ok"] = report.ok();
  detail::ojson cases = detail::ojson::array();
  for (const auto& c : report.cases) {
    detail::ojson cj;
    cj["id"] = c.id;
    cj["title"] = c.title;
    cj["kind"] = to_string(c.kind);
    cj["paper_ref"] = c.paper_ref;
    cj["verdict"] = c.verdict;
    cj["in_scope"] = c.in_scope;
    cj["hypothesis"] = c.hypothesis;
    cj["skipped"] = c.skipped;
    if (c.counterexample) {
      const auto& x = *c.counterexample;
      cj["counterexample"] = {{"ring", x.ring},       {"expr", x.expr},
                              {"witness", x.witness}, {"roles", x.roles},
                              {"detail", x.detail}};
    }
    cases.push_back(std::move(cj));
  }
  j["cases"] = std::move(cases);
  return j.dump(2) + "\n";
}

std::string suite_report_markdown(const SuiteReport& report) {
  std::ostringstream out;
  out << "# ringlab suite report\n\n";
  out << "- tool: ringlab " << kToolVersion << "\n";
  out << "- corpus: " << report.corpus_spec << " (" << report.corpus_version << ", "
      << report.corpus_size << " rings)\n";
  out << "- caps: size_cap=" << report.caps.size_cap << ", lattice_cap=" << report.caps.lattice_cap
      << ", armendariz_cap=" << report.caps.armendariz_cap
      << ", expensive_order=" << report.caps.expensive_order << "\n";
  out << "- ok: " << (report.ok() ? "true" : "false") << "\n\n";
  out << "| id | title | kind | verdict | in_scope | hypothesis | skipped | counterexample |\n";
  out << "|---|---|---|---|---|---|---|---|\n";
  for (const auto& c : report.cases) {
    std::string cx;
    if (c.counterexample) {
      const auto& x = *c.counterexample;
      cx = x.ring + " [" + witness_list(x.witness, x.roles) + "] " + x.detail;
    }
    out << "| " << c.id << " | " << detail::md_cell(c.title) << " | " << to_string(c.kind)
        << " | " << c.verdict << " | " << c.in_scope << " | " << c.hypothesis << " | "
        << c.skipped << " | " << detail::md_cell(cx) << " |\n";
  }
  out << "\n## Statements\n\n";
  for (const auto& c : report.cases) {
    out << "- " << c.id << " (paper_ref): " << c.paper_ref << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------- hunt

HuntQuery parse_implication(std::string_view text) {
  const auto arrow = text.find("=>");
  if (arrow == std::string_view::npos) throw ParseError("expected 'A => B'", 0);
  HuntQuery q;
  q.antecedent = trim(std::string(text.substr(0, arrow)));
  q.consequent = trim(std::string(text.substr(arrow + 2)));
  if (q.antecedent.empty()) throw ParseError("missing antecedent", 0);
  if (q.consequent.empty()) throw ParseError("missing consequent", arrow + 2);
  for (const auto& name : {q.antecedent, q.consequent}) {
    if (!is_registered_predicate(name)) throw UnknownPredicate(name);
  }
  return q;
}

HuntReport hunt_counterexample(const Corpus& corpus, const HuntQuery& q, std::size_t jobs) {
  for (const auto& name : {q.antecedent, q.consequent}) {
    if (!is_registered_predicate(name)) throw UnknownPredicate(name);
  }
  const std::size_t n = corpus.entries.size();
  std::vector<std::optional<HuntFinding>> hits(n);
  std::atomic<std::size_t> first_hit{n};
  parallel_for(n, jobs, [&](std::size_t i) {
    if (q.stop_at_first && i > first_hit.load()) return;
    const CorpusEntry& e = corpus.entries[i];
    RingAnalysis an(e.ring);
    if (!evaluate_predicate(q.antecedent, an).value) return;
    Verdict v = evaluate_predicate(q.consequent, an);
    if (v.value) return;
    hits[i] = HuntFinding{e.ring->name(), e.expr, std::move(v)};
    std::size_t cur = first_hit.load();
    while (i < cur && !first_hit.compare_exchange_weak(cur, i)) {
    }
  });

  HuntReport report;
  report.corpus_spec = corpus.spec;
  report.corpus_version = corpus.version;
  report.corpus_size = n;
  report.query = q;
  report.searched = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (!hits[i]) continue;
    report.findings.push_back(std::move(*hits[i]));
    if (q.stop_at_first) {
      report.searched = i + 1;
      break;
    }
  }
  return report;
}

std::string hunt_report_json(const HuntReport& report) {
  detail::ojson j = header_json(report.corpus_spec, report.corpus_version, report.corpus_size);
  j["implication"] = report.query.antecedent + " => " + report.query.consequent;
  j["stop_at_first"] = report.query.stop_at_first;
  j["searched"] = report.searched;
  detail::ojson findings = detail::ojson::array();
  for (const auto& f : report.findings) {
    detail::ojson fj;
    fj["ring"] = f.ring;
    fj["expr"] = f.expr;
    fj["consequent"] = detail::verdict_json(f.consequent);
    findings.push_back(std::move(fj));
  }
  j["findings"] = std::move(findings);
  return j.dump(2) + "\n";
}

std::string hunt_report_markdown(const HuntReport& report) {
  std::ostringstream out;
  out << "# ringlab hunt report\n\n";
  out << "- tool: ringlab " << kToolVersion << "\n";
  out << "- corpus: " << report.corpus_spec << " (" << report.corpus_version << ", "
      << report.corpus_size << " rings)\n";
  out << "- caps: size_cap=" << limits().size_cap << ", lattice_cap=" << limits().lattice_cap
      << ", armendariz_cap=" << limits().armendariz_cap
      << ", expensive_order=" << limits().expensive_order << "\n";
  out << "- implication: " << report.query.antecedent << " => " << report.query.consequent
      << "\n";
  out << "- stop_at_first: " << (report.query.stop_at_first ? "true" : "false") << "\n";
  out << "- searched: " << report.searched << "\n\n";
  if (report.findings.empty()) {
    out << "No counterexample found.\n";
    return out.str();
  }
  out << "| ring | expr | witness | method |\n|---|---|---|---|\n";
  for (const auto& f : report.findings) {
    out << "| " << detail::md_cell(f.ring) << " | " << detail::md_cell(f.expr) << " | "
        << detail::witness_text(f.consequent) << " | " << detail::md_cell(f.consequent.method)
        << " |\n";
  }
  return out.str();
}

}  // namespace ringlab
