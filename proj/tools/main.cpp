#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ringlab/enumerate.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/predicates.hpp"
#include "ringlab/ring_json.hpp"
#include "ringlab/suite.hpp"

namespace {

using ringlab::Elem;
using ringlab::ElementSet;
using ojson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string out;
  std::string format = "json";
  std::size_t jobs = 1;
  std::size_t lattice_cap = 0;
  std::size_t size_cap = 0;
  std::size_t armendariz_cap = 0;
  std::string corpus;
  bool verbose = false;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw ringlab::FormatError("cannot write " + o.out);
  f << text;
}

std::string corpus_spec(const Options& o) {
  if (!o.corpus.empty()) return o.corpus;
  if (const char* env = std::getenv("RINGLAB_CORPUS"); env && *env) return env;
  return "default";
}

void apply_caps(const Options& o) {
  auto& l = ringlab::limits();
  if (o.lattice_cap) l.lattice_cap = o.lattice_cap;
  if (o.size_cap) l.size_cap = o.size_cap;
  if (o.armendariz_cap) l.armendariz_cap = o.armendariz_cap;
}

ojson caps_json() {
  const auto& l = ringlab::limits();
  return {{"size_cap", l.size_cap},
          {"lattice_cap", l.lattice_cap},
          {"armendariz_cap", l.armendariz_cap},
          {"expensive_order", l.expensive_order}};
}

ojson tool_json() { return {{"name", "ringlab"}, {"version", ringlab::kToolVersion}}; }

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto a = item.find_first_not_of(' ');
    const auto b = item.find_last_not_of(' ');
    if (a != std::string::npos) out.push_back(item.substr(a, b - a + 1));
  }
  return out;
}

std::string join_elems(const std::vector<Elem>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

// ---------------------------------------------------------------- commands

int cmd_construct(const Options& o, const std::string& expr) {
  const ringlab::FiniteRing r = ringlab::build_ring(expr);
  emit(o, ringlab::ring_to_json(r));
  // Keep stdout pure JSON when no file is given.
  (o.out.empty() ? std::cerr : std::cout) << r.name() << " order " << r.order() << "\n";
  return kExitOk;
}

int cmd_radical(const Options& o, const std::string& ring_arg, std::vector<std::string> which,
                bool all) {
  static const std::vector<std::string> known{"jacobson", "socle", "delta", "delta-sharp"};
  if (which.empty()) which = {"delta"};
  if (which.size() == 1 && which[0] == "all") which = known;
  for (const auto& w : which) {
    if (std::find(known.begin(), known.end(), w) == known.end()) {
      throw ringlab::UnknownPredicate("radical " + w);
    }
  }
  ringlab::RingAnalysis an(ringlab::share(ringlab::ring_from_argument(ring_arg)));
  const auto& r = an.ring();

  std::vector<std::pair<std::string, std::vector<Elem>>> rows;
  for (const auto& w : which) {
    const ElementSet& s = w == "jacobson" ? an.jacobson()
                          : w == "socle"  ? an.socle()
                          : w == "delta"  ? an.delta()
                                          : an.delta_sharp();
    rows.emplace_back(w, s.elements());
  }

  std::vector<std::pair<std::string, std::optional<std::vector<Elem>>>> chars;
  bool agree = true;
  if (all) {
    const auto r1 = an.delta_essential_maximal();
    chars.emplace_back("R1-essential-maximal", r1.elements());
    chars.emplace_back("socle-quotient-pullback", an.delta_socle_pullback().elements());
    const auto r2 = an.r2_largest_delta_small();
    chars.emplace_back("R2-largest-delta-small",
                       r2 ? std::optional(r2->elements()) : std::nullopt);
    chars.emplace_back("R3-direct-summand", an.r3_set().elements());
    chars.emplace_back("R4-singular-simple", an.r4_ideal().elements());
    chars.emplace_back("R5-socle-complement", an.r5_set().elements());
    for (const auto& [name, set] : chars) agree = agree && set && *set == r1.elements();
  }

  if (o.format == "markdown") {
    std::ostringstream md;
    md << "# " << r.name() << " (order " << r.order() << ")\n\n";
    md << "| set | size | elements |\n|---|---|---|\n";
    for (const auto& [name, v] : rows) {
      md << "| " << name << " | " << v.size() << " | " << join_elems(v) << " |\n";
    }
    if (all) {
      md << "\n| characterization | size | elements |\n|---|---|---|\n";
      for (const auto& [name, v] : chars) {
        md << "| " << name << " | " << (v ? std::to_string(v->size()) : "-") << " | "
           << (v ? join_elems(*v) : "none") << " |\n";
      }
      md << "\nagree: " << (agree ? "true" : "false") << "\n";
    }
    emit(o, md.str());
  } else {
    ojson j;
    j["tool"] = tool_json();
    j["caps"] = caps_json();
    j["ring"] = r.name();
    j["order"] = r.order();
    ojson sets = ojson::object();
    for (const auto& [name, v] : rows) sets[name] = {{"size", v.size()}, {"elements", v}};
    j["radicals"] = std::move(sets);
    if (all) {
      ojson cj = ojson::object();
      for (const auto& [name, v] : chars) {
        cj[name] = v ? ojson{{"size", v->size()}, {"elements", *v}} : ojson(nullptr);
      }
      j["characterizations"] = std::move(cj);
      j["agree"] = agree;
    }
    emit(o, j.dump(2) + "\n");
  }
  return agree ? kExitOk : kExitFail;
}

int cmd_check(const Options& o, const std::string& ring_arg, const std::string& props) {
  std::vector<std::string> names = split_csv(props);
  if (names.empty() || (names.size() == 1 && names[0] == "all")) names = ringlab::predicate_names();
  for (const auto& n : names) {
    if (!ringlab::is_registered_predicate(n)) throw ringlab::UnknownPredicate(n);
  }
  ringlab::RingAnalysis an(ringlab::share(ringlab::ring_from_argument(ring_arg)));
  const auto report = ringlab::check_properties(an, names);
  if (o.format == "markdown") {
    const auto& l = ringlab::limits();
    std::ostringstream md;
    md << "- tool: ringlab " << ringlab::kToolVersion << "\n- caps: size_cap=" << l.size_cap
       << ", lattice_cap=" << l.lattice_cap << ", armendariz_cap=" << l.armendariz_cap
       << ", expensive_order=" << l.expensive_order << "\n\n"
       << ringlab::report_to_markdown(report);
    emit(o, md.str());
    return kExitOk;
  }
  ojson j;
  j["tool"] = tool_json();
  j["caps"] = caps_json();
  const ojson body = ojson::parse(ringlab::report_to_json(report));
  for (const auto& [k, v] : body.items()) j[k] = v;
  emit(o, j.dump(2) + "\n");
  return kExitOk;
}

int cmd_suite(const Options& o, const std::string& cases) {
  const auto corpus = ringlab::build_corpus(corpus_spec(o));
  if (o.verbose) std::cerr << "corpus " << corpus.version << ": " << corpus.entries.size() << " rings\n";
  const auto report = ringlab::run_theorem_suite(corpus, o.jobs, split_csv(cases));
  emit(o, o.format == "markdown" ? ringlab::suite_report_markdown(report)
                                 : ringlab::suite_report_json(report));
  return report.ok() ? kExitOk : kExitFail;
}

int cmd_hunt(const Options& o, const std::string& implication, bool all) {
  auto q = ringlab::parse_implication(implication);
  q.stop_at_first = !all;
  const auto corpus = ringlab::build_corpus(corpus_spec(o));
  const auto report = ringlab::hunt_counterexample(corpus, q, o.jobs);
  emit(o, o.format == "markdown" ? ringlab::hunt_report_markdown(report)
                                 : ringlab::hunt_report_json(report));
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::size_t order, bool up_to_iso) {
  const auto rings = ringlab::enumerate_unital_rings(order, up_to_iso);
  if (o.format == "markdown") {
    std::ostringstream md;
    md << "# unital rings of order " << order << (up_to_iso ? " up to isomorphism" : "")
       << "\n\ncount: " << rings.size() << "\n\n| index | name |\n|---|---|\n";
    for (std::size_t i = 0; i < rings.size(); ++i) md << "| " << i << " | " << rings[i].name() << " |\n";
    emit(o, md.str());
    return kExitOk;
  }
  ojson j;
  j["tool"] = tool_json();
  j["order"] = order;
  j["up_to_iso"] = up_to_iso;
  j["count"] = rings.size();
  ojson list = ojson::array();
  for (const auto& r : rings) list.push_back(ojson::parse(ringlab::ring_to_json(r)));
  j["rings"] = std::move(list);
  emit(o, j.dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ringlab: finite rings, the Zhou radical and delta-reversibility"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("ringlab ") + ringlab::kToolVersion);

  Options o;
  app.add_option("--out", o.out, "Write output to this file instead of stdout");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "markdown"}));
  app.add_option("--jobs", o.jobs, "Worker threads for suite and hunt")->check(CLI::PositiveNumber);
  app.add_option("--lattice-cap", o.lattice_cap, "Max right ideals per lattice")->check(CLI::PositiveNumber);
  app.add_option("--size-cap", o.size_cap, "Max ring order")->check(CLI::PositiveNumber);
  app.add_option("--armendariz-cap", o.armendariz_cap, "Max order for the Armendariz scan")
      ->check(CLI::PositiveNumber);
  app.add_option("--corpus", o.corpus, "Corpus preset (default, quick), @file, or ';'-separated expressions");
  app.add_flag("-v,--verbose", o.verbose, "Progress on stderr");

  std::string expr;
  auto* construct = app.add_subcommand("construct", "Build a ring from an expression and print its JSON");
  construct->add_option("expr", expr, "Ring expression, e.g. M(2,Zn(3))")->required();

  std::string which;
  bool all_chars = false;
  auto* radical = app.add_subcommand("radical", "Compute jacobson, socle, delta, delta-sharp");
  radical->add_option("ring", expr, "Ring expression or ring JSON file")->required();
  radical->add_option("--which", which, "Comma list of jacobson,socle,delta,delta-sharp or 'all'");
  radical->add_flag("--all-characterizations", all_chars, "Also compute every description of delta");

  std::string props;
  auto* check = app.add_subcommand("check", "Evaluate predicates on a ring");
  check->add_option("ring", expr, "Ring expression or ring JSON file")->required();
  check->add_option("--props", props, "Comma list of predicates, or 'all'");

  std::string cases;
  auto* suite = app.add_subcommand("suite", "Run the theorem suite over a corpus");
  suite->add_option("--cases", cases, "Comma list of case ids (default: all)");

  std::string implication;
  bool hunt_all = false;
  auto* hunt = app.add_subcommand("hunt", "Search the corpus for a counterexample to A => B");
  hunt->add_option("--implies", implication, "Implication 'A => B' between predicates")->required();
  hunt->add_flag("--all", hunt_all, "Report every counterexample, not just the first");

  std::size_t order = 0;
  bool up_to_iso = false;
  auto* enumerate = app.add_subcommand("enumerate", "List unital rings of a given order");
  enumerate->add_option("--order", order, "Ring order (1..8)")->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--up-to-iso", up_to_iso, "One ring per isomorphism class");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    apply_caps(o);
    if (*construct) return cmd_construct(o, expr);
    if (*radical) return cmd_radical(o, expr, split_csv(which), all_chars);
    if (*check) return cmd_check(o, expr, props);
    if (*suite) return cmd_suite(o, cases);
    if (*hunt) return cmd_hunt(o, implication, hunt_all);
    if (*enumerate) return cmd_enumerate(o, order, up_to_iso);
  } catch (const ringlab::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ringlab::UnknownPredicate& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ringlab::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ringlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
