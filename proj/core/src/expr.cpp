#include "ringlab/expr.hpp"

#include <cctype>
#include <filesystem>
#include <map>
#include <mutex>

#include "ringlab/enumerate.hpp"
#include "ringlab/ideals.hpp"
#include "ringlab/ring_json.hpp"

namespace ringlab {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RingExpr parse() {
    RingExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > 0xffffffffu) fail("integer too large");
      ++pos_;
    }
    if (start == pos_) fail("expected an integer");
    return v;
  }

  std::string quoted() {
    expect('"');
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size()) ++pos_;
      out += text_[pos_++];
    }
    if (pos_ >= text_.size()) fail("unterminated string");
    ++pos_;
    return out;
  }

  /// `key=` prefix; the key must match.
  void keyword(const char* key) {
    const std::size_t at = pos_;
    const std::string k = ident();
    if (k != key) {
      pos_ = at;
      skip_ws();
      fail(std::string("expected '") + key + "='");
    }
    expect('=');
  }

  ModuleSpec module_spec() {
    skip_ws();
    const std::size_t at = pos_;
    const std::string k = ident();
    if (k == "self") return {ModuleSpec::Kind::self, {}};
    if (k == "zero") return {ModuleSpec::Kind::zero, {}};
    if (k == "File") {
      expect('(');
      std::string path = quoted();
      expect(')');
      return {ModuleSpec::Kind::file, std::move(path)};
    }
    pos_ = at;
    fail("expected self, zero or File(\"...\")");
  }

  RingExpr expr() {
    skip_ws();
    const std::size_t at = pos_;
    const std::string head = ident();
    RingExpr e;
    expect('(');
    using K = RingExpr::Kind;
    if (head == "Zn") {
      e.kind = K::zn;
      const std::size_t num_at = pos_;
      e.params = {integer()};
      if (e.params[0] == 0) {
        pos_ = num_at;
        skip_ws();
        fail("Zn needs k >= 1");
      }
    } else if (head == "M" || head == "T") {
      e.kind = head == "M" ? K::matrix : K::triangular;
      const std::size_t num_at = pos_;
      e.params = {integer()};
      if (e.params[0] == 0) {
        pos_ = num_at;
        skip_ws();
        fail("matrix size must be >= 1");
      }
      expect(',');
      e.children.push_back(expr());
    } else if (head == "Prod") {
      e.kind = K::product;
      e.children.push_back(expr());
      while (peek(',')) {
        ++pos_;
        e.children.push_back(expr());
      }
    } else if (head == "Corner") {
      e.kind = K::corner;
      e.children.push_back(expr());
      expect(',');
      keyword("e");
      e.params = {integer()};
    } else if (head == "Quot") {
      e.kind = K::quotient;
      e.children.push_back(expr());
      expect(',');
      keyword("gens");
      expect('[');
      if (!peek(']')) {
        e.params.push_back(integer());
        while (peek(',')) {
          ++pos_;
          e.params.push_back(integer());
        }
      }
      expect(']');
    } else if (head == "Hst" || head == "Lst") {
      e.kind = head == "Hst" ? K::hst : K::lst;
      e.children.push_back(expr());
      expect(',');
      keyword("s");
      e.params.push_back(integer());
      expect(',');
      keyword("t");
      e.params.push_back(integer());
    } else if (head == "K0") {
      e.kind = K::k0;
      e.children.push_back(expr());
    } else if (head == "Ks") {
      e.kind = K::ks;
      e.children.push_back(expr());
      expect(',');
      keyword("s");
      e.params = {integer()};
    } else if (head == "Tri") {
      e.kind = K::tri;
      e.children.push_back(expr());
      expect(',');
      e.children.push_back(expr());
      if (peek(',')) {
        ++pos_;
        keyword("M");
        e.m = module_spec();
      }
    } else if (head == "Morita") {
      e.kind = K::morita;
      e.children.push_back(expr());
      expect(',');
      e.children.push_back(expr());
      bool seen_m = false;
      bool seen_n = false;
      while (peek(',')) {
        ++pos_;
        skip_ws();
        const std::size_t key_at = pos_;
        const std::string key = ident();
        expect('=');
        if (key == "M" && !seen_m) {
          e.m = module_spec();
          seen_m = true;
        } else if (key == "N" && !seen_n) {
          e.n = module_spec();
          seen_n = true;
        } else {
          pos_ = key_at;
          fail("expected M= or N=");
        }
      }
    } else if (head == "Enum") {
      e.kind = K::enumerated;
      e.params.push_back(integer());
      expect(',');
      e.params.push_back(integer());
    } else if (head == "File") {
      e.kind = K::file;
      e.path = quoted();
    } else {
      pos_ = at;
      fail("unknown constructor '" + head + "'");
    }
    expect(')');
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string module_text(const ModuleSpec& m) {
  switch (m.kind) {
    case ModuleSpec::Kind::self:
      return "self";
    case ModuleSpec::Kind::zero:
      return "zero";
    case ModuleSpec::Kind::file:
      return "File(" + quote(m.path) + ")";
  }
  return "self";
}

Elem element_arg(const FiniteRing& r, std::uint64_t v, const char* what) {
  if (v >= r.order()) {
    throw DimensionMismatch(std::string(what) + " index " + std::to_string(v) +
                            " out of range for " + r.name());
  }
  return static_cast<Elem>(v);
}

Bimodule make_module(const ModuleSpec& spec, const FiniteRing& left, const FiniteRing& right,
                     const char* which) {
  Bimodule m;
  switch (spec.kind) {
    case ModuleSpec::Kind::self:
      if (!left.same_tables(right)) {
        throw DimensionMismatch(std::string("default bimodule ") + which +
                                " = self needs identical rings; give " + which +
                                "=zero or " + which + "=File(...)");
      }
      return self_bimodule(left);
    case ModuleSpec::Kind::zero:
      return zero_bimodule(left, right);
    case ModuleSpec::Kind::file:
      m = load_bimodule(spec.path);
      validate_bimodule(m, left, right);
      return m;
  }
  return m;
}

/// Enumerations are deterministic and somewhat costly; keep them.
const std::vector<FiniteRing>& cached_enumeration(std::size_t order) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<FiniteRing>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, enumerate_unital_rings(order, true)).first;
  return it->second;
}

}  // namespace

RingExpr parse_ring_expr(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const RingExpr& e) {
  using K = RingExpr::Kind;
  const auto child = [&](std::size_t i) { return to_string(e.children[i]); };
  switch (e.kind) {
    case K::zn:
      return "Zn(" + std::to_string(e.params[0]) + ")";
    case K::matrix:
      return "M(" + std::to_string(e.params[0]) + "," + child(0) + ")";
    case K::triangular:
      return "T(" + std::to_string(e.params[0]) + "," + child(0) + ")";
    case K::product: {
      std::string out = "Prod(";
      for (std::size_t i = 0; i < e.children.size(); ++i) out += (i ? "," : "") + child(i);
      return out + ")";
    }
    case K::corner:
      return "Corner(" + child(0) + ",e=" + std::to_string(e.params[0]) + ")";
    case K::quotient: {
      std::string out = "Quot(" + child(0) + ",gens=[";
      for (std::size_t i = 0; i < e.params.size(); ++i) {
        out += (i ? "," : "") + std::to_string(e.params[i]);
      }
      return out + "])";
    }
    case K::hst:
    case K::lst:
      return std::string(e.kind == K::hst ? "Hst(" : "Lst(") + child(0) +
             ",s=" + std::to_string(e.params[0]) + ",t=" + std::to_string(e.params[1]) + ")";
    case K::k0:
      return "K0(" + child(0) + ")";
    case K::ks:
      return "Ks(" + child(0) + ",s=" + std::to_string(e.params[0]) + ")";
    case K::tri: {
      std::string out = "Tri(" + child(0) + "," + child(1);
      if (e.m.kind != ModuleSpec::Kind::self) out += ",M=" + module_text(e.m);
      return out + ")";
    }
    case K::morita: {
      std::string out = "Morita(" + child(0) + "," + child(1);
      if (e.m.kind != ModuleSpec::Kind::self) out += ",M=" + module_text(e.m);
      if (e.n.kind != ModuleSpec::Kind::self) out += ",N=" + module_text(e.n);
      return out + ")";
    }
    case K::enumerated:
      return "Enum(" + std::to_string(e.params[0]) + "," + std::to_string(e.params[1]) + ")";
    case K::file:
      return "File(" + quote(e.path) + ")";
  }
  return {};
}

FiniteRing build_ring(const RingExpr& e) {
  using K = RingExpr::Kind;
  std::vector<FiniteRing> kids;
  kids.reserve(e.children.size());
  for (const auto& c : e.children) kids.push_back(build_ring(c));

  switch (e.kind) {
    case K::zn:
      return make_zn(e.params[0]);
    case K::matrix:
      return matrix_ring(e.params[0], kids[0]);
    case K::triangular:
      return upper_triangular_ring(e.params[0], kids[0]);
    case K::product: {
      std::vector<RingPtr> parts;
      for (auto& k : kids) parts.push_back(share(std::move(k)));
      return direct_product(parts);
    }
    case K::corner:
      return corner_ring(kids[0], element_arg(kids[0], e.params[0], "idempotent")).ring;
    case K::quotient: {
      std::vector<Elem> gens;
      for (auto g : e.params) gens.push_back(element_arg(kids[0], g, "generator"));
      const ElementSet ideal = right_ideal_generated(kids[0], gens);
      if (!is_two_sided_ideal(kids[0], ideal)) {
        throw NotTwoSidedIdeal("generators of Quot do not generate a two-sided ideal");
      }
      return quotient_ring(kids[0], ideal).ring;
    }
    case K::hst:
      return hst_ring(kids[0], element_arg(kids[0], e.params[0], "s"),
                      element_arg(kids[0], e.params[1], "t"));
    case K::lst:
      return lst_ring(kids[0], element_arg(kids[0], e.params[0], "s"),
                      element_arg(kids[0], e.params[1], "t"));
    case K::k0:
      return ks_ring(kids[0], kids[0].zero());
    case K::ks:
      return ks_ring(kids[0], element_arg(kids[0], e.params[0], "s"));
    case K::tri:
      return formal_triangular(kids[0], kids[1], make_module(e.m, kids[0], kids[1], "M"));
    case K::morita:
      return trivial_morita(kids[0], kids[1], make_module(e.m, kids[0], kids[1], "M"),
                            make_module(e.n, kids[1], kids[0], "N"));
    case K::enumerated: {
      const auto& rings = cached_enumeration(e.params[0]);
      if (e.params[1] >= rings.size()) {
        throw DimensionMismatch("Enum(" + std::to_string(e.params[0]) + ",k): only " +
                                std::to_string(rings.size()) + " rings");
      }
      return rings[e.params[1]];
    }
    case K::file:
      return load_ring(e.path);
  }
  throw Error("unreachable ring expression kind");
}

FiniteRing build_ring(std::string_view text) { return build_ring(parse_ring_expr(text)); }

FiniteRing ring_from_argument(std::string_view text) {
  std::error_code ec;
  const std::filesystem::path p{std::string(text)};
  if (std::filesystem::is_regular_file(p, ec)) return load_ring(p);
  return build_ring(text);
}

}  // namespace ringlab
