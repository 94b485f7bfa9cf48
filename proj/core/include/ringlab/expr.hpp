#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/constructions.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Bimodule argument of Tri / Morita: the ring acting on itself (needs
/// both rings equal), the zero module, or a JSON table file.
struct ModuleSpec {
  enum class Kind { self, zero, file };
  Kind kind = Kind::self;
  std::string path;

  bool operator==(const ModuleSpec&) const = default;
};

/// Parsed ring expression. Parameter meaning by kind:
///   zn: params = {k}            matrix, triangular: params = {n}
///   corner: params = {e}        quotient: params = generator indices
///   hst, lst: params = {s, t}   ks: params = {s}
///   enumerated: params = {order, index}
struct RingExpr {
  enum class Kind {
    zn, product, matrix, triangular, corner, quotient,
    hst, lst, k0, ks, tri, morita, enumerated, file
  };
  Kind kind = Kind::zn;
  std::vector<RingExpr> children;
  std::vector<std::uint64_t> params;
  std::string path;
  ModuleSpec m, n;

  bool operator==(const RingExpr&) const = default;
};

/// Grammar (whitespace-insensitive, integers are element indices):
///   Zn(k) | M(n,R) | T(n,R) | Prod(R,...) | Corner(R,e=i) | Quot(R,gens=[i,...])
///   | Hst(R,s=i,t=j) | Lst(R,s=i,t=j) | K0(R) | Ks(R,s=i)
///   | Tri(S,T[,M=spec]) | Morita(A,B[,M=spec][,N=spec]) | Enum(order,k)
///   | File("path")
/// with spec = self | zero | File("path"). Throws ParseError with the byte
/// offset of the problem.
RingExpr parse_ring_expr(std::string_view text);

/// Canonical text form; parse_ring_expr(to_string(e)) == e.
std::string to_string(const RingExpr& e);

/// Builds the ring, validating central units, idempotents, ideals and caps.
FiniteRing build_ring(const RingExpr& e);
FiniteRing build_ring(std::string_view text);

/// Ring from an expression, or from a ring JSON file when `text` names an
/// existing file.
FiniteRing ring_from_argument(std::string_view text);

}  // namespace ringlab
