#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// Mixed-radix codec for composite element indices. The first coordinate
/// is the most significant, so index order matches lexicographic order of
/// coordinate tuples.
class MixedRadix {
 public:
  MixedRadix() = default;
  explicit MixedRadix(std::vector<std::size_t> radices);
  MixedRadix(std::size_t radix, std::size_t length);

  std::size_t total() const noexcept { return total_; }
  std::size_t length() const noexcept { return radices_.size(); }

  Elem encode(std::span<const Elem> digits) const;
  std::vector<Elem> decode(Elem index) const;

 private:
  std::vector<std::size_t> radices_;
  std::size_t total_ = 1;
};

/// Order of a composite ring, checked against limits().size_cap.
std::size_t checked_order(const std::string& what, std::span<const std::size_t> factors);

FiniteRing make_zn(std::size_t k);

FiniteRing direct_product(std::span<const RingPtr> parts);
FiniteRing direct_product(const FiniteRing& a, const FiniteRing& b);

/// Full n x n matrices; index encodes the row-major entry tuple.
FiniteRing matrix_ring(std::size_t n, const FiniteRing& base);
/// Upper triangular n x n matrices; index encodes the row-major tuple of
/// entries on or above the diagonal.
FiniteRing upper_triangular_ring(std::size_t n, const FiniteRing& base);

Elem matrix_element(const FiniteRing& base, std::size_t n, std::span<const Elem> entries);
std::vector<Elem> matrix_entries(const FiniteRing& base, std::size_t n, Elem index);

struct CornerRing {
  FiniteRing ring;
  /// embedding[i] is the element of the parent ring represented by i.
  std::vector<Elem> embedding;
};

/// eRe with identity e. Elements are numbered in increasing parent index.
CornerRing corner_ring(const FiniteRing& r, Elem e);

struct QuotientRing {
  FiniteRing ring;
  /// projection[x] is the coset of parent element x.
  std::vector<Elem> projection;
  /// representatives[c] is the smallest parent index in coset c.
  std::vector<Elem> representatives;
};

/// R/I for a two-sided ideal I; throws NotTwoSidedIdeal otherwise.
QuotientRing quotient_ring(const FiniteRing& r, const ElementSet& ideal);

/// H_(s,t)(R): the subring of M3(R) of matrices
///   [[a,0,0],[c,d,e],[0,0,f]] with a - d = s*c and d - f = t*e,
/// encoded by the free triple (c, d, e). s and t must be central units.
FiniteRing hst_ring(const FiniteRing& r, Elem s, Elem t);

/// L_(s,t)(R): matrices [[a,0,0],[s*c,d,t*e],[0,0,f]], encoded by
/// (a, c, d, e, f). s and t must be central units.
FiniteRing lst_ring(const FiniteRing& r, Elem s, Elem t);

/// K_s(R): 2x2 arrays [[a,x],[y,b]] with the product
///   [[a1a2 + s x1y2, a1x2 + x1b2], [y1a2 + b1y2, s y1x2 + b1b2]],
/// encoded by (a, x, y, b). s must be central; s = 0 gives K_0(R).
FiniteRing ks_ring(const FiniteRing& r, Elem s);

/// The 3x3 matrix (row-major, entries in R) an H/L element stands for.
std::vector<Elem> hst_matrix(const FiniteRing& r, Elem s, Elem t, Elem index);
std::vector<Elem> lst_matrix(const FiniteRing& r, Elem s, Elem t, Elem index);

/// An (S,T)-bimodule given by tables: an abelian group with a left
/// S-action and a right T-action.
struct Bimodule {
  std::string name;
  std::size_t order = 1;
  Elem zero = 0;
  std::vector<Elem> add;    // order x order
  std::vector<Elem> left;   // |S| x order, left[s*order + m] = s.m
  std::vector<Elem> right;  // order x |T|, right[m*|T| + t] = m.t
  std::vector<std::string> labels;

  Elem plus(Elem m, Elem n) const { return add[m * order + n]; }
};

/// R acting on its own additive group by multiplication.
Bimodule self_bimodule(const FiniteRing& r);
Bimodule zero_bimodule(const FiniteRing& left, const FiniteRing& right);

/// Throws BimoduleAxiomViolation or DimensionMismatch.
void validate_bimodule(const Bimodule& m, const FiniteRing& left, const FiniteRing& right);

/// [[S, M], [0, T]] encoded by (s, m, t).
FiniteRing formal_triangular(const FiniteRing& s, const FiniteRing& t, const Bimodule& m);

/// [[A, M], [N, B]] with MN = 0 and NM = 0, encoded by (a, m, n, b).
/// M is an (A,B)-bimodule and N a (B,A)-bimodule.
FiniteRing trivial_morita(const FiniteRing& a, const FiniteRing& b, const Bimodule& m,
                          const Bimodule& n);

/// Central units of R (the admissible s, t for H and L).
std::vector<Elem> central_units(const FiniteRing& r);

}  // namespace ringlab
