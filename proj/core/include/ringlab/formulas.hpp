#pragma once

#include <span>
#include <string>
#include <vector>

#include "ringlab/ideals.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Result of comparing a computed radical against a predicted shape. On
/// failure, `witness` is the smallest element in the symmetric difference
/// (or outside the bound, for containments) with its role.
struct FormulaCheck {
  bool holds = true;
  std::vector<Elem> witness;
  std::vector<std::string> roles;
  std::string statement;
};

// Each takes the analysed composite ring plus its ingredients; element
// encodings must be those of the matching constructor.

/// delta(R1 x ... x Rk) = delta(R1) x ... x delta(Rk).
FormulaCheck product_formula(RingAnalysis& product, std::span<const FiniteRing* const> parts);
/// delta(eRe) = e delta(R) e.
FormulaCheck corner_formula(RingAnalysis& parent, Elem e);
/// Same, reusing an already built corner (embedding from corner_ring).
FormulaCheck corner_formula(RingAnalysis& parent, Elem e, std::span<const Elem> embedding,
                            RingAnalysis& corner);
/// delta(M_n(R)) = M_n(delta(R)).
FormulaCheck matrix_formula(RingAnalysis& m, std::size_t n, RingAnalysis& base);
/// delta(T_n(R)) inside {diagonal entries in delta(R)}.
FormulaCheck triangular_formula(RingAnalysis& t, std::size_t n, RingAnalysis& base);
/// delta(H_(s,t)(R)) = {a, d, f in delta(R)}.
FormulaCheck hst_formula(RingAnalysis& h, RingAnalysis& base, Elem s, Elem t);
/// delta(L_(s,t)(R)) = {a, d, f in delta(R)}.
FormulaCheck lst_formula(RingAnalysis& l, RingAnalysis& base);
/// delta(K_0(R)) = {diagonal entries in delta(R)}.
FormulaCheck k0_formula(RingAnalysis& k, RingAnalysis& base);
/// Formal triangular [[S,M],[0,T]] (or trivial Morita [[A,M],[N,B]] when
/// `morita`): delta(R) inside {diagonal blocks in delta(S), delta(T)}.
FormulaCheck block_formula(RingAnalysis& r, RingAnalysis& first, RingAnalysis& second,
                           std::size_t module_m, std::size_t module_n, bool morita);

}  // namespace ringlab
