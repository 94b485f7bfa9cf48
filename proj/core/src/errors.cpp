#include "ringlab/errors.hpp"

#include <limits>
#include <sstream>

namespace ringlab {

namespace {

std::string describe_violation(const std::string& axiom, const std::vector<Elem>& witness) {
  std::ostringstream os;
  os << "axiom violated: " << axiom << " at (";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    os << (i ? ", " : "") << witness[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

AxiomViolation::AxiomViolation(std::string axiom, std::vector<Elem> witness)
    : Error(describe_violation(axiom, witness)),
      axiom_(std::move(axiom)),
      witness_(std::move(witness)) {}

SizeCapExceeded::SizeCapExceeded(std::string what, std::size_t requested, std::size_t cap)
    : Error(what + ": size " +
            (requested == std::numeric_limits<std::size_t>::max() ? std::string("beyond 2^64")
                                                                  : std::to_string(requested)) +
            " exceeds cap " + std::to_string(cap)) {}

LatticeCapExceeded::LatticeCapExceeded(std::size_t cap)
    : Error("right-ideal lattice exceeds cap of " + std::to_string(cap) + " ideals") {}

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

UnknownPredicate::UnknownPredicate(const std::string& name)
    : Error("unknown predicate: " + name) {}

}  // namespace ringlab
