#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringlab {

using Elem = std::uint32_t;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A ring or bimodule axiom failed; `witness` holds the offending elements.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::vector<Elem> witness);

  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<Elem>& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::vector<Elem> witness_;
};

class BimoduleAxiomViolation : public AxiomViolation {
 public:
  using AxiomViolation::AxiomViolation;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SizeCapExceeded : public Error {
 public:
  SizeCapExceeded(std::string what, std::size_t requested, std::size_t cap);
};

class LatticeCapExceeded : public Error {
 public:
  explicit LatticeCapExceeded(std::size_t cap);
};

class NotIdempotent : public Error {
 public:
  using Error::Error;
};

class NotTwoSidedIdeal : public Error {
 public:
  using Error::Error;
};

class NotCentral : public Error {
 public:
  using Error::Error;
};

class NotCentralUnit : public NotCentral {
 public:
  using NotCentral::NotCentral;
};

/// Internal guard: a construction produced a set that is not closed.
class ClosureViolation : public Error {
 public:
  using Error::Error;
};

/// Two independent algorithms for the same object disagreed.
class CrossCheckMismatch : public Error {
 public:
  using Error::Error;
};

class CharacterizationMismatch : public CrossCheckMismatch {
 public:
  using CrossCheckMismatch::CrossCheckMismatch;
};

class SocleNotTwoSided : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownPredicate : public Error {
 public:
  explicit UnknownPredicate(const std::string& name);
};

class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace ringlab
