#pragma once

#include <stdexcept>
#include <string>

namespace gut {

enum class ErrorKind {
  Construction,      // non-finite endpoints and similar
  DivisionDomain,    // zero denominator endpoint
  Domain,            // argument outside an operation's domain
  AxiomViolation,    // measure space fails Def-1 style checks
  Conditioning,      // conditioning on an event with a zero endpoint
  NotDegenerate,     // collapse requested on a non-degenerate space
  Configuration,     // bad grid, bad distribution parameters, ...
  Lookup,            // unknown key (process time index, atom name)
  Nesting,           // nested-interval sequence is not nested
  NoConvergence,     // nested-interval sequence does not shrink
  AttitudeRequired,  // decision reached the risk stage with no attitude
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by nested_limit; index is the zero-based position of the first
// interval that is not contained in its predecessor.
class NestingError : public Error {
 public:
  NestingError(std::size_t index, const std::string& what)
      : Error(ErrorKind::Nesting, what), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace gut
