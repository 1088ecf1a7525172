#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace snb {

/// Base class for every error raised by the engine. Input errors (bad
/// expressions, malformed documents, contract violations) all derive from it,
/// so front ends can map the whole family to a single exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownCoordinate : public Error {
 public:
  explicit UnknownCoordinate(const std::string& name)
      : Error("unknown coordinate '" + name + "'"), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class SpaceMismatch : public Error {
 public:
  SpaceMismatch() : Error("operands live in different graded spaces") {}
};

class ArityError : public Error {
 public:
  ArityError(std::size_t expected, std::size_t got)
      : Error("arity mismatch: expected " + std::to_string(expected) +
              " arguments, got " + std::to_string(got)) {}
};

class ParityError : public Error {
 public:
  using Error::Error;
};

/// Schema or consistency violation in a bracket / algebra document.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// A caller broke an operation's stated precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace snb
