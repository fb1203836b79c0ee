#ifndef MONOIDFORGE_ERRORS_HPP
#define MONOIDFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mf {

/// Base class for all errors raised by the engine.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two operands live in rings with different numbers of variables.
class AmbientMismatchError : public Error {
public:
  AmbientMismatchError(int lhs, int rhs)
      : Error("ambient mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// The zero or unit ideal was passed to an operation that rejects them.
class ZeroOrUnitIdealError : public Error {
public:
  explicit ZeroOrUnitIdealError(const std::string& op)
      : Error(op + ": zero and unit ideals are not supported") {}
};

/// Input is representable but outside the operation's supported domain.
class UnsupportedInputError : public Error {
public:
  explicit UnsupportedInputError(const std::string& what) : Error(what) {}
};

/// A stated precondition was violated by the caller.
class PreconditionError : public Error {
public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// Text input could not be parsed; `position` is a 0-based offset into the input.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position(position) {}
  std::size_t position;
};

} // namespace mf

#endif
