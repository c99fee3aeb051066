// errors.hpp -- exception hierarchy shared by all modules.
#ifndef ADELIC_ERRORS_HPP
#define ADELIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace adelic {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text: bad syntax, unexpected token.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

/// A structural invariant was violated: mismatched field specs, reducible
/// modulus, point not on the curve, and the like.
class StructureError : public Error {
 public:
  explicit StructureError(const std::string& msg) : Error(msg) {}
};

/// The operation is undefined for the given (well-formed) inputs:
/// division by zero, evaluation at a zero/pole, non-torsion divisor class,
/// overlapping supports, m not coprime to the characteristic.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// An internal consistency check failed; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& msg) : Error("internal error: " + msg) {}
};

}  // namespace adelic

#endif
