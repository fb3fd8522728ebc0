#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nilclean {

enum class ErrorKind {
  ElementRingMismatch,
  BadParameter,
  ExhaustiveTooLarge,
  OrderCapExceeded,
  CapExceeded,
  NotAnIdeal,
  NotCentralIdempotent,
  NotAlmostIdempotent,
  PreconditionViolated,
  InternalInvariantViolation,
  AxiomViolation,
  UnknownCheck,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it onto a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::ParseError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace nilclean
