#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace krstrata {

enum class ErrorKind {
  InvalidArgument,
  DuplicateResidue,
  PeriodMismatch,
  NotInGroup,
  SearchFailed,
  IndexOutOfRange,
  ValDetMismatch,
  SizeLimit,
  NotPermissible,
  FormulaMismatch,
  DimensionMismatch,
  NormalFormFailure,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace krstrata
