/// @file  error.hpp
/// @brief Error type shared by every module of the library

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace robp {

enum class ErrorKind {
  LengthMismatch,
  LevelOutOfRange,
  InputSpaceTooLarge,
  InvalidProgram,
  InvalidFormula,
  EmptyFormula,
  UnsatisfiableProfile,
  UnsatisfiableTarget,
  DegreeOutOfRange,
  SizeCapExceeded,
  BudgetExceeded,
  FeasibilityError,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Exception carrying a machine-readable kind next to the message.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        _kind(kind) {}

  ErrorKind kind() const noexcept { return _kind; }

private:
  ErrorKind _kind;
};

} // namespace robp
