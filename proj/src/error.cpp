#include "robp/error.hpp"

namespace robp {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
  case ErrorKind::LengthMismatch: return "LengthMismatch";
  case ErrorKind::LevelOutOfRange: return "LevelOutOfRange";
  case ErrorKind::InputSpaceTooLarge: return "InputSpaceTooLarge";
  case ErrorKind::InvalidProgram: return "InvalidProgram";
  case ErrorKind::InvalidFormula: return "InvalidFormula";
  case ErrorKind::EmptyFormula: return "EmptyFormula";
  case ErrorKind::UnsatisfiableProfile: return "UnsatisfiableProfile";
  case ErrorKind::UnsatisfiableTarget: return "UnsatisfiableTarget";
  case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
  case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
  case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  case ErrorKind::FeasibilityError: return "FeasibilityError";
  case ErrorKind::InvalidArgument: return "InvalidArgument";
  case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

} // namespace robp
