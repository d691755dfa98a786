#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace circlespace {

enum class ErrorKind {
  NotUnit,
  NotImaginary,
  NotIsotropic,
  DegenerateInput,
  NotCotangent,
  DegenerateCircle,
  NotInW,
  NonNull,
  NotConformal,
  ZeroCurve,
  NotDegreeOne,
  NormalizationFailed,
  RootFindingFailed,
  MultiValued,
  FieldUndefined,
  FitFailed,
  EmptyInput,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library is reported through this type; `kind()` is
// the machine-readable part, `value()` an optional diagnostic magnitude
// (defect norm, residual, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, double value = 0.0)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        value_(value) {}

  ErrorKind kind() const noexcept { return kind_; }
  double value() const noexcept { return value_; }

 private:
  ErrorKind kind_;
  double value_;
};

}  // namespace circlespace
