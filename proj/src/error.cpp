#include "circlespace/error.hpp"

namespace circlespace {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotUnit: return "NotUnit";
    case ErrorKind::NotImaginary: return "NotImaginary";
    case ErrorKind::NotIsotropic: return "NotIsotropic";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::NotCotangent: return "NotCotangent";
    case ErrorKind::DegenerateCircle: return "DegenerateCircle";
    case ErrorKind::NotInW: return "NotInW";
    case ErrorKind::NonNull: return "NonNull";
    case ErrorKind::NotConformal: return "NotConformal";
    case ErrorKind::ZeroCurve: return "ZeroCurve";
    case ErrorKind::NotDegreeOne: return "NotDegreeOne";
    case ErrorKind::NormalizationFailed: return "NormalizationFailed";
    case ErrorKind::RootFindingFailed: return "RootFindingFailed";
    case ErrorKind::MultiValued: return "MultiValued";
    case ErrorKind::FieldUndefined: return "FieldUndefined";
    case ErrorKind::FitFailed: return "FitFailed";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace circlespace
