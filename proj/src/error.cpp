#include "conevol/error.hpp"

namespace conevol {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::PointNotInterior: return "PointNotInterior";
    case ErrorCode::LpFailure: return "LpFailure";
    case ErrorCode::NonManifold: return "NonManifold";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InadmissibleParams: return "InadmissibleParams";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NoInsphere: return "NoInsphere";
    case ErrorCode::UnsupportedFaceDim: return "UnsupportedFaceDim";
    case ErrorCode::NotInscribed: return "NotInscribed";
    case ErrorCode::FootConditionViolated: return "FootConditionViolated";
    case ErrorCode::NotBipyramid: return "NotBipyramid";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::RetriesExhausted: return "RetriesExhausted";
    case ErrorCode::NoClosedForm: return "NoClosedForm";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace conevol
