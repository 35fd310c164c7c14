#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conevol {

enum class ErrorCode {
  DegenerateInput,
  PointNotInterior,
  LpFailure,
  NonManifold,
  DomainError,
  InadmissibleParams,
  ShapeMismatch,
  NoInsphere,
  UnsupportedFaceDim,
  NotInscribed,
  FootConditionViolated,
  NotBipyramid,
  InvalidSpec,
  RetriesExhausted,
  NoClosedForm,
  ParseError,
  UsageError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a stable code so the CLI can
/// map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace conevol
