#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coamoeba {

enum class ErrorCode {
  ZeroForm,
  NotNormalized,
  DegenerateLine,
  TooFew,
  InvalidPivot,
  SumNonzero,
  RankDeficient,
  ZeroVector,
  IndexOutOfRange,
  NonGenericDirection,
  ChamberMismatch,
  NotGaleDualizable,
  DegenerateHull,
  DimensionMismatch,
  PointOnBoundary,
  ParseError,
  SemanticError,
  Overflow,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for codes that signal a broken internal invariant rather than bad input.
bool is_internal(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coamoeba
