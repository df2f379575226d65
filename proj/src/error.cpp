#include "coamoeba/error.hpp"

namespace coamoeba {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::DegenerateLine: return "DegenerateLine";
    case ErrorCode::TooFew: return "TooFew";
    case ErrorCode::InvalidPivot: return "InvalidPivot";
    case ErrorCode::SumNonzero: return "SumNonzero";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NonGenericDirection: return "NonGenericDirection";
    case ErrorCode::ChamberMismatch: return "ChamberMismatch";
    case ErrorCode::NotGaleDualizable: return "NotGaleDualizable";
    case ErrorCode::DegenerateHull: return "DegenerateHull";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::PointOnBoundary: return "PointOnBoundary";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SemanticError: return "SemanticError";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

bool is_internal(ErrorCode code) noexcept {
  return code == ErrorCode::ChamberMismatch || code == ErrorCode::Overflow;
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace coamoeba
