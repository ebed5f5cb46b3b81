#include "raagmcg/error.hpp"

namespace raagmcg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::EmptyLabel: return "EmptyLabel";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DanglingEdge: return "DanglingEdge";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::MoveNotApplicable: return "MoveNotApplicable";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::NotCyclicallyReduced: return "NotCyclicallyReduced";
    case ErrorCode::PowerNotMinimal: return "PowerNotMinimal";
    case ErrorCode::SingleGenerator: return "SingleGenerator";
    case ErrorCode::InvalidShiftRange: return "InvalidShiftRange";
    case ErrorCode::DisjointnessMismatch: return "DisjointnessMismatch";
    case ErrorCode::NestingDetected: return "NestingDetected";
    case ErrorCode::InvalidRealization: return "InvalidRealization";
    case ErrorCode::NotFilling: return "NotFilling";
    case ErrorCode::InvalidConstants: return "InvalidConstants";
    case ErrorCode::GraphMismatch: return "GraphMismatch";
  }
  return "Unknown";
}

}  // namespace raagmcg
