#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace raagmcg {

enum class ErrorCode {
  DuplicateVertex,
  EmptyLabel,
  SelfLoop,
  DanglingEdge,
  UnknownVertex,
  Parse,
  MoveNotApplicable,
  CapExceeded,
  SearchBudgetExceeded,
  NotCyclicallyReduced,
  PowerNotMinimal,
  SingleGenerator,
  InvalidShiftRange,
  DisjointnessMismatch,
  NestingDetected,
  InvalidRealization,
  NotFilling,
  InvalidConstants,
  GraphMismatch,
};

std::string_view to_string(ErrorCode code);

// Every domain failure in the library is reported through this type; the CLI
// maps it onto exit status 1 plus an error JSON.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace raagmcg
