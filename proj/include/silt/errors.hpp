#pragma once

#include <stdexcept>
#include <string>

namespace silt {

/// Base for every domain error raised by the library.
struct SiltError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : SiltError {
  using SiltError::SiltError;
};
struct InvalidInput : SiltError {
  using SiltError::SiltError;
};
struct NotFiniteDimensional : SiltError {
  using SiltError::SiltError;
};
struct IdempotentLiftFailure : SiltError {
  using SiltError::SiltError;
};
struct KnittingDiverged : SiltError {
  using SiltError::SiltError;
};
struct NonLocalSummand : SiltError {
  using SiltError::SiltError;
};
struct NotSplitBasic : SiltError {
  using SiltError::SiltError;
};
struct SearchBudgetExceeded : SiltError {
  using SiltError::SiltError;
};
struct CycleDetected : SiltError {
  using SiltError::SiltError;
};
struct CompletionSearchExhausted : SiltError {
  using SiltError::SiltError;
};
struct ApproximationDiverged : SiltError {
  using SiltError::SiltError;
};
struct BudgetExceeded : SiltError {
  using SiltError::SiltError;
};

}  // namespace silt
