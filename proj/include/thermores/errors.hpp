#pragma once

#include <stdexcept>
#include <string>

namespace thermores {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  DimensionMismatch,
  NonPositiveWeight,
  NegativeProbability,
  ProbSumNotOne,
  WeightMismatch,
  WidthMismatch,
  GibbsInput,
  ZeroProbability,
  NontrivialHamiltonian,
  NotProductState,
  CatalystMarginalMismatch,
  JointCurvesDiffer,
  DimensionCapExceeded,
  InvalidTemperatures,
  ReproductionMismatch,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }
  /// Message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace thermores
