#include "thermores/errors.hpp"

namespace thermores {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::NegativeProbability: return "NegativeProbability";
    case ErrorCode::ProbSumNotOne: return "ProbSumNotOne";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::WidthMismatch: return "WidthMismatch";
    case ErrorCode::GibbsInput: return "GibbsInput";
    case ErrorCode::ZeroProbability: return "ZeroProbability";
    case ErrorCode::NontrivialHamiltonian: return "NontrivialHamiltonian";
    case ErrorCode::NotProductState: return "NotProductState";
    case ErrorCode::CatalystMarginalMismatch: return "CatalystMarginalMismatch";
    case ErrorCode::JointCurvesDiffer: return "JointCurvesDiffer";
    case ErrorCode::DimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorCode::InvalidTemperatures: return "InvalidTemperatures";
    case ErrorCode::ReproductionMismatch: return "ReproductionMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

}  // namespace thermores
