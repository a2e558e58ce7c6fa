#pragma once

#include <stdexcept>
#include <string>

namespace attrex {

enum class ErrorCode {
  kShapeMismatch,
  kInvalidArgument,
  kUndefinedCorrelation,
  kInsufficientSample,
  kAllZeroAttribution,
  kEmptyMask,
  kZeroPrediction,
  kZeroNorm,
  kZeroComplexity,
  kAllSamplesDegenerate,
  kSingularFit,
  kLayerNotConv,
  kUnsupportedLayer,
  kDivergence,
  kCorruptFile,
  kCorruptManifest,
  kChecksumMismatch,
  kMissingBaselineValue,
  kCalibrationFailed,
  kIoFailure,
};

// Stable snake_case identifiers, used as status codes in result files.
const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace attrex
