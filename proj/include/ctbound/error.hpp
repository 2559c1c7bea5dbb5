// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ctbound {

enum class ErrorCode {
  kNonPrime,
  kDuplicateGenerator,
  kOddDegreeNotSquareZero,
  kBadNilpotency,
  kBadDegree,
  kBadDegreeCap,
  kAlgebraMismatch,
  kParseError,
  kUnknownGenerator,
  kZeroMonomial,
  kZeroProduct,
  kWeightExceedsDegree,
  kBadWeight,
  kBadJustification,
  kNotStrict,
  kBadCopies,
  kHdimBelowTopClass,
  kIndependenceNotWitnessed,
  kEmptySearchSpace,
  kBadBudget,
  kBadParam,
  kUnsupportedCoefficients,
  kUnknownEntry,
  kBadDocument,
  kOracleMismatch,
};

/// Stable upper-case name used in CLI messages and tests, e.g. "ZERO_PRODUCT".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace ctbound
