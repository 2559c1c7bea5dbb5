// SPDX-License-Identifier: Apache-2.0

#include "ctbound/error.hpp"

namespace ctbound {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPrime: return "NON_PRIME";
    case ErrorCode::kDuplicateGenerator: return "DUPLICATE_GENERATOR";
    case ErrorCode::kOddDegreeNotSquareZero: return "ODD_DEGREE_NOT_SQUARE_ZERO";
    case ErrorCode::kBadNilpotency: return "BAD_NILPOTENCY";
    case ErrorCode::kBadDegree: return "BAD_DEGREE";
    case ErrorCode::kBadDegreeCap: return "BAD_DEGREE_CAP";
    case ErrorCode::kAlgebraMismatch: return "ALGEBRA_MISMATCH";
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kUnknownGenerator: return "UNKNOWN_GENERATOR";
    case ErrorCode::kZeroMonomial: return "ZERO_MONOMIAL";
    case ErrorCode::kZeroProduct: return "ZERO_PRODUCT";
    case ErrorCode::kWeightExceedsDegree: return "WEIGHT_EXCEEDS_DEGREE";
    case ErrorCode::kBadWeight: return "BAD_WEIGHT";
    case ErrorCode::kBadJustification: return "BAD_JUSTIFICATION";
    case ErrorCode::kNotStrict: return "NOT_STRICT";
    case ErrorCode::kBadCopies: return "BAD_COPIES";
    case ErrorCode::kHdimBelowTopClass: return "HDIM_BELOW_TOP_CLASS";
    case ErrorCode::kIndependenceNotWitnessed: return "INDEPENDENCE_NOT_WITNESSED";
    case ErrorCode::kEmptySearchSpace: return "EMPTY_SEARCH_SPACE";
    case ErrorCode::kBadBudget: return "BAD_BUDGET";
    case ErrorCode::kBadParam: return "BAD_PARAM";
    case ErrorCode::kUnsupportedCoefficients: return "UNSUPPORTED_COEFFICIENTS";
    case ErrorCode::kUnknownEntry: return "UNKNOWN_ENTRY";
    case ErrorCode::kBadDocument: return "BAD_DOCUMENT";
    case ErrorCode::kOracleMismatch: return "ORACLE_MISMATCH";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace ctbound
