#include "common/error.hpp"

namespace matsplit {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInput: return "input error";
    case ErrorCode::kType: return "type error";
    case ErrorCode::kDimension: return "dimension error";
    case ErrorCode::kDomain: return "domain error";
    case ErrorCode::kPrecondition: return "precondition error";
    case ErrorCode::kNoIdentity: return "no identity";
    case ErrorCode::kPromiseViolated: return "promise violated";
    case ErrorCode::kPrecisionInsufficient: return "precision insufficient";
    case ErrorCode::kFactoringBudget: return "factoring budget exceeded";
    case ErrorCode::kEnumerationBudget: return "enumeration budget exceeded";
    case ErrorCode::kEnumerationExhausted: return "enumeration exhausted";
    case ErrorCode::kInternal: return "internal error";
  }
  return "unknown error";
}

}  // namespace matsplit
