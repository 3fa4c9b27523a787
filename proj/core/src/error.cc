#include "npgadget/error.h"

#include <string>

namespace npgadget {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedHeader: return "MalformedHeader";
    case ErrorCode::kClauseArity: return "ClauseArity";
    case ErrorCode::kDuplicateLiteral: return "DuplicateLiteral";
    case ErrorCode::kVarOutOfRange: return "VarOutOfRange";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kTooFewVars: return "TooFewVars";
    case ErrorCode::kInvalidGraph: return "InvalidGraph";
    case ErrorCode::kUnknownEdgeId: return "UnknownEdgeId";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kBadM: return "BadM";
    case ErrorCode::kSearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::kInconsistentCertificate: return "InconsistentCertificate";
    case ErrorCode::kNotSatisfying: return "NotSatisfying";
    case ErrorCode::kAmbiguousVariable: return "AmbiguousVariable";
    case ErrorCode::kNotAPath: return "NotAPath";
    case ErrorCode::kMalformedGadgetTraversal: return "MalformedGadgetTraversal";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace npgadget
