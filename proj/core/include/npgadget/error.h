#ifndef NPGADGET_ERROR_H_
#define NPGADGET_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace npgadget {

enum class ErrorCode {
  kMalformedHeader,
  kClauseArity,
  kDuplicateLiteral,
  kVarOutOfRange,
  kLengthMismatch,
  kTooLarge,
  kTooFewVars,
  kInvalidGraph,
  kUnknownEdgeId,
  kSchemaError,
  kDisconnected,
  kBadM,
  kSearchBudgetExceeded,
  kInconsistentCertificate,
  kNotSatisfying,
  kAmbiguousVariable,
  kNotAPath,
  kMalformedGadgetTraversal,
  kOverflow,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

// Thrown for every library failure. what() is "<CodeName>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace npgadget

#endif  // NPGADGET_ERROR_H_
