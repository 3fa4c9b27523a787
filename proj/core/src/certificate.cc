#include "npgadget/certificate.h"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace npgadget {

std::string_view ReasonName(RejectReason reason) {
  switch (reason) {
    case RejectReason::kNone: return "None";
    case RejectReason::kNotSpanningTree: return "NotSpanningTree";
    case RejectReason::kForbiddenPair: return "ForbiddenPair";
    case RejectReason::kCostExceeded: return "CostExceeded";
    case RejectReason::kCapacityViolated: return "CapacityViolated";
    case RejectReason::kNotAllOrNothing: return "NotAllOrNothing";
    case RejectReason::kConservationViolated: return "ConservationViolated";
    case RejectReason::kBelowTarget: return "BelowTarget";
    case RejectReason::kEmptyPath: return "EmptyPath";
    case RejectReason::kInvalidVertex: return "InvalidVertex";
    case RejectReason::kBadEndpoints: return "BadEndpoints";
    case RejectReason::kNotAdjacent: return "NotAdjacent";
    case RejectReason::kNotSimple: return "NotSimple";
  }
  return "Unknown";
}

uint64_t DefaultNodeLimit() {
  constexpr uint64_t kFallback = 5'000'000;
  const char* env = std::getenv("NP_GADGET_NODE_LIMIT");
  if (env == nullptr) return kFallback;
  std::string_view text(env);
  uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    return kFallback;
  }
  return value;
}

}  // namespace npgadget
