#ifndef NPGADGET_CERTIFICATE_H_
#define NPGADGET_CERTIFICATE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "npgadget/graph.h"

namespace npgadget {

// Candidate spanning tree. Ids are checked by the verifier, not here.
struct TreeCertificate {
  std::vector<EdgeId> edges;

  friend bool operator==(const TreeCertificate&, const TreeCertificate&) = default;
};

// Arcs absent from the map carry flow 0.
struct FlowCertificate {
  std::map<EdgeId, int64_t> flow;

  int64_t Get(EdgeId id) const {
    auto it = flow.find(id);
    return it == flow.end() ? 0 : it->second;
  }

  friend bool operator==(const FlowCertificate&, const FlowCertificate&) = default;
};

struct PathCertificate {
  std::vector<VertexId> vertices;

  friend bool operator==(const PathCertificate&, const PathCertificate&) = default;
};

enum class RejectReason {
  kNone,
  // tree
  kNotSpanningTree,
  kForbiddenPair,
  kCostExceeded,
  // flow
  kCapacityViolated,
  kNotAllOrNothing,
  kConservationViolated,
  kBelowTarget,
  // path
  kEmptyPath,
  kInvalidVertex,
  kBadEndpoints,
  kNotAdjacent,
  kNotSimple,
};

std::string_view ReasonName(RejectReason reason);

struct VerifyReport {
  bool accepted = false;
  RejectReason reason = RejectReason::kNone;
  // Tree cost, flow value, or squared path cost, as far as computable.
  int64_t value = 0;
  std::string detail;

  static VerifyReport Accept(int64_t value) {
    return {true, RejectReason::kNone, value, {}};
  }
  static VerifyReport Reject(RejectReason reason, int64_t value,
                             std::string detail) {
    return {false, reason, value, std::move(detail)};
  }
};

// Reads NP_GADGET_NODE_LIMIT, falling back to 5'000'000.
uint64_t DefaultNodeLimit();

struct SearchOptions {
  uint64_t node_limit = DefaultNodeLimit();
};

struct SearchStats {
  uint64_t nodes = 0;
  // Complete candidates examined at the leaves (flow: fully fixed patterns).
  uint64_t leaves = 0;
};

// Solvers return an empty certificate only when absence is proven; running
// out of nodes throws Error(kSearchBudgetExceeded) instead.
template <typename Certificate>
struct SolveResult {
  std::optional<Certificate> certificate;
  SearchStats stats;

  bool found() const { return certificate.has_value(); }
};

}  // namespace npgadget

#endif  // NPGADGET_CERTIFICATE_H_
