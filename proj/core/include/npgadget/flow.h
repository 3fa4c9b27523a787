#ifndef NPGADGET_FLOW_H_
#define NPGADGET_FLOW_H_

// All-or-nothing flow: every arc in the designated set A carries either zero
// or its full capacity.
//
// Construction from a 3-CNF with V variables and C clauses. Arcs run
//   s -> w_i (cap C)         one hub per variable
//   w_i -> x_i, w_i -> ~x_i  (cap C, these form A)
//   literal -> l             (cap VC)
//   literal -> clause slot   (cap VC), slot -> clause out (cap VC)
//   clause out -> t          (cap 1)
//   l -> t                   (cap VC - C)
// so s and t are both cut by exactly VC. Value VC forces one saturated
// literal per variable and one unit into every clause.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "npgadget/certificate.h"
#include "npgadget/cnf.h"
#include "npgadget/graph.h"

namespace npgadget {

struct FlowInstance {
  CapNetwork net;
  std::vector<EdgeId> all_or_nothing;  // sorted, unique
  int64_t target = 0;

  void Validate() const;

  friend bool operator==(const FlowInstance&, const FlowInstance&) = default;
};

struct DashedPair {
  EdgeId positive;
  EdgeId negative;

  friend bool operator==(const DashedPair&, const DashedPair&) = default;
};

struct FlowLabels {
  std::map<int, DashedPair> dashed_of_var;  // keyed by variable (1-based)
  std::map<int, EdgeId> clause_arc;         // clause out -> t, 0-based clause

  friend bool operator==(const FlowLabels&, const FlowLabels&) = default;
};

struct FlowReduction {
  FlowInstance instance;
  FlowLabels labels;
};

FlowReduction BuildFlow(const CnfInstance& cnf);

// Order of checks: per-arc bounds, all-or-nothing arcs, conservation,
// target. Throws Error(kUnknownEdgeId).
VerifyReport VerifyFlow(const FlowInstance& instance, const FlowCertificate& flow);

struct FlowSolveOptions : SearchOptions {
  // Enumerate all 2^|A| saturation patterns without pruning.
  bool exhaustive_patterns = false;
};

// Enumerates saturated/zero patterns over A; each complete pattern is
// decided exactly by a lower-bounded max flow. stats.leaves counts complete
// patterns evaluated.
SolveResult<FlowCertificate> SolveFlow(const FlowInstance& instance,
                                       const FlowSolveOptions& options = {});

// Throws Error(kNotSatisfying) unless the assignment satisfies the formula.
// Each clause is served by its lowest-position true literal.
FlowCertificate FlowFromAssignment(const CnfInstance& cnf, const Assignment& a);

// x_i is true iff its positive dashed arc carries flow and the negative one
// does not; anything else throws Error(kAmbiguousVariable).
Assignment ExtractFlow(const FlowLabels& labels, const FlowCertificate& flow,
                       int num_vars);

}  // namespace npgadget

#endif  // NPGADGET_FLOW_H_
