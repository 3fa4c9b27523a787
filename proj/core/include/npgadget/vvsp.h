#ifndef NPGADGET_VVSP_H_
#define NPGADGET_VVSP_H_

// Shortest path under vector weights, measured by Euclidean length.
//
// Construction from a 3-CNF with V variables, C clauses and a large M:
// a chain of V diamonds u_in - {u, ~u} - u_out, where u_in-u weighs M*e_i
// and u_in-~u weighs M*~e_i, followed by a chain of C clause gadgets
// a - {w_1, w_2, w_3} - b whose a-w_j edge weighs the unit vector of the
// j-th literal. Passing ~u sets x_i true and loads ~e_i, so a clause may
// only be crossed through a literal whose coordinate is still light. The
// squared budget V*M^2 + C^3 is exceeded by any path that reuses a loaded
// coordinate once M > C^3/2. Everything is compared as exact integer
// squared lengths.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "npgadget/certificate.h"
#include "npgadget/cnf.h"
#include "npgadget/graph.h"

namespace npgadget {

struct VvspInstance {
  VGraph graph;
  VertexId source;
  VertexId target;
  int64_t budget_sq = 0;
  int64_t big_weight = 0;  // 0 for hand-written input

  void Validate() const;

  friend bool operator==(const VvspInstance&, const VvspInstance&) = default;
};

struct GadgetBranches {
  VertexId positive;  // u^i, reached by the M*e_i edge
  VertexId negative;  // ~u^i, reached by the M*~e_i edge

  friend bool operator==(const GadgetBranches&, const GadgetBranches&) = default;
};

struct GadgetEdges {
  EdgeId positive;
  EdgeId negative;

  friend bool operator==(const GadgetEdges&, const GadgetEdges&) = default;
};

struct VvspLabels {
  std::map<int, GadgetBranches> var_gadget;      // keyed by variable (1-based)
  std::map<int, GadgetEdges> var_gadget_edges;   // the two M-weighted edges
  std::map<EdgeId, Literal> clause_edge_literals;

  friend bool operator==(const VvspLabels&, const VvspLabels&) = default;
};

struct VvspReduction {
  VvspInstance instance;
  VvspLabels labels;
};

// Default M is ceil(C^3 / 2) + 1.
int64_t DefaultVvspBigWeight(int num_clauses);

// Throws Error(kBadM) unless 2M > C^3.
VvspReduction BuildVvsp(const CnfInstance& cnf,
                        std::optional<int64_t> big_weight = std::nullopt);

// Squared length of the summed weight vector. Throws Error(kNotAPath).
int64_t PathCost2(const VvspInstance& instance, const PathCertificate& path);

// Checks endpoints, adjacency, simplicity, then cost.
VerifyReport VerifyVvsp(const VvspInstance& instance, const PathCertificate& path);

// Depth-first over simple source-target paths; a prefix whose squared cost
// exceeds the budget is cut since weights are nonnegative.
SolveResult<PathCertificate> SolveVvsp(const VvspInstance& instance,
                                       const SearchOptions& options = {});

// x_i is true iff the path visits ~u^i. Throws
// Error(kMalformedGadgetTraversal) unless exactly one branch is visited.
Assignment ExtractVvsp(const VvspLabels& labels, const PathCertificate& path,
                       int num_vars);

// The chain path taking ~u^i for true variables and, in clause i, the
// branch at positions[i].
PathCertificate VvspPathFromChoices(const CnfInstance& cnf, const Assignment& a,
                                    std::span<const int> positions);

// As above with each clause crossed at its lowest-position true literal.
// Throws Error(kNotSatisfying).
PathCertificate PathFromAssignment(const CnfInstance& cnf, const Assignment& a);

}  // namespace npgadget

#endif  // NPGADGET_VVSP_H_
