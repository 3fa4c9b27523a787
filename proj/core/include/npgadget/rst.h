#ifndef NPGADGET_RST_H_
#define NPGADGET_RST_H_

// Spanning trees with forbidden edge pairs.
//
// Construction from a 3-CNF with C clauses: a top vertex, a bottom vertex,
// and per clause three literal vertices plus one out-vertex. Every literal
// vertex hangs off the top (weight 1) and reaches its clause's out-vertex by
// an edge labelled with the literal (weight 1). Each out-vertex also has a
// heavy edge of weight M to the bottom, and top-bottom has weight 1. Edges
// labelled with complementary literals form the forbidden pairs. A tree
// avoiding the heavy edges must serve every clause by some literal, and the
// forbidden pairs make those literals consistent.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "npgadget/certificate.h"
#include "npgadget/cnf.h"
#include "npgadget/graph.h"

namespace npgadget {

struct RstInstance {
  UGraph graph;
  // Unordered pairs, stored with first < second, sorted, no duplicates.
  std::vector<std::pair<EdgeId, EdgeId>> forbidden;
  int64_t budget = 0;
  // The heavy weight M when built from a formula; 0 for hand-written input.
  int64_t big_weight = 0;

  void Validate() const;

  friend bool operator==(const RstInstance&, const RstInstance&) = default;
};

struct RstLabels {
  std::map<EdgeId, Literal> edge_literals;
  std::map<EdgeId, int> clause_of_edge;  // 0-based clause index

  friend bool operator==(const RstLabels&, const RstLabels&) = default;
};

struct RstReduction {
  RstInstance instance;
  RstLabels labels;
};

// M must exceed 4C+1; the default is 4C+2. The budget is M.
RstReduction BuildRst(const CnfInstance& cnf,
                      std::optional<int64_t> big_weight = std::nullopt);

// The tree made of top-bottom, every top-literal edge, and for clause i the
// labelled edge at position positions[i] (0..2).
TreeCertificate RstTreeFromChoices(const CnfInstance& cnf,
                                   std::span<const int> positions);

// Checks spanning tree, then forbidden pairs, then cost; reports the first
// failure. Throws Error(kUnknownEdgeId).
VerifyReport VerifyRst(const RstInstance& instance, const TreeCertificate& tree);

struct RstSolveOptions : SearchOptions {
  bool contract_safe_edges = true;
};

SolveResult<TreeCertificate> SolveRst(const RstInstance& instance,
                                      const RstSolveOptions& options = {});

// Literals on certificate edges become true, everything else false. Throws
// Error(kInconsistentCertificate) if a literal and its negation both appear.
Assignment ExtractRst(const RstLabels& labels, const TreeCertificate& tree,
                      int num_vars);

}  // namespace npgadget

#endif  // NPGADGET_RST_H_
