#ifndef NPGADGET_BASELINES_H_
#define NPGADGET_BASELINES_H_

// Unrestricted polynomial-time counterparts of the three problems.

#include <cstdint>
#include <optional>
#include <vector>

#include "npgadget/certificate.h"
#include "npgadget/graph.h"

namespace npgadget {

struct SpanningTreeResult {
  std::vector<EdgeId> edges;
  int64_t cost = 0;
};

// Prim's algorithm from vertex 0; ties broken by edge id. Throws
// Error(kDisconnected).
SpanningTreeResult PrimMst(const UGraph& graph);

struct ShortestPathResult {
  int64_t cost = 0;
  std::vector<VertexId> path;
};

// Unreachable targets yield nullopt.
std::optional<ShortestPathResult> Dijkstra(const UGraph& graph, VertexId from,
                                           VertexId to);

struct MaxFlowResult {
  int64_t value = 0;
  FlowCertificate flow;  // zero-flow arcs omitted
};

MaxFlowResult EdmondsKarp(const CapNetwork& network);

// Collapses each vector weight to the sum of its coordinates.
UGraph Scalarize(const VGraph& graph);

}  // namespace npgadget

#endif  // NPGADGET_BASELINES_H_
