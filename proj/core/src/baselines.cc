#include "npgadget/baselines.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <tuple>
#include <utility>

#include "npgadget/error.h"
#include "npgadget/max_flow.h"

namespace npgadget {

namespace {

// (vertex, edge id) pairs per vertex.
std::vector<std::vector<std::pair<int, int>>> Adjacency(const UGraph& graph) {
  std::vector<std::vector<std::pair<int, int>>> adj(graph.num_vertices);
  for (const UEdge& e : graph.edges) {
    adj[e.u.index()].emplace_back(e.v.value(), e.id.value());
    adj[e.v.index()].emplace_back(e.u.value(), e.id.value());
  }
  return adj;
}

}  // namespace

SpanningTreeResult PrimMst(const UGraph& graph) {
  graph.Validate();
  const auto adj = Adjacency(graph);
  using Entry = std::tuple<int64_t, int, int>;  // weight, edge id, vertex
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::vector<char> in_tree(graph.num_vertices, 0);
  SpanningTreeResult result;

  auto absorb = [&](int v) {
    in_tree[v] = 1;
    for (auto [w, id] : adj[v]) {
      if (!in_tree[w]) heap.emplace(graph.edges[id].weight, id, w);
    }
  };
  absorb(0);
  int reached = 1;
  while (!heap.empty() && reached < graph.num_vertices) {
    auto [weight, id, v] = heap.top();
    heap.pop();
    if (in_tree[v]) continue;
    result.edges.push_back(EdgeId(id));
    result.cost = CheckedAdd(result.cost, weight);
    ++reached;
    absorb(v);
  }
  if (reached != graph.num_vertices) {
    throw Error(ErrorCode::kDisconnected,
                "only " + std::to_string(reached) + " of " +
                    std::to_string(graph.num_vertices) + " vertices reachable");
  }
  return result;
}

std::optional<ShortestPathResult> Dijkstra(const UGraph& graph, VertexId from,
                                           VertexId to) {
  graph.Validate();
  const int n = graph.num_vertices;
  if (from.value() < 0 || from.value() >= n || to.value() < 0 ||
      to.value() >= n) {
    throw Error(ErrorCode::kInvalidArgument, "endpoint outside graph");
  }
  const auto adj = Adjacency(graph);
  constexpr int64_t kInf = std::numeric_limits<int64_t>::max();
  std::vector<int64_t> dist(n, kInf);
  std::vector<int> parent(n, -1);
  using Entry = std::pair<int64_t, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist[from.index()] = 0;
  heap.emplace(0, from.value());
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (d != dist[v]) continue;
    if (v == to.value()) break;
    for (auto [w, id] : adj[v]) {
      const int64_t candidate = CheckedAdd(d, graph.edges[id].weight);
      if (candidate < dist[w]) {
        dist[w] = candidate;
        parent[w] = v;
        heap.emplace(candidate, w);
      }
    }
  }
  if (dist[to.index()] == kInf) return std::nullopt;
  ShortestPathResult result;
  result.cost = dist[to.index()];
  for (int v = to.value(); v != -1; v = parent[v]) {
    result.path.push_back(VertexId(v));
  }
  std::reverse(result.path.begin(), result.path.end());
  return result;
}

MaxFlowResult EdmondsKarp(const CapNetwork& network) {
  network.Validate();
  MaxFlowGraph residual(network.num_vertices);
  std::vector<int> handles;
  handles.reserve(network.arcs.size());
  for (const Arc& a : network.arcs) {
    handles.push_back(residual.AddArc(a.from.value(), a.to.value(), a.capacity));
  }
  MaxFlowResult result;
  result.value = residual.Augment(network.source.value(), network.sink.value());
  for (size_t i = 0; i < handles.size(); ++i) {
    const int64_t f = residual.Flow(handles[i]);
    if (f > 0) result.flow.flow[EdgeId(static_cast<int>(i))] = f;
  }
  return result;
}

UGraph Scalarize(const VGraph& graph) {
  UGraph out;
  out.num_vertices = graph.num_vertices;
  out.roles = graph.roles;
  for (const VEdge& e : graph.edges) {
    int64_t total = 0;
    for (const auto& [coord, value] : e.weight.entries()) {
      total = CheckedAdd(total, value);
    }
    out.AddEdge(e.u, e.v, total);
  }
  return out;
}

}  // namespace npgadget
