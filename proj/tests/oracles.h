// Test-only reference implementations. Deliberately naive and written
// without calling into the library's algorithms; they only read the plain
// data structures.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "npgadget/certificate.h"
#include "npgadget/cnf.h"
#include "npgadget/flow.h"
#include "npgadget/graph.h"
#include "npgadget/rst.h"
#include "npgadget/vvsp.h"

namespace oracle {

using npgadget::CapNetwork;
using npgadget::CnfInstance;
using npgadget::EdgeId;
using npgadget::RejectReason;
using npgadget::UGraph;
using npgadget::VertexId;
using npgadget::VGraph;

// Bit v-1 of `bits` is the value of variable v.
inline bool EvalBits(const CnfInstance& cnf, uint32_t bits) {
  for (const auto& clause : cnf.clauses()) {
    bool sat = false;
    for (const auto& lit : clause) {
      const bool value = (bits >> (lit.var - 1)) & 1u;
      if (value != lit.negated) sat = true;
    }
    if (!sat) return false;
  }
  return true;
}

inline bool Satisfiable(const CnfInstance& cnf) {
  for (uint32_t bits = 0; bits < (1u << cnf.num_vars()); ++bits) {
    if (EvalBits(cnf, bits)) return true;
  }
  return false;
}

inline std::vector<uint32_t> AllModels(const CnfInstance& cnf) {
  std::vector<uint32_t> models;
  for (uint32_t bits = 0; bits < (1u << cnf.num_vars()); ++bits) {
    if (EvalBits(cnf, bits)) models.push_back(bits);
  }
  return models;
}

inline npgadget::Assignment FromBits(int num_vars, uint32_t bits) {
  npgadget::Assignment a(num_vars);
  for (int v = 1; v <= num_vars; ++v) a.set(v, (bits >> (v - 1)) & 1u);
  return a;
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int Root(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool Join(int a, int b) {
    a = Root(a);
    b = Root(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

inline bool IsSpanningTree(int n, const std::vector<std::pair<int, int>>& edges) {
  if (static_cast<int>(edges.size()) != n - 1) return false;
  UnionFind uf(n);
  for (auto [u, v] : edges) {
    if (!uf.Join(u, v)) return false;
  }
  return true;
}

inline std::vector<std::pair<int, int>> Endpoints(const UGraph& g,
                                                  const std::vector<EdgeId>& ids) {
  std::vector<std::pair<int, int>> out;
  for (EdgeId id : ids) {
    const auto& e = g.edges.at(id.index());
    out.emplace_back(e.u.value(), e.v.value());
  }
  return out;
}

// Kruskal; nullopt when disconnected.
inline std::optional<int64_t> MstCost(const UGraph& g) {
  std::vector<int> order(g.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.edges[a].weight < g.edges[b].weight; });
  UnionFind uf(g.num_vertices);
  int64_t cost = 0;
  int used = 0;
  for (int i : order) {
    if (uf.Join(g.edges[i].u.value(), g.edges[i].v.value())) {
      cost += g.edges[i].weight;
      ++used;
    }
  }
  if (used != g.num_vertices - 1) return std::nullopt;
  return cost;
}

// All-pairs shortest path distances (Floyd-Warshall). kInf when unreachable.
inline constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;
inline std::vector<std::vector<int64_t>> AllPairs(const UGraph& g) {
  const int n = g.num_vertices;
  std::vector<std::vector<int64_t>> d(n, std::vector<int64_t>(n, kInf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const auto& e : g.edges) {
    const int u = e.u.value(), v = e.v.value();
    d[u][v] = std::min(d[u][v], e.weight);
    d[v][u] = std::min(d[v][u], e.weight);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

// Minimum s-t cut by enumerating every vertex bipartition (n <= ~16).
inline int64_t MinCut(const CapNetwork& net) {
  const int n = net.num_vertices;
  const int s = net.source.value(), t = net.sink.value();
  int64_t best = kInf;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!((mask >> s) & 1u) || ((mask >> t) & 1u)) continue;
    int64_t cut = 0;
    for (const auto& a : net.arcs) {
      if (((mask >> a.from.value()) & 1u) && !((mask >> a.to.value()) & 1u)) cut += a.capacity;
    }
    best = std::min(best, cut);
  }
  return best;
}

// Every subset of n-1 edges that forms a spanning tree.
inline std::vector<std::vector<EdgeId>> AllSpanningTrees(const UGraph& g) {
  std::vector<std::vector<EdgeId>> trees;
  const int m = g.num_edges(), need = g.num_vertices - 1;
  std::vector<EdgeId> chosen;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(chosen.size()) == need) {
      if (IsSpanningTree(g.num_vertices, Endpoints(g, chosen))) trees.push_back(chosen);
      return;
    }
    if (m - next < need - static_cast<int>(chosen.size())) return;
    chosen.push_back(EdgeId(next));
    rec(next + 1);
    chosen.pop_back();
    rec(next + 1);
  };
  rec(0);
  return trees;
}

inline int64_t VectorCost2(const VGraph& g, const std::vector<int>& edge_ids) {
  std::map<int, int64_t> sum;
  for (int id : edge_ids) {
    for (auto [coord, w] : g.edges.at(id).weight.entries()) sum[coord] += w;
  }
  int64_t total = 0;
  for (auto [coord, w] : sum) total += w * w;
  return total;
}

// Edge id between u and v, or -1.
inline int FindEdge(const VGraph& g, int u, int v) {
  for (const auto& e : g.edges) {
    if ((e.u.value() == u && e.v.value() == v) || (e.u.value() == v && e.v.value() == u)) {
      return e.id.value();
    }
  }
  return -1;
}

// Visits every simple source-target path; returns the count.
inline int64_t ForEachSimplePath(const VGraph& g, int s, int t,
                                 const std::function<void(const std::vector<int>&,
                                                          const std::vector<int>&)>& visit) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.num_vertices);
  for (const auto& e : g.edges) {
    adj[e.u.value()].push_back({e.v.value(), e.id.value()});
    adj[e.v.value()].push_back({e.u.value(), e.id.value()});
  }
  std::vector<bool> on(g.num_vertices, false);
  std::vector<int> verts{s}, edges;
  int64_t count = 0;
  on[s] = true;
  std::function<void(int)> rec = [&](int u) {
    if (u == t) {
      ++count;
      visit(verts, edges);
      return;
    }
    for (auto [v, id] : adj[u]) {
      if (on[v]) continue;
      on[v] = true;
      verts.push_back(v);
      edges.push_back(id);
      rec(v);
      verts.pop_back();
      edges.pop_back();
      on[v] = false;
    }
  };
  rec(s);
  return count;
}

inline int64_t MinPathCost2(const npgadget::VvspInstance& inst, int64_t* num_paths = nullptr) {
  int64_t best = kInf;
  const int64_t n = ForEachSimplePath(
      inst.graph, inst.source.value(), inst.target.value(),
      [&](const std::vector<int>&, const std::vector<int>& edges) {
        best = std::min(best, VectorCost2(inst.graph, edges));
      });
  if (num_paths) *num_paths = n;
  return best;
}

// Expected verifier outcomes, re-derived from the problem definitions.

inline RejectReason RstReason(const npgadget::RstInstance& inst,
                              const std::vector<EdgeId>& tree) {
  const UGraph& g = inst.graph;
  if (!IsSpanningTree(g.num_vertices, Endpoints(g, tree))) return RejectReason::kNotSpanningTree;
  std::set<int> in;
  for (EdgeId e : tree) in.insert(e.value());
  for (auto [a, b] : inst.forbidden) {
    if (in.count(a.value()) && in.count(b.value())) return RejectReason::kForbiddenPair;
  }
  int64_t cost = 0;
  for (EdgeId e : tree) cost += g.edges[e.index()].weight;
  return cost > inst.budget ? RejectReason::kCostExceeded : RejectReason::kNone;
}

inline RejectReason FlowReason(const npgadget::FlowInstance& inst,
                               const std::map<EdgeId, int64_t>& flow) {
  const CapNetwork& net = inst.net;
  auto f = [&](int id) {
    auto it = flow.find(EdgeId(id));
    return it == flow.end() ? int64_t{0} : it->second;
  };
  for (const auto& a : net.arcs) {
    if (f(a.id.value()) < 0 || f(a.id.value()) > a.capacity) return RejectReason::kCapacityViolated;
  }
  for (EdgeId id : inst.all_or_nothing) {
    const int64_t x = f(id.value());
    if (x != 0 && x != net.arcs[id.index()].capacity) return RejectReason::kNotAllOrNothing;
  }
  std::vector<int64_t> excess(net.num_vertices, 0);
  for (const auto& a : net.arcs) {
    excess[a.from.value()] -= f(a.id.value());
    excess[a.to.value()] += f(a.id.value());
  }
  for (int v = 0; v < net.num_vertices; ++v) {
    if (v == net.source.value() || v == net.sink.value()) continue;
    if (excess[v] != 0) return RejectReason::kConservationViolated;
  }
  return -excess[net.source.value()] < inst.target ? RejectReason::kBelowTarget
                                                    : RejectReason::kNone;
}

inline RejectReason VvspReason(const npgadget::VvspInstance& inst, const std::vector<int>& path) {
  const VGraph& g = inst.graph;
  if (path.empty()) return RejectReason::kEmptyPath;
  for (int v : path) {
    if (v < 0 || v >= g.num_vertices) return RejectReason::kInvalidVertex;
  }
  if (path.front() != inst.source.value() || path.back() != inst.target.value()) {
    return RejectReason::kBadEndpoints;
  }
  std::vector<int> edges;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    const int id = FindEdge(g, path[i], path[i + 1]);
    if (id < 0) return RejectReason::kNotAdjacent;
    edges.push_back(id);
  }
  if (std::set<int>(path.begin(), path.end()).size() != path.size()) {
    return RejectReason::kNotSimple;
  }
  return VectorCost2(g, edges) > inst.budget_sq ? RejectReason::kCostExceeded
                                                 : RejectReason::kNone;
}

inline std::vector<int> Ints(const std::vector<VertexId>& vs) {
  std::vector<int> out;
  for (VertexId v : vs) out.push_back(v.value());
  return out;
}

inline std::vector<VertexId> Vertices(const std::vector<int>& vs) {
  std::vector<VertexId> out;
  for (int v : vs) out.push_back(VertexId(v));
  return out;
}

// Random connected-or-not undirected graph with small integer weights.
inline UGraph RandomGraph(std::mt19937_64& rng, int n, double density, int max_weight) {
  UGraph g;
  g.num_vertices = n;
  std::bernoulli_distribution coin(density);
  std::uniform_int_distribution<int> weight(1, max_weight);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.AddEdge(VertexId(u), VertexId(v), weight(rng));
  return g;
}

inline CapNetwork RandomNetwork(std::mt19937_64& rng, int n, double density, int max_cap) {
  CapNetwork net;
  net.num_vertices = n;
  net.source = VertexId(0);
  net.sink = VertexId(n - 1);
  std::bernoulli_distribution coin(density);
  std::uniform_int_distribution<int> cap(0, max_cap);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && v != 0 && u != n - 1 && coin(rng)) {
        net.AddArc(VertexId(u), VertexId(v), cap(rng));
      }
  return net;
}

}  // namespace oracle
