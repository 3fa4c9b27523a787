#include "npgadget/rst.h"

#include <algorithm>
#include <limits>
#include <set>
#include <string>
#include <unordered_set>

#include "npgadget/error.h"

namespace npgadget {

namespace {

constexpr VertexId kTop(0);
constexpr VertexId kBottom(1);

VertexId LiteralVertex(int clause, int position) {
  return VertexId(2 + 4 * clause + position);
}
VertexId OutVertex(int clause) { return VertexId(2 + 4 * clause + 3); }

EdgeId TopEdge(int clause, int position) { return EdgeId(1 + 7 * clause + position); }
EdgeId LabelledEdge(int clause, int position) {
  return EdgeId(1 + 7 * clause + 3 + position);
}

enum class Status : uint8_t { kAvailable, kIncluded, kExcluded };

class RstSearch {
 public:
  RstSearch(const RstInstance& instance, const RstSolveOptions& options)
      : instance_(instance),
        options_(options),
        graph_(instance.graph),
        partners_(graph_.num_edges()) {
    for (auto [a, b] : instance.forbidden) {
      partners_[a.index()].push_back(b.value());
      partners_[b.index()].push_back(a.value());
    }
  }

  std::optional<TreeCertificate> Run() {
    State root{std::vector<Status>(graph_.num_edges(), Status::kAvailable),
               DisjointSets(graph_.num_vertices), 0};
    auto edges = Search(std::move(root));
    if (!edges) return std::nullopt;
    std::sort(edges->begin(), edges->end());
    return TreeCertificate{*std::move(edges)};
  }

  const SearchStats& stats() const { return stats_; }

 private:
  struct State {
    std::vector<Status> status;
    DisjointSets components;
    int64_t cost;
  };

  bool Crossing(State& s, int e) {
    const UEdge& edge = graph_.edges[e];
    return s.components.Find(edge.u.value()) != s.components.Find(edge.v.value());
  }

  void Include(State& s, int e) {
    const UEdge& edge = graph_.edges[e];
    s.status[e] = Status::kIncluded;
    s.components.Union(edge.u.value(), edge.v.value());
    s.cost = CheckedAdd(s.cost, edge.weight);
    for (int p : partners_[e]) s.status[p] = Status::kExcluded;
  }

  bool Free(const State& s, int e) const {
    for (int p : partners_[e]) {
      if (s.status[p] != Status::kExcluded) return false;
    }
    return true;
  }

  // Drops edges that can no longer join a tree, then repeatedly contracts
  // an edge that is minimum across its component's cut and has no live
  // forbidden partner. Any feasible completion can be exchanged onto such
  // an edge without raising cost or creating a forbidden pair.
  void Normalize(State& s) {
    const int m = graph_.num_edges();
    while (true) {
      for (int e = 0; e < m; ++e) {
        if (s.status[e] == Status::kAvailable && !Crossing(s, e)) {
          s.status[e] = Status::kExcluded;
        }
      }
      if (!options_.contract_safe_edges || s.components.num_sets() == 1) return;

      // Per component root: minimum available crossing weight, and the
      // lowest-id free edge attaining it.
      const int n = graph_.num_vertices;
      constexpr int64_t kInf = std::numeric_limits<int64_t>::max();
      std::vector<int64_t> best_weight(n, kInf);
      std::vector<int> best_free(n, -1);
      for (int e = 0; e < m; ++e) {
        if (s.status[e] != Status::kAvailable) continue;
        const UEdge& edge = graph_.edges[e];
        for (int root : {s.components.Find(edge.u.value()),
                         s.components.Find(edge.v.value())}) {
          if (edge.weight < best_weight[root]) {
            best_weight[root] = edge.weight;
            best_free[root] = -1;
          }
          if (edge.weight == best_weight[root] && best_free[root] == -1 &&
              Free(s, e)) {
            best_free[root] = e;
          }
        }
      }
      int chosen = -1;
      for (int root = 0; root < n && chosen == -1; ++root) {
        if (best_free[root] != -1) chosen = best_free[root];
      }
      if (chosen == -1) return;
      Include(s, chosen);
    }
  }

  // Minimum spanning forest over components using available edges, ignoring
  // forbidden pairs. False if the components cannot all be joined or the
  // relaxed cost exceeds the budget.
  bool WithinBound(State& s) {
    std::vector<int> order;
    for (int e = 0; e < graph_.num_edges(); ++e) {
      if (s.status[e] == Status::kAvailable) order.push_back(e);
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return std::pair(graph_.edges[a].weight, a) < std::pair(graph_.edges[b].weight, b);
    });
    DisjointSets merged = s.components;
    int64_t bound = s.cost;
    for (int e : order) {
      const UEdge& edge = graph_.edges[e];
      if (merged.Union(edge.u.value(), edge.v.value())) {
        bound = CheckedAdd(bound, edge.weight);
      }
    }
    return merged.num_sets() == 1 && bound <= instance_.budget;
  }

  std::optional<std::vector<EdgeId>> Search(State s) {
    if (++stats_.nodes > options_.node_limit) {
      throw Error(ErrorCode::kSearchBudgetExceeded,
                  "spanning tree search exceeded " +
                      std::to_string(options_.node_limit) + " nodes");
    }
    Normalize(s);
    if (!WithinBound(s)) return std::nullopt;
    if (s.components.num_sets() == 1) {
      ++stats_.leaves;
      std::vector<EdgeId> edges;
      for (int e = 0; e < graph_.num_edges(); ++e) {
        if (s.status[e] == Status::kIncluded) edges.push_back(EdgeId(e));
      }
      return edges;
    }

    // Every completion uses at least one edge leaving some component; branch
    // on which one comes first for the component with the fewest options.
    std::vector<std::vector<int>> crossing(graph_.num_vertices);
    for (int e = 0; e < graph_.num_edges(); ++e) {
      if (s.status[e] != Status::kAvailable) continue;
      const UEdge& edge = graph_.edges[e];
      crossing[s.components.Find(edge.u.value())].push_back(e);
      crossing[s.components.Find(edge.v.value())].push_back(e);
    }
    int pick = -1;
    for (int root = 0; root < graph_.num_vertices; ++root) {
      if (s.components.Find(root) != root) continue;
      if (pick == -1 || crossing[root].size() < crossing[pick].size()) pick = root;
    }
    std::vector<int>& options = crossing[pick];
    std::sort(options.begin(), options.end(), [&](int a, int b) {
      return std::pair(graph_.edges[a].weight, a) < std::pair(graph_.edges[b].weight, b);
    });
    for (size_t j = 0; j < options.size(); ++j) {
      State child = s;
      for (size_t i = 0; i < j; ++i) child.status[options[i]] = Status::kExcluded;
      if (child.status[options[j]] != Status::kAvailable) continue;
      Include(child, options[j]);
      if (auto found = Search(std::move(child))) return found;
    }
    return std::nullopt;
  }

  const RstInstance& instance_;
  const RstSolveOptions& options_;
  const UGraph& graph_;
  std::vector<std::vector<int>> partners_;
  SearchStats stats_;
};

}  // namespace

void RstInstance::Validate() const {
  graph.Validate();
  if (budget < 0) throw Error(ErrorCode::kInvalidGraph, "negative budget");
  if (big_weight < 0) throw Error(ErrorCode::kInvalidGraph, "negative big weight");
  for (size_t i = 0; i < forbidden.size(); ++i) {
    auto [a, b] = forbidden[i];
    if (!graph.HasEdge(a) || !graph.HasEdge(b)) {
      throw Error(ErrorCode::kUnknownEdgeId,
                  "forbidden pair " + std::to_string(i) + " references a missing edge");
    }
    if (!(a < b)) {
      throw Error(ErrorCode::kInvalidGraph,
                  "forbidden pair " + std::to_string(i) +
                      " must list two distinct edges in increasing order");
    }
    if (i > 0 && !(forbidden[i - 1] < forbidden[i])) {
      throw Error(ErrorCode::kInvalidGraph, "forbidden pairs not sorted/unique");
    }
  }
}

RstReduction BuildRst(const CnfInstance& cnf, std::optional<int64_t> big_weight) {
  const int64_t c = cnf.num_clauses();
  const int64_t threshold = 4 * c + 1;
  const int64_t m = big_weight.value_or(threshold + 1);
  if (m <= threshold) {
    throw Error(ErrorCode::kBadM, "M = " + std::to_string(m) +
                                      " must exceed 4C+1 = " + std::to_string(threshold));
  }

  RstReduction out;
  RstInstance& inst = out.instance;
  UGraph& g = inst.graph;
  g.num_vertices = static_cast<int>(4 * c + 2);
  g.roles.assign(g.num_vertices, VertexRole::kClausePos);
  g.roles[kTop.index()] = VertexRole::kTop;
  g.roles[kBottom.index()] = VertexRole::kBottom;
  g.AddEdge(kTop, kBottom, 1);
  for (int i = 0; i < cnf.num_clauses(); ++i) {
    g.roles[OutVertex(i).index()] = VertexRole::kClauseOut;
    for (int j = 0; j < 3; ++j) g.AddEdge(kTop, LiteralVertex(i, j), 1);
    for (int j = 0; j < 3; ++j) {
      EdgeId id = g.AddEdge(LiteralVertex(i, j), OutVertex(i), 1);
      out.labels.edge_literals[id] = cnf.clause(i)[j];
      out.labels.clause_of_edge[id] = i;
    }
    g.AddEdge(OutVertex(i), kBottom, m);
  }

  for (const auto& [a, lit_a] : out.labels.edge_literals) {
    for (const auto& [b, lit_b] : out.labels.edge_literals) {
      if (a < b && lit_a == lit_b.Negation()) inst.forbidden.emplace_back(a, b);
    }
  }
  inst.budget = m;
  inst.big_weight = m;
  inst.Validate();
  return out;
}

TreeCertificate RstTreeFromChoices(const CnfInstance& cnf,
                                   std::span<const int> positions) {
  if (static_cast<int>(positions.size()) != cnf.num_clauses()) {
    throw Error(ErrorCode::kLengthMismatch, "need one position per clause");
  }
  TreeCertificate tree;
  tree.edges.push_back(EdgeId(0));
  for (int i = 0; i < cnf.num_clauses(); ++i) {
    if (positions[i] < 0 || positions[i] > 2) {
      throw Error(ErrorCode::kInvalidArgument, "clause position must be 0..2");
    }
    for (int j = 0; j < 3; ++j) tree.edges.push_back(TopEdge(i, j));
    tree.edges.push_back(LabelledEdge(i, positions[i]));
  }
  return tree;
}

VerifyReport VerifyRst(const RstInstance& instance, const TreeCertificate& tree) {
  const UGraph& g = instance.graph;
  int64_t cost = 0;
  for (EdgeId id : tree.edges) {
    if (!g.HasEdge(id)) {
      throw Error(ErrorCode::kUnknownEdgeId,
                  "certificate edge " + std::to_string(id.value()) + " not in graph");
    }
    cost = CheckedAdd(cost, g.edge(id).weight);
  }
  if (!IsSpanningTree(g, tree.edges)) {
    return VerifyReport::Reject(
        RejectReason::kNotSpanningTree, cost,
        std::to_string(tree.edges.size()) + " edges do not form a spanning tree on " +
            std::to_string(g.num_vertices) + " vertices");
  }
  std::unordered_set<EdgeId> chosen(tree.edges.begin(), tree.edges.end());
  for (auto [a, b] : instance.forbidden) {
    if (chosen.contains(a) && chosen.contains(b)) {
      return VerifyReport::Reject(RejectReason::kForbiddenPair, cost,
                                  "edges " + std::to_string(a.value()) + " and " +
                                      std::to_string(b.value()) + " are forbidden together");
    }
  }
  if (cost > instance.budget) {
    return VerifyReport::Reject(RejectReason::kCostExceeded, cost,
                                "cost " + std::to_string(cost) + " exceeds budget " +
                                    std::to_string(instance.budget));
  }
  return VerifyReport::Accept(cost);
}

SolveResult<TreeCertificate> SolveRst(const RstInstance& instance,
                                      const RstSolveOptions& options) {
  instance.Validate();
  RstSearch search(instance, options);
  SolveResult<TreeCertificate> result;
  result.certificate = search.Run();
  result.stats = search.stats();
  return result;
}

Assignment ExtractRst(const RstLabels& labels, const TreeCertificate& tree,
                      int num_vars) {
  Assignment a(num_vars);
  std::set<Literal> forced;
  for (EdgeId id : tree.edges) {
    auto it = labels.edge_literals.find(id);
    if (it == labels.edge_literals.end()) continue;
    const Literal lit = it->second;
    if (lit.var < 1 || lit.var > num_vars) {
      throw Error(ErrorCode::kVarOutOfRange,
                  "label on edge " + std::to_string(id.value()) + " names variable " +
                      std::to_string(lit.var));
    }
    if (forced.contains(lit.Negation())) {
      throw Error(ErrorCode::kInconsistentCertificate,
                  "certificate uses both " + ToString(lit) + " and " +
                      ToString(lit.Negation()));
    }
    forced.insert(lit);
    a.set(lit.var, !lit.negated);
  }
  return a;
}

}  // namespace npgadget
