#include "npgadget/vvsp.h"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>

#include "npgadget/error.h"

namespace npgadget {

namespace {

struct Layout {
  int num_vars;

  VertexId var_in(int var) const { return VertexId(4 * (var - 1)); }
  VertexId var_pos(int var) const { return VertexId(4 * (var - 1) + 1); }
  VertexId var_neg(int var) const { return VertexId(4 * (var - 1) + 2); }
  VertexId var_out(int var) const { return VertexId(4 * (var - 1) + 3); }
  VertexId clause_in(int clause) const { return VertexId(4 * num_vars + 5 * clause); }
  VertexId clause_mid(int clause, int position) const {
    return VertexId(4 * num_vars + 5 * clause + 1 + position);
  }
  VertexId clause_out(int clause) const {
    return VertexId(4 * num_vars + 5 * clause + 4);
  }
};

int Coordinate(Literal lit, int num_vars) {
  return lit.negated ? num_vars + lit.var - 1 : lit.var - 1;
}

uint64_t PairKey(VertexId a, VertexId b) {
  int x = a.value(), y = b.value();
  if (x > y) std::swap(x, y);
  return (static_cast<uint64_t>(x) << 32) | static_cast<uint32_t>(y);
}

std::unordered_map<uint64_t, int> EdgeIndex(const VGraph& g) {
  std::unordered_map<uint64_t, int> index;
  for (const VEdge& e : g.edges) index.emplace(PairKey(e.u, e.v), e.id.value());
  return index;
}

class PathSearch {
 public:
  PathSearch(const VvspInstance& instance, const SearchOptions& options)
      : instance_(instance),
        options_(options),
        adjacency_(instance.graph.num_vertices),
        visited_(instance.graph.num_vertices, 0),
        sum_(instance.graph.dim, 0) {
    for (const VEdge& e : instance.graph.edges) {
      adjacency_[e.u.index()].emplace_back(e.v.value(), e.id.value());
      adjacency_[e.v.index()].emplace_back(e.u.value(), e.id.value());
    }
  }

  std::optional<PathCertificate> Run() {
    path_.push_back(instance_.source);
    visited_[instance_.source.index()] = 1;
    if (Search(instance_.source.value(), 0)) return PathCertificate{path_};
    return std::nullopt;
  }

  const SearchStats& stats() const { return stats_; }

 private:
  bool Search(int at, int64_t cost2) {
    if (++stats_.nodes > options_.node_limit) {
      throw Error(ErrorCode::kSearchBudgetExceeded,
                  "path search exceeded " + std::to_string(options_.node_limit) + " nodes");
    }
    if (VertexId(at) == instance_.target) {
      ++stats_.leaves;
      return true;
    }
    for (auto [next, edge] : adjacency_[at]) {
      if (visited_[next]) continue;
      const SparseVec& w = instance_.graph.edges[edge].weight;
      int64_t next_cost2 = cost2;
      for (const auto& [coord, value] : w.entries()) {
        // (s + w)^2 - s^2 = w * (2s + w)
        next_cost2 = CheckedAdd(
            next_cost2, CheckedMul(value, CheckedAdd(CheckedMul(2, sum_[coord]), value)));
      }
      if (next_cost2 > instance_.budget_sq) continue;
      for (const auto& [coord, value] : w.entries()) sum_[coord] += value;
      visited_[next] = 1;
      path_.push_back(VertexId(next));
      if (Search(next, next_cost2)) return true;
      path_.pop_back();
      visited_[next] = 0;
      for (const auto& [coord, value] : w.entries()) sum_[coord] -= value;
    }
    return false;
  }

  const VvspInstance& instance_;
  const SearchOptions& options_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
  std::vector<char> visited_;
  std::vector<int64_t> sum_;
  std::vector<VertexId> path_;
  SearchStats stats_;
};

}  // namespace

void VvspInstance::Validate() const {
  graph.Validate();
  const int n = graph.num_vertices;
  if (source.value() < 0 || source.value() >= n || target.value() < 0 ||
      target.value() >= n) {
    throw Error(ErrorCode::kInvalidGraph, "source or target outside graph");
  }
  if (budget_sq < 0) throw Error(ErrorCode::kInvalidGraph, "negative budget");
  std::set<uint64_t> seen;
  for (const VEdge& e : graph.edges) {
    if (!seen.insert(PairKey(e.u, e.v)).second) {
      throw Error(ErrorCode::kInvalidGraph,
                  "parallel edges between " + std::to_string(e.u.value()) + " and " +
                      std::to_string(e.v.value()) + " make vertex paths ambiguous");
    }
  }
}

int64_t DefaultVvspBigWeight(int num_clauses) {
  const int64_t cube = CheckedMul(CheckedMul(num_clauses, num_clauses), num_clauses);
  return (cube + 1) / 2 + 1;
}

VvspReduction BuildVvsp(const CnfInstance& cnf, std::optional<int64_t> big_weight) {
  const int v = cnf.num_vars();
  const int c = cnf.num_clauses();
  const int64_t cube = CheckedMul(CheckedMul(c, c), c);
  const int64_t m = big_weight.value_or(DefaultVvspBigWeight(c));
  if (m <= 0 || CheckedMul(2, m) <= cube) {
    throw Error(ErrorCode::kBadM, "M = " + std::to_string(m) + " must exceed C^3/2 = " +
                                      std::to_string(cube) + "/2");
  }
  const Layout layout{v};
  const int dim = 2 * v;

  VvspReduction out;
  VvspInstance& inst = out.instance;
  VGraph& g = inst.graph;
  g.num_vertices = 4 * v + 5 * c;
  g.dim = dim;
  g.roles.assign(g.num_vertices, VertexRole::kPlain);
  const SparseVec zero(dim);

  for (int var = 1; var <= v; ++var) {
    g.roles[layout.var_in(var).index()] = VertexRole::kVarIn;
    g.roles[layout.var_pos(var).index()] = VertexRole::kVarPos;
    g.roles[layout.var_neg(var).index()] = VertexRole::kVarNeg;
    g.roles[layout.var_out(var).index()] = VertexRole::kVarOut;
    const EdgeId p = g.AddEdge(layout.var_in(var), layout.var_pos(var),
                               SparseVec::Unit(dim, var - 1, m));
    g.AddEdge(layout.var_pos(var), layout.var_out(var), zero);
    const EdgeId q = g.AddEdge(layout.var_in(var), layout.var_neg(var),
                               SparseVec::Unit(dim, v + var - 1, m));
    g.AddEdge(layout.var_neg(var), layout.var_out(var), zero);
    if (var < v) g.AddEdge(layout.var_out(var), layout.var_in(var + 1), zero);
    out.labels.var_gadget[var] = {layout.var_pos(var), layout.var_neg(var)};
    out.labels.var_gadget_edges[var] = {p, q};
  }
  g.AddEdge(layout.var_out(v), layout.clause_in(0), zero);
  for (int i = 0; i < c; ++i) {
    g.roles[layout.clause_in(i).index()] = VertexRole::kClauseIn;
    g.roles[layout.clause_out(i).index()] = VertexRole::kClauseOut;
    for (int j = 0; j < 3; ++j) {
      g.roles[layout.clause_mid(i, j).index()] = VertexRole::kClausePos;
      const Literal lit = cnf.clause(i)[j];
      const EdgeId id = g.AddEdge(layout.clause_in(i), layout.clause_mid(i, j),
                                  SparseVec::Unit(dim, Coordinate(lit, v), 1));
      out.labels.clause_edge_literals[id] = lit;
    }
    for (int j = 0; j < 3; ++j) {
      g.AddEdge(layout.clause_mid(i, j), layout.clause_out(i), zero);
    }
    if (i + 1 < c) g.AddEdge(layout.clause_out(i), layout.clause_in(i + 1), zero);
  }

  inst.source = layout.var_in(1);
  inst.target = layout.clause_out(c - 1);
  inst.big_weight = m;
  inst.budget_sq = CheckedAdd(CheckedMul(v, CheckedMul(m, m)), cube);
  inst.Validate();
  return out;
}

int64_t PathCost2(const VvspInstance& instance, const PathCertificate& path) {
  if (!IsSimplePath(instance.graph, path.vertices)) {
    throw Error(ErrorCode::kNotAPath, "vertex sequence is not a simple path");
  }
  const auto index = EdgeIndex(instance.graph);
  SparseVec total(instance.graph.dim);
  for (size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    const int e = index.at(PairKey(path.vertices[i], path.vertices[i + 1]));
    total.AddInPlace(instance.graph.edges[e].weight);
  }
  return total.SquaredNorm();
}

VerifyReport VerifyVvsp(const VvspInstance& instance, const PathCertificate& path) {
  const auto& p = path.vertices;
  if (p.empty()) return VerifyReport::Reject(RejectReason::kEmptyPath, 0, "empty path");
  for (VertexId v : p) {
    if (v.value() < 0 || v.value() >= instance.graph.num_vertices) {
      return VerifyReport::Reject(RejectReason::kInvalidVertex, 0,
                                  "vertex " + std::to_string(v.value()) + " not in graph");
    }
  }
  if (p.front() != instance.source || p.back() != instance.target) {
    return VerifyReport::Reject(
        RejectReason::kBadEndpoints, 0,
        "path runs " + std::to_string(p.front().value()) + " -> " +
            std::to_string(p.back().value()) + ", expected " +
            std::to_string(instance.source.value()) + " -> " +
            std::to_string(instance.target.value()));
  }
  const auto index = EdgeIndex(instance.graph);
  SparseVec total(instance.graph.dim);
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    auto it = index.find(PairKey(p[i], p[i + 1]));
    if (it == index.end()) {
      return VerifyReport::Reject(RejectReason::kNotAdjacent, 0,
                                  "no edge between " + std::to_string(p[i].value()) +
                                      " and " + std::to_string(p[i + 1].value()));
    }
    total.AddInPlace(instance.graph.edges[it->second].weight);
  }
  const int64_t cost2 = total.SquaredNorm();
  if (!IsSimplePath(instance.graph, p)) {
    return VerifyReport::Reject(RejectReason::kNotSimple, cost2, "path repeats a vertex");
  }
  if (cost2 > instance.budget_sq) {
    return VerifyReport::Reject(RejectReason::kCostExceeded, cost2,
                                "squared cost " + std::to_string(cost2) +
                                    " exceeds budget " + std::to_string(instance.budget_sq));
  }
  return VerifyReport::Accept(cost2);
}

SolveResult<PathCertificate> SolveVvsp(const VvspInstance& instance,
                                       const SearchOptions& options) {
  instance.Validate();
  PathSearch search(instance, options);
  SolveResult<PathCertificate> result;
  result.certificate = search.Run();
  result.stats = search.stats();
  return result;
}

Assignment ExtractVvsp(const VvspLabels& labels, const PathCertificate& path,
                       int num_vars) {
  std::set<VertexId> on_path(path.vertices.begin(), path.vertices.end());
  Assignment a(num_vars);
  for (int var = 1; var <= num_vars; ++var) {
    auto it = labels.var_gadget.find(var);
    if (it == labels.var_gadget.end()) {
      throw Error(ErrorCode::kMalformedGadgetTraversal,
                  "no gadget recorded for x" + std::to_string(var));
    }
    const bool pos = on_path.contains(it->second.positive);
    const bool neg = on_path.contains(it->second.negative);
    if (pos == neg) {
      throw Error(ErrorCode::kMalformedGadgetTraversal,
                  "path visits " + std::string(pos ? "both branches" : "neither branch") +
                      " of the gadget for x" + std::to_string(var));
    }
    a.set(var, neg);
  }
  return a;
}

PathCertificate VvspPathFromChoices(const CnfInstance& cnf, const Assignment& a,
                                    std::span<const int> positions) {
  if (a.num_vars() != cnf.num_vars() ||
      static_cast<int>(positions.size()) != cnf.num_clauses()) {
    throw Error(ErrorCode::kLengthMismatch, "assignment or clause choices have wrong length");
  }
  const Layout layout{cnf.num_vars()};
  PathCertificate path;
  for (int var = 1; var <= cnf.num_vars(); ++var) {
    path.vertices.push_back(layout.var_in(var));
    path.vertices.push_back(a.value(var) ? layout.var_neg(var) : layout.var_pos(var));
    path.vertices.push_back(layout.var_out(var));
  }
  for (int i = 0; i < cnf.num_clauses(); ++i) {
    if (positions[i] < 0 || positions[i] > 2) {
      throw Error(ErrorCode::kInvalidArgument, "clause position must be 0..2");
    }
    path.vertices.push_back(layout.clause_in(i));
    path.vertices.push_back(layout.clause_mid(i, positions[i]));
    path.vertices.push_back(layout.clause_out(i));
  }
  return path;
}

PathCertificate PathFromAssignment(const CnfInstance& cnf, const Assignment& a) {
  if (!Evaluate(cnf, a)) {
    throw Error(ErrorCode::kNotSatisfying, "assignment does not satisfy the formula");
  }
  std::vector<int> positions;
  for (const Clause& clause : cnf.clauses()) {
    int j = 0;
    while (!a.Satisfies(clause[j])) ++j;
    positions.push_back(j);
  }
  return VvspPathFromChoices(cnf, a, positions);
}

}  // namespace npgadget
