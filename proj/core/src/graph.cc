#include "npgadget/graph.h"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>

#include "npgadget/error.h"

namespace npgadget {

namespace {

constexpr std::array<std::pair<VertexRole, std::string_view>, 15> kRoleNames{{
    {VertexRole::kPlain, "plain"},
    {VertexRole::kTop, "top"},
    {VertexRole::kBottom, "bottom"},
    {VertexRole::kSource, "source"},
    {VertexRole::kSink, "sink"},
    {VertexRole::kExcess, "excess"},
    {VertexRole::kVarHub, "var_hub"},
    {VertexRole::kLiteralVertex, "literal"},
    {VertexRole::kClauseIn, "clause_in"},
    {VertexRole::kClausePos, "clause_pos"},
    {VertexRole::kClauseOut, "clause_out"},
    {VertexRole::kVarIn, "var_in"},
    {VertexRole::kVarOut, "var_out"},
    {VertexRole::kVarPos, "var_pos"},
    {VertexRole::kVarNeg, "var_neg"},
}};

void CheckVertex(int n, VertexId v, const std::string& what) {
  if (v.value() < 0 || v.value() >= n) {
    throw Error(ErrorCode::kInvalidGraph,
                what + " references vertex " + std::to_string(v.value()) +
                    " outside 0.." + std::to_string(n - 1));
  }
}

void CheckRoles(int n, const std::vector<VertexRole>& roles) {
  if (n < 1) throw Error(ErrorCode::kInvalidGraph, "graph has no vertices");
  if (!roles.empty() && static_cast<int>(roles.size()) != n) {
    throw Error(ErrorCode::kInvalidGraph, "role list length differs from n");
  }
}

template <typename Graph>
bool IsSimplePathImpl(const Graph& graph, std::span<const VertexId> path) {
  if (path.empty()) return false;
  const int n = graph.num_vertices;
  std::vector<char> seen(n, 0);
  for (VertexId v : path) {
    if (v.value() < 0 || v.value() >= n || seen[v.index()]) return false;
    seen[v.index()] = 1;
  }
  if (path.size() == 1) return true;
  std::unordered_set<uint64_t> adjacent;
  auto key = [](int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<uint64_t>(a) << 32) | static_cast<uint32_t>(b);
  };
  for (const auto& e : graph.edges) adjacent.insert(key(e.u.value(), e.v.value()));
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    if (!adjacent.contains(key(path[i].value(), path[i + 1].value()))) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::string_view RoleName(VertexRole role) {
  for (const auto& [r, name] : kRoleNames) {
    if (r == role) return name;
  }
  return "plain";
}

VertexRole RoleFromName(std::string_view name) {
  for (const auto& [r, n] : kRoleNames) {
    if (n == name) return r;
  }
  throw Error(ErrorCode::kSchemaError,
              "unknown vertex role '" + std::string(name) + "'");
}

EdgeId UGraph::AddEdge(VertexId u, VertexId v, int64_t weight) {
  EdgeId id(num_edges());
  edges.push_back({id, u, v, weight});
  return id;
}

void UGraph::Validate() const {
  CheckRoles(num_vertices, roles);
  for (size_t i = 0; i < edges.size(); ++i) {
    const UEdge& e = edges[i];
    const std::string what = "edge " + std::to_string(i);
    if (e.id.index() != i) {
      throw Error(ErrorCode::kInvalidGraph, what + " has non-dense id");
    }
    CheckVertex(num_vertices, e.u, what);
    CheckVertex(num_vertices, e.v, what);
    if (e.u == e.v) throw Error(ErrorCode::kInvalidGraph, what + " is a self-loop");
    if (e.weight < 0) {
      throw Error(ErrorCode::kInvalidGraph, what + " has negative weight");
    }
  }
}

EdgeId CapNetwork::AddArc(VertexId from, VertexId to, int64_t capacity) {
  EdgeId id(num_arcs());
  arcs.push_back({id, from, to, capacity});
  return id;
}

void CapNetwork::Validate() const {
  CheckRoles(num_vertices, roles);
  CheckVertex(num_vertices, source, "source");
  CheckVertex(num_vertices, sink, "sink");
  if (source == sink) {
    throw Error(ErrorCode::kInvalidGraph, "source and sink coincide");
  }
  for (size_t i = 0; i < arcs.size(); ++i) {
    const Arc& a = arcs[i];
    const std::string what = "arc " + std::to_string(i);
    if (a.id.index() != i) {
      throw Error(ErrorCode::kInvalidGraph, what + " has non-dense id");
    }
    CheckVertex(num_vertices, a.from, what);
    CheckVertex(num_vertices, a.to, what);
    if (a.from == a.to) throw Error(ErrorCode::kInvalidGraph, what + " is a self-loop");
    if (a.capacity < 0) {
      throw Error(ErrorCode::kInvalidGraph, what + " has negative capacity");
    }
    if (a.to == source) throw Error(ErrorCode::kInvalidGraph, what + " enters the source");
    if (a.from == sink) throw Error(ErrorCode::kInvalidGraph, what + " leaves the sink");
  }
}

int64_t SparseVec::Get(int coord) const {
  auto it = entries_.find(coord);
  return it == entries_.end() ? 0 : it->second;
}

void SparseVec::Set(int coord, int64_t value) {
  if (coord < 0 || coord >= dim_) {
    throw Error(ErrorCode::kInvalidArgument,
                "coordinate " + std::to_string(coord) + " outside dimension " +
                    std::to_string(dim_));
  }
  if (value < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative vector entry");
  }
  if (value == 0) {
    entries_.erase(coord);
  } else {
    entries_[coord] = value;
  }
}

void SparseVec::AddInPlace(const SparseVec& other) {
  if (other.dim_ != dim_) {
    throw Error(ErrorCode::kInvalidArgument, "dimension mismatch in vector sum");
  }
  for (const auto& [coord, value] : other.entries_) {
    int64_t& slot = entries_[coord];
    slot = CheckedAdd(slot, value);
  }
}

int64_t SparseVec::SquaredNorm() const {
  int64_t total = 0;
  for (const auto& [coord, value] : entries_) {
    total = CheckedAdd(total, CheckedMul(value, value));
  }
  return total;
}

SparseVec SparseVec::Unit(int dim, int coord, int64_t scale) {
  SparseVec v(dim);
  v.Set(coord, scale);
  return v;
}

EdgeId VGraph::AddEdge(VertexId u, VertexId v, SparseVec weight) {
  EdgeId id(num_edges());
  edges.push_back({id, u, v, std::move(weight)});
  return id;
}

void VGraph::Validate() const {
  CheckRoles(num_vertices, roles);
  if (dim < 0) throw Error(ErrorCode::kInvalidGraph, "negative dimension");
  for (size_t i = 0; i < edges.size(); ++i) {
    const VEdge& e = edges[i];
    const std::string what = "edge " + std::to_string(i);
    if (e.id.index() != i) {
      throw Error(ErrorCode::kInvalidGraph, what + " has non-dense id");
    }
    CheckVertex(num_vertices, e.u, what);
    CheckVertex(num_vertices, e.v, what);
    if (e.u == e.v) throw Error(ErrorCode::kInvalidGraph, what + " is a self-loop");
    if (e.weight.dim() != dim) {
      throw Error(ErrorCode::kInvalidGraph, what + " weight dimension differs");
    }
  }
}

bool IsSpanningTree(const UGraph& graph, std::span<const EdgeId> tree) {
  for (EdgeId id : tree) {
    if (!graph.HasEdge(id)) {
      throw Error(ErrorCode::kUnknownEdgeId,
                  "edge id " + std::to_string(id.value()) + " not in graph");
    }
  }
  if (static_cast<int>(tree.size()) != graph.num_vertices - 1) return false;
  DisjointSets sets(graph.num_vertices);
  for (EdgeId id : tree) {
    const UEdge& e = graph.edge(id);
    if (!sets.Union(e.u.value(), e.v.value())) return false;
  }
  return sets.num_sets() == 1;
}

bool IsSimplePath(const UGraph& graph, std::span<const VertexId> path) {
  return IsSimplePathImpl(graph, path);
}

bool IsSimplePath(const VGraph& graph, std::span<const VertexId> path) {
  return IsSimplePathImpl(graph, path);
}

int64_t CheckedAdd(int64_t a, int64_t b) {
  int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "integer addition overflows int64");
  }
  return out;
}

int64_t CheckedMul(int64_t a, int64_t b) {
  int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "integer multiplication overflows int64");
  }
  return out;
}

DisjointSets::DisjointSets(int n) : parent_(n), size_(n, 1), num_sets_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::Find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::Union(int a, int b) {
  a = Find(a);
  b = Find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --num_sets_;
  return true;
}

}  // namespace npgadget
