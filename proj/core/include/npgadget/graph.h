#ifndef NPGADGET_GRAPH_H_
#define NPGADGET_GRAPH_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string_view>
#include <vector>

namespace npgadget {

template <typename Tag>
class StrongIndex {
 public:
  constexpr StrongIndex() = default;
  constexpr explicit StrongIndex(int value) : value_(value) {}

  constexpr int value() const { return value_; }
  constexpr size_t index() const { return static_cast<size_t>(value_); }

  friend constexpr auto operator<=>(StrongIndex, StrongIndex) = default;

 private:
  int value_ = -1;
};

using VertexId = StrongIndex<struct VertexIdTag>;
using EdgeId = StrongIndex<struct EdgeIdTag>;

// What a vertex stands for in the gadget that created it. Hand-written
// instances use kPlain throughout.
enum class VertexRole {
  kPlain,
  kTop,
  kBottom,
  kSource,
  kSink,
  kExcess,
  kVarHub,
  kLiteralVertex,
  kClauseIn,
  kClausePos,
  kClauseOut,
  kVarIn,
  kVarOut,
  kVarPos,
  kVarNeg,
};

std::string_view RoleName(VertexRole role);
// Throws Error(kSchemaError) for unknown names.
VertexRole RoleFromName(std::string_view name);

struct UEdge {
  EdgeId id;
  VertexId u;
  VertexId v;
  int64_t weight = 0;

  friend bool operator==(const UEdge&, const UEdge&) = default;
};

// Undirected graph with scalar nonnegative weights. edges[i].id == EdgeId(i).
struct UGraph {
  int num_vertices = 0;
  std::vector<VertexRole> roles;  // empty or size num_vertices
  std::vector<UEdge> edges;

  int num_edges() const { return static_cast<int>(edges.size()); }
  const UEdge& edge(EdgeId id) const { return edges.at(id.index()); }
  bool HasEdge(EdgeId id) const {
    return id.value() >= 0 && id.value() < num_edges();
  }
  VertexRole role(VertexId v) const {
    return roles.empty() ? VertexRole::kPlain : roles.at(v.index());
  }
  EdgeId AddEdge(VertexId u, VertexId v, int64_t weight);
  // Throws Error(kInvalidGraph) on self-loops, bad endpoints, negative
  // weights or non-dense ids.
  void Validate() const;

  friend bool operator==(const UGraph&, const UGraph&) = default;
};

struct Arc {
  EdgeId id;
  VertexId from;
  VertexId to;
  int64_t capacity = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct CapNetwork {
  int num_vertices = 0;
  std::vector<VertexRole> roles;
  std::vector<Arc> arcs;  // arcs[i].id == EdgeId(i)
  VertexId source;
  VertexId sink;

  int num_arcs() const { return static_cast<int>(arcs.size()); }
  const Arc& arc(EdgeId id) const { return arcs.at(id.index()); }
  bool HasArc(EdgeId id) const {
    return id.value() >= 0 && id.value() < num_arcs();
  }
  VertexRole role(VertexId v) const {
    return roles.empty() ? VertexRole::kPlain : roles.at(v.index());
  }
  EdgeId AddArc(VertexId from, VertexId to, int64_t capacity);
  // Also rejects arcs into the source or out of the sink.
  void Validate() const;

  friend bool operator==(const CapNetwork&, const CapNetwork&) = default;
};

// Nonnegative integer vector of dimension 2V. Coordinates 0..V-1 are the
// positive unit directions e_1..e_V, V..2V-1 the negated ones. Only nonzero
// entries are stored.
class SparseVec {
 public:
  SparseVec() = default;
  explicit SparseVec(int dim) : dim_(dim) {}

  int dim() const { return dim_; }
  int64_t Get(int coord) const;
  // Setting 0 erases the entry. Throws on negative values or coord >= dim.
  void Set(int coord, int64_t value);
  void AddInPlace(const SparseVec& other);
  // Exact sum of squared entries; throws Error(kOverflow) past int64.
  int64_t SquaredNorm() const;
  bool IsZero() const { return entries_.empty(); }
  const std::map<int, int64_t>& entries() const { return entries_; }

  static SparseVec Unit(int dim, int coord, int64_t scale);

  friend bool operator==(const SparseVec&, const SparseVec&) = default;

 private:
  int dim_ = 0;
  std::map<int, int64_t> entries_;
};

struct VEdge {
  EdgeId id;
  VertexId u;
  VertexId v;
  SparseVec weight;

  friend bool operator==(const VEdge&, const VEdge&) = default;
};

struct VGraph {
  int num_vertices = 0;
  int dim = 0;
  std::vector<VertexRole> roles;
  std::vector<VEdge> edges;

  int num_edges() const { return static_cast<int>(edges.size()); }
  const VEdge& edge(EdgeId id) const { return edges.at(id.index()); }
  VertexRole role(VertexId v) const {
    return roles.empty() ? VertexRole::kPlain : roles.at(v.index());
  }
  EdgeId AddEdge(VertexId u, VertexId v, SparseVec weight);
  void Validate() const;

  friend bool operator==(const VGraph&, const VGraph&) = default;
};

// Throws Error(kUnknownEdgeId) if any id is outside the graph. Repeated ids
// make the multiset fail the size test and yield false.
bool IsSpanningTree(const UGraph& graph, std::span<const EdgeId> tree);

// Consecutive vertices adjacent, no vertex repeated. Out-of-range ids give
// false rather than an error.
bool IsSimplePath(const UGraph& graph, std::span<const VertexId> path);
bool IsSimplePath(const VGraph& graph, std::span<const VertexId> path);

// Checked int64 arithmetic; throws Error(kOverflow).
int64_t CheckedAdd(int64_t a, int64_t b);
int64_t CheckedMul(int64_t a, int64_t b);

// Union-find with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(int n);
  int Find(int x);
  // Returns false if already joined.
  bool Union(int a, int b);
  int num_sets() const { return num_sets_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int num_sets_;
};

}  // namespace npgadget

template <typename Tag>
struct std::hash<npgadget::StrongIndex<Tag>> {
  size_t operator()(npgadget::StrongIndex<Tag> id) const noexcept {
    return std::hash<int>()(id.value());
  }
};

#endif  // NPGADGET_GRAPH_H_
