#include "npgadget/json_io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>
#include <utility>

#include "json.hpp"
#include "npgadget/error.h"

namespace npgadget {

namespace {

using nlohmann::json;

// A position inside a parsed document; every accessor reports failures with
// the path that led here.
class Cursor {
 public:
  Cursor(const json& node, std::string path) : node_(node), path_(std::move(path)) {}

  [[noreturn]] void Fail(const std::string& what) const {
    throw Error(ErrorCode::kSchemaError, path_ + ": " + what);
  }

  Cursor operator[](const char* key) const {
    if (!node_.is_object()) Fail("expected an object");
    auto it = node_.find(key);
    if (it == node_.end()) {
      throw Error(ErrorCode::kSchemaError, path_ + "." + key + ": missing");
    }
    return Cursor(*it, path_ + "." + key);
  }

  bool Has(const char* key) const { return node_.is_object() && node_.contains(key); }

  Cursor Item(size_t i) const {
    return Cursor(node_.at(i), path_ + "[" + std::to_string(i) + "]");
  }

  int64_t Int() const {
    if (!node_.is_number_integer()) Fail("expected an integer");
    return node_.get<int64_t>();
  }

  double Real() const {
    if (!node_.is_number()) Fail("expected a number");
    return node_.get<double>();
  }

  bool IsInt() const { return node_.is_number_integer(); }

  int SmallInt() const {
    const int64_t v = Int();
    if (v < -(int64_t{1} << 31) || v >= (int64_t{1} << 31)) Fail("integer out of range");
    return static_cast<int>(v);
  }

  bool Bool() const {
    if (!node_.is_boolean()) Fail("expected a boolean");
    return node_.get<bool>();
  }

  std::string Str() const {
    if (!node_.is_string()) Fail("expected a string");
    return node_.get<std::string>();
  }

  size_t ArraySize() const {
    if (!node_.is_array()) Fail("expected an array");
    return node_.size();
  }

  // (key as int, child cursor) for every member of an object.
  std::vector<std::pair<int, Cursor>> IntKeyedMembers() const {
    if (!node_.is_object()) Fail("expected an object");
    std::vector<std::pair<int, Cursor>> out;
    for (auto it = node_.begin(); it != node_.end(); ++it) {
      const std::string& key = it.key();
      int value = 0;
      auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), value);
      const std::string child_path = path_ + "." + key;
      if (ec != std::errc() || ptr != key.data() + key.size()) {
        throw Error(ErrorCode::kSchemaError, child_path + ": key is not an integer");
      }
      out.emplace_back(value, Cursor(*it, child_path));
    }
    return out;
  }

  const std::string& path() const { return path_; }

 private:
  const json& node_;
  std::string path_;
};

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kSchemaError, std::string("$: invalid JSON: ") + e.what());
  }
}

// A plain budget k, possibly fractional, becomes floor(k^2).
int64_t SquaredBudget(const Cursor& budget) {
  if (budget.IsInt()) {
    const int64_t k = budget.Int();
    if (k < 0) budget.Fail("must be nonnegative");
    try {
      return CheckedMul(k, k);
    } catch (const Error&) {
      budget.Fail("k^2 overflows int64");
    }
  }
  const long double k = budget.Real();
  if (!(k >= 0)) budget.Fail("must be nonnegative");
  const long double sq = std::floor(k * k);
  if (sq >= 9.2e18L) budget.Fail("k^2 overflows int64");
  return static_cast<int64_t>(sq);
}

void ExpectProblem(const Cursor& root, std::string_view name) {
  if (!root.Has("problem")) return;
  if (root["problem"].Str() != name) {
    root["problem"].Fail("expected \"" + std::string(name) + "\"");
  }
}

json RolesJson(const std::vector<VertexRole>& roles) {
  json out = json::array();
  for (VertexRole r : roles) out.push_back(std::string(RoleName(r)));
  return out;
}

std::vector<VertexRole> ReadRoles(const Cursor& root, int num_vertices) {
  std::vector<VertexRole> roles;
  if (!root.Has("vertex_roles")) return roles;
  Cursor list = root["vertex_roles"];
  if (static_cast<int>(list.ArraySize()) != num_vertices) {
    list.Fail("expected one role per vertex");
  }
  for (size_t i = 0; i < list.ArraySize(); ++i) {
    try {
      roles.push_back(RoleFromName(list.Item(i).Str()));
    } catch (const Error&) {
      list.Item(i).Fail("unknown vertex role");
    }
  }
  return roles;
}

VertexId ReadVertex(const Cursor& c, int num_vertices) {
  const int v = c.SmallInt();
  if (v < 0 || v >= num_vertices) c.Fail("vertex outside 0..num_vertices-1");
  return VertexId(v);
}

EdgeId ReadDenseId(const Cursor& item, size_t expected) {
  const int id = item["id"].SmallInt();
  if (id != static_cast<int>(expected)) {
    item["id"].Fail("expected dense id " + std::to_string(expected));
  }
  return EdgeId(id);
}

EdgeId ReadEdgeRef(const Cursor& c, int num_edges) {
  const int id = c.SmallInt();
  if (num_edges >= 0 && (id < 0 || id >= num_edges)) {
    c.Fail("unknown edge id " + std::to_string(id));
  }
  return EdgeId(id);
}

json LiteralJson(Literal lit) { return {{"var", lit.var}, {"negated", lit.negated}}; }

Literal ReadLiteral(const Cursor& c) {
  Literal lit{c["var"].SmallInt(), c["negated"].Bool()};
  if (lit.var < 1) c["var"].Fail("variables are 1-based");
  return lit;
}

template <typename T>
T Validated(T value, const std::string& what) {
  try {
    value.Validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::kSchemaError, "$: invalid " + what + ": " + e.what());
  }
  return value;
}

}  // namespace

std::string_view ProblemName(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kRst: return "rst";
    case ProblemKind::kFlow: return "flow";
    case ProblemKind::kVvsp: return "vvsp";
  }
  return "rst";
}

ProblemKind ParseProblemKind(std::string_view name) {
  if (name == "rst") return ProblemKind::kRst;
  if (name == "flow") return ProblemKind::kFlow;
  if (name == "vvsp") return ProblemKind::kVvsp;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown problem '" + std::string(name) + "' (expected rst, flow or vvsp)");
}

ProblemKind DetectProblem(std::string_view json_text) {
  const json doc = Parse(json_text);
  Cursor root(doc, "$");
  Cursor problem = root["problem"];
  try {
    return ParseProblemKind(problem.Str());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSchemaError) throw;
    problem.Fail("expected \"rst\", \"flow\" or \"vvsp\"");
  }
}

// ---- instances -------------------------------------------------------------

std::string ToJson(const RstInstance& inst) {
  json edges = json::array();
  for (const UEdge& e : inst.graph.edges) {
    edges.push_back({{"id", e.id.value()}, {"u", e.u.value()}, {"v", e.v.value()},
                     {"w", e.weight}});
  }
  json forbidden = json::array();
  for (auto [a, b] : inst.forbidden) forbidden.push_back({a.value(), b.value()});
  json doc = {{"problem", "rst"},
              {"num_vertices", inst.graph.num_vertices},
              {"edges", std::move(edges)},
              {"forbidden", std::move(forbidden)},
              {"budget", inst.budget},
              {"big_weight", inst.big_weight}};
  if (!inst.graph.roles.empty()) doc["vertex_roles"] = RolesJson(inst.graph.roles);
  return doc.dump(1);
}

RstInstance RstInstanceFromJson(std::string_view text) {
  const json doc = Parse(text);
  Cursor root(doc, "$");
  ExpectProblem(root, "rst");
  RstInstance inst;
  inst.graph.num_vertices = root["num_vertices"].SmallInt();
  if (inst.graph.num_vertices < 1) root["num_vertices"].Fail("must be positive");
  inst.graph.roles = ReadRoles(root, inst.graph.num_vertices);
  Cursor edges = root["edges"];
  for (size_t i = 0; i < edges.ArraySize(); ++i) {
    Cursor e = edges.Item(i);
    UEdge edge{ReadDenseId(e, i), ReadVertex(e["u"], inst.graph.num_vertices),
               ReadVertex(e["v"], inst.graph.num_vertices), e["w"].Int()};
    if (edge.weight < 0) e["w"].Fail("weights must be nonnegative");
    if (edge.u == edge.v) e.Fail("self-loop");
    inst.graph.edges.push_back(edge);
  }
  Cursor forbidden = root["forbidden"];
  for (size_t i = 0; i < forbidden.ArraySize(); ++i) {
    Cursor pair = forbidden.Item(i);
    if (pair.ArraySize() != 2) pair.Fail("expected a pair of edge ids");
    EdgeId a = ReadEdgeRef(pair.Item(0), inst.graph.num_edges());
    EdgeId b = ReadEdgeRef(pair.Item(1), inst.graph.num_edges());
    if (a == b) pair.Fail("pair repeats one edge");
    if (b < a) std::swap(a, b);
    inst.forbidden.emplace_back(a, b);
  }
  std::sort(inst.forbidden.begin(), inst.forbidden.end());
  inst.forbidden.erase(std::unique(inst.forbidden.begin(), inst.forbidden.end()),
                       inst.forbidden.end());
  inst.budget = root["budget"].Int();
  if (inst.budget < 0) root["budget"].Fail("must be nonnegative");
  if (root.Has("big_weight")) inst.big_weight = root["big_weight"].Int();
  return Validated(std::move(inst), "rst instance");
}

std::string ToJson(const FlowInstance& inst) {
  json arcs = json::array();
  for (const Arc& a : inst.net.arcs) {
    arcs.push_back({{"id", a.id.value()}, {"from", a.from.value()}, {"to", a.to.value()},
                    {"cap", a.capacity}});
  }
  json aon = json::array();
  for (EdgeId id : inst.all_or_nothing) aon.push_back(id.value());
  json doc = {{"problem", "flow"},
              {"num_vertices", inst.net.num_vertices},
              {"arcs", std::move(arcs)},
              {"source", inst.net.source.value()},
              {"sink", inst.net.sink.value()},
              {"all_or_nothing", std::move(aon)},
              {"target", inst.target}};
  if (!inst.net.roles.empty()) doc["vertex_roles"] = RolesJson(inst.net.roles);
  return doc.dump(1);
}

FlowInstance FlowInstanceFromJson(std::string_view text) {
  const json doc = Parse(text);
  Cursor root(doc, "$");
  ExpectProblem(root, "flow");
  FlowInstance inst;
  CapNetwork& net = inst.net;
  net.num_vertices = root["num_vertices"].SmallInt();
  if (net.num_vertices < 2) root["num_vertices"].Fail("need at least source and sink");
  net.roles = ReadRoles(root, net.num_vertices);
  net.source = ReadVertex(root["source"], net.num_vertices);
  net.sink = ReadVertex(root["sink"], net.num_vertices);
  Cursor arcs = root["arcs"];
  for (size_t i = 0; i < arcs.ArraySize(); ++i) {
    Cursor a = arcs.Item(i);
    Arc arc{ReadDenseId(a, i), ReadVertex(a["from"], net.num_vertices),
            ReadVertex(a["to"], net.num_vertices), a["cap"].Int()};
    if (arc.capacity < 0) a["cap"].Fail("capacities must be nonnegative");
    net.arcs.push_back(arc);
  }
  Cursor aon = root["all_or_nothing"];
  for (size_t i = 0; i < aon.ArraySize(); ++i) {
    inst.all_or_nothing.push_back(ReadEdgeRef(aon.Item(i), net.num_arcs()));
  }
  std::sort(inst.all_or_nothing.begin(), inst.all_or_nothing.end());
  inst.all_or_nothing.erase(
      std::unique(inst.all_or_nothing.begin(), inst.all_or_nothing.end()),
      inst.all_or_nothing.end());
  inst.target = root["target"].Int();
  if (inst.target < 0) root["target"].Fail("must be nonnegative");
  return Validated(std::move(inst), "flow instance");
}

std::string ToJson(const VvspInstance& inst) {
  json edges = json::array();
  for (const VEdge& e : inst.graph.edges) {
    json w = json::object();
    for (const auto& [coord, value] : e.weight.entries()) w[std::to_string(coord)] = value;
    edges.push_back({{"id", e.id.value()}, {"u", e.u.value()}, {"v", e.v.value()},
                     {"w", std::move(w)}});
  }
  json doc = {{"problem", "vvsp"},
              {"num_vertices", inst.graph.num_vertices},
              {"dim", inst.graph.dim},
              {"edges", std::move(edges)},
              {"source", inst.source.value()},
              {"target", inst.target.value()},
              {"budget_sq", inst.budget_sq},
              {"big_weight", inst.big_weight}};
  if (!inst.graph.roles.empty()) doc["vertex_roles"] = RolesJson(inst.graph.roles);
  return doc.dump(1);
}

VvspInstance VvspInstanceFromJson(std::string_view text) {
  const json doc = Parse(text);
  Cursor root(doc, "$");
  ExpectProblem(root, "vvsp");
  VvspInstance inst;
  VGraph& g = inst.graph;
  g.num_vertices = root["num_vertices"].SmallInt();
  if (g.num_vertices < 1) root["num_vertices"].Fail("must be positive");
  g.dim = root["dim"].SmallInt();
  if (g.dim < 0) root["dim"].Fail("must be nonnegative");
  g.roles = ReadRoles(root, g.num_vertices);
  Cursor edges = root["edges"];
  for (size_t i = 0; i < edges.ArraySize(); ++i) {
    Cursor e = edges.Item(i);
    VEdge edge{ReadDenseId(e, i), ReadVertex(e["u"], g.num_vertices),
               ReadVertex(e["v"], g.num_vertices), SparseVec(g.dim)};
    for (const auto& [coord, value] : e["w"].IntKeyedMembers()) {
      if (coord < 0 || coord >= g.dim) value.Fail("coordinate outside dimension");
      const int64_t x = value.Int();
      if (x < 0) value.Fail("entries must be nonnegative");
      edge.weight.Set(coord, x);
    }
    if (edge.u == edge.v) e.Fail("self-loop");
    g.edges.push_back(std::move(edge));
  }
  inst.source = ReadVertex(root["source"], g.num_vertices);
  inst.target = ReadVertex(root["target"], g.num_vertices);
  if (root.Has("budget_sq") || !root.Has("budget")) {
    inst.budget_sq = root["budget_sq"].Int();
    if (inst.budget_sq < 0) root["budget_sq"].Fail("must be nonnegative");
  } else {
    inst.budget_sq = SquaredBudget(root["budget"]);
  }
  if (root.Has("big_weight")) inst.big_weight = root["big_weight"].Int();
  return Validated(std::move(inst), "vvsp instance");
}

// ---- labels ----------------------------------------------------------------

std::string ToJson(const RstLabels& labels) {
  json literals = json::object();
  for (const auto& [id, lit] : labels.edge_literals) {
    literals[std::to_string(id.value())] = LiteralJson(lit);
  }
  json clauses = json::object();
  for (const auto& [id, c] : labels.clause_of_edge) clauses[std::to_string(id.value())] = c;
  return json{{"problem", "rst"}, {"edge_literals", std::move(literals)},
              {"clause_of_edge", std::move(clauses)}}
      .dump(1);
}

RstLabels RstLabelsFromJson(std::string_view text) {
  const json doc = Parse(text);
  Cursor root(doc, "$");
  ExpectProblem(root, "rst");
  RstLabels labels;
  for (const auto& [id, lit] : root["edge_literals"].IntKeyedMembers()) {
    labels.edge_literals[EdgeId(id)] = ReadLiteral(lit);
  }
  if (root.Has("clause_of_edge")) {
    for (const auto& [id, c] : root["clause_of_edge"].IntKeyedMembers()) {
      labels.clause_of_edge[EdgeId(id)] = c.SmallInt();
    }
  }
  return labels;
}

std::string ToJson(const FlowLabels& labels) {
  json dashed = json::object();
  for (const auto& [var, pair] : labels.dashed_of_var) {
    dashed[std::to_string(var)] = {{"pos", pair.positive.value()},
                                   {"neg", pair.negative.value()}};
  }
  json clause_arcs = json::object();
  for (const auto& [c, id] : labels.clause_arc) clause_arcs[std::to_string(c)] = id.value();
  return json{{"problem", "flow"}, {"var_gadget_edges", std::move(dashed)},
              {"clause_arc", std::move(clause_arcs)}}
      .dump(1);
}

FlowLabels FlowLabelsFromJson(std::string_view text) {
  const json doc = Parse(text);
  Cursor root(doc, "$");
  ExpectProblem(root, "flow");
  FlowLabels labels;
  for (const auto& [var, pair] : root["var_gadget_edges"].IntKeyedMembers()) {
    labels.dashed_of_var[var] = {ReadEdgeRef(pair["pos"], -1), ReadEdgeRef(pair["neg"], -1)};
  }
  if (root.Has("clause_arc")) {
    for (const auto& [c, id] : root["clause_arc"].IntKeyedMembers()) {
      labels.clause_arc[c] = ReadEdgeRef(id, -1);
    }
  }
  return labels;
}

std::string ToJson(const VvspLabels& labels) {
  json literals = json::object();
  for (const auto& [id, lit] : labels.clause_edge_literals) {
    literals[std::to_string(id.value())] = LiteralJson(lit);
  }
  json edges = json::object();
  for (const auto& [var, pair] : labels.var_gadget_edges) {
    edges[std::to_string(var)] = {{"pos", pair.positive.value()},
                                  {"neg", pair.negative.value()}};
  }
  json vertices = json::object();
  for (const auto& [var, pair] : labels.var_gadget) {
    vertices[std::to_string(var)] = {{"pos", pair.positive.value()},
                                     {"neg", pair.negative.value()}};
  }
  return json{{"problem", "vvsp"},
              {"edge_literals", std::move(literals)},
              {"var_gadget_edges", std::move(edges)},
              {"var_gadget_vertices", std::move(vertices)}}
      .dump(1);
}

VvspLabels VvspLabelsFromJson(std::string_view text) {
  const json doc = Parse(text);
  Cursor root(doc, "$");
  ExpectProblem(root, "vvsp");
  VvspLabels labels;
  for (const auto& [id, lit] : root["edge_literals"].IntKeyedMembers()) {
    labels.clause_edge_literals[EdgeId(id)] = ReadLiteral(lit);
  }
  for (const auto& [var, pair] : root["var_gadget_edges"].IntKeyedMembers()) {
    labels.var_gadget_edges[var] = {ReadEdgeRef(pair["pos"], -1), ReadEdgeRef(pair["neg"], -1)};
  }
  for (const auto& [var, pair] : root["var_gadget_vertices"].IntKeyedMembers()) {
    labels.var_gadget[var] = {VertexId(pair["pos"].SmallInt()),
                              VertexId(pair["neg"].SmallInt())};
  }
  return labels;
}

// ---- certificates ----------------------------------------------------------

std::string ToJson(const TreeCertificate& cert) {
  json ids = json::array();
  for (EdgeId id : cert.edges) ids.push_back(id.value());
  return json{{"tree", std::move(ids)}}.dump();
}

std::string ToJson(const FlowCertificate& cert) {
  json flow = json::object();
  for (const auto& [id, value] : cert.flow) flow[std::to_string(id.value())] = value;
  return json{{"flow", std::move(flow)}}.dump();
}

std::string ToJson(const PathCertificate& cert) {
  json path = json::array();
  for (VertexId v : cert.vertices) path.push_back(v.value());
  return json{{"path", std::move(path)}}.dump();
}

TreeCertificate TreeCertificateFromJson(std::string_view text, const RstInstance* context) {
  const json doc = Parse(text);
  Cursor list = Cursor(doc, "$")["tree"];
  const int limit = context ? context->graph.num_edges() : -1;
  TreeCertificate cert;
  for (size_t i = 0; i < list.ArraySize(); ++i) {
    cert.edges.push_back(ReadEdgeRef(list.Item(i), limit));
  }
  return cert;
}

FlowCertificate FlowCertificateFromJson(std::string_view text, const FlowInstance* context) {
  const json doc = Parse(text);
  Cursor map = Cursor(doc, "$")["flow"];
  FlowCertificate cert;
  for (const auto& [id, value] : map.IntKeyedMembers()) {
    if (context && !context->net.HasArc(EdgeId(id))) {
      value.Fail("unknown arc id " + std::to_string(id));
    }
    cert.flow[EdgeId(id)] = value.Int();
  }
  return cert;
}

PathCertificate PathCertificateFromJson(std::string_view text) {
  const json doc = Parse(text);
  Cursor list = Cursor(doc, "$")["path"];
  PathCertificate cert;
  for (size_t i = 0; i < list.ArraySize(); ++i) {
    cert.vertices.push_back(VertexId(list.Item(i).SmallInt()));
  }
  return cert;
}

}  // namespace npgadget
