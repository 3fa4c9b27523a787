#include "npgadget/flow.h"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>

#include "npgadget/error.h"
#include "npgadget/max_flow.h"

namespace npgadget {

namespace {

struct Layout {
  int num_vars;
  int num_clauses;

  VertexId source() const { return VertexId(0); }
  VertexId sink() const { return VertexId(1); }
  VertexId excess() const { return VertexId(2); }
  VertexId hub(int var) const { return VertexId(3 + var - 1); }
  VertexId literal(Literal lit) const {
    return VertexId(3 + num_vars + 2 * (lit.var - 1) + (lit.negated ? 1 : 0));
  }
  VertexId slot(int clause, int position) const {
    return VertexId(3 + 3 * num_vars + 3 * clause + position);
  }
  VertexId clause_out(int clause) const {
    return VertexId(3 + 3 * num_vars + 3 * num_clauses + clause);
  }
  int num_vertices() const { return 3 + 3 * num_vars + 4 * num_clauses; }

  // Arc ids follow the insertion order in BuildFlow.
  EdgeId hub_arc(int var) const { return EdgeId(5 * (var - 1)); }
  EdgeId dashed_arc(Literal lit) const {
    return EdgeId(5 * (lit.var - 1) + 1 + (lit.negated ? 1 : 0));
  }
  EdgeId excess_arc(Literal lit) const {
    return EdgeId(5 * (lit.var - 1) + 3 + (lit.negated ? 1 : 0));
  }
  EdgeId literal_to_slot(int clause, int position) const {
    return EdgeId(5 * num_vars + 7 * clause + position);
  }
  EdgeId slot_to_out(int clause, int position) const {
    return EdgeId(5 * num_vars + 7 * clause + 3 + position);
  }
  EdgeId out_to_sink(int clause) const {
    return EdgeId(5 * num_vars + 7 * clause + 6);
  }
  EdgeId excess_to_sink() const { return EdgeId(5 * num_vars + 7 * num_clauses); }
};

struct BoundedFlow {
  int64_t value;
  std::vector<int64_t> flow;  // per arc
};

// Maximum s-t flow subject to lower[a] <= f(a) <= upper[a], or nullopt if
// no flow meets the lower bounds. Classic reduction: route the mandatory
// lower-bound imbalance through a super source/sink with a t->s return arc,
// then drop the return arc and augment s->t on what remains.
std::optional<BoundedFlow> MaxFlowWithBounds(const CapNetwork& net,
                                             const std::vector<int64_t>& lower,
                                             const std::vector<int64_t>& upper) {
  const int n = net.num_vertices;
  const int super_source = n;
  const int super_sink = n + 1;
  MaxFlowGraph g(n + 2);
  std::vector<int64_t> imbalance(n, 0);
  std::vector<int> handles(net.num_arcs());
  int64_t infinity = 1;
  for (const Arc& a : net.arcs) {
    const size_t i = a.id.index();
    handles[i] = g.AddArc(a.from.value(), a.to.value(), upper[i] - lower[i]);
    imbalance[a.to.index()] += lower[i];
    imbalance[a.from.index()] -= lower[i];
    infinity = CheckedAdd(infinity, upper[i]);
  }
  const int back = g.AddArc(net.sink.value(), net.source.value(), infinity);
  std::vector<int> helper_arcs;
  int64_t demand = 0;
  for (int v = 0; v < n; ++v) {
    if (imbalance[v] > 0) {
      helper_arcs.push_back(g.AddArc(super_source, v, imbalance[v]));
      demand += imbalance[v];
    } else if (imbalance[v] < 0) {
      helper_arcs.push_back(g.AddArc(v, super_sink, -imbalance[v]));
    }
  }
  if (g.Augment(super_source, super_sink) != demand) return std::nullopt;

  g.Freeze(back);
  for (int h : helper_arcs) g.Freeze(h);
  g.Augment(net.source.value(), net.sink.value());

  BoundedFlow out{0, std::vector<int64_t>(net.num_arcs())};
  for (const Arc& a : net.arcs) {
    const size_t i = a.id.index();
    out.flow[i] = lower[i] + g.Flow(handles[i]);
    if (a.from == net.source) out.value += out.flow[i];
  }
  return out;
}

class PatternSearch {
 public:
  PatternSearch(const FlowInstance& instance, const FlowSolveOptions& options)
      : instance_(instance), options_(options) {
    const CapNetwork& net = instance.net;
    lower_.assign(net.num_arcs(), 0);
    upper_.resize(net.num_arcs());
    for (const Arc& a : net.arcs) upper_[a.id.index()] = a.capacity;

    if (options.exhaustive_patterns) {
      for (EdgeId id : instance.all_or_nothing) {
        groups_.push_back({{id.value()}, {1, 0}});
      }
      return;
    }

    // Group A-arcs by tail. Saturated arcs leaving one vertex cannot carry
    // more than the capacity entering it.
    std::map<int, std::vector<int>> by_tail;
    for (EdgeId id : instance.all_or_nothing) {
      by_tail[net.arc(id).from.value()].push_back(id.value());
    }
    std::vector<int64_t> inflow_capacity(net.num_vertices, 0);
    for (const Arc& a : net.arcs) {
      inflow_capacity[a.to.index()] = CheckedAdd(inflow_capacity[a.to.index()], a.capacity);
    }
    for (auto& [tail, arcs] : by_tail) {
      if (arcs.size() > 20) {
        throw Error(ErrorCode::kSearchBudgetExceeded,
                    "more than 20 all-or-nothing arcs leave vertex " + std::to_string(tail));
      }
      Group group{arcs, {}};
      const uint32_t full = (uint32_t{1} << arcs.size()) - 1;
      for (uint32_t k = 1; k <= full + 1; ++k) {
        const uint32_t mask = k & full;  // nonempty masks first, then 0
        int64_t saturated = 0;
        for (size_t b = 0; b < arcs.size(); ++b) {
          if (mask >> b & 1) saturated = CheckedAdd(saturated, net.arcs[arcs[b]].capacity);
        }
        const bool unlimited = VertexId(tail) == net.source;
        if (!unlimited && saturated > inflow_capacity[tail]) continue;
        group.masks.push_back(mask);
      }
      groups_.push_back(std::move(group));
    }
    // Drop any choice that fails on its own with every other arc relaxed.
    for (Group& group : groups_) {
      std::vector<uint32_t> kept;
      for (uint32_t mask : group.masks) {
        Fix(group, mask);
        if (Promising()) kept.push_back(mask);
        Release(group);
      }
      group.masks = std::move(kept);
    }
  }

  std::optional<FlowCertificate> Run() { return Search(0); }
  const SearchStats& stats() const { return stats_; }

 private:
  struct Group {
    std::vector<int> arcs;
    std::vector<uint32_t> masks;
  };

  void Fix(const Group& group, uint32_t mask) {
    for (size_t b = 0; b < group.arcs.size(); ++b) {
      const int a = group.arcs[b];
      const int64_t value = (mask >> b & 1) ? instance_.net.arcs[a].capacity : 0;
      lower_[a] = value;
      upper_[a] = value;
    }
  }

  void Release(const Group& group) {
    for (int a : group.arcs) {
      lower_[a] = 0;
      upper_[a] = instance_.net.arcs[a].capacity;
    }
  }

  bool Promising() {
    auto relaxed = MaxFlowWithBounds(instance_.net, lower_, upper_);
    return relaxed && relaxed->value >= instance_.target;
  }

  std::optional<FlowCertificate> Search(size_t depth) {
    if (++stats_.nodes > options_.node_limit) {
      throw Error(ErrorCode::kSearchBudgetExceeded,
                  "flow pattern search exceeded " + std::to_string(options_.node_limit) +
                      " nodes");
    }
    if (depth == groups_.size()) {
      ++stats_.leaves;
      auto best = MaxFlowWithBounds(instance_.net, lower_, upper_);
      if (!best || best->value < instance_.target) return std::nullopt;
      FlowCertificate cert;
      for (size_t i = 0; i < best->flow.size(); ++i) {
        if (best->flow[i] != 0) cert.flow[EdgeId(static_cast<int>(i))] = best->flow[i];
      }
      return cert;
    }
    if (!options_.exhaustive_patterns && depth > 0 && !Promising()) return std::nullopt;
    const Group& group = groups_[depth];
    for (uint32_t mask : group.masks) {
      Fix(group, mask);
      auto found = Search(depth + 1);
      Release(group);
      if (found) return found;
    }
    return std::nullopt;
  }

  const FlowInstance& instance_;
  const FlowSolveOptions& options_;
  std::vector<int64_t> lower_;
  std::vector<int64_t> upper_;
  std::vector<Group> groups_;
  SearchStats stats_;
};

}  // namespace

void FlowInstance::Validate() const {
  net.Validate();
  if (target < 0) throw Error(ErrorCode::kInvalidGraph, "negative target");
  for (size_t i = 0; i < all_or_nothing.size(); ++i) {
    if (!net.HasArc(all_or_nothing[i])) {
      throw Error(ErrorCode::kUnknownEdgeId,
                  "all-or-nothing arc " + std::to_string(all_or_nothing[i].value()) +
                      " not in network");
    }
    if (i > 0 && !(all_or_nothing[i - 1] < all_or_nothing[i])) {
      throw Error(ErrorCode::kInvalidGraph, "all-or-nothing set not sorted/unique");
    }
  }
}

FlowReduction BuildFlow(const CnfInstance& cnf) {
  const Layout layout{cnf.num_vars(), cnf.num_clauses()};
  const int64_t c = cnf.num_clauses();
  const int64_t vc = CheckedMul(cnf.num_vars(), c);

  FlowReduction out;
  FlowInstance& inst = out.instance;
  CapNetwork& net = inst.net;
  net.num_vertices = layout.num_vertices();
  net.roles.assign(net.num_vertices, VertexRole::kPlain);
  net.source = layout.source();
  net.sink = layout.sink();
  net.roles[net.source.index()] = VertexRole::kSource;
  net.roles[net.sink.index()] = VertexRole::kSink;
  net.roles[layout.excess().index()] = VertexRole::kExcess;

  for (int var = 1; var <= cnf.num_vars(); ++var) {
    const Literal pos{var, false};
    const Literal neg{var, true};
    net.roles[layout.hub(var).index()] = VertexRole::kVarHub;
    net.roles[layout.literal(pos).index()] = VertexRole::kLiteralVertex;
    net.roles[layout.literal(neg).index()] = VertexRole::kLiteralVertex;
    net.AddArc(net.source, layout.hub(var), c);
    const EdgeId p = net.AddArc(layout.hub(var), layout.literal(pos), c);
    const EdgeId q = net.AddArc(layout.hub(var), layout.literal(neg), c);
    net.AddArc(layout.literal(pos), layout.excess(), vc);
    net.AddArc(layout.literal(neg), layout.excess(), vc);
    inst.all_or_nothing.push_back(p);
    inst.all_or_nothing.push_back(q);
    out.labels.dashed_of_var[var] = {p, q};
  }
  for (int i = 0; i < cnf.num_clauses(); ++i) {
    net.roles[layout.clause_out(i).index()] = VertexRole::kClauseOut;
    for (int j = 0; j < 3; ++j) {
      net.roles[layout.slot(i, j).index()] = VertexRole::kClausePos;
      net.AddArc(layout.literal(cnf.clause(i)[j]), layout.slot(i, j), vc);
    }
    for (int j = 0; j < 3; ++j) net.AddArc(layout.slot(i, j), layout.clause_out(i), vc);
    out.labels.clause_arc[i] = net.AddArc(layout.clause_out(i), net.sink, 1);
  }
  net.AddArc(layout.excess(), net.sink, vc - c);
  inst.target = vc;
  inst.Validate();
  return out;
}

VerifyReport VerifyFlow(const FlowInstance& instance, const FlowCertificate& flow) {
  const CapNetwork& net = instance.net;
  for (const auto& [id, value] : flow.flow) {
    if (!net.HasArc(id)) {
      throw Error(ErrorCode::kUnknownEdgeId,
                  "certificate arc " + std::to_string(id.value()) + " not in network");
    }
  }
  int64_t value = 0;
  for (const Arc& a : net.arcs) {
    if (a.from == net.source) value = CheckedAdd(value, flow.Get(a.id));
  }

  for (const auto& [id, f] : flow.flow) {
    if (f < 0 || f > net.arc(id).capacity) {
      return VerifyReport::Reject(
          RejectReason::kCapacityViolated, value,
          "arc " + std::to_string(id.value()) + " carries " + std::to_string(f) +
              " outside [0, " + std::to_string(net.arc(id).capacity) + "]");
    }
  }
  for (EdgeId id : instance.all_or_nothing) {
    const int64_t f = flow.Get(id);
    if (f != 0 && f != net.arc(id).capacity) {
      return VerifyReport::Reject(
          RejectReason::kNotAllOrNothing, value,
          "arc " + std::to_string(id.value()) + " carries " + std::to_string(f) +
              ", must be 0 or " + std::to_string(net.arc(id).capacity));
    }
  }
  std::vector<int64_t> balance(net.num_vertices, 0);
  for (const auto& [id, f] : flow.flow) {
    const Arc& a = net.arc(id);
    balance[a.from.index()] -= f;
    balance[a.to.index()] += f;
  }
  for (int v = 0; v < net.num_vertices; ++v) {
    if (VertexId(v) == net.source || VertexId(v) == net.sink) continue;
    if (balance[v] != 0) {
      return VerifyReport::Reject(RejectReason::kConservationViolated, value,
                                  "vertex " + std::to_string(v) + " has net inflow " +
                                      std::to_string(balance[v]));
    }
  }
  if (value < instance.target) {
    return VerifyReport::Reject(RejectReason::kBelowTarget, value,
                                "value " + std::to_string(value) + " below target " +
                                    std::to_string(instance.target));
  }
  return VerifyReport::Accept(value);
}

SolveResult<FlowCertificate> SolveFlow(const FlowInstance& instance,
                                       const FlowSolveOptions& options) {
  instance.Validate();
  PatternSearch search(instance, options);
  SolveResult<FlowCertificate> result;
  result.certificate = search.Run();
  result.stats = search.stats();
  if (result.certificate && !VerifyFlow(instance, *result.certificate).accepted) {
    throw std::logic_error("pattern search produced a flow its verifier rejects");
  }
  return result;
}

FlowCertificate FlowFromAssignment(const CnfInstance& cnf, const Assignment& a) {
  if (!Evaluate(cnf, a)) {
    throw Error(ErrorCode::kNotSatisfying, "assignment does not satisfy the formula");
  }
  const Layout layout{cnf.num_vars(), cnf.num_clauses()};
  const int64_t c = cnf.num_clauses();
  FlowCertificate cert;
  std::map<Literal, int64_t> surplus;
  for (int var = 1; var <= cnf.num_vars(); ++var) {
    const Literal chosen{var, !a.value(var)};
    cert.flow[layout.hub_arc(var)] = c;
    cert.flow[layout.dashed_arc(chosen)] = c;
    surplus[chosen] = c;
  }
  for (int i = 0; i < cnf.num_clauses(); ++i) {
    int j = 0;
    while (!a.Satisfies(cnf.clause(i)[j])) ++j;
    cert.flow[layout.literal_to_slot(i, j)] = 1;
    cert.flow[layout.slot_to_out(i, j)] = 1;
    cert.flow[layout.out_to_sink(i)] = 1;
    --surplus[cnf.clause(i)[j]];
  }
  for (const auto& [lit, rest] : surplus) {
    if (rest > 0) cert.flow[layout.excess_arc(lit)] = rest;
  }
  const int64_t to_sink = CheckedMul(cnf.num_vars(), c) - c;
  if (to_sink > 0) cert.flow[layout.excess_to_sink()] = to_sink;
  return cert;
}

Assignment ExtractFlow(const FlowLabels& labels, const FlowCertificate& flow,
                       int num_vars) {
  Assignment a(num_vars);
  for (int var = 1; var <= num_vars; ++var) {
    auto it = labels.dashed_of_var.find(var);
    if (it == labels.dashed_of_var.end()) {
      throw Error(ErrorCode::kAmbiguousVariable,
                  "no dashed arcs recorded for x" + std::to_string(var));
    }
    const bool pos = flow.Get(it->second.positive) > 0;
    const bool neg = flow.Get(it->second.negative) > 0;
    if (pos == neg) {
      throw Error(ErrorCode::kAmbiguousVariable,
                  "x" + std::to_string(var) + (pos ? " has both" : " has neither") +
                      " dashed arc carrying flow");
    }
    a.set(var, pos);
  }
  return a;
}

}  // namespace npgadget
