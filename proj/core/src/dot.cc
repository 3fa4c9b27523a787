#include "npgadget/dot.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace npgadget {

namespace {

std::string NodeName(VertexId v) { return "n" + std::to_string(v.value()); }

void WriteNodes(std::ostringstream& out, int n, const std::vector<VertexRole>& roles,
                const std::map<VertexId, std::string>& names) {
  for (int v = 0; v < n; ++v) {
    const VertexId id(v);
    std::string label = std::to_string(v);
    if (auto it = names.find(id); it != names.end()) {
      label = it->second;
    } else if (!roles.empty() && roles[v] != VertexRole::kPlain) {
      label = std::string(RoleName(roles[v]));
    }
    out << "  " << NodeName(id) << " [label=\"" << label << "\"];\n";
  }
}

std::string Attributes(const std::vector<std::string>& parts) {
  if (parts.empty()) return "";
  std::string out = " [";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ", ";
    out += parts[i];
  }
  return out + "]";
}

std::string VectorLabel(const SparseVec& w, int dim) {
  const int v = dim / 2;
  std::string out;
  for (const auto& [coord, value] : w.entries()) {
    if (!out.empty()) out += "+";
    if (value != 1) out += std::to_string(value) + "*";
    out += coord < v ? "e" + std::to_string(coord + 1) : "~e" + std::to_string(coord - v + 1);
  }
  return out;
}

}  // namespace

std::string ToDot(const RstInstance& instance, const RstLabels* labels) {
  const UGraph& g = instance.graph;
  std::ostringstream out;
  out << "graph rst {\n";
  WriteNodes(out, g.num_vertices, g.roles, {});
  for (const UEdge& e : g.edges) {
    std::vector<std::string> attrs;
    if (labels) {
      if (auto it = labels->edge_literals.find(e.id); it != labels->edge_literals.end()) {
        attrs.push_back("label=\"" + ToString(it->second) + "\"");
      }
    }
    if (instance.big_weight > 0 && e.weight == instance.big_weight) {
      attrs.push_back("label=\"*\"");
      attrs.push_back("style=bold");
    }
    out << "  " << NodeName(e.u) << " -- " << NodeName(e.v) << Attributes(attrs) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string ToDot(const FlowInstance& instance, const FlowLabels* labels) {
  const CapNetwork& net = instance.net;
  std::map<VertexId, std::string> names{{net.source, "s"}, {net.sink, "t"}};
  if (labels) {
    for (const auto& [var, pair] : labels->dashed_of_var) {
      if (net.HasArc(pair.positive)) {
        names[net.arc(pair.positive).to] = ToString(Literal{var, false});
      }
      if (net.HasArc(pair.negative)) {
        names[net.arc(pair.negative).to] = ToString(Literal{var, true});
      }
    }
  }
  for (int v = 0; v < net.num_vertices; ++v) {
    if (net.role(VertexId(v)) == VertexRole::kExcess) names[VertexId(v)] = "l";
  }
  const std::set<EdgeId> dashed(instance.all_or_nothing.begin(),
                                instance.all_or_nothing.end());
  std::ostringstream out;
  out << "digraph flow {\n";
  WriteNodes(out, net.num_vertices, net.roles, names);
  for (const Arc& a : net.arcs) {
    std::vector<std::string> attrs{"label=\"" + std::to_string(a.capacity) + "\""};
    if (dashed.contains(a.id)) attrs.push_back("style=dashed");
    out << "  " << NodeName(a.from) << " -> " << NodeName(a.to) << Attributes(attrs)
        << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string ToDot(const VvspInstance& instance, const VvspLabels* labels) {
  const VGraph& g = instance.graph;
  std::map<VertexId, std::string> names{{instance.source, "start"},
                                        {instance.target, "end"}};
  if (labels) {
    for (const auto& [var, branches] : labels->var_gadget) {
      names[branches.positive] = "u" + std::to_string(var);
      names[branches.negative] = "~u" + std::to_string(var);
    }
  }
  std::ostringstream out;
  out << "graph vvsp {\n";
  WriteNodes(out, g.num_vertices, g.roles, names);
  for (const VEdge& e : g.edges) {
    std::vector<std::string> attrs;
    if (!e.weight.IsZero()) {
      std::string label = VectorLabel(e.weight, g.dim);
      if (labels) {
        if (auto it = labels->clause_edge_literals.find(e.id);
            it != labels->clause_edge_literals.end()) {
          label = ToString(it->second);
        }
      }
      attrs.push_back("label=\"" + label + "\"");
    }
    out << "  " << NodeName(e.u) << " -- " << NodeName(e.v) << Attributes(attrs) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace npgadget
