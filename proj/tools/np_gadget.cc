// np-gadget: build, verify, solve and decode the three 3-SAT reductions.
//
// Exit codes: 0 yes/success, 1 no/reject, 2 malformed input, 3 search
// budget exceeded.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "npgadget/baselines.h"
#include "npgadget/cnf.h"
#include "npgadget/dot.h"
#include "npgadget/error.h"
#include "npgadget/flow.h"
#include "npgadget/json_io.h"
#include "npgadget/roundtrip.h"
#include "npgadget/rst.h"
#include "npgadget/vvsp.h"

namespace npgadget {
namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitBudget = 3;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

// Explicit --problem must agree with the document's own "problem" field.
ProblemKind ResolveProblem(const std::string& flag, const std::string& document) {
  const ProblemKind detected = DetectProblem(document);
  if (!flag.empty() && ParseProblemKind(flag) != detected) {
    throw Error(ErrorCode::kSchemaError,
                "$.problem: document is \"" + std::string(ProblemName(detected)) +
                    "\" but --problem says \"" + flag + "\"");
  }
  return detected;
}

// "3..5" or "4".
std::pair<int, int> ParseRange(const std::string& text) {
  auto parse = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw Error(ErrorCode::kInvalidArgument, "bad range '" + text + "'");
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse(text);
    return {v, v};
  }
  return {parse(std::string_view(text).substr(0, dots)),
          parse(std::string_view(text).substr(dots + 2))};
}

void PrintReport(const VerifyReport& report, std::string_view value_name) {
  if (report.accepted) {
    std::cout << "Accept " << value_name << "=" << report.value << "\n";
  } else {
    std::cout << "Reject " << ReasonName(report.reason) << " " << value_name << "="
              << report.value << ": " << report.detail << "\n";
  }
}

struct ReduceArgs {
  std::string problem, cnf, out, labels;
  std::optional<int64_t> param_m;
};

int Reduce(const ReduceArgs& args) {
  const CnfInstance cnf = ParseDimacs(ReadFile(args.cnf));
  const std::string labels_path = args.labels.empty() ? args.out + ".labels.json" : args.labels;
  switch (ParseProblemKind(args.problem)) {
    case ProblemKind::kRst: {
      const RstReduction r = BuildRst(cnf, args.param_m);
      WriteFile(args.out, ToJson(r.instance));
      WriteFile(labels_path, ToJson(r.labels));
      std::cout << "rst: vertices=" << r.instance.graph.num_vertices
                << " edges=" << r.instance.graph.num_edges()
                << " forbidden=" << r.instance.forbidden.size()
                << " M=" << r.instance.big_weight << " budget=" << r.instance.budget << "\n";
      break;
    }
    case ProblemKind::kFlow: {
      if (args.param_m) {
        throw Error(ErrorCode::kInvalidArgument, "--param-m does not apply to flow");
      }
      const FlowReduction r = BuildFlow(cnf);
      WriteFile(args.out, ToJson(r.instance));
      WriteFile(labels_path, ToJson(r.labels));
      std::cout << "flow: vertices=" << r.instance.net.num_vertices
                << " arcs=" << r.instance.net.num_arcs()
                << " all_or_nothing=" << r.instance.all_or_nothing.size()
                << " target=" << r.instance.target << "\n";
      break;
    }
    case ProblemKind::kVvsp: {
      const VvspReduction r = BuildVvsp(cnf, args.param_m);
      WriteFile(args.out, ToJson(r.instance));
      WriteFile(labels_path, ToJson(r.labels));
      std::cout << "vvsp: vertices=" << r.instance.graph.num_vertices
                << " edges=" << r.instance.graph.num_edges() << " dim=" << r.instance.graph.dim
                << " M=" << r.instance.big_weight << " budget_sq=" << r.instance.budget_sq
                << "\n";
      break;
    }
  }
  std::cout << "wrote " << args.out << " and " << labels_path << "\n";
  return kExitYes;
}

int Verify(const std::string& problem, const std::string& instance_path,
           const std::string& cert_path) {
  const std::string doc = ReadFile(instance_path);
  const std::string cert_text = ReadFile(cert_path);
  VerifyReport report;
  switch (ResolveProblem(problem, doc)) {
    case ProblemKind::kRst: {
      const RstInstance inst = RstInstanceFromJson(doc);
      report = VerifyRst(inst, TreeCertificateFromJson(cert_text, &inst));
      PrintReport(report, "cost");
      break;
    }
    case ProblemKind::kFlow: {
      const FlowInstance inst = FlowInstanceFromJson(doc);
      report = VerifyFlow(inst, FlowCertificateFromJson(cert_text, &inst));
      PrintReport(report, "value");
      break;
    }
    case ProblemKind::kVvsp: {
      const VvspInstance inst = VvspInstanceFromJson(doc);
      report = VerifyVvsp(inst, PathCertificateFromJson(cert_text));
      PrintReport(report, "cost2");
      break;
    }
  }
  return report.accepted ? kExitYes : kExitNo;
}

template <typename Certificate>
int FinishSolve(const SolveResult<Certificate>& result, const std::string& out_path) {
  std::cout << "nodes=" << result.stats.nodes << " leaves=" << result.stats.leaves << "\n";
  if (!result.certificate) {
    std::cout << "none: no certificate exists\n";
    return kExitNo;
  }
  WriteFile(out_path, ToJson(*result.certificate));
  std::cout << "found: certificate written to " << out_path << "\n";
  return kExitYes;
}

int Solve(const std::string& problem, const std::string& instance_path,
          const std::string& out_path, std::optional<uint64_t> node_limit,
          bool exhaustive_patterns) {
  const std::string doc = ReadFile(instance_path);
  SearchOptions search;
  if (node_limit) search.node_limit = *node_limit;
  switch (ResolveProblem(problem, doc)) {
    case ProblemKind::kRst: {
      RstSolveOptions options;
      options.node_limit = search.node_limit;
      return FinishSolve(SolveRst(RstInstanceFromJson(doc), options), out_path);
    }
    case ProblemKind::kFlow: {
      FlowSolveOptions options;
      options.node_limit = search.node_limit;
      options.exhaustive_patterns = exhaustive_patterns;
      return FinishSolve(SolveFlow(FlowInstanceFromJson(doc), options), out_path);
    }
    case ProblemKind::kVvsp:
      return FinishSolve(SolveVvsp(VvspInstanceFromJson(doc), search), out_path);
  }
  return kExitMalformed;
}

int Extract(const std::string& problem, const std::string& labels_path,
            const std::string& cert_path, int num_vars, const std::string& check_cnf) {
  const std::string labels = ReadFile(labels_path);
  const std::string cert = ReadFile(cert_path);
  Assignment a;
  switch (ResolveProblem(problem, labels)) {
    case ProblemKind::kRst:
      a = ExtractRst(RstLabelsFromJson(labels), TreeCertificateFromJson(cert), num_vars);
      break;
    case ProblemKind::kFlow:
      a = ExtractFlow(FlowLabelsFromJson(labels), FlowCertificateFromJson(cert), num_vars);
      break;
    case ProblemKind::kVvsp:
      a = ExtractVvsp(VvspLabelsFromJson(labels), PathCertificateFromJson(cert), num_vars);
      break;
  }
  for (int var = 1; var <= num_vars; ++var) {
    std::cout << "x" << var << "=" << (a.value(var) ? "true" : "false") << "\n";
  }
  if (!check_cnf.empty()) {
    const bool ok = Evaluate(ParseDimacs(ReadFile(check_cnf)), a);
    std::cout << (ok ? "satisfies " : "does NOT satisfy ") << check_cnf << "\n";
    if (!ok) return kExitNo;
  }
  return kExitYes;
}

int Dot(const std::string& problem, const std::string& instance_path,
        const std::string& labels_path) {
  const std::string doc = ReadFile(instance_path);
  const std::string labels = labels_path.empty() ? "" : ReadFile(labels_path);
  switch (ResolveProblem(problem, doc)) {
    case ProblemKind::kRst: {
      std::optional<RstLabels> l;
      if (!labels.empty()) l = RstLabelsFromJson(labels);
      std::cout << ToDot(RstInstanceFromJson(doc), l ? &*l : nullptr);
      break;
    }
    case ProblemKind::kFlow: {
      std::optional<FlowLabels> l;
      if (!labels.empty()) l = FlowLabelsFromJson(labels);
      std::cout << ToDot(FlowInstanceFromJson(doc), l ? &*l : nullptr);
      break;
    }
    case ProblemKind::kVvsp: {
      std::optional<VvspLabels> l;
      if (!labels.empty()) l = VvspLabelsFromJson(labels);
      std::cout << ToDot(VvspInstanceFromJson(doc), l ? &*l : nullptr);
      break;
    }
  }
  return kExitYes;
}

int Baseline(const std::string& algo, const std::string& instance_path,
             std::optional<int> from, std::optional<int> to) {
  const std::string doc = ReadFile(instance_path);
  const ProblemKind kind = DetectProblem(doc);
  auto wrong_kind = [&]() {
    return Error(ErrorCode::kInvalidArgument,
                 "baseline " + algo + " does not apply to a " +
                     std::string(ProblemName(kind)) + " instance");
  };
  if (algo == "mst") {
    if (kind != ProblemKind::kRst) throw wrong_kind();
    const SpanningTreeResult mst = PrimMst(RstInstanceFromJson(doc).graph);
    std::cout << "mst cost=" << mst.cost << " (restriction ignored: forbidden pairs)\n";
    return kExitYes;
  }
  if (algo == "maxflow") {
    if (kind != ProblemKind::kFlow) throw wrong_kind();
    const MaxFlowResult flow = EdmondsKarp(FlowInstanceFromJson(doc).net);
    std::cout << "maxflow value=" << flow.value
              << " (restriction ignored: all-or-nothing arcs)\n";
    return kExitYes;
  }
  if (algo == "sp") {
    UGraph graph;
    VertexId s, t;
    std::string ignored;
    if (kind == ProblemKind::kVvsp) {
      const VvspInstance inst = VvspInstanceFromJson(doc);
      graph = Scalarize(inst.graph);
      s = inst.source;
      t = inst.target;
      ignored = "vector weights summed to scalars";
    } else if (kind == ProblemKind::kRst) {
      graph = RstInstanceFromJson(doc).graph;
      if (!from || !to) {
        throw Error(ErrorCode::kInvalidArgument, "sp on an rst instance needs --from and --to");
      }
      ignored = "forbidden pairs";
    } else {
      throw wrong_kind();
    }
    if (from) s = VertexId(*from);
    if (to) t = VertexId(*to);
    const auto path = Dijkstra(graph, s, t);
    if (!path) {
      std::cout << "sp unreachable (restriction ignored: " << ignored << ")\n";
      return kExitNo;
    }
    std::cout << "sp cost=" << path->cost << " (restriction ignored: " << ignored << ")\n";
    return kExitYes;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown baseline '" + algo + "'");
}

int Roundtrip(const std::string& vars, const std::string& clauses, int count, uint64_t seed,
              bool fixtures, std::optional<uint64_t> node_limit) {
  RoundtripConfig config;
  std::tie(config.min_vars, config.max_vars) = ParseRange(vars);
  std::tie(config.min_clauses, config.max_clauses) = ParseRange(clauses);
  config.count = count;
  config.seed = seed;
  config.force_fixtures = fixtures;
  if (node_limit) config.search.node_limit = *node_limit;
  const std::vector<RoundtripRow> rows = RunRoundtrip(config);
  std::cout << FormatReport(rows);
  bool all_pass = true;
  for (const RoundtripRow& row : rows) {
    if (row.Pass()) continue;
    all_pass = false;
    std::cout << "\n# disagreement on " << row.name << "\n" << row.dimacs;
  }
  return all_pass ? kExitYes : kExitNo;
}

int Main(int argc, char** argv) {
  CLI::App app{"Reductions from 3-SAT to restricted spanning tree, all-or-nothing flow "
               "and vector-valued shortest path"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 yes/success, 1 no/reject, 2 malformed input, 3 search budget exceeded.\n"
      "A vvsp instance may state \"budget\": k instead of \"budget_sq\"; a fractional k\n"
      "is squared and rounded down.");

  ReduceArgs reduce_args;
  auto* reduce = app.add_subcommand("reduce", "Build an instance from a DIMACS formula");
  reduce->add_option("--problem", reduce_args.problem, "rst | flow | vvsp")->required();
  reduce->add_option("--cnf", reduce_args.cnf, "DIMACS CNF input")->required();
  reduce->add_option("--out", reduce_args.out, "instance JSON output")->required();
  reduce->add_option("--labels", reduce_args.labels,
                     "labels JSON output (default: <out>.labels.json)");
  reduce->add_option("--param-m", reduce_args.param_m, "the heavy weight M");

  std::string problem, instance, certificate, labels, out, check_cnf, algo;
  std::optional<uint64_t> node_limit;
  std::optional<int> from, to;
  bool exhaustive_patterns = false;
  int num_vars = 0;

  auto* verify = app.add_subcommand("verify", "Check a certificate against an instance");
  verify->add_option("--problem", problem);
  verify->add_option("--instance", instance)->required();
  verify->add_option("--certificate", certificate)->required();

  auto* solve = app.add_subcommand("solve", "Search for a certificate");
  solve->add_option("--problem", problem);
  solve->add_option("--instance", instance)->required();
  solve->add_option("--out", out, "certificate JSON output")->required();
  solve->add_option("--node-limit", node_limit,
                    "search budget (default $NP_GADGET_NODE_LIMIT or 5000000)");
  solve->add_flag("--exhaustive-patterns", exhaustive_patterns,
                  "flow only: try all 2^|A| patterns without pruning");

  auto* extract = app.add_subcommand("extract", "Decode a certificate into an assignment");
  extract->add_option("--problem", problem);
  extract->add_option("--labels", labels)->required();
  extract->add_option("--certificate", certificate)->required();
  extract->add_option("--vars", num_vars, "number of variables")->required();
  extract->add_option("--check-cnf", check_cnf, "evaluate the result on this DIMACS file");

  std::string vars_range = "3..4", clauses_range = "1..4";
  int count = 50;
  uint64_t seed = 42;
  bool fixtures = false;
  auto* roundtrip = app.add_subcommand("roundtrip", "Random sweep against the SAT oracle");
  roundtrip->add_option("--vars", vars_range, "variable range, e.g. 3..5");
  roundtrip->add_option("--clauses", clauses_range, "clause range, e.g. 1..6");
  roundtrip->add_option("--count", count);
  roundtrip->add_option("--seed", seed);
  roundtrip->add_flag("--fixtures", fixtures, "always include the unsatisfiable fixture");
  roundtrip->add_option("--node-limit", node_limit);

  auto* dot = app.add_subcommand("dot", "Render an instance as Graphviz DOT");
  dot->add_option("--problem", problem);
  dot->add_option("--instance", instance)->required();
  dot->add_option("--labels", labels);

  auto* baseline = app.add_subcommand("baseline", "Run the unrestricted polynomial algorithm");
  baseline->add_option("--algo", algo, "mst | sp | maxflow")->required();
  baseline->add_option("--instance", instance)->required();
  baseline->add_option("--from", from);
  baseline->add_option("--to", to);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitYes : kExitMalformed;
  }

  try {
    if (*reduce) return Reduce(reduce_args);
    if (*verify) return Verify(problem, instance, certificate);
    if (*solve) return Solve(problem, instance, out, node_limit, exhaustive_patterns);
    if (*extract) return Extract(problem, labels, certificate, num_vars, check_cnf);
    if (*roundtrip) {
      return Roundtrip(vars_range, clauses_range, count, seed, fixtures, node_limit);
    }
    if (*dot) return Dot(problem, instance, labels);
    if (*baseline) return Baseline(algo, instance, from, to);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kSearchBudgetExceeded ? kExitBudget : kExitMalformed;
  }
  return kExitMalformed;
}

}  // namespace
}  // namespace npgadget

int main(int argc, char** argv) { return npgadget::Main(argc, argv); }
