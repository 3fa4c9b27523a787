// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit status 1 if
// any criterion fails.
//
//   npgadget_acceptance --cli <path to np-gadget> --workdir <scratch dir>

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "npgadget/baselines.h"
#include "npgadget/cnf.h"
#include "npgadget/error.h"
#include "npgadget/fixtures.h"
#include "npgadget/flow.h"
#include "npgadget/json_io.h"
#include "npgadget/roundtrip.h"
#include "npgadget/rst.h"
#include "npgadget/vvsp.h"
#include "oracles.h"

namespace npgadget {
namespace {

namespace fs = std::filesystem;
namespace fx = fixtures;
using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failures for one criterion.
class Criterion {
 public:
  Criterion(std::string id, std::string title) : id_(std::move(id)), title_(std::move(title)) {}

  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 10) failures_.push_back(what);
    failed_ |= !ok;
  }
  void Note(const std::string& text) { notes_.push_back(text); }

  bool Report() const {
    std::cout << (failed_ ? "[FAIL] " : "[PASS] ") << id_ << " " << title_ << " (" << checks_
              << " checks";
    for (const std::string& n : notes_) std::cout << "; " << n;
    std::cout << ")\n";
    for (const std::string& f : failures_) std::cout << "       - " << f << "\n";
    return !failed_;
  }

 private:
  std::string id_, title_;
  int checks_ = 0;
  bool failed_ = false;
  std::vector<std::string> failures_, notes_;
};

std::string Str(int64_t v) { return std::to_string(v); }

struct SweepItem {
  CnfInstance cnf;
  bool sat = false;
};

std::vector<SweepItem> Sweep() {
  RoundtripConfig config;
  config.min_vars = 3;
  config.max_vars = 5;
  config.min_clauses = 1;
  config.max_clauses = 6;
  config.count = 200;
  config.seed = 42;
  std::vector<SweepItem> items;
  for (CnfInstance& cnf : SweepFormulas(config)) {
    const bool sat = oracle::Satisfiable(cnf);
    items.push_back({std::move(cnf), sat});
  }
  return items;
}

// ---- AC1 --------------------------------------------------------------------

bool Ac1() {
  Criterion ac("AC1", "fixture B: all three YES, rst=17, flow=16, vvsp<=4420, extractions satisfy B");
  const CnfInstance b = fx::FixtureB();
  {
    const auto t0 = Clock::now();
    const RstReduction r = BuildRst(b);
    const auto s = SolveRst(r.instance);
    ac.Expect(s.found(), "rst answered NO");
    if (s.found()) {
      const VerifyReport v = VerifyRst(r.instance, *s.certificate);
      ac.Expect(v.accepted && v.value == 17 && v.value == 4 * 4 + 1, "rst cost " + Str(v.value));
      ac.Expect(Evaluate(b, ExtractRst(r.labels, *s.certificate, 4)), "rst extraction");
    }
    const double secs = SecondsSince(t0);
    ac.Expect(secs < 1.0, "rst took " + std::to_string(secs) + " s");
    ac.Note("rst " + std::to_string(secs * 1000).substr(0, 5) + " ms");
  }
  {
    const auto t0 = Clock::now();
    const FlowReduction r = BuildFlow(b);
    const auto s = SolveFlow(r.instance);
    ac.Expect(s.found(), "flow answered NO");
    if (s.found()) {
      const VerifyReport v = VerifyFlow(r.instance, *s.certificate);
      ac.Expect(v.accepted && v.value == 16 && v.value == 4 * 4, "flow value " + Str(v.value));
      ac.Expect(Evaluate(b, ExtractFlow(r.labels, *s.certificate, 4)), "flow extraction");
    }
    const double secs = SecondsSince(t0);
    ac.Expect(secs < 1.0, "flow took " + std::to_string(secs) + " s");
    ac.Note("flow " + std::to_string(secs * 1000).substr(0, 5) + " ms");
  }
  {
    const auto t0 = Clock::now();
    const VvspReduction r = BuildVvsp(b);
    ac.Expect(r.instance.big_weight == 33, "M = " + Str(r.instance.big_weight));
    ac.Expect(r.instance.budget_sq == 4420 && 4 * 33 * 33 + 64 == 4420,
              "budget_sq " + Str(r.instance.budget_sq));
    const auto s = SolveVvsp(r.instance);
    ac.Expect(s.found(), "vvsp answered NO");
    if (s.found()) {
      const VerifyReport v = VerifyVvsp(r.instance, *s.certificate);
      ac.Expect(v.accepted && v.value <= 4420, "vvsp cost2 " + Str(v.value));
      ac.Expect(Evaluate(b, ExtractVvsp(r.labels, *s.certificate, 4)), "vvsp extraction");
      ac.Note("vvsp cost2 " + Str(v.value));
    }
    const double secs = SecondsSince(t0);
    ac.Expect(secs < 1.0, "vvsp took " + std::to_string(secs) + " s");
    ac.Note("vvsp " + std::to_string(secs * 1000).substr(0, 5) + " ms");
  }
  return ac.Report();
}

// ---- AC2 --------------------------------------------------------------------

bool Ac2() {
  Criterion ac("AC2", "fixture U3: all three proven NO, vvsp gap 198662 > 198659, flow <= 8 patterns, rst <= 6561 branches");
  const auto t0 = Clock::now();
  const CnfInstance u3 = fx::FixtureU3();
  ac.Expect(!oracle::Satisfiable(u3), "U3 is satisfiable?");
  try {
    const auto rst = SolveRst(BuildRst(u3).instance);
    ac.Expect(!rst.found(), "rst answered YES");
    ac.Expect(rst.stats.nodes <= 6561, "rst branches " + std::to_string(rst.stats.nodes));
    ac.Note("rst branches " + std::to_string(rst.stats.nodes));

    const auto flow = SolveFlow(BuildFlow(u3).instance);
    ac.Expect(!flow.found(), "flow answered YES");
    ac.Expect(flow.stats.leaves <= 8, "flow patterns " + std::to_string(flow.stats.leaves));
    ac.Note("flow patterns " + std::to_string(flow.stats.leaves));

    const VvspInstance inst = BuildVvsp(u3).instance;
    ac.Expect(inst.big_weight == 257, "M = " + Str(inst.big_weight));
    ac.Expect(inst.budget_sq == 198659, "budget_sq " + Str(inst.budget_sq));
    const auto vvsp = SolveVvsp(inst);
    ac.Expect(!vvsp.found(), "vvsp answered YES");
    int64_t paths = 0;
    const int64_t best = oracle::MinPathCost2(inst, &paths);
    const int64_t lower = 3 * 257 * 257 + 2 * 257 + 1;
    ac.Expect(lower == 198662, "lower bound arithmetic");
    ac.Expect(best >= lower && best > inst.budget_sq, "exhaustive minimum " + Str(best));
    ac.Note("vvsp min cost2 " + Str(best) + " over " + Str(paths) + " paths");
  } catch (const Error& e) {
    ac.Expect(false, e.what());
  }
  const double secs = SecondsSince(t0);
  ac.Expect(secs < 60.0, "took " + std::to_string(secs) + " s");
  ac.Note(std::to_string(secs).substr(0, 5) + " s");
  return ac.Report();
}

// ---- AC3 --------------------------------------------------------------------

bool Ac3(const std::vector<SweepItem>& sweep) {
  Criterion ac("AC3", "round-trip sweep: 200 instances, V 3..5, C 1..6, seed 42, 100% agreement");
  const auto t0 = Clock::now();
  int sat = 0;
  for (size_t i = 0; i < sweep.size(); ++i) {
    const SweepItem& item = sweep[i];
    sat += item.sat;
    const RoundtripRow row = CheckFormula("random#" + std::to_string(i), item.cnf, {});
    const std::string tag = row.name + " " + WriteDimacs(item.cnf);
    ac.Expect(row.oracle_sat == item.sat, tag + ": brute force disagrees with enumeration");
    const Verdict expected = item.sat ? Verdict::kYes : Verdict::kNo;
    for (const auto& [name, r] : {std::pair{"rst", &row.rst}, {"flow", &row.flow}, {"vvsp", &row.vvsp}}) {
      ac.Expect(r->verdict == expected, tag + ": " + name + " verdict " + std::string(VerdictName(r->verdict)));
      ac.Expect(r->extraction_ok, tag + ": " + name + " extraction " + r->note);
    }
  }
  const double secs = SecondsSince(t0);
  ac.Expect(sweep.size() == 200, "sweep size");
  ac.Expect(secs < 300.0, "took " + std::to_string(secs) + " s");
  ac.Note(std::to_string(sat) + " satisfiable, " + std::to_string(sweep.size() - sat) +
          " unsatisfiable");
  ac.Note(std::to_string(secs).substr(0, 5) + " s");
  return ac.Report();
}

// ---- AC4 --------------------------------------------------------------------

bool Ac4(const std::vector<SweepItem>& sweep) {
  Criterion ac("AC4", "size formulas on every instance of AC1-AC3");
  std::vector<CnfInstance> all{fx::FixtureB(), fx::FixtureU3()};
  for (const SweepItem& item : sweep) all.push_back(item.cnf);
  for (const CnfInstance& cnf : all) {
    const int64_t v = cnf.num_vars(), c = cnf.num_clauses();
    const std::string tag = "V=" + Str(v) + " C=" + Str(c) + ": ";
    const RstReduction rst = BuildRst(cnf);
    std::map<Literal, int64_t> occ;
    for (const Clause& clause : cnf.clauses())
      for (const Literal& l : clause) ++occ[l];
    int64_t pairs = 0;
    for (int var = 1; var <= v; ++var) pairs += occ[Literal{var, false}] * occ[Literal{var, true}];
    ac.Expect(rst.instance.graph.num_vertices == 4 * c + 2, tag + "rst |V|");
    ac.Expect(rst.instance.graph.num_edges() == 7 * c + 1, tag + "rst |E|");
    ac.Expect(static_cast<int64_t>(rst.instance.forbidden.size()) == pairs, tag + "rst |F|");
    ac.Expect(rst.instance.budget == 4 * c + 2, tag + "rst k");

    const FlowReduction flow = BuildFlow(cnf);
    ac.Expect(flow.instance.net.num_vertices == 3 + 3 * v + 4 * c, tag + "flow |V|");
    ac.Expect(flow.instance.net.num_arcs() == 5 * v + 7 * c + 1, tag + "flow |E|");
    ac.Expect(static_cast<int64_t>(flow.instance.all_or_nothing.size()) == 2 * v, tag + "flow |A|");
    ac.Expect(flow.instance.target == v * c, tag + "flow target");

    const VvspReduction vvsp = BuildVvsp(cnf);
    const int64_t m = vvsp.instance.big_weight;
    ac.Expect(vvsp.instance.graph.num_vertices == 4 * v + 5 * c, tag + "vvsp |V|");
    ac.Expect(vvsp.instance.graph.num_edges() == 5 * v + 7 * c - 1, tag + "vvsp |E|");
    ac.Expect(vvsp.instance.graph.dim == 2 * v, tag + "vvsp dim");
    ac.Expect(vvsp.instance.budget_sq == v * m * m + c * c * c, tag + "vvsp budget");
  }
  ac.Note(std::to_string(all.size()) + " formulas");
  return ac.Report();
}

// ---- AC5 --------------------------------------------------------------------

struct MutationTally {
  int mutants = 0;
  int invalid = 0;
  int rejected_correctly = 0;
  int valid_accepted = 0;
};

void Judge(Criterion& ac, MutationTally& tally, const VerifyReport& got, RejectReason expected,
           const std::string& tag) {
  ++tally.mutants;
  if (expected == RejectReason::kNone) {
    ac.Expect(got.accepted, tag + ": still-valid mutant rejected as " +
                                std::string(ReasonName(got.reason)));
    tally.valid_accepted += got.accepted;
    return;
  }
  ++tally.invalid;
  const bool ok = !got.accepted && got.reason == expected;
  tally.rejected_correctly += ok;
  ac.Expect(ok, tag + ": expected " + std::string(ReasonName(expected)) + ", got " +
                    (got.accepted ? "Accept" : std::string(ReasonName(got.reason))));
}

void MutateTree(Criterion& ac, MutationTally& tally, const RstInstance& inst,
                const TreeCertificate& cert, const std::string& tag) {
  std::set<EdgeId> in(cert.edges.begin(), cert.edges.end());
  for (size_t i = 0; i < cert.edges.size(); ++i) {
    TreeCertificate removed = cert;
    removed.edges.erase(removed.edges.begin() + i);
    Judge(ac, tally, VerifyRst(inst, removed), oracle::RstReason(inst, removed.edges),
          tag + " remove " + Str(cert.edges[i].value()));
    for (const UEdge& e : inst.graph.edges) {
      if (in.count(e.id)) continue;
      TreeCertificate replaced = cert;
      replaced.edges[i] = e.id;
      Judge(ac, tally, VerifyRst(inst, replaced), oracle::RstReason(inst, replaced.edges),
            tag + " replace " + Str(cert.edges[i].value()) + "->" + Str(e.id.value()));
    }
  }
}

void MutateFlow(Criterion& ac, MutationTally& tally, const FlowInstance& inst,
                const FlowCertificate& cert, const std::string& tag) {
  for (const Arc& a : inst.net.arcs) {
    for (int delta : {-1, +1}) {
      FlowCertificate m = cert;
      m.flow[a.id] = cert.Get(a.id) + delta;
      Judge(ac, tally, VerifyFlow(inst, m), oracle::FlowReason(inst, m.flow),
            tag + " arc " + Str(a.id.value()) + (delta > 0 ? " +1" : " -1"));
    }
  }
}

void MutatePath(Criterion& ac, MutationTally& tally, const VvspInstance& inst,
                const PathCertificate& cert, const std::string& tag) {
  const std::vector<int> p = oracle::Ints(cert.vertices);
  auto judge = [&](const std::vector<int>& q, const std::string& what) {
    Judge(ac, tally, VerifyVvsp(inst, PathCertificate{oracle::Vertices(q)}),
          oracle::VvspReason(inst, q), tag + " " + what);
  };
  judge(std::vector<int>(p.begin(), p.end() - 1), "truncate tail");
  judge(std::vector<int>(p.begin() + 1, p.end()), "truncate head");
  std::vector<std::vector<int>> adj(inst.graph.num_vertices);
  for (const VEdge& e : inst.graph.edges) {
    adj[e.u.value()].push_back(e.v.value());
    adj[e.v.value()].push_back(e.u.value());
  }
  for (size_t i = 0; i < p.size(); ++i) {
    // Out-and-back detour through every neighbour.
    for (int w : adj[p[i]]) {
      std::vector<int> q(p.begin(), p.begin() + i + 1);
      q.push_back(w);
      q.push_back(p[i]);
      q.insert(q.end(), p.begin() + i + 1, p.end());
      judge(q, "detour at " + std::to_string(i) + " via " + std::to_string(w));
    }
    // Swap one interior vertex for another common neighbour.
    if (i == 0 || i + 1 == p.size()) continue;
    for (int w : adj[p[i - 1]]) {
      if (w == p[i] || oracle::FindEdge(inst.graph, w, p[i + 1]) < 0) continue;
      std::vector<int> q = p;
      q[i] = w;
      judge(q, "swap " + std::to_string(p[i]) + "->" + std::to_string(w));
    }
  }
}

bool Ac5(const std::vector<SweepItem>& sweep) {
  Criterion ac("AC5", "verifier mutation suite over 50 certificates, every invalid mutant rejected with the right reason");
  MutationTally tally;
  int trees = 0, flows = 0, paths = 0;
  for (size_t i = 0; i < sweep.size() && trees + flows + paths < 50; ++i) {
    if (!sweep[i].sat) continue;
    const CnfInstance& cnf = sweep[i].cnf;
    const std::string tag = "sweep#" + std::to_string(i);
    const Assignment model = *BruteForceSat(cnf).witness;
    // Alternate solver output and constructive certificates.
    const bool constructive = (i % 2) == 1;
    if (trees < 17) {
      const RstInstance inst = BuildRst(cnf).instance;
      const auto s = SolveRst(inst);
      MutateTree(ac, tally, inst, *s.certificate, tag + " tree");
      ++trees;
    }
    if (flows < 17) {
      const FlowInstance inst = BuildFlow(cnf).instance;
      const FlowCertificate c = constructive ? FlowFromAssignment(cnf, model) : *SolveFlow(inst).certificate;
      ac.Expect(VerifyFlow(inst, c).accepted, tag + " base flow certificate");
      MutateFlow(ac, tally, inst, c, tag + " flow");
      ++flows;
    }
    if (paths < 16) {
      const VvspInstance inst = BuildVvsp(cnf).instance;
      const PathCertificate c = constructive ? PathFromAssignment(cnf, model) : *SolveVvsp(inst).certificate;
      ac.Expect(VerifyVvsp(inst, c).accepted, tag + " base path certificate");
      MutatePath(ac, tally, inst, c, tag + " path");
      ++paths;
    }
  }
  ac.Expect(trees + flows + paths == 50, "only " + std::to_string(trees + flows + paths) + " certificates");
  ac.Expect(tally.invalid > 0 && tally.rejected_correctly == tally.invalid, "rejection rate");
  ac.Note(std::to_string(trees) + " trees, " + std::to_string(flows) + " flows, " +
          std::to_string(paths) + " paths");
  ac.Note(std::to_string(tally.rejected_correctly) + "/" + std::to_string(tally.invalid) +
          " invalid mutants rejected correctly");
  ac.Note(std::to_string(tally.valid_accepted) + "/" +
          std::to_string(tally.mutants - tally.invalid) + " still-valid mutants accepted");
  return ac.Report();
}

// ---- AC6 --------------------------------------------------------------------

bool Ac6() {
  Criterion ac("AC6", "baselines ignoring the restriction: prim 17/33, edmonds-karp 16/24");
  const int64_t mst_b = PrimMst(BuildRst(fx::FixtureB()).instance.graph).cost;
  const int64_t mst_u3 = PrimMst(BuildRst(fx::FixtureU3()).instance.graph).cost;
  const int64_t flow_b = EdmondsKarp(BuildFlow(fx::FixtureB()).instance.net).value;
  const int64_t flow_u3 = EdmondsKarp(BuildFlow(fx::FixtureU3()).instance.net).value;
  ac.Expect(mst_b == 17, "prim rst(B) = " + Str(mst_b));
  ac.Expect(mst_u3 == 33, "prim rst(U3) = " + Str(mst_u3));
  ac.Expect(flow_b == 16, "edmonds-karp flow(B) = " + Str(flow_b));
  ac.Expect(flow_u3 == 24, "edmonds-karp flow(U3) = " + Str(flow_u3));
  ac.Note("prim " + Str(mst_b) + "/" + Str(mst_u3) + ", max flow " + Str(flow_b) + "/" + Str(flow_u3));
  return ac.Report();
}

// ---- AC7 --------------------------------------------------------------------

bool Ac7(const std::vector<SweepItem>& sweep) {
  Criterion ac("AC7", "constructive certificates accepted for every satisfiable sweep instance");
  int models = 0;
  for (size_t i = 0; i < sweep.size(); ++i) {
    if (!sweep[i].sat) continue;
    const CnfInstance& cnf = sweep[i].cnf;
    const FlowInstance flow = BuildFlow(cnf).instance;
    const VvspInstance vvsp = BuildVvsp(cnf).instance;
    for (uint32_t bits : oracle::AllModels(cnf)) {
      const Assignment a = oracle::FromBits(cnf.num_vars(), bits);
      const std::string tag = "sweep#" + std::to_string(i) + " model " + std::to_string(bits);
      const VerifyReport f = VerifyFlow(flow, FlowFromAssignment(cnf, a));
      ac.Expect(f.accepted && f.value >= flow.target, tag + ": flow " + f.detail);
      const VerifyReport p = VerifyVvsp(vvsp, PathFromAssignment(cnf, a));
      ac.Expect(p.accepted && p.value <= vvsp.budget_sq, tag + ": path " + p.detail);
      ++models;
    }
  }
  ac.Note(std::to_string(models) + " models");
  return ac.Report();
}

// ---- AC8 --------------------------------------------------------------------

class CliRunner {
 public:
  CliRunner(std::string binary, fs::path dir) : binary_(std::move(binary)), dir_(std::move(dir)) {
    fs::create_directories(dir_);
  }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }
  int Run(const std::string& args) const {
    const std::string cmd =
        "'" + binary_ + "' " + args + " > '" + Path("stdout.txt") + "' 2> '" + Path("stderr.txt") + "'";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  std::string Read(const std::string& name) const {
    std::ifstream in(Path(name));
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }
  void Write(const std::string& name, const std::string& text) const {
    std::ofstream(Path(name)) << text;
  }

 private:
  std::string binary_;
  fs::path dir_;
};

std::string AssignmentText(const Assignment& a) {
  std::string out;
  for (int v = 1; v <= a.num_vars(); ++v) {
    out += "x" + std::to_string(v) + "=" + (a.value(v) ? "true" : "false") + "\n";
  }
  return out;
}

struct InMemory {
  std::string instance_json;
  std::optional<std::string> cert_json;
  std::optional<Assignment> assignment;
};

InMemory Pipeline(ProblemKind kind, const CnfInstance& cnf) {
  InMemory m;
  const int v = cnf.num_vars();
  switch (kind) {
    case ProblemKind::kRst: {
      const RstReduction r = BuildRst(cnf);
      m.instance_json = ToJson(r.instance);
      if (auto s = SolveRst(r.instance); s.certificate) {
        m.cert_json = ToJson(*s.certificate);
        m.assignment = ExtractRst(r.labels, *s.certificate, v);
      }
      break;
    }
    case ProblemKind::kFlow: {
      const FlowReduction r = BuildFlow(cnf);
      m.instance_json = ToJson(r.instance);
      if (auto s = SolveFlow(r.instance); s.certificate) {
        m.cert_json = ToJson(*s.certificate);
        m.assignment = ExtractFlow(r.labels, *s.certificate, v);
      }
      break;
    }
    case ProblemKind::kVvsp: {
      const VvspReduction r = BuildVvsp(cnf);
      m.instance_json = ToJson(r.instance);
      if (auto s = SolveVvsp(r.instance); s.certificate) {
        m.cert_json = ToJson(*s.certificate);
        m.assignment = ExtractVvsp(r.labels, *s.certificate, v);
      }
      break;
    }
  }
  return m;
}

bool Ac8(const std::string& cli, const fs::path& workdir) {
  Criterion ac("AC8", "CLI file pipeline reduce->solve->verify->extract matches the in-memory pipeline on B and U3");
  if (cli.empty()) {
    ac.Expect(false, "no --cli binary given");
    return ac.Report();
  }
  fs::remove_all(workdir);
  const CliRunner run(cli, workdir);
  for (const auto& [name, cnf] : {std::pair{"B", fx::FixtureB()}, {"U3", fx::FixtureU3()}}) {
    run.Write(std::string(name) + ".cnf", WriteDimacs(cnf));
    for (ProblemKind kind : {ProblemKind::kRst, ProblemKind::kFlow, ProblemKind::kVvsp}) {
      const std::string p(ProblemName(kind));
      const std::string tag = p + "(" + name + ")";
      const std::string inst = p + name + ".json", labels = p + name + ".labels.json",
                        cert = p + name + ".cert.json";
      const InMemory mem = Pipeline(kind, cnf);
      ac.Expect(run.Run("reduce --problem " + p + " --cnf " + run.Path(std::string(name) + ".cnf") +
                        " --out " + run.Path(inst) + " --labels " + run.Path(labels)) == 0,
                tag + ": reduce exit");
      std::string written = run.Read(inst);
      if (!written.empty() && written.back() == '\n') written.pop_back();
      ac.Expect(written == mem.instance_json, tag + ": instance file differs from in-memory JSON");

      const int solve = run.Run("solve --instance " + run.Path(inst) + " --out " + run.Path(cert));
      ac.Expect(solve == (mem.cert_json ? 0 : 1), tag + ": solve exit " + std::to_string(solve));
      if (!mem.cert_json) continue;
      std::string cert_text = run.Read(cert);
      if (!cert_text.empty() && cert_text.back() == '\n') cert_text.pop_back();
      ac.Expect(cert_text == *mem.cert_json, tag + ": certificate differs");

      ac.Expect(run.Run("verify --instance " + run.Path(inst) + " --certificate " + run.Path(cert)) == 0,
                tag + ": verify exit");
      const int extract = run.Run("extract --vars " + std::to_string(cnf.num_vars()) + " --labels " +
                                  run.Path(labels) + " --certificate " + run.Path(cert) +
                                  " --check-cnf " + run.Path(std::string(name) + ".cnf"));
      ac.Expect(extract == 0, tag + ": extract exit " + std::to_string(extract));
      const std::string printed = run.Read("stdout.txt");
      ac.Expect(printed.rfind(AssignmentText(*mem.assignment), 0) == 0,
                tag + ": extracted assignment differs");
    }
  }
  return ac.Report();
}

}  // namespace
}  // namespace npgadget

int main(int argc, char** argv) {
  std::string cli;
  std::filesystem::path workdir = std::filesystem::temp_directory_path() / "npgadget_acceptance";
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--cli") {
      cli = argv[i + 1];
    } else if (flag == "--workdir") {
      workdir = argv[i + 1];
    } else {
      std::cerr << "unknown flag " << flag << "\n";
      return 2;
    }
  }
  using namespace npgadget;
  const auto sweep = Sweep();
  bool ok = true;
  ok &= Ac1();
  ok &= Ac2();
  ok &= Ac3(sweep);
  ok &= Ac4(sweep);
  ok &= Ac5(sweep);
  ok &= Ac6();
  ok &= Ac7(sweep);
  ok &= Ac8(cli, workdir);
  std::cout << (ok ? "all acceptance criteria pass\n" : "some acceptance criteria FAIL\n");
  return ok ? 0 : 1;
}
