#include "npgadget/roundtrip.h"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "npgadget/error.h"
#include "npgadget/fixtures.h"
#include "npgadget/flow.h"
#include "npgadget/rst.h"
#include "npgadget/vvsp.h"

namespace npgadget {

namespace {

template <typename Certificate>
ReductionOutcome Run(const CnfInstance& cnf,
                     const std::function<SolveResult<Certificate>()>& solve,
                     const std::function<bool(const Certificate&)>& verify,
                     const std::function<Assignment(const Certificate&)>& extract) {
  ReductionOutcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    SolveResult<Certificate> result = solve();
    out.stats = result.stats;
    if (result.certificate) {
      out.verdict = Verdict::kYes;
      if (!verify(*result.certificate)) {
        out.extraction_ok = false;
        out.note = "certificate rejected by verifier";
      } else {
        try {
          out.extraction_ok = Evaluate(cnf, extract(*result.certificate));
          if (!out.extraction_ok) out.note = "extracted assignment falsifies formula";
        } catch (const Error& e) {
          out.extraction_ok = false;
          out.note = e.what();
        }
      }
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kSearchBudgetExceeded) throw;
    out.verdict = Verdict::kBudgetExceeded;
    out.note = e.what();
  }
  out.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return out;
}

}  // namespace

std::string_view VerdictName(Verdict verdict) {
  switch (verdict) {
    case Verdict::kYes: return "yes";
    case Verdict::kNo: return "no";
    case Verdict::kBudgetExceeded: return "budget";
  }
  return "?";
}

bool RoundtripRow::Pass() const {
  const Verdict expected = oracle_sat ? Verdict::kYes : Verdict::kNo;
  for (const ReductionOutcome* r : {&rst, &flow, &vvsp}) {
    if (r->verdict != expected || !r->extraction_ok) return false;
  }
  return true;
}

RoundtripRow CheckFormula(const std::string& name, const CnfInstance& cnf,
                          const SearchOptions& options) {
  RoundtripRow row;
  row.name = name;
  row.num_vars = cnf.num_vars();
  row.num_clauses = cnf.num_clauses();
  row.fingerprint = Fingerprint(cnf);
  row.dimacs = WriteDimacs(cnf);
  row.oracle_sat = BruteForceSat(cnf).satisfiable();
  const int v = cnf.num_vars();

  const RstReduction rst = BuildRst(cnf);
  RstSolveOptions rst_options;
  rst_options.node_limit = options.node_limit;
  row.rst = Run<TreeCertificate>(
      cnf, [&] { return SolveRst(rst.instance, rst_options); },
      [&](const TreeCertificate& c) { return VerifyRst(rst.instance, c).accepted; },
      [&](const TreeCertificate& c) { return ExtractRst(rst.labels, c, v); });

  const FlowReduction flow = BuildFlow(cnf);
  FlowSolveOptions flow_options;
  flow_options.node_limit = options.node_limit;
  row.flow = Run<FlowCertificate>(
      cnf, [&] { return SolveFlow(flow.instance, flow_options); },
      [&](const FlowCertificate& c) { return VerifyFlow(flow.instance, c).accepted; },
      [&](const FlowCertificate& c) { return ExtractFlow(flow.labels, c, v); });

  const VvspReduction vvsp = BuildVvsp(cnf);
  row.vvsp = Run<PathCertificate>(
      cnf, [&] { return SolveVvsp(vvsp.instance, options); },
      [&](const PathCertificate& c) { return VerifyVvsp(vvsp.instance, c).accepted; },
      [&](const PathCertificate& c) { return ExtractVvsp(vvsp.labels, c, v); });
  return row;
}

std::vector<CnfInstance> SweepFormulas(const RoundtripConfig& config) {
  if (config.min_vars > config.max_vars || config.min_clauses > config.max_clauses ||
      config.min_clauses < 1 || config.count < 0) {
    throw Error(ErrorCode::kInvalidArgument, "empty variable or clause range");
  }
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<int> pick_vars(config.min_vars, config.max_vars);
  std::uniform_int_distribution<int> pick_clauses(config.min_clauses, config.max_clauses);
  std::vector<CnfInstance> out;
  out.reserve(config.count);
  for (int k = 0; k < config.count; ++k) {
    const int v = pick_vars(rng);
    const int c = pick_clauses(rng);
    out.push_back(RandomCnf(v, c, rng()));
  }
  return out;
}

std::vector<RoundtripRow> RunRoundtrip(const RoundtripConfig& config) {
  std::vector<RoundtripRow> rows;
  const std::vector<CnfInstance> formulas = SweepFormulas(config);
  for (size_t k = 0; k < formulas.size(); ++k) {
    rows.push_back(CheckFormula("random#" + std::to_string(k), formulas[k], config.search));
  }
  rows.push_back(CheckFormula("fixture-B", fixtures::FixtureB(), config.search));
  const bool covers_u3 = config.min_clauses <= 8 && 8 <= config.max_clauses;
  if (covers_u3 || config.force_fixtures) {
    rows.push_back(CheckFormula("fixture-U3", fixtures::FixtureU3(), config.search));
  }
  return rows;
}

std::string FormatReport(const std::vector<RoundtripRow>& rows) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-12s %3s %3s %-16s %-6s %-7s %-7s %-7s %9s %s\n",
                "instance", "V", "C", "fingerprint", "oracle", "rst", "flow", "vvsp",
                "ms", "result");
  out << line;
  int passed = 0;
  for (const RoundtripRow& row : rows) {
    auto cell = [](const ReductionOutcome& r) {
      std::string s(VerdictName(r.verdict));
      if (!r.extraction_ok) s += "!";
      return s;
    };
    const double ms = row.rst.millis + row.flow.millis + row.vvsp.millis;
    std::snprintf(line, sizeof line, "%-12s %3d %3d %016llx %-6s %-7s %-7s %-7s %9.2f %s\n",
                  row.name.c_str(), row.num_vars, row.num_clauses,
                  static_cast<unsigned long long>(row.fingerprint),
                  row.oracle_sat ? "sat" : "unsat", cell(row.rst).c_str(),
                  cell(row.flow).c_str(), cell(row.vvsp).c_str(), ms,
                  row.Pass() ? "PASS" : "FAIL");
    out << line;
    if (row.Pass()) ++passed;
  }
  out << passed << "/" << rows.size() << " rows pass\n";
  return out.str();
}

}  // namespace npgadget
