#ifndef NPGADGET_ROUNDTRIP_H_
#define NPGADGET_ROUNDTRIP_H_

// Cross-checks every reduction against brute-force satisfiability: a
// formula is satisfiable iff each built instance has a certificate, and
// each certificate found maps back to a satisfying assignment.

#include <cstdint>
#include <string>
#include <vector>

#include "npgadget/certificate.h"
#include "npgadget/cnf.h"

namespace npgadget {

enum class Verdict { kYes, kNo, kBudgetExceeded };

std::string_view VerdictName(Verdict verdict);

struct ReductionOutcome {
  Verdict verdict = Verdict::kNo;
  // For kYes: the certificate verified and its extraction satisfies the
  // formula. Vacuously true otherwise.
  bool extraction_ok = true;
  SearchStats stats;
  double millis = 0;  // reported, never part of pass/fail
  std::string note;
};

struct RoundtripRow {
  std::string name;
  int num_vars = 0;
  int num_clauses = 0;
  uint64_t fingerprint = 0;
  std::string dimacs;
  bool oracle_sat = false;
  ReductionOutcome rst;
  ReductionOutcome flow;
  ReductionOutcome vvsp;

  bool Pass() const;
};

// Runs all three reductions on one formula.
RoundtripRow CheckFormula(const std::string& name, const CnfInstance& cnf,
                          const SearchOptions& options = {});

struct RoundtripConfig {
  int min_vars = 3;
  int max_vars = 4;
  int min_clauses = 1;
  int max_clauses = 4;
  int count = 50;
  uint64_t seed = 42;
  // Include U3 even when the clause range excludes 8.
  bool force_fixtures = false;
  SearchOptions search;
};

// The seeded random formulas of a sweep, in row order.
std::vector<CnfInstance> SweepFormulas(const RoundtripConfig& config);

// Random rows first (in generation order), then fixture B, then U3.
std::vector<RoundtripRow> RunRoundtrip(const RoundtripConfig& config);

std::string FormatReport(const std::vector<RoundtripRow>& rows);

}  // namespace npgadget

#endif  // NPGADGET_ROUNDTRIP_H_
