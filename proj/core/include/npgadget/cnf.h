#ifndef NPGADGET_CNF_H_
#define NPGADGET_CNF_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace npgadget {

// A boolean variable (1-based, as in DIMACS) or its negation.
struct Literal {
  int var = 0;
  bool negated = false;

  Literal Negation() const { return {var, !negated}; }
  // DIMACS encoding: +var or -var.
  int ToDimacs() const { return negated ? -var : var; }
  static Literal FromDimacs(int value);

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

std::string ToString(Literal literal);  // "x3" or "~x3"

using Clause = std::array<Literal, 3>;

// Truth values for variables 1..V.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(int num_vars) : values_(num_vars, false) {}
  explicit Assignment(std::vector<bool> values) : values_(std::move(values)) {}

  int num_vars() const { return static_cast<int>(values_.size()); }
  bool value(int var) const { return values_.at(var - 1); }
  void set(int var, bool v) { values_.at(var - 1) = v; }
  bool Satisfies(Literal literal) const {
    return value(literal.var) != literal.negated;
  }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<bool> values_;
};

// A 3-CNF formula: V >= 1 variables, C >= 1 clauses, each clause holding
// exactly three distinct literals. Complementary literals within one clause
// are allowed; a repeated identical literal is not.
class CnfInstance {
 public:
  // Throws Error on any invariant violation.
  CnfInstance(int num_vars, std::vector<Clause> clauses);

  int num_vars() const { return num_vars_; }
  int num_clauses() const { return static_cast<int>(clauses_.size()); }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const Clause& clause(int index) const { return clauses_.at(index); }

  friend bool operator==(const CnfInstance&, const CnfInstance&) = default;

 private:
  int num_vars_;
  std::vector<Clause> clauses_;
};

CnfInstance ParseDimacs(std::string_view text);
// Canonical writer: header line followed by one clause per line.
std::string WriteDimacs(const CnfInstance& cnf);

bool Evaluate(const CnfInstance& cnf, const Assignment& assignment);

inline constexpr int kDefaultExhaustiveLimit = 24;

struct SatResult {
  // Set iff the formula is satisfiable.
  std::optional<Assignment> witness;

  bool satisfiable() const { return witness.has_value(); }
};

// Enumerates assignments in lexicographic order (x1 most significant,
// false < true) and returns the first satisfying one.
SatResult BruteForceSat(const CnfInstance& cnf,
                        int exhaustive_limit = kDefaultExhaustiveLimit);

// Each clause draws three distinct variables uniformly and independent
// uniform signs. Deterministic for a fixed seed.
CnfInstance RandomCnf(int num_vars, int num_clauses, uint64_t seed);

// FNV-1a over the canonical DIMACS text.
uint64_t Fingerprint(const CnfInstance& cnf);

}  // namespace npgadget

#endif  // NPGADGET_CNF_H_
