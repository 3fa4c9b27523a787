#include "npgadget/cnf.h"

#include <charconv>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>

#include "npgadget/error.h"

namespace npgadget {

Literal Literal::FromDimacs(int value) {
  return value < 0 ? Literal{-value, true} : Literal{value, false};
}

std::string ToString(Literal literal) {
  return (literal.negated ? "~x" : "x") + std::to_string(literal.var);
}

CnfInstance::CnfInstance(int num_vars, std::vector<Clause> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
  if (num_vars_ < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one variable");
  }
  if (clauses_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one clause");
  }
  for (size_t c = 0; c < clauses_.size(); ++c) {
    const Clause& clause = clauses_[c];
    for (const Literal& lit : clause) {
      if (lit.var < 1 || lit.var > num_vars_) {
        throw Error(ErrorCode::kVarOutOfRange,
                    "clause " + std::to_string(c) + " uses variable " +
                        std::to_string(lit.var) + " outside 1.." +
                        std::to_string(num_vars_));
      }
    }
    if (clause[0] == clause[1] || clause[0] == clause[2] ||
        clause[1] == clause[2]) {
      throw Error(ErrorCode::kDuplicateLiteral,
                  "clause " + std::to_string(c) + " repeats a literal");
    }
  }
}

namespace {

bool ParseInt(std::string_view token, int& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

CnfInstance ParseDimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int num_vars = 0;
  int num_clauses = 0;
  std::vector<Clause> clauses;
  std::vector<Literal> pending;

  auto close_clause = [&]() {
    const std::string where = "line " + std::to_string(line_no);
    if (pending.size() != 3) {
      throw Error(ErrorCode::kClauseArity,
                  where + ": clause has " + std::to_string(pending.size()) +
                      " literals, expected 3");
    }
    Clause clause{pending[0], pending[1], pending[2]};
    if (clause[0] == clause[1] || clause[0] == clause[2] ||
        clause[1] == clause[2]) {
      throw Error(ErrorCode::kDuplicateLiteral,
                  where + ": clause repeats a literal");
    }
    clauses.push_back(clause);
    pending.clear();
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string token;
    if (!(tokens >> token)) continue;
    if (token[0] == 'c') continue;
    if (token[0] == '%') break;  // SATLIB end-of-data marker
    if (token == "p") {
      std::string format, extra;
      if (have_header || !(tokens >> format) || format != "cnf" ||
          !(tokens >> num_vars) || !(tokens >> num_clauses) ||
          (tokens >> extra) || num_vars < 1 || num_clauses < 1) {
        throw Error(ErrorCode::kMalformedHeader,
                    "line " + std::to_string(line_no) +
                        ": expected a single 'p cnf V C' header with V, C >= 1");
      }
      have_header = true;
      continue;
    }
    if (!have_header) {
      throw Error(ErrorCode::kMalformedHeader,
                  "line " + std::to_string(line_no) +
                      ": clause data before 'p cnf' header");
    }
    do {
      int value = 0;
      if (!ParseInt(token, value)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "line " + std::to_string(line_no) + ": bad token '" +
                        token + "'");
      }
      if (value == 0) {
        close_clause();
        continue;
      }
      Literal lit = Literal::FromDimacs(value);
      if (lit.var > num_vars) {
        throw Error(ErrorCode::kVarOutOfRange,
                    "line " + std::to_string(line_no) + ": variable " +
                        std::to_string(lit.var) + " exceeds declared " +
                        std::to_string(num_vars));
      }
      pending.push_back(lit);
    } while (tokens >> token);
  }

  if (!have_header) {
    throw Error(ErrorCode::kMalformedHeader, "missing 'p cnf V C' header");
  }
  if (!pending.empty()) {
    throw Error(ErrorCode::kClauseArity, "last clause is not terminated by 0");
  }
  if (static_cast<int>(clauses.size()) != num_clauses) {
    throw Error(ErrorCode::kMalformedHeader,
                "header declares " + std::to_string(num_clauses) +
                    " clauses, found " + std::to_string(clauses.size()));
  }
  return CnfInstance(num_vars, std::move(clauses));
}

std::string WriteDimacs(const CnfInstance& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.num_vars() << ' ' << cnf.num_clauses() << '\n';
  for (const Clause& clause : cnf.clauses()) {
    for (const Literal& lit : clause) out << lit.ToDimacs() << ' ';
    out << "0\n";
  }
  return out.str();
}

bool Evaluate(const CnfInstance& cnf, const Assignment& assignment) {
  if (assignment.num_vars() != cnf.num_vars()) {
    throw Error(ErrorCode::kLengthMismatch,
                "assignment has " + std::to_string(assignment.num_vars()) +
                    " values, formula has " + std::to_string(cnf.num_vars()) +
                    " variables");
  }
  for (const Clause& clause : cnf.clauses()) {
    if (!assignment.Satisfies(clause[0]) && !assignment.Satisfies(clause[1]) &&
        !assignment.Satisfies(clause[2])) {
      return false;
    }
  }
  return true;
}

SatResult BruteForceSat(const CnfInstance& cnf, int exhaustive_limit) {
  const int n = cnf.num_vars();
  if (n > exhaustive_limit) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(n) + " variables exceeds exhaustive limit " +
                    std::to_string(exhaustive_limit));
  }
  // Bit (n - var) of `bits` holds x_var, so counting upward walks the
  // assignments in lexicographic order with x1 most significant.
  const uint64_t total = uint64_t{1} << n;
  Assignment a(n);
  for (uint64_t bits = 0; bits < total; ++bits) {
    for (int var = 1; var <= n; ++var) a.set(var, (bits >> (n - var)) & 1);
    if (Evaluate(cnf, a)) return SatResult{a};
  }
  return SatResult{};
}

CnfInstance RandomCnf(int num_vars, int num_clauses, uint64_t seed) {
  if (num_vars < 3) {
    throw Error(ErrorCode::kTooFewVars,
                "need at least 3 variables for distinct-variable clauses, got " +
                    std::to_string(num_vars));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_var(1, num_vars);
  std::bernoulli_distribution pick_sign(0.5);
  std::vector<Clause> clauses;
  clauses.reserve(num_clauses);
  for (int c = 0; c < num_clauses; ++c) {
    Clause clause;
    for (int j = 0; j < 3; ++j) {
      int var;
      do {
        var = pick_var(rng);
      } while ((j > 0 && clause[0].var == var) || (j > 1 && clause[1].var == var));
      clause[j] = Literal{var, pick_sign(rng)};
    }
    clauses.push_back(clause);
  }
  return CnfInstance(num_vars, std::move(clauses));
}

uint64_t Fingerprint(const CnfInstance& cnf) {
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (char ch : WriteDimacs(cnf)) {
    hash ^= static_cast<unsigned char>(ch);
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace npgadget
