#include "npgadget/fixtures.h"

#include <vector>

namespace npgadget::fixtures {

namespace {

Clause MakeClause(int a, int b, int c) {
  return {Literal::FromDimacs(a), Literal::FromDimacs(b), Literal::FromDimacs(c)};
}

}  // namespace

CnfInstance FixtureB() {
  return CnfInstance(4, {MakeClause(1, 2, 3), MakeClause(-1, 3, 4),
                         MakeClause(-1, -2, 4), MakeClause(2, -3, -4)});
}

Assignment FixtureBWitness() { return Assignment(std::vector<bool>{false, true, true, false}); }

std::array<int, 4> FixtureBTreePositions() { return {1, 0, 0, 2}; }

CnfInstance FixtureU3() {
  std::vector<Clause> clauses;
  for (int signs = 0; signs < 8; ++signs) {
    clauses.push_back(MakeClause(signs & 4 ? -1 : 1, signs & 2 ? -2 : 2,
                                 signs & 1 ? -3 : 3));
  }
  return CnfInstance(3, std::move(clauses));
}

CnfInstance FixtureSingleClause() { return CnfInstance(3, {MakeClause(1, 2, 3)}); }

CnfInstance FixtureE() {
  return CnfInstance(3, {MakeClause(1, 2, -3), MakeClause(-1, -2, -3),
                         MakeClause(1, -2, 3)});
}

}  // namespace npgadget::fixtures
