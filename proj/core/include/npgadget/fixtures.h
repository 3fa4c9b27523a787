#ifndef NPGADGET_FIXTURES_H_
#define NPGADGET_FIXTURES_H_

#include <array>

#include "npgadget/cnf.h"

namespace npgadget::fixtures {

// B = (x|y|z) & (~x|z|w) & (~x|~y|w) & (y|~z|~w) with x,y,z,w = x1..x4.
CnfInstance FixtureB();
// x=F, y=T, z=T, w=F.
Assignment FixtureBWitness();
// Clause positions serving B by y, ~x, ~x, ~w.
std::array<int, 4> FixtureBTreePositions();

// U3: all eight sign patterns over x1, x2, x3. Unsatisfiable; no 3-CNF with
// fewer clauses is.
CnfInstance FixtureU3();

// (x|y|z) over three variables.
CnfInstance FixtureSingleClause();

// E = (x|y|~z) & (~x|~y|~z) & (x|~y|z), satisfied by x=T, y=F, z=T.
CnfInstance FixtureE();

}  // namespace npgadget::fixtures

#endif  // NPGADGET_FIXTURES_H_
