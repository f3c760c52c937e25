#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace omcube::fm {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Relation { equal, at_least, greater };

// coeffs · z + constant  (relation)  0
struct Constraint {
    std::vector<Rational> coeffs;
    Rational constant = 0;
    Relation rel = Relation::at_least;
};

struct Solution {
    bool feasible = false;
    std::vector<Rational> witness;  // satisfies every constraint when feasible
};

// Exact feasibility over the rationals by Fourier-Motzkin elimination with
// strictness tracking. Equalities are substituted out first.
Solution solve(int variables, std::vector<Constraint> constraints);

bool feasible(int variables, std::vector<Constraint> constraints);

// True iff the witness satisfies every constraint exactly.
bool satisfies(const std::vector<Constraint>& constraints, const std::vector<Rational>& z);

}  // namespace omcube::fm
