#pragma once

#include <gmpxx.h>

#include <vector>

#include "ramper/quadfield.hpp"

namespace ramper {

// Continued fraction of sqrt(n) for nonsquare n >= 2: [a0; period repeating].
struct CfExpansion {
    long a0;
    std::vector<long> period;
};

CfExpansion cf_sqrt(long n);

// Solution of x^2 - p*y^2 = -1 with x, y > 0; index k means v0^(2k+1)
// for the fundamental solution v0.
struct PellSolution {
    long p;
    long index;
    mpz_class x, y;

    QuadElem element() const;  // x + y*sqrt(p)
};

// Fundamental solution (index 0), from the convergent at the end of the first
// period of cf_sqrt(p).  The period length is odd exactly when the negative
// Pell equation is solvable; p prime = 1 mod 4 guarantees it, and an even
// period is rejected as an internal inconsistency.
PellSolution fundamental_negative(long p);

// k-th solution v0^(2k+1); norm is -1 for every k.
PellSolution solution_at(long p, long k);

std::vector<PellSolution> solutions(long p, long count);

}  // namespace ramper
