#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ramper/padic.hpp"

namespace ramper {

// Holomorphic differential x^i dx / y, kept symbolic: the exponent i is the
// whole datum, no analytic machinery behind it.
struct DifferentialForm {
    long i;

    std::string label() const;  // "x^i dx/y"
};

// Basis of the Hodge filtration piece used here: x^i dx/y for i = 0..g-1.
struct FilteredBasis {
    long g;
    std::vector<DifferentialForm> forms;
};

FilteredBasis filtered_basis(long g);

// Pullback of the scaling map (x, y) |-> (alpha^-1 x, alpha^-(g+1) y) on the
// basis above: diagonal, entry i equal to alpha^(g-i).  The inverse-power
// convention is part of the contract; precondition alpha = 1 (mod pi).
struct PullbackMatrix {
    long g;
    std::vector<RamifiedElem> diagonal;  // entry i: alpha^(g-i), i = 0..g-1

    RamifiedElem det() const;  // product of the diagonal
};

PullbackMatrix pullback_matrix(const RamifiedElem& alpha, long g);

// Minimal ramified period alpha^d, d = g(g+1)/2; always verified bit for bit
// against the determinant of the pullback matrix before being returned.
struct MinimalPeriod {
    RamifiedElem value;
    mpz_class d;
    long g;
};

MinimalPeriod minimal_period(const RamifiedElem& alpha, long g);

}  // namespace ramper
