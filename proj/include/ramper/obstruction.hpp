#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "ramper/construct.hpp"
#include "ramper/padic.hpp"
#include "ramper/periods.hpp"

namespace ramper {

/**
 * Certificate that the class of alpha^d in Q_p^x \ Q_p(sqrt p)^x / Q(sqrt p)^x
 * is non-trivial.  Every entry is an exact symbolic check except alpha_rel,
 * which holds modulo the working precision.  The decision is one-sided:
 * a valid certificate establishes non-triviality, an invalid one decides
 * nothing.
 */
struct Certificate {
    mpz_class d;  // g(g+1)/2, odd whenever g = 1 (mod 4)
    bool d_odd = false;
    bool norm_v = false;         // norm(v) = -1, exact
    bool identity_v2g2 = false;  // v^(2g+2) = a/conj(a), exact
    bool alpha_rel = false;      // alpha^(2g+2) = embed(a/c) at precision
    bool c_rational = false;     // c is an integer representative of a mod P
    bool valid = false;
    std::string proposition_ref;
    std::string alpha_normalization;
};

// Throws std::domain_error "criterion inapplicable" when d is even.
Certificate certify_nontrivial(const DescentExample& ex, const RamifiedElem& alpha);

// Outcome of the exhaustive witness search: every candidate x + y*sqrt(p)
// with both rationals of numerator and denominator height <= height_bound.
// A pair whose quotient has pi^1-component indistinguishable from zero at
// the working precision is reported undecided, never silently passed.
struct RefutationLog {
    long height_bound = 0;
    long precision = 0;
    long pairs_checked = 0;
    long refuted = 0;
    std::vector<std::pair<std::string, std::string>> undecided;
    bool all_refuted = false;
};

// Checks that gamma = alpha^d * embed(x + y sqrt p)^-1 stays outside Q_p for
// every pair: refuted when the pi^1-component is distinguishable from zero.
// d may be any odd integer, not only the pipeline's g(g+1)/2.
RefutationLog refute_witnesses(const RamifiedElem& alpha, long d, long height_bound,
                               long pi_prec);

struct ObstructionReport {
    DescentExample ex;
    RamifiedElem alpha;
    MinimalPeriod period;
    Certificate certificate;
    RefutationLog refutation;
    long precision = 0;
    std::string conclusion;
    int schema_version = 1;
};

// Bundles the full run; requires a valid certificate (the conclusion is only
// ever attached to one) and consistent (p, g) across the parts.
ObstructionReport assemble_report(const DescentExample& ex, const RamifiedElem& alpha,
                                  const MinimalPeriod& period, const Certificate& cert,
                                  const RefutationLog& refutation);

}  // namespace ramper
