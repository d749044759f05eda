#include "ramper/pell.hpp"

#include <stdexcept>
#include <string>

namespace ramper {

QuadElem PellSolution::element() const {
    return QuadElem(p, mpq_class(x), mpq_class(y));
}

CfExpansion cf_sqrt(long n) {
    if (n < 2) throw std::invalid_argument("cf_sqrt: need n >= 2");
    long a0 = 0;
    while ((a0 + 1) * (a0 + 1) <= n) ++a0;
    if (a0 * a0 == n) throw std::invalid_argument("cf_sqrt: " + std::to_string(n) + " is a square");

    // standard recurrence for the periodic expansion of sqrt(n):
    //   m' = d*a - m,  d' = (n - m'^2)/d,  a' = floor((a0 + m')/d')
    // the period closes exactly when a' = 2*a0
    CfExpansion cf{a0, {}};
    long m = 0, d = 1, a = a0;
    do {
        m = d * a - m;
        d = (n - m * m) / d;
        a = (a0 + m) / d;
        cf.period.push_back(a);
    } while (a != 2 * a0);
    return cf;
}

PellSolution fundamental_negative(long p) {
    if (!is_prime(p) || p % 4 != 1)
        throw std::invalid_argument("fundamental_negative: p must be a prime congruent to 1 mod 4");
    CfExpansion cf = cf_sqrt(p);
    // x^2 - p y^2 = -1 is solvable here, which forces an odd period; an even
    // one can only mean the expansion above went wrong
    if (cf.period.size() % 2 == 0)
        throw std::runtime_error("fundamental_negative: even period for p = " + std::to_string(p) +
                                 ", continued fraction internally inconsistent");
    // convergent h/q of [a0; period[0..len-2]] gives the fundamental solution
    mpz_class h_prev = 1, h = cf.a0, q_prev = 0, q = 1;
    for (size_t i = 0; i + 1 < cf.period.size(); ++i) {
        mpz_class h_next = cf.period[i] * h + h_prev;
        mpz_class q_next = cf.period[i] * q + q_prev;
        h_prev = h; h = h_next;
        q_prev = q; q = q_next;
    }
    PellSolution s{p, 0, h, q};
    if (h * h - p * q * q != -1)
        throw std::runtime_error("fundamental_negative: convergent does not solve the equation");
    return s;
}

PellSolution solution_at(long p, long k) {
    if (k < 0) throw std::invalid_argument("solution_at: k must be >= 0");
    PellSolution f = fundamental_negative(p);
    QuadElem v = f.element().pow(2 * k + 1);
    // odd powers of a norm -1 unit have integer coordinates and norm -1
    return PellSolution{p, k, v.x().get_num(), v.y().get_num()};
}

std::vector<PellSolution> solutions(long p, long count) {
    if (count < 1) throw std::invalid_argument("solutions: count must be >= 1");
    std::vector<PellSolution> out;
    out.reserve(static_cast<size_t>(count));
    for (long k = 0; k < count; ++k) out.push_back(solution_at(p, k));
    return out;
}

}  // namespace ramper
