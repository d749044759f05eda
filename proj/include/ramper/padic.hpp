#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "ramper/quadfield.hpp"

namespace ramper {

// Raised when a value indistinguishable from zero reaches a context that
// needs a decision (inversion, exact valuation).  Carries the precision
// beyond which the computation would have to be rerun.
class PrecisionError : public std::runtime_error {
public:
    PrecisionError(const std::string& what, long needed)
        : std::runtime_error(what), needed_precision(needed) {}

    long needed_precision;
};

// Zero tests at finite precision are three-valued; "equal to zero" is never
// decidable, so the missing third state is exactly the unknown one.
enum class ZeroTest { nonzero, indistinguishable };

/**
 * Element of Q_p at capped absolute precision: the value u * p^v is known
 * modulo p^N, stored as (v, u, N) with u in [1, p^(N-v)) coprime to p.
 * A value indistinguishable from 0 is the explicit marker "valuation >= N";
 * it never masquerades as an integer valuation.
 *
 * Precision propagation is pessimistic and deterministic:
 *   - addition keeps the min of the absolute precisions;
 *   - multiplication keeps the min of the relative precisions, shifted by
 *     the sum of the valuations;
 *   - inversion of a unit keeps the relative precision.
 * Recomputing at higher precision and truncating reproduces results
 * bit for bit.
 */
class PadicNumber {
public:
    static PadicNumber from_rational(long p, const mpq_class& q, long abs_prec);
    static PadicNumber zero_at(long p, long abs_prec);
    static PadicNumber one(long p, long rel_prec);

    long p() const { return p_; }

    // Absolute precision: the value is known modulo p^precision().
    long precision() const { return prec_; }

    bool is_zero_at_precision() const { return marker_; }
    ZeroTest zero_test() const {
        return marker_ ? ZeroTest::indistinguishable : ZeroTest::nonzero;
    }

    // Exact valuation; PrecisionError on the zero marker.
    long valuation() const;

    // Valuation for distinguishable values, absolute precision for the marker.
    long valuation_lower_bound() const { return marker_ ? prec_ : val_; }

    // Unit part in [1, p^(precision - valuation)); requires a distinguishable value.
    const mpz_class& unit() const;

    long relative_precision() const { return marker_ ? 0 : prec_ - val_; }

    // Base-p digits of the unit part, length precision() - valuation().
    std::vector<int> digits() const;

    // Base-p digit of the full value at p^i, for i < precision().
    int digit_at(long i) const;

    PadicNumber truncated(long abs_prec) const;

    // Multiplication by p^k.
    PadicNumber shifted(long k) const;

    PadicNumber inverse() const;
    PadicNumber pow(long k) const;

    PadicNumber operator-() const;
    PadicNumber& operator+=(const PadicNumber& o);
    PadicNumber& operator-=(const PadicNumber& o);
    PadicNumber& operator*=(const PadicNumber& o);

    friend PadicNumber operator+(PadicNumber a, const PadicNumber& b) { return a += b; }
    friend PadicNumber operator-(PadicNumber a, const PadicNumber& b) { return a -= b; }
    friend PadicNumber operator*(PadicNumber a, const PadicNumber& b) { return a *= b; }

    // Bit-for-bit representation equality, precision included.
    friend bool operator==(const PadicNumber& a, const PadicNumber& b);
    friend bool operator!=(const PadicNumber& a, const PadicNumber& b) { return !(a == b); }

    // Congruence modulo p^min(precisions): the difference is indistinguishable
    // from zero.  Never a verdict that the exact values are equal.
    bool agrees_with(const PadicNumber& o) const;

    std::string to_string() const;

private:
    PadicNumber(long p, long val, mpz_class unit, long prec, bool marker);

    void require_same_prime(const PadicNumber& o) const;
    static PadicNumber make_value(long p, long val, mpz_class residue, long prec);

    long p_;
    long val_;        // meaningless when marker_
    mpz_class unit_;  // meaningless when marker_
    long prec_;
    bool marker_;
};

/**
 * Element A + B*pi of the ramified quadratic extension Q_p(pi), pi^2 = p,
 * with p-adic components.  Products expand through pi^2 = p:
 *   (A + B pi)(C + D pi) = (AC + p BD) + (AD + BC) pi.
 * The pi-adic valuation is min(2 v(A), 2 v(B) + 1) (parities differ, never a
 * tie) and the pi-adic precision is min(2 prec(A), 2 prec(B) + 1).
 */
class RamifiedElem {
public:
    RamifiedElem(PadicNumber a, PadicNumber b);

    // Image of x + y*sqrt(p) with sqrt(p) |-> pi, at pi-adic precision >= pi_prec.
    static RamifiedElem embed(const QuadElem& e, long pi_prec);

    static RamifiedElem from_padic(const PadicNumber& a);
    static RamifiedElem one(long p, long pi_prec);

    long p() const { return a_.p(); }
    const PadicNumber& a() const { return a_; }
    const PadicNumber& b() const { return b_; }

    // pi-adic absolute precision.
    long precision() const;

    bool is_zero_at_precision() const;
    long valuation_lower_bound() const;
    long valuation() const;  // PrecisionError when not decidable at precision

    RamifiedElem conjugate() const;  // pi |-> -pi
    PadicNumber norm() const;        // x * conj(x) = A^2 - p B^2, in Q_p

    RamifiedElem inverse() const;
    RamifiedElem pow(long k) const;

    RamifiedElem truncated(long pi_prec) const;

    // pi-adic digits from valuation() up to precision(), each in [0, p).
    // Even pi-indices read A, odd ones read B.
    std::vector<int> pi_digits() const;

    RamifiedElem operator-() const;
    RamifiedElem& operator+=(const RamifiedElem& o);
    RamifiedElem& operator-=(const RamifiedElem& o);
    RamifiedElem& operator*=(const RamifiedElem& o);

    friend RamifiedElem operator+(RamifiedElem a, const RamifiedElem& b) { return a += b; }
    friend RamifiedElem operator-(RamifiedElem a, const RamifiedElem& b) { return a -= b; }
    friend RamifiedElem operator*(RamifiedElem a, const RamifiedElem& b) { return a *= b; }

    friend bool operator==(const RamifiedElem& a, const RamifiedElem& b) {
        return a.a_ == b.a_ && a.b_ == b.b_;
    }
    friend bool operator!=(const RamifiedElem& a, const RamifiedElem& b) { return !(a == b); }

    bool agrees_with(const RamifiedElem& o) const;

    std::string to_string() const;

private:
    PadicNumber a_, b_;
};

/**
 * The root alpha of alpha^m = t with alpha = 1 (mod pi), computed to pi-adic
 * precision pi_prec by Newton iteration from alpha_0 = 1.  Requires
 * gcd(m, p) = 1 and t = 1 (mod pi); the congruence is demanded modulo pi
 * only.  The residual valuation at least doubles every step, so the loop
 * runs at most ceil(log2 pi_prec) + 1 times; each step is checked and a
 * stalled residual is an internal error.
 */
RamifiedElem hensel_root(const RamifiedElem& t, long m, long pi_prec);

}  // namespace ramper
