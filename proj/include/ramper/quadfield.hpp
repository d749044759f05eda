#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>

namespace ramper {

// p-adic valuation of an exact rational; nullopt encodes +infinity (q == 0).
std::optional<long> padic_valuation(const mpq_class& q, long p);

bool is_prime(long n);

/**
 * Element x + y*sqrt(p) of the real quadratic field Q(sqrt p), p a prime
 * congruent to 1 mod 4.  Coordinates are exact rationals in canonical form
 * (reduced, positive denominator); equality is coordinate-wise.
 *
 * The ramified prime above p is P = (sqrt p), with P^2 = (p).  The P-adic
 * valuation is v_P(x + y*sqrt p) = min(2*v_p(x), 2*v_p(y) + 1); the two
 * arguments have distinct parities, so the min is never a tie.
 */
class QuadElem {
public:
    QuadElem(long p, mpq_class x, mpq_class y);

    long p() const { return p_; }
    const mpq_class& x() const { return x_; }
    const mpq_class& y() const { return y_; }

    bool is_zero() const { return x_ == 0 && y_ == 0; }
    bool is_rational() const { return y_ == 0; }

    // Galois conjugate x - y*sqrt(p).
    QuadElem conjugate() const;

    // Field norm x^2 - p*y^2; multiplicative, zero only on zero.
    mpq_class norm() const;

    // Valuation at the ramified prime; nullopt = +infinity (only for zero).
    std::optional<long> valuation_ramified() const;

    // Least positive residue c in [1, p-1] with e = c (mod P).
    // Requires valuation_ramified() == 0.
    long residue() const;

    QuadElem inverse() const;
    QuadElem pow(long k) const;  // any integer exponent; negative via inverse

    QuadElem operator-() const;
    QuadElem& operator+=(const QuadElem& o);
    QuadElem& operator-=(const QuadElem& o);
    QuadElem& operator*=(const QuadElem& o);
    QuadElem& operator/=(const QuadElem& o);

    friend QuadElem operator+(QuadElem a, const QuadElem& b) { return a += b; }
    friend QuadElem operator-(QuadElem a, const QuadElem& b) { return a -= b; }
    friend QuadElem operator*(QuadElem a, const QuadElem& b) { return a *= b; }
    friend QuadElem operator/(QuadElem a, const QuadElem& b) { return a /= b; }

    friend bool operator==(const QuadElem& a, const QuadElem& b) {
        return a.p_ == b.p_ && a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend bool operator!=(const QuadElem& a, const QuadElem& b) { return !(a == b); }

    // "x+y*sqrtP" with reduced rationals, e.g. "36+16*sqrt5", "1/2-3*sqrt13".
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const QuadElem& e);

private:
    struct unchecked {};
    QuadElem(unchecked, long p, mpq_class x, mpq_class y);

    void require_same_field(const QuadElem& o) const;

    long p_;
    mpq_class x_, y_;
};

}  // namespace ramper
