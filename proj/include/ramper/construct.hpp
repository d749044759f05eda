#pragma once

#include <map>
#include <string>

#include "ramper/pell.hpp"
#include "ramper/quadfield.hpp"

namespace ramper {

// Validated input pair for the descent construction.
struct Hypotheses {
    long p;
    long g;
};

// Throws std::invalid_argument naming every failed condition:
// p prime, p = 1 (mod 4), g >= 1, g = 1 (mod 4), p does not divide g+1.
Hypotheses check_hypotheses(long p, long g);

// Explicit Hilbert 90 witness: for norm(u) = 1 returns b with u = b/conj(b);
// b = 1 + u, or sqrt(p) in the degenerate case u = -1.
QuadElem hilbert90(const QuadElem& u);

struct BuildResult {
    QuadElem u;  // v^(g+1), norm 1
    QuadElem b;  // Hilbert 90 witness for u
    long n;      // forced to -valuation_ramified(b)
    QuadElem a;  // b^2 * p^n, a unit at the ramified prime
};

// From a norm -1 element v: a = b^2 p^n with valuation_ramified(a) = 0 and
// v^(2g+2) = a/conj(a), both verified exactly.
BuildResult build_a(const QuadElem& v, long g);

// The twist isomorphism C_conj(a) -> C_a over Q(sqrt p),
// (x, y) |-> (v x, v^(g+1) y), certified by the polynomial identity
//   (v^(g+1) Y)^2 - (v X)^(2g+2) + a = v^(2g+2) (Y^2 - X^(2g+2) + conj(a)),
// checked coefficient by coefficient in exact arithmetic.
struct IsoWitness {
    QuadElem v;
    long g;
    std::string direction;  // "C_conj(a) -> C_a"
    bool verified;
};

IsoWitness iso_witness(const QuadElem& a, const QuadElem& v, long g);

// Reduction step: c = residue(a) in [1, p-1], with good reduction of
// y^2 = x^(2g+2) - c at p certified by gcd(x^(2g+2) - c, (2g+2) x^(2g+1)) = 1
// in F_p[x], computed by the Euclidean algorithm.
long reduce_and_check(const QuadElem& a, long g);

struct DescentExample {
    long p = 0;
    long g = 0;
    long k = 0;  // Pell solution index
    QuadElem v, u, b, a;
    long n = 0;
    long c = 0;
    std::map<std::string, bool> checks;
};

// Full assembly for validated (p, g) and Pell index k.
DescentExample build_example(long p, long g, long k);

}  // namespace ramper
