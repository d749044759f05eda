#include "ramper/construct.hpp"

#include <stdexcept>
#include <vector>

namespace ramper {

namespace {

mpq_class rational_power(long p, long n) {
    mpq_class r = 1;
    for (long i = 0; i < n; ++i) r *= p;
    for (long i = 0; i > n; --i) r /= p;
    return r;
}

// dense polynomials over F_p, ascending coefficients, no leading zero
using Poly = std::vector<long>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

long inv_mod(long a, long p) {
    long r = 1, b = a % p, e = p - 2;  // p prime
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

Poly poly_mod(Poly f, const Poly& g, long p) {
    long lead_inv = inv_mod(g.back(), p);
    while (f.size() >= g.size()) {
        long shift = static_cast<long>(f.size() - g.size());
        long factor = f.back() * lead_inv % p;
        for (size_t i = 0; i < g.size(); ++i) {
            long& c = f[static_cast<size_t>(shift) + i];
            c = ((c - factor * g[i]) % p + p) % p;
        }
        trim(f);
        if (f.empty()) break;
    }
    return f;
}

Poly poly_gcd(Poly f, Poly g, long p) {
    trim(f);
    trim(g);
    while (!g.empty()) {
        Poly r = poly_mod(f, g, p);
        f = std::move(g);
        g = std::move(r);
    }
    return f;
}

}  // namespace

Hypotheses check_hypotheses(long p, long g) {
    std::vector<std::string> failed;
    if (!is_prime(p)) failed.push_back("p is not prime");
    if (p % 4 != 1) failed.push_back("p is not congruent to 1 mod 4");
    if (g < 1) failed.push_back("g is not positive");
    if (g % 4 != 1) failed.push_back("g is not congruent to 1 mod 4");
    if (p >= 2 && (g + 1) % p == 0) failed.push_back("p divides g+1");
    if (!failed.empty()) {
        std::string msg = "hypotheses failed: " + failed[0];
        for (size_t i = 1; i < failed.size(); ++i) msg += "; " + failed[i];
        throw std::invalid_argument(msg);
    }
    return Hypotheses{p, g};
}

QuadElem hilbert90(const QuadElem& u) {
    if (u.norm() != 1) throw std::invalid_argument("hilbert90: norm of u is not 1");
    QuadElem minus_one(u.p(), -1, 0);
    QuadElem b = (u == minus_one) ? QuadElem(u.p(), 0, 1) : QuadElem(u.p(), 1, 0) + u;
    if (b / b.conjugate() != u)
        throw std::runtime_error("hilbert90: witness identity b/conj(b) = u failed");
    return b;
}

BuildResult build_a(const QuadElem& v, long g) {
    if (g < 1) throw std::invalid_argument("build_a: g must be >= 1");
    if (v.norm() != -1) throw std::invalid_argument("build_a: norm of v is not -1");
    long p = v.p();
    QuadElem u = v.pow(g + 1);  // norm (-1)^(g+1) = 1 for odd g
    QuadElem b = hilbert90(u);
    auto vb = b.valuation_ramified();
    if (!vb) throw std::runtime_error("build_a: Hilbert 90 witness vanished");
    long n = -*vb;
    QuadElem a = b.pow(2) * QuadElem(p, rational_power(p, n), 0);
    if (a.valuation_ramified() != 0)
        throw std::runtime_error("build_a: a = b^2 p^n is not a unit at the ramified prime");
    if (v.pow(2 * g + 2) * a.conjugate() != a)
        throw std::runtime_error("build_a: identity v^(2g+2) = a/conj(a) failed");
    return BuildResult{u, b, n, a};
}

IsoWitness iso_witness(const QuadElem& a, const QuadElem& v, long g) {
    if (g < 1) throw std::invalid_argument("iso_witness: g must be >= 1");
    QuadElem s = v.pow(2 * g + 2);
    // coefficients of (v^(g+1) Y)^2 - (v X)^(2g+2) + a
    //            and  v^(2g+2) (Y^2 - X^(2g+2) + conj(a))
    QuadElem lhs_y2 = v.pow(g + 1).pow(2);  // same value as s through the Y term
    if (lhs_y2 != s) throw std::runtime_error("iso_witness: Y^2 coefficients differ");
    if (-lhs_y2 != -s) throw std::runtime_error("iso_witness: X^(2g+2) coefficients differ");
    if (a != s * a.conjugate())
        throw std::runtime_error("iso_witness: constant coefficients differ, a != v^(2g+2) conj(a)");
    return IsoWitness{v, g, "C_conj(a) -> C_a", true};
}

long reduce_and_check(const QuadElem& a, long g) {
    long p = a.p();
    if (g < 1) throw std::invalid_argument("reduce_and_check: g must be >= 1");
    if (p % 2 == 0) throw std::invalid_argument("reduce_and_check: p must be odd");
    long deg = 2 * g + 2;
    if (deg % p == 0)
        throw std::invalid_argument("reduce_and_check: p divides 2g+2, reduction is not smooth");
    long c = a.residue();  // throws off the unit locus
    if (c % p == 0) throw std::runtime_error("reduce_and_check: residue vanished mod p");

    // gcd(x^(2g+2) - c, (2g+2) x^(2g+1)) in F_p[x] must be constant
    Poly f(static_cast<size_t>(deg) + 1, 0);
    f[0] = ((-c) % p + p) % p;
    f[static_cast<size_t>(deg)] = 1;
    Poly fp(static_cast<size_t>(deg), 0);
    fp[static_cast<size_t>(deg) - 1] = deg % p;
    Poly gcd = poly_gcd(f, fp, p);
    if (gcd.size() != 1)
        throw std::runtime_error("reduce_and_check: y^2 = x^(2g+2) - c is singular mod p");
    return c;
}

DescentExample build_example(long p, long g, long k) {
    check_hypotheses(p, g);
    if (k < 0) throw std::invalid_argument("build_example: k must be >= 0");
    QuadElem v = solution_at(p, k).element();
    BuildResult r = build_a(v, g);
    IsoWitness iso = iso_witness(r.a, v, g);
    long c = reduce_and_check(r.a, g);
    std::map<std::string, bool> checks{
        {"norm_v_is_minus_one", v.norm() == -1},
        {"a_unit_at_ramified_prime", r.a.valuation_ramified() == 0},
        {"v_power_identity", v.pow(2 * g + 2) * r.a.conjugate() == r.a},
        {"twist_isomorphism", iso.verified},
        {"good_reduction_mod_p", true},
        {"c_in_range", c >= 1 && c <= p - 1},
    };
    return DescentExample{p, g, k, v, r.u, r.b, r.a, r.n, c, std::move(checks)};
}

}  // namespace ramper
