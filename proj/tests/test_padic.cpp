#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "ramper/padic.hpp"

using ramper::PadicNumber;
using ramper::PrecisionError;
using ramper::QuadElem;
using ramper::RamifiedElem;
using ramper::ZeroTest;

namespace {

mpq_class random_rational(std::mt19937_64& rng, long p) {
    std::uniform_int_distribution<long> num(-80, 80);
    std::uniform_int_distribution<long> den(1, 30);
    std::uniform_int_distribution<int> shift(-2, 2);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    int s = shift(rng);
    for (int i = 0; i < s; ++i) q *= p;
    for (int i = 0; i > s; --i) q /= p;
    return q;
}

QuadElem random_quad(std::mt19937_64& rng, long p) {
    return QuadElem(p, random_rational(rng, p), random_rational(rng, p));
}

// Unit congruent to 1 mod pi: 1 + p*r + s*sqrt(p) with integral s, r.
QuadElem random_principal_unit(std::mt19937_64& rng, long p) {
    std::uniform_int_distribution<long> small(-20, 20);
    return QuadElem(p, 1 + p * mpq_class(small(rng)), mpq_class(small(rng)));
}

}  // namespace

TEST_SUITE("padic") {

TEST_CASE("from_rational digit expansions") {
    PadicNumber x = PadicNumber::from_rational(5, 36, 3);
    CHECK(x.valuation() == 0);
    CHECK(x.digits() == std::vector<int>{1, 2, 1});
    CHECK(x.precision() == 3);

    CHECK(PadicNumber::from_rational(5, 50, 6).valuation() == 2);
    CHECK(PadicNumber::from_rational(5, mpq_class(36, 25), 6).valuation() == -2);
    CHECK(PadicNumber::from_rational(5, mpq_class(36, 25), 6).digits() ==
          std::vector<int>{1, 2, 1, 0, 0, 0, 0, 0});

    // 1/2 is a 5-adic unit: twice it agrees with 1
    PadicNumber h = PadicNumber::from_rational(5, mpq_class(1, 2), 8);
    CHECK(h.valuation() == 0);
    CHECK((h + h).agrees_with(PadicNumber::one(5, 8)));

    CHECK(PadicNumber::from_rational(5, 0, 7).is_zero_at_precision());
    // valuation beyond the cap collapses to the marker
    CHECK(PadicNumber::from_rational(5, 3125, 4).is_zero_at_precision());
}

TEST_CASE("marker semantics") {
    PadicNumber z = PadicNumber::zero_at(5, 10);
    CHECK(z.is_zero_at_precision());
    CHECK(z.zero_test() == ZeroTest::indistinguishable);
    CHECK(z.valuation_lower_bound() == 10);
    CHECK_THROWS_AS(z.valuation(), PrecisionError);
    CHECK_THROWS_AS(z.unit(), PrecisionError);

    try {
        z.inverse();
        FAIL("inverse of a marker must throw");
    } catch (const PrecisionError& e) {
        CHECK(e.needed_precision > 10);
    }

    PadicNumber u = PadicNumber::from_rational(5, 7, 10);
    CHECK(u.zero_test() == ZeroTest::nonzero);
    CHECK((z + u).agrees_with(u));
    // marker times a unit: precision shifts by the unit's valuation
    CHECK((z * u).is_zero_at_precision());
    CHECK((z * u).precision() == 10);
    CHECK((z * PadicNumber::from_rational(5, 25, 10)).precision() == 12);
}

TEST_CASE("precision propagation") {
    PadicNumber a = PadicNumber::from_rational(5, 36, 8);
    PadicNumber b = PadicNumber::from_rational(5, 14, 5);
    CHECK((a + b).precision() == 5);
    CHECK((a * b).precision() == 5);  // units: min relative = min absolute

    // cancellation leaves the marker, never a fake value
    CHECK((a - a).is_zero_at_precision());
    CHECK((a - a).precision() == 8);

    // valuations shift the window: v(150) = 2 at p = 5
    PadicNumber c = PadicNumber::from_rational(5, 150, 9);
    CHECK((a * c).valuation() == 2);
    CHECK((a * c).precision() == 9);       // 2 + min(8, 7)
    CHECK(c.inverse().valuation() == -2);
    CHECK(c.inverse().precision() == 5);   // relative precision 7 kept
}

TEST_CASE("field laws at precision") {
    std::mt19937_64 rng(0xadd1c0de);
    for (int t = 0; t < 300; ++t) {
        mpq_class q1 = random_rational(rng, 13);
        mpq_class q2 = random_rational(rng, 13);
        PadicNumber x = PadicNumber::from_rational(13, q1, 12);
        PadicNumber y = PadicNumber::from_rational(13, q2, 12);
        CHECK((x + y).agrees_with(PadicNumber::from_rational(13, q1 + q2, 12)));
        CHECK((x - y).agrees_with(PadicNumber::from_rational(13, q1 - q2, 12)));
        CHECK((x * y).agrees_with(PadicNumber::from_rational(13, q1 * q2, 12)));
        if (q2 != 0) {
            CHECK((y * y.inverse()).agrees_with(PadicNumber::one(13, 12)));
            CHECK(y.inverse().agrees_with(PadicNumber::from_rational(13, 1 / q2, 12)));
        }
        CHECK(x.pow(3).agrees_with(x * x * x));
    }
}

TEST_CASE("truncation") {
    PadicNumber a = PadicNumber::from_rational(5, 36, 9);
    CHECK(a.truncated(3) == PadicNumber::from_rational(5, 36, 3));
    CHECK(a.truncated(9) == a);
    CHECK_THROWS_AS(a.truncated(10), std::invalid_argument);
    // a value whose valuation passes the cut becomes the marker
    PadicNumber c = PadicNumber::from_rational(5, 125, 9);
    CHECK(c.truncated(3).is_zero_at_precision());
    CHECK(c.truncated(3).precision() == 3);
}

TEST_CASE("recomputation at higher precision truncates to the same bits") {
    std::mt19937_64 rng(0x7311ca7e);
    for (int t = 0; t < 400; ++t) {
        mpq_class q1 = random_rational(rng, 5);
        mpq_class q2 = random_rational(rng, 5);
        auto run = [&](long n) {
            PadicNumber x = PadicNumber::from_rational(5, q1, n);
            PadicNumber y = PadicNumber::from_rational(5, q2, n);
            PadicNumber r = x * y + x - y.pow(2);
            if (q2 != 0) r *= PadicNumber::from_rational(5, q2, n).inverse();
            return r;
        };
        PadicNumber lo = run(20);
        PadicNumber hi = run(30);
        CHECK(hi.truncated(lo.precision()) == lo);
    }
}

TEST_CASE("embedding into the ramified extension") {
    RamifiedElem t = RamifiedElem::embed(QuadElem(5, 36, 16), 50);
    CHECK(t.precision() == 50);
    CHECK(t.valuation() == 0);
    // 36 = 1 + 2*5 + 1*25 and 16 = 1 + 3*5 interleave as pi-digits
    auto d = t.pi_digits();
    REQUIRE(d.size() == 50);
    CHECK(std::vector<int>(d.begin(), d.begin() + 8) ==
          std::vector<int>{1, 1, 2, 3, 1, 0, 0, 0});

    CHECK(RamifiedElem::embed(QuadElem(5, 0, 1), 20).valuation() == 1);
    CHECK(RamifiedElem::embed(QuadElem(5, 5, 0), 20).valuation() == 2);
    CHECK(RamifiedElem::embed(QuadElem(5, 0, 5), 20).valuation() == 3);
    CHECK(RamifiedElem::embed(QuadElem(5, 0, 0), 20).is_zero_at_precision());
    CHECK(RamifiedElem::embed(QuadElem(5, 0, 0), 20).valuation_lower_bound() == 20);
}

TEST_CASE("embedding is a ring homomorphism") {
    std::mt19937_64 rng(0xe4bed001);
    for (int t = 0; t < 200; ++t) {
        QuadElem e1 = random_quad(rng, 5);
        QuadElem e2 = random_quad(rng, 5);
        RamifiedElem r1 = RamifiedElem::embed(e1, 30);
        RamifiedElem r2 = RamifiedElem::embed(e2, 30);
        CHECK((r1 + r2).agrees_with(RamifiedElem::embed(e1 + e2, 30)));
        CHECK((r1 * r2).agrees_with(RamifiedElem::embed(e1 * e2, 30)));
        CHECK(r1.conjugate().agrees_with(RamifiedElem::embed(e1.conjugate(), 30)));
        // norm lands in Q_p and matches the rational norm
        CHECK(r1.norm().agrees_with(PadicNumber::from_rational(5, e1.norm(), 15)));
        // the pi-component of x * conj(x) cancels exactly to the marker
        CHECK((r1 * r1.conjugate()).b().is_zero_at_precision());
        // valuations transport through the embedding
        auto v = e1.valuation_ramified();
        if (v)
            CHECK(r1.valuation() == *v);
        else
            CHECK(r1.is_zero_at_precision());
    }
}

TEST_CASE("ramified product expansion") {
    // (A + B pi)(C + D pi) = (AC + p BD) + (AD + BC) pi, checked on components
    std::mt19937_64 rng(0xe4bed002);
    for (int t = 0; t < 200; ++t) {
        QuadElem e1 = random_quad(rng, 13);
        QuadElem e2 = random_quad(rng, 13);
        RamifiedElem r1 = RamifiedElem::embed(e1, 24);
        RamifiedElem r2 = RamifiedElem::embed(e2, 24);
        RamifiedElem prod = r1 * r2;
        PadicNumber ec = r1.a() * r2.a() + (r1.b() * r2.b()).shifted(1);
        PadicNumber fc = r1.a() * r2.b() + r1.b() * r2.a();
        CHECK(prod.a() == ec);
        CHECK(prod.b() == fc);
    }
}

TEST_CASE("ramified inverse and powers") {
    std::mt19937_64 rng(0xe4bed003);
    for (int t = 0; t < 200; ++t) {
        QuadElem e = random_quad(rng, 5);
        if (e.is_zero()) continue;
        RamifiedElem r = RamifiedElem::embed(e, 30);
        CHECK((r * r.inverse()).agrees_with(RamifiedElem::one(5, 30)));
        CHECK(r.pow(4).agrees_with(r * r * r * r));
        CHECK(r.pow(-2).agrees_with((r * r).inverse()));
        CHECK(r.pow(0).agrees_with(RamifiedElem::one(5, 30)));
    }
    CHECK_THROWS_AS(RamifiedElem::embed(QuadElem(5, 0, 0), 20).inverse(), PrecisionError);
}

TEST_CASE("pi digit reconstruction") {
    std::mt19937_64 rng(0xe4bed004);
    auto pow5 = [](long h) {
        mpq_class f = 1;
        for (long i = 0; i < h; ++i) f *= 5;
        for (long i = 0; i > h; --i) f /= 5;
        return f;
    };
    for (int t = 0; t < 100; ++t) {
        QuadElem e = random_quad(rng, 5);
        if (e.is_zero()) continue;
        RamifiedElem r = RamifiedElem::embed(e, 21);
        auto d = r.pi_digits();
        long v = r.valuation_lower_bound();
        CHECK(static_cast<long>(d.size()) == r.precision() - v);
        // rebuild x + y*sqrt5 from the stream: pi^idx is 5^(idx/2) for even
        // idx and 5^((idx-1)/2) * sqrt5 for odd idx, both divisions exact
        mpq_class ax = 0, bx = 0;
        for (size_t j = 0; j < d.size(); ++j) {
            CHECK(d[j] >= 0);
            CHECK(d[j] < 5);
            long idx = v + static_cast<long>(j);
            if (idx % 2 == 0)
                ax += d[j] * pow5(idx / 2);
            else
                bx += d[j] * pow5((idx - 1) / 2);
        }
        RamifiedElem rebuilt = RamifiedElem::embed(QuadElem(5, ax, bx), 21);
        CHECK(rebuilt.agrees_with(r));
    }
}

TEST_CASE("hensel root of the worked example") {
    RamifiedElem t = RamifiedElem::embed(QuadElem(5, 36, 16), 50);
    RamifiedElem alpha = ramper::hensel_root(t, 4, 50);
    CHECK(alpha.precision() == 50);
    CHECK(alpha.valuation() == 0);
    // normalized: alpha = 1 (mod pi)
    CHECK((alpha - RamifiedElem::one(5, 50)).valuation_lower_bound() >= 1);
    // residual vanishes through the full window
    CHECK((alpha.pow(4) - t).is_zero_at_precision());

    // first 24 pi-digits, frozen from an independent Newton run mod 5^25
    auto d = alpha.pi_digits();
    REQUIRE(d.size() == 50);
    CHECK(std::vector<int>(d.begin(), d.begin() + 24) ==
          std::vector<int>{1, 4, 4, 3, 0, 4, 0, 0, 3, 4, 0, 1,
                           1, 4, 1, 1, 0, 1, 4, 2, 1, 3, 0, 1});
}

TEST_CASE("hensel root agrees with exhaustive search at precision p^2") {
    // all (A, B) in (Z/25)^2 with (A + B pi)^4 = 36 + 16 pi and A = 1 mod 5
    const long p = 5, P2 = 25;
    long tA = 36 % P2, tB = 16 % P2;
    std::vector<std::pair<long, long>> hits;
    for (long A = 1; A < P2; A += p) {
        for (long B = 0; B < P2; ++B) {
            long C = (A * A + p * B * B) % P2, D = (2 * A * B) % P2;
            long E = (C * C + p * D * D) % P2, F = (2 * C * D) % P2;
            if (E == tA && F == tB) hits.emplace_back(A, B);
        }
    }
    REQUIRE(hits.size() == 1);  // the root is unique mod pi^4
    CHECK(hits[0] == std::pair<long, long>(21, 19));

    RamifiedElem t = RamifiedElem::embed(QuadElem(5, 36, 16), 50);
    RamifiedElem alpha = ramper::hensel_root(t, 4, 50);
    mpz_class amod = alpha.a().unit() % P2;
    mpz_class bmod = alpha.b().unit() % P2;
    CHECK(amod == hits[0].first);
    CHECK(bmod == hits[0].second);
}

TEST_CASE("hensel root identities and errors") {
    RamifiedElem t = RamifiedElem::embed(QuadElem(5, 36, 16), 40);
    // m = 1 returns t itself
    CHECK(ramper::hensel_root(t, 1, 40) == t.truncated(40));

    CHECK_THROWS_AS(ramper::hensel_root(t, 5, 40), std::invalid_argument);   // p | m
    CHECK_THROWS_AS(ramper::hensel_root(t, 0, 40), std::invalid_argument);
    RamifiedElem bad = RamifiedElem::embed(QuadElem(5, 2, 0), 40);
    CHECK_THROWS_AS(ramper::hensel_root(bad, 4, 40), std::invalid_argument);  // t != 1 mod pi
    RamifiedElem shallow = RamifiedElem::embed(QuadElem(5, 36, 16), 10);
    CHECK_THROWS_AS(ramper::hensel_root(shallow, 4, 40), PrecisionError);
}

TEST_CASE("hensel recovers random principal-unit roots") {
    std::mt19937_64 rng(0x4e57ead5);
    const long ms[] = {2, 3, 4, 6, 7, 12};
    for (int t = 0; t < 250; ++t) {
        long p = (t % 2 == 0) ? 5 : 13;
        QuadElem beta = random_principal_unit(rng, p);
        long m = ms[t % 6];
        if (m % p == 0) continue;
        RamifiedElem b = RamifiedElem::embed(beta, 40);
        RamifiedElem target = b.pow(m);
        RamifiedElem root = ramper::hensel_root(target, m, 40);
        // the root congruent to 1 mod pi is unique, so it must be beta again
        CHECK(root.agrees_with(b));
    }
}

TEST_CASE("ramified recomputation truncates bit for bit") {
    std::mt19937_64 rng(0x3147e5a1);
    for (int t = 0; t < 200; ++t) {
        QuadElem e1 = random_quad(rng, 5);
        QuadElem e2 = random_quad(rng, 5);
        auto run = [&](long n) {
            RamifiedElem x = RamifiedElem::embed(e1, n);
            RamifiedElem y = RamifiedElem::embed(e2, n);
            RamifiedElem r = x * y + x.conjugate() - y.pow(3);
            if (!e1.is_zero()) r *= RamifiedElem::embed(e1, n).inverse();
            return r;
        };
        RamifiedElem lo = run(50);
        RamifiedElem hi = run(60);
        CHECK(hi.truncated(lo.precision()) == lo);
    }
}

}  // TEST_SUITE
